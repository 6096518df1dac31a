#include "lasvegas/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lasvegas/errors.hpp"

namespace lasvegas {

const char* unit_name(Unit u) {
    return u == Unit::iterations ? "iterations" : "seconds";
}

EmpiricalSample::EmpiricalSample(std::vector<double> values, Unit unit, std::string label)
    : values_(std::move(values)), unit_(unit), label_(std::move(label)) {
    if (values_.empty()) {
        throw invalid_parameters("empirical sample '" + label_ + "' is empty");
    }
    for (double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw invalid_parameters("empirical sample '" + label_ +
                                     "' contains a non-positive or non-finite value");
        }
    }
    std::sort(values_.begin(), values_.end());
}

double EmpiricalSample::mean() const {
    return std::accumulate(values_.begin(), values_.end(), 0.0) /
           static_cast<double>(values_.size());
}

double EmpiricalSample::median() const {
    std::size_t n = values_.size();
    if (n % 2 == 1) return values_[n / 2];
    return 0.5 * (values_[n / 2 - 1] + values_[n / 2]);
}

}  // namespace lasvegas
