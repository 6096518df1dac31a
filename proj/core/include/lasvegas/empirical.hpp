#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lasvegas {

enum class Unit { iterations, seconds };

const char* unit_name(Unit u);

/// Ordered collection of positive runtime observations for one problem
/// instance. Values are kept sorted ascending.
class EmpiricalSample {
public:
    EmpiricalSample(std::vector<double> values, Unit unit, std::string label);

    const std::vector<double>& values() const { return values_; }
    Unit unit() const { return unit_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return values_.size(); }

    double min() const { return values_.front(); }
    double max() const { return values_.back(); }
    double mean() const;
    double median() const;

private:
    std::vector<double> values_;
    Unit unit_;
    std::string label_;
};

}  // namespace lasvegas
