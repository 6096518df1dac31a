#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <vector>

#include "lasvegas/errors.hpp"
#include "lasvegas/solver.hpp"

namespace lasvegas {

namespace {

int domain_offset(const PermutationProblem& p) {
    return p.kind == ProblemKind::AllInterval ? 0 : 1;
}

void validate_permutation(const PermutationProblem& p, const std::vector<int>& a) {
    const int v = p.variable_count();
    const int lo = domain_offset(p);
    if (static_cast<int>(a.size()) != v) {
        throw invalid_parameters(p.name() + ": assignment has wrong length");
    }
    std::vector<char> seen(static_cast<std::size_t>(v), 0);
    for (int x : a) {
        int idx = x - lo;
        if (idx < 0 || idx >= v || seen[static_cast<std::size_t>(idx)]) {
            throw invalid_parameters(p.name() + ": assignment is not a permutation of its domain");
        }
        seen[static_cast<std::size_t>(idx)] = 1;
    }
}

// ---------------------------------------------------------------------------
// Magic square: lines are N rows, N columns and the two main diagonals;
// line error |sum - N(N^2+1)/2| projected onto every cell of the line.

class MagicSquareState final : public SearchState {
public:
    MagicSquareState(int n, std::vector<int> a)
        : n_(n), target_(static_cast<Cost>(n) * (static_cast<Cost>(n) * n + 1) / 2),
          assignment_(std::move(a)) {
        rebuild();
    }

    Cost total_cost() const override { return total_; }

    Cost variable_error(int i) const override {
        int r = i / n_, c = i % n_;
        Cost e = line_error(r) + line_error(n_ + c);
        if (r == c) e += line_error(2 * n_);
        if (r + c == n_ - 1) e += line_error(2 * n_ + 1);
        return e;
    }

    Cost swap_delta(int a, int b) const override {
        Cost delta = 0;
        int va = assignment_[static_cast<std::size_t>(a)];
        int vb = assignment_[static_cast<std::size_t>(b)];
        int la[4], lb[4];
        int ca = lines_of(a, la), cb = lines_of(b, lb);
        for (int i = 0; i < ca; ++i) {
            if (!contains(lb, cb, la[i])) delta += resum_delta(la[i], vb - va);
        }
        for (int i = 0; i < cb; ++i) {
            if (!contains(la, ca, lb[i])) delta += resum_delta(lb[i], va - vb);
        }
        return delta;
    }

    void apply_swap(int a, int b) override {
        int va = assignment_[static_cast<std::size_t>(a)];
        int vb = assignment_[static_cast<std::size_t>(b)];
        int la[4], lb[4];
        int ca = lines_of(a, la), cb = lines_of(b, lb);
        for (int i = 0; i < ca; ++i) {
            if (!contains(lb, cb, la[i])) shift_line(la[i], vb - va);
        }
        for (int i = 0; i < cb; ++i) {
            if (!contains(la, ca, lb[i])) shift_line(lb[i], va - vb);
        }
        std::swap(assignment_[static_cast<std::size_t>(a)],
                  assignment_[static_cast<std::size_t>(b)]);
    }

    const std::vector<int>& assignment() const override { return assignment_; }

    void reassign(std::vector<int> fresh) override {
        assignment_ = std::move(fresh);
        rebuild();
    }

private:
    int lines_of(int cell, int out[4]) const {
        int r = cell / n_, c = cell % n_;
        int k = 0;
        out[k++] = r;
        out[k++] = n_ + c;
        if (r == c) out[k++] = 2 * n_;
        if (r + c == n_ - 1) out[k++] = 2 * n_ + 1;
        return k;
    }

    static bool contains(const int* xs, int count, int x) {
        for (int i = 0; i < count; ++i) {
            if (xs[i] == x) return true;
        }
        return false;
    }

    Cost line_error(int line) const {
        return std::llabs(sums_[static_cast<std::size_t>(line)] - target_);
    }

    Cost resum_delta(int line, Cost shift) const {
        Cost old_err = line_error(line);
        return std::llabs(sums_[static_cast<std::size_t>(line)] + shift - target_) - old_err;
    }

    void shift_line(int line, Cost shift) {
        total_ -= line_error(line);
        sums_[static_cast<std::size_t>(line)] += shift;
        total_ += line_error(line);
    }

    void rebuild() {
        sums_.assign(static_cast<std::size_t>(2 * n_ + 2), 0);
        for (int i = 0; i < n_ * n_; ++i) {
            int r = i / n_, c = i % n_;
            Cost v = assignment_[static_cast<std::size_t>(i)];
            sums_[static_cast<std::size_t>(r)] += v;
            sums_[static_cast<std::size_t>(n_ + c)] += v;
            if (r == c) sums_[static_cast<std::size_t>(2 * n_)] += v;
            if (r + c == n_ - 1) sums_[static_cast<std::size_t>(2 * n_ + 1)] += v;
        }
        total_ = 0;
        for (int l = 0; l < 2 * n_ + 2; ++l) total_ += line_error(l);
    }

    int n_;
    Cost target_;
    std::vector<int> assignment_;
    std::vector<Cost> sums_;
    Cost total_ = 0;
};

// ---------------------------------------------------------------------------
// All-interval series: each repeated consecutive-difference value counts
// its excess occurrences; an interval's error is the excess of its value,
// projected on the two variables it joins.

class AllIntervalState final : public SearchState {
public:
    AllIntervalState(int n, std::vector<int> a) : n_(n), assignment_(std::move(a)) {
        rebuild();
    }

    Cost total_cost() const override { return total_; }

    Cost variable_error(int i) const override {
        Cost e = 0;
        if (i > 0) e += interval_error(i - 1);
        if (i < n_ - 1) e += interval_error(i);
        return e;
    }

    Cost swap_delta(int a, int b) const override {
        int js[4];
        int cnt = affected_intervals(a, b, js);
        Cost delta = 0;
        for (int i = 0; i < cnt; ++i) delta += count_remove(gap(js[i]));
        for (int i = 0; i < cnt; ++i) delta += count_insert(gap_after_swap(js[i], a, b));
        // roll the counts back; only the delta was wanted
        for (int i = 0; i < cnt; ++i) count_remove(gap_after_swap(js[i], a, b));
        for (int i = 0; i < cnt; ++i) count_insert(gap(js[i]));
        return delta;
    }

    void apply_swap(int a, int b) override {
        int js[4];
        int cnt = affected_intervals(a, b, js);
        Cost delta = 0;
        for (int i = 0; i < cnt; ++i) delta += count_remove(gap(js[i]));
        std::swap(assignment_[static_cast<std::size_t>(a)],
                  assignment_[static_cast<std::size_t>(b)]);
        for (int i = 0; i < cnt; ++i) delta += count_insert(gap(js[i]));
        total_ += delta;
    }

    const std::vector<int>& assignment() const override { return assignment_; }

    void reassign(std::vector<int> fresh) override {
        assignment_ = std::move(fresh);
        rebuild();
    }

private:
    int gap(int j) const {
        return std::abs(assignment_[static_cast<std::size_t>(j)] -
                        assignment_[static_cast<std::size_t>(j + 1)]);
    }

    int gap_after_swap(int j, int a, int b) const {
        auto value = [&](int pos) {
            if (pos == a) return assignment_[static_cast<std::size_t>(b)];
            if (pos == b) return assignment_[static_cast<std::size_t>(a)];
            return assignment_[static_cast<std::size_t>(pos)];
        };
        return std::abs(value(j) - value(j + 1));
    }

    int affected_intervals(int a, int b, int out[4]) const {
        int cnt = 0;
        for (int j : {a - 1, a, b - 1, b}) {
            if (j < 0 || j >= n_ - 1) continue;
            bool dup = false;
            for (int i = 0; i < cnt; ++i) {
                if (out[i] == j) dup = true;
            }
            if (!dup) out[cnt++] = j;
        }
        return cnt;
    }

    Cost interval_error(int j) const {
        int c = counts_[static_cast<std::size_t>(gap(j))];
        return c >= 2 ? c - 1 : 0;
    }

    // excess-count bookkeeping: total tracks sum over values of (count-1)+;
    // counts_ is mutable so swap_delta can simulate and roll back
    Cost count_remove(int value) const {
        int& c = counts_[static_cast<std::size_t>(value)];
        --c;
        return c >= 1 ? -1 : 0;
    }

    Cost count_insert(int value) const {
        int& c = counts_[static_cast<std::size_t>(value)];
        ++c;
        return c >= 2 ? 1 : 0;
    }

    void rebuild() {
        counts_.assign(static_cast<std::size_t>(n_), 0);
        total_ = 0;
        for (int j = 0; j < n_ - 1; ++j) total_ += count_insert(gap(j));
    }

    int n_;
    std::vector<int> assignment_;
    mutable std::vector<int> counts_;  // counts_[d] = occurrences of difference d
    Cost total_ = 0;
};

// ---------------------------------------------------------------------------
// Costas array: per difference-triangle row k, every repeated difference
// value counts its excess; a duplicated entry projects one error unit on
// each of its two endpoint variables.

class CostasState final : public SearchState {
public:
    CostasState(int n, std::vector<int> a) : n_(n), assignment_(std::move(a)) {
        rebuild();
    }

    Cost total_cost() const override { return total_; }

    Cost variable_error(int i) const override {
        Cost e = 0;
        for (int k = 1; k < n_; ++k) {
            if (i + k < n_ && entry_duplicated(k, i)) ++e;
            if (i - k >= 0 && entry_duplicated(k, i - k)) ++e;
        }
        return e;
    }

    Cost swap_delta(int a, int b) const override {
        Cost delta = 0;
        int entries[8];
        for (int k = 1; k < n_; ++k) {
            int cnt = affected_entries(k, a, b, entries);
            for (int i = 0; i < cnt; ++i) delta += count_remove(k, diff(k, entries[i]));
            for (int i = 0; i < cnt; ++i) {
                delta += count_insert(k, diff_after_swap(k, entries[i], a, b));
            }
            // roll back, the assignment was never touched
            for (int i = 0; i < cnt; ++i) {
                count_remove(k, diff_after_swap(k, entries[i], a, b));
            }
            for (int i = 0; i < cnt; ++i) count_insert(k, diff(k, entries[i]));
        }
        return delta;
    }

    void apply_swap(int a, int b) override {
        Cost delta = 0;
        int entries[8];
        for (int k = 1; k < n_; ++k) {
            int cnt = affected_entries(k, a, b, entries);
            for (int i = 0; i < cnt; ++i) delta += count_remove(k, diff(k, entries[i]));
            for (int i = 0; i < cnt; ++i) {
                delta += count_insert(k, diff_after_swap(k, entries[i], a, b));
            }
        }
        std::swap(assignment_[static_cast<std::size_t>(a)],
                  assignment_[static_cast<std::size_t>(b)]);
        total_ += delta;
    }

    const std::vector<int>& assignment() const override { return assignment_; }

    void reassign(std::vector<int> fresh) override {
        assignment_ = std::move(fresh);
        rebuild();
    }

private:
    int diff(int k, int i) const {
        return assignment_[static_cast<std::size_t>(i + k)] -
               assignment_[static_cast<std::size_t>(i)];
    }

    int diff_after_swap(int k, int i, int a, int b) const {
        auto value = [&](int pos) {
            if (pos == a) return assignment_[static_cast<std::size_t>(b)];
            if (pos == b) return assignment_[static_cast<std::size_t>(a)];
            return assignment_[static_cast<std::size_t>(pos)];
        };
        return value(i + k) - value(i);
    }

    int affected_entries(int k, int a, int b, int out[8]) const {
        int cnt = 0;
        for (int i : {a - k, a, b - k, b}) {
            if (i < 0 || i + k >= n_) continue;
            bool dup = false;
            for (int c = 0; c < cnt; ++c) {
                if (out[c] == i) dup = true;
            }
            if (!dup) out[cnt++] = i;
        }
        return cnt;
    }

    bool entry_duplicated(int k, int i) const {
        return row_count(k, diff(k, i)) >= 2;
    }

    int row_count(int k, int value) const {
        return counts_[static_cast<std::size_t>((k - 1) * (2 * n_ + 1) + value + n_)];
    }

    Cost count_remove(int k, int value) const {
        int& c = counts_[static_cast<std::size_t>((k - 1) * (2 * n_ + 1) + value + n_)];
        --c;
        return c >= 1 ? -1 : 0;
    }

    Cost count_insert(int k, int value) const {
        int& c = counts_[static_cast<std::size_t>((k - 1) * (2 * n_ + 1) + value + n_)];
        ++c;
        return c >= 2 ? 1 : 0;
    }

    void rebuild() {
        counts_.assign(static_cast<std::size_t>(n_ - 1) *
                           static_cast<std::size_t>(2 * n_ + 1),
                       0);
        total_ = 0;
        for (int k = 1; k < n_; ++k) {
            for (int i = 0; i + k < n_; ++i) total_ += count_insert(k, diff(k, i));
        }
    }

    int n_;
    std::vector<int> assignment_;
    mutable std::vector<int> counts_;
    Cost total_ = 0;
};

}  // namespace

int PermutationProblem::variable_count() const {
    return kind == ProblemKind::MagicSquare ? n * n : n;
}

std::string PermutationProblem::name() const {
    const char* k = kind == ProblemKind::MagicSquare  ? "magic-square"
                    : kind == ProblemKind::AllInterval ? "all-interval"
                                                       : "costas";
    return std::string(k) + " " + std::to_string(n);
}

std::unique_ptr<SearchState> make_search_state(const PermutationProblem& problem,
                                               std::vector<int> assignment) {
    validate_permutation(problem, assignment);
    switch (problem.kind) {
        case ProblemKind::MagicSquare:
            return std::make_unique<MagicSquareState>(problem.n, std::move(assignment));
        case ProblemKind::AllInterval:
            return std::make_unique<AllIntervalState>(problem.n, std::move(assignment));
        case ProblemKind::Costas:
            return std::make_unique<CostasState>(problem.n, std::move(assignment));
    }
    throw invalid_parameters("unknown problem kind");
}

ConstraintEval constraint_errors(const PermutationProblem& problem,
                                 const std::vector<int>& a) {
    validate_permutation(problem, a);
    const int n = problem.n;
    ConstraintEval eval;
    eval.per_variable.assign(static_cast<std::size_t>(problem.variable_count()), 0);

    switch (problem.kind) {
        case ProblemKind::MagicSquare: {
            const Cost target = static_cast<Cost>(n) * (static_cast<Cost>(n) * n + 1) / 2;
            auto add_line = [&](const std::vector<int>& cells) {
                Cost sum = 0;
                for (int c : cells) sum += a[static_cast<std::size_t>(c)];
                Cost err = std::llabs(sum - target);
                eval.total += err;
                for (int c : cells) eval.per_variable[static_cast<std::size_t>(c)] += err;
            };
            std::vector<int> cells(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) cells[static_cast<std::size_t>(c)] = r * n + c;
                add_line(cells);
            }
            for (int c = 0; c < n; ++c) {
                for (int r = 0; r < n; ++r) cells[static_cast<std::size_t>(r)] = r * n + c;
                add_line(cells);
            }
            for (int r = 0; r < n; ++r) cells[static_cast<std::size_t>(r)] = r * n + r;
            add_line(cells);
            for (int r = 0; r < n; ++r) cells[static_cast<std::size_t>(r)] = r * n + (n - 1 - r);
            add_line(cells);
            break;
        }
        case ProblemKind::AllInterval: {
            std::vector<int> count(static_cast<std::size_t>(n), 0);
            for (int j = 0; j < n - 1; ++j) {
                ++count[static_cast<std::size_t>(
                    std::abs(a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(j + 1)]))];
            }
            for (int d = 1; d < n; ++d) {
                if (count[static_cast<std::size_t>(d)] > 1) {
                    eval.total += count[static_cast<std::size_t>(d)] - 1;
                }
            }
            for (int i = 0; i < n; ++i) {
                for (int j : {i - 1, i}) {
                    if (j < 0 || j >= n - 1) continue;
                    int d = std::abs(a[static_cast<std::size_t>(j)] -
                                     a[static_cast<std::size_t>(j + 1)]);
                    int c = count[static_cast<std::size_t>(d)];
                    if (c > 1) eval.per_variable[static_cast<std::size_t>(i)] += c - 1;
                }
            }
            break;
        }
        case ProblemKind::Costas: {
            for (int k = 1; k < n; ++k) {
                std::vector<int> count(static_cast<std::size_t>(2 * n + 1), 0);
                for (int i = 0; i + k < n; ++i) {
                    ++count[static_cast<std::size_t>(a[static_cast<std::size_t>(i + k)] -
                                                     a[static_cast<std::size_t>(i)] + n)];
                }
                for (int v = 0; v <= 2 * n; ++v) {
                    if (count[static_cast<std::size_t>(v)] > 1) {
                        eval.total += count[static_cast<std::size_t>(v)] - 1;
                    }
                }
                for (int i = 0; i + k < n; ++i) {
                    int v = a[static_cast<std::size_t>(i + k)] - a[static_cast<std::size_t>(i)] + n;
                    if (count[static_cast<std::size_t>(v)] > 1) {
                        ++eval.per_variable[static_cast<std::size_t>(i)];
                        ++eval.per_variable[static_cast<std::size_t>(i + k)];
                    }
                }
            }
            break;
        }
    }
    return eval;
}

bool check_solution(const PermutationProblem& problem, const std::vector<int>& a) {
    const int n = problem.n;
    // permutation check without throwing; a checker answers, it does not abort
    const int v = problem.variable_count();
    const int lo = problem.kind == ProblemKind::AllInterval ? 0 : 1;
    if (static_cast<int>(a.size()) != v) return false;
    {
        std::vector<char> seen(static_cast<std::size_t>(v), 0);
        for (int x : a) {
            int idx = x - lo;
            if (idx < 0 || idx >= v || seen[static_cast<std::size_t>(idx)]) return false;
            seen[static_cast<std::size_t>(idx)] = 1;
        }
    }

    switch (problem.kind) {
        case ProblemKind::MagicSquare: {
            const Cost target = static_cast<Cost>(n) * (static_cast<Cost>(n) * n + 1) / 2;
            for (int r = 0; r < n; ++r) {
                Cost sum = 0;
                for (int c = 0; c < n; ++c) sum += a[static_cast<std::size_t>(r * n + c)];
                if (sum != target) return false;
            }
            for (int c = 0; c < n; ++c) {
                Cost sum = 0;
                for (int r = 0; r < n; ++r) sum += a[static_cast<std::size_t>(r * n + c)];
                if (sum != target) return false;
            }
            Cost d1 = 0, d2 = 0;
            for (int r = 0; r < n; ++r) {
                d1 += a[static_cast<std::size_t>(r * n + r)];
                d2 += a[static_cast<std::size_t>(r * n + (n - 1 - r))];
            }
            return d1 == target && d2 == target;
        }
        case ProblemKind::AllInterval: {
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            for (int j = 0; j < n - 1; ++j) {
                int d = std::abs(a[static_cast<std::size_t>(j)] -
                                 a[static_cast<std::size_t>(j + 1)]);
                if (d < 1 || d > n - 1 || seen[static_cast<std::size_t>(d)]) return false;
                seen[static_cast<std::size_t>(d)] = 1;
            }
            return true;
        }
        case ProblemKind::Costas: {
            for (int k = 1; k < n; ++k) {
                std::vector<char> seen(static_cast<std::size_t>(2 * n + 1), 0);
                for (int i = 0; i + k < n; ++i) {
                    int d = a[static_cast<std::size_t>(i + k)] -
                            a[static_cast<std::size_t>(i)] + n;
                    if (seen[static_cast<std::size_t>(d)]) return false;
                    seen[static_cast<std::size_t>(d)] = 1;
                }
            }
            return true;
        }
    }
    return false;
}

}  // namespace lasvegas
