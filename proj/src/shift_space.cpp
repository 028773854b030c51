#include "barkit/shift_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace barkit {

namespace {

std::vector<value_t> finite_endpoints(const barcode& b) {
    std::vector<value_t> out;
    for (const bar& x : b.bars) {
        out.push_back(x.birth);
        if (x.finite()) out.push_back(x.death);
    }
    return out;
}

bool sigma_compatible(const barcode& b1, const barcode& b2) {
    if (gradedness(b1) == grading_kind::graded || gradedness(b2) == grading_kind::graded)
        return sigma_inf_by_degree(b1) == sigma_inf_by_degree(b2);
    return sigma_inf(b1) == sigma_inf(b2);
}

void require_comparable(const barcode& b1, const barcode& b2, const char* op) {
    if (!grading_compatible(b1, b2))
        throw std::invalid_argument(std::string(op) +
                                    ": graded/ungraded barcode mismatch");
}

// Callers guarantee sigma-compatibility, so every evaluation below is finite
// and the min-reduction identity value never leaks into the result.
template <bool Parallel>
value_t min_over_shifts(const barcode& b1, const barcode& b2,
                        const std::vector<value_t>& shifts) {
    value_t best = infinite_death;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(shifts.size());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic) reduction(min : best)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            best = std::min(best, bottleneck_distance(b1, shift(b2, shifts[i])));
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            best = std::min(best, bottleneck_distance(b1, shift(b2, shifts[i])));
    }
    return best;
}

template <bool Parallel>
value_t shift_distance_impl(const barcode& b1, const barcode& b2) {
    require_comparable(b1, b2, "shift_distance");
    if (!sigma_compatible(b1, b2)) return infinite_death;
    return min_over_shifts<Parallel>(b1, b2, candidate_shifts(b1, b2));
}

template <bool Parallel>
value_t grid_oracle_impl(const barcode& b1, const barcode& b2, value_t resolution) {
    require_comparable(b1, b2, "grid_oracle_shift_distance");
    if (resolution <= 0)
        throw std::invalid_argument("grid_oracle_shift_distance: resolution must be > 0");
    if (!sigma_compatible(b1, b2)) return infinite_death;
    std::vector<value_t> cands = candidate_shifts(b1, b2);
    value_t lo = *std::min_element(cands.begin(), cands.end());
    value_t hi = *std::max_element(cands.begin(), cands.end());
    std::vector<value_t> grid;
    grid.reserve(static_cast<std::size_t>((hi - lo) / resolution) + 2);
    for (std::size_t i = 0; lo + static_cast<value_t>(i) * resolution < hi; ++i)
        grid.push_back(lo + static_cast<value_t>(i) * resolution);
    grid.push_back(hi);
    return min_over_shifts<Parallel>(b1, b2, grid);
}

}  // namespace

std::vector<value_t> candidate_shifts(const barcode& b1, const barcode& b2) {
    std::vector<value_t> xs = finite_endpoints(b1), ys = finite_endpoints(b2);
    std::vector<value_t> out{0.0};
    for (value_t x : xs)
        for (value_t y : ys) out.push_back(x - y);
    // Midpoint family: ties between two endpoint-difference terms.
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i; j < xs.size(); ++j)
            for (std::size_t k = 0; k < ys.size(); ++k)
                for (std::size_t l = k; l < ys.size(); ++l)
                    out.push_back((xs[i] + xs[j]) / 2.0 - (ys[k] + ys[l]) / 2.0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

value_t shift_distance(const barcode& b1, const barcode& b2) {
    return shift_distance_impl<true>(b1, b2);
}

value_t shift_distance(const shift_class& x, const shift_class& y) {
    return shift_distance(x.representative, y.representative);
}

value_t shift_distance_serial(const barcode& b1, const barcode& b2) {
    return shift_distance_impl<false>(b1, b2);
}

value_t grid_oracle_shift_distance(const barcode& b1, const barcode& b2,
                                   value_t resolution) {
    return grid_oracle_impl<true>(b1, b2, resolution);
}

value_t grid_oracle_shift_distance_serial(const barcode& b1, const barcode& b2,
                                          value_t resolution) {
    return grid_oracle_impl<false>(b1, b2, resolution);
}

bool same_component(const barcode& b1, const barcode& b2) {
    require_comparable(b1, b2, "same_component");
    return sigma_compatible(b1, b2);
}

bool same_component(const shift_class& x, const shift_class& y) {
    return same_component(x.representative, y.representative);
}

path_report check_path(const barcode_path& p) {
    if (p.steps.empty())
        return {false, path_violation_kind::empty_path, 0, "path has no steps"};
    grading_kind expected = grading_kind::empty;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        grading_kind g = gradedness(p.steps[i]);
        if (g == grading_kind::mixed)
            return {false, path_violation_kind::grading, i,
                    "step mixes graded and ungraded bars"};
        if (g == grading_kind::empty) continue;
        if (expected == grading_kind::empty)
            expected = g;
        else if (g != expected)
            return {false, path_violation_kind::grading, i,
                    "path mixes graded and ungraded steps"};
    }
    for (std::size_t i = 1; i < p.steps.size(); ++i) {
        const barcode& prev = p.steps[i - 1];
        const barcode& cur = p.steps[i];
        if (!sigma_compatible(prev, cur)) {
            std::ostringstream os;
            os << "sigma_inf jump " << sigma_inf(prev) << " -> " << sigma_inf(cur)
               << ", shift distance +inf";
            return {false, path_violation_kind::sigma_jump, i, os.str()};
        }
        value_t d = shift_distance(prev, cur);
        if (!(d <= p.epsilon)) {
            std::ostringstream os;
            os << "shift distance " << d << " exceeds mesh " << p.epsilon;
            return {false, path_violation_kind::mesh, i, os.str()};
        }
    }
    return {};
}

bool cauchy_check(const std::vector<shift_class>& s,
                  const std::function<value_t(std::size_t)>& schedule) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!(shift_distance(s[i], s[j]) <= schedule(i))) return false;
    return true;
}

}  // namespace barkit
