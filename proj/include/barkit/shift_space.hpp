#ifndef BARKIT_SHIFT_SPACE_HPP
#define BARKIT_SHIFT_SPACE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "barkit/barcode.hpp"
#include "barkit/bottleneck.hpp"

namespace barkit {

// Shifts c at which g(c) = d_bottle(B, B'[c]) can attain its minimum:
// endpoint differences x - y and midpoint differences (x1+x2)/2 - (y1+y2)/2,
// x from B, y from B'. g is 1-Lipschitz piecewise linear, so the minimum of
// any matching structure's cost lands on one of these.
std::vector<value_t> candidate_shifts(const barcode& b1, const barcode& b2);

// Quotient distance on the shift space: min over candidate shifts of the
// bottleneck distance. +inf iff sigma_inf differs (per degree when graded).
// Candidate evaluations run in parallel when OpenMP is enabled.
value_t shift_distance(const barcode& b1, const barcode& b2);
value_t shift_distance(const shift_class& x, const shift_class& y);

// Serial reference for the parallel kernel; must agree exactly.
value_t shift_distance_serial(const barcode& b1, const barcode& b2);

// Dense grid search over the interval spanned by the candidate shifts.
// Upper bound on shift_distance; within resolution/2 of it by Lipschitz.
value_t grid_oracle_shift_distance(const barcode& b1, const barcode& b2,
                                   value_t resolution);
value_t grid_oracle_shift_distance_serial(const barcode& b1, const barcode& b2,
                                          value_t resolution);

// Connected components of the shift space are indexed by sigma_inf
// (per degree when graded).
bool same_component(const barcode& b1, const barcode& b2);
bool same_component(const shift_class& x, const shift_class& y);

// Discrete sampling of a path of barcodes with a declared mesh.
struct barcode_path {
    std::vector<barcode> steps;
    value_t epsilon = 0.0;
};

enum class path_violation_kind { none, empty_path, grading, sigma_jump, mesh };

struct path_report {
    bool ok = true;
    path_violation_kind kind = path_violation_kind::none;
    std::size_t index = 0;  // first offending step
    std::string message;

    explicit operator bool() const { return ok; }
};

// Verifies that consecutive steps stay within epsilon in shift distance and
// that sigma_inf (per degree) is constant along the path.
path_report check_path(const barcode_path& p);

// Finite-prefix Cauchy test: shift_distance(S_i, S_j) <= schedule(min(i,j))
// for every pair i < j.
bool cauchy_check(const std::vector<shift_class>& s,
                  const std::function<value_t(std::size_t)>& schedule);

}  // namespace barkit

#endif
