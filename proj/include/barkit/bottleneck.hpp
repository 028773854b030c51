#ifndef BARKIT_BOTTLENECK_HPP
#define BARKIT_BOTTLENECK_HPP

#include <optional>
#include <utility>
#include <vector>

#include "barkit/barcode.hpp"

namespace barkit {

// Endpoint form of the inclusion test I c J^{-delta} and J c I^{-delta}:
// finite vs finite reduces to max(|a-c|, |b-d|) <= delta, two semi-infinite
// bars to |a-c| <= delta, and mixed kinds are never compatible.
bool compatible(const bar& i, const bar& j, value_t delta);

// A bar is deletable when it is finite with length <= 2*delta.
bool deletable(const bar& i, value_t delta);

struct matching_witness {
    std::vector<std::pair<bar, bar>> pairs;  // (bar of B, bar of B2)
    std::vector<bar> deleted_left;
    std::vector<bar> deleted_right;
    value_t delta = 0.0;
};

// Checks the witness invariants against the two barcodes it claims to match.
validation_report check_witness(const matching_witness& w, const barcode& b1,
                                const barcode& b2);

// Decides whether a delta-matching exists; returns the witness when it does.
// Graded barcodes are matched degree by degree. Throws std::invalid_argument
// on a graded/ungraded mismatch.
std::optional<matching_witness> delta_matching(const barcode& b1, const barcode& b2,
                                               value_t delta);

bool delta_matching_exists(const barcode& b1, const barcode& b2, value_t delta);

// Finite set of delta values guaranteed to contain the threshold of the
// monotone matching predicate: 0, same-kind endpoint gaps, and half gaps
// between birth and finite death endpoints (bar half-lengths included).
std::vector<value_t> candidate_deltas(const barcode& b1, const barcode& b2);

// Least candidate delta admitting a matching; +inf iff sigma_inf differs.
value_t bottleneck_distance(const barcode& b1, const barcode& b2);

// Exhaustive oracle over all deletion subsets and bijections; inputs capped
// at |b1| + |b2| <= 8 (throws std::invalid_argument beyond).
value_t brute_force_distance(const barcode& b1, const barcode& b2);

}  // namespace barkit

#endif
