#ifndef BARKIT_PERSISTENCE_HPP
#define BARKIT_PERSISTENCE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "barkit/barcode.hpp"

namespace barkit {

struct generator {
    std::string id;
    int degree = 0;
    value_t action = 0.0;
};

// Z/2 chain complex filtered by per-generator action values. The boundary
// stores, per generator id, the ids appearing with coefficient 1.
struct filtered_complex {
    std::vector<generator> generators;
    std::map<std::string, std::vector<std::string>> boundary;
};

// Checks ids unique, boundary targets exist, degree drop of exactly 1,
// strict action decrease along the boundary, and d(d(x)) = 0 over Z/2.
validation_report validate_complex(const filtered_complex& c);

// Graded barcode of the action filtration CF^kappa = span{action < kappa},
// by left-to-right column reduction of the boundary matrix in ascending
// action order (ties broken by id). A pivot pair (i, j) contributes
// (action_i, action_j] in degree_i; unpaired generators contribute
// (action_i, +inf).
barcode barcode_of_complex(const filtered_complex& c);

struct homology_ranks {
    std::size_t total = 0;
    std::map<int, std::size_t> by_degree;
};

// dim ker d / im d over Z/2, total and per degree, by Gaussian elimination
// independent of the persistence reduction.
homology_ranks homology_rank(const filtered_complex& c);

// Deterministic per-generator action offsets in [-delta, delta] derived from
// the seed; boundary unchanged. Throws std::invalid_argument when the
// perturbed complex would violate strict action decrease.
filtered_complex perturb_actions(const filtered_complex& c, value_t delta,
                                 std::uint64_t seed);

}  // namespace barkit

#endif
