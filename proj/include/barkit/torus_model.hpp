#ifndef BARKIT_TORUS_MODEL_HPP
#define BARKIT_TORUS_MODEL_HPP

#include <string>

#include "barkit/persistence.hpp"

namespace barkit {

// Primitive homology class of a closed straight curve on the flat torus.
struct curve_class {
    long long p = 0;
    long long q = 0;

    bool operator==(const curve_class&) const = default;
};

validation_report validate(const curve_class& c);
std::string to_string(const curve_class& c);

// |p s - q r|: minimal geometric intersection number of straight
// representatives.
long long intersection_number(const curve_class& u, const curve_class& v);

// Homological twist about t: v + k <v,t> t with <v,t> = v.p t.q - v.q t.p.
curve_class twist_action(const curve_class& t, const curve_class& v, long long k);

// Fixture complex of two transverse classes: one degree-0 generator per
// intersection point, zero boundary, actions (j + 1/2)/N along u for the N
// evenly spaced crossings. Throws std::invalid_argument on parallel classes.
filtered_complex build_complex(const curve_class& u, const curve_class& v);

}  // namespace barkit

#endif
