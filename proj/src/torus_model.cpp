#include "barkit/torus_model.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace barkit {

validation_report validate(const curve_class& c) {
    if (c.p == 0 && c.q == 0) return {false, "class (0,0) is not a curve class"};
    if (std::gcd(std::llabs(c.p), std::llabs(c.q)) != 1)
        return {false, "class " + to_string(c) + " is not primitive"};
    return {};
}

std::string to_string(const curve_class& c) {
    return std::to_string(c.p) + "/" + std::to_string(c.q);
}

long long intersection_number(const curve_class& u, const curve_class& v) {
    return std::llabs(u.p * v.q - u.q * v.p);
}

curve_class twist_action(const curve_class& t, const curve_class& v, long long k) {
    const long long pairing = v.p * t.q - v.q * t.p;
    return {v.p + k * pairing * t.p, v.q + k * pairing * t.q};
}

filtered_complex build_complex(const curve_class& u, const curve_class& v) {
    for (const curve_class* c : {&u, &v}) {
        validation_report r = validate(*c);
        if (!r.ok) throw std::invalid_argument("build_complex: " + r.message);
    }
    const long long n = intersection_number(u, v);
    if (n == 0)
        throw std::invalid_argument("build_complex: parallel classes " + to_string(u) +
                                    " and " + to_string(v));
    filtered_complex c;
    // Straight representatives cross n times, evenly spaced along u; the
    // transverse curve is offset so the first crossing sits at 1/(2n).
    for (long long j = 0; j < n; ++j) {
        generator g;
        g.id = "x" + std::to_string(j);
        g.degree = 0;
        g.action = (static_cast<value_t>(j) + 0.5) / static_cast<value_t>(n);
        c.generators.push_back(g);
    }
    return c;
}

}  // namespace barkit
