#include "barkit/barcode.hpp"

#include <algorithm>
#include <sstream>

namespace barkit {

namespace {

int degree_key(const bar& b) {
    return b.degree ? *b.degree : std::numeric_limits<int>::min();
}

std::string describe(const bar& b) {
    std::ostringstream os;
    os << "(" << b.birth << ", ";
    if (b.finite())
        os << b.death << "]";
    else
        os << "inf)";
    if (b.degree) os << " deg " << *b.degree;
    return os.str();
}

}  // namespace

bool bar_less(const bar& a, const bar& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death != b.death) return a.death < b.death;
    return degree_key(a) < degree_key(b);
}

grading_kind gradedness(const barcode& b) {
    if (b.empty()) return grading_kind::empty;
    bool any_graded = false, any_ungraded = false;
    for (const bar& x : b.bars) (x.degree ? any_graded : any_ungraded) = true;
    if (any_graded && any_ungraded) return grading_kind::mixed;
    return any_graded ? grading_kind::graded : grading_kind::ungraded;
}

bool grading_compatible(const barcode& a, const barcode& b) {
    grading_kind ga = gradedness(a), gb = gradedness(b);
    if (ga == grading_kind::mixed || gb == grading_kind::mixed) return false;
    if (ga == grading_kind::empty || gb == grading_kind::empty) return true;
    return ga == gb;
}

validation_report validate(const barcode& b) {
    for (const bar& x : b.bars) {
        if (!std::isfinite(x.birth))
            return {false, "bar " + describe(x) + ": birth must be finite"};
        if (std::isnan(x.death))
            return {false, "bar " + describe(x) + ": death is NaN"};
        if (x.death == -infinite_death)
            return {false, "bar " + describe(x) + ": death must be finite or +inf"};
        if (!(x.birth < x.death)) {
            if (x.birth == x.death)
                return {false, "bar " + describe(x) + ": empty interval"};
            return {false, "bar " + describe(x) + ": birth >= death"};
        }
    }
    if (gradedness(b) == grading_kind::mixed)
        return {false, "barcode mixes graded and ungraded bars"};
    return {};
}

barcode shift(const barcode& b, value_t c) {
    barcode out = b;
    for (bar& x : out.bars) {
        x.birth += c;
        if (x.finite()) x.death += c;
    }
    return out;
}

std::size_t sigma_inf(const barcode& b) {
    std::size_t n = 0;
    for (const bar& x : b.bars)
        if (!x.finite()) ++n;
    return n;
}

std::map<int, std::size_t> sigma_inf_by_degree(const barcode& b) {
    std::map<int, std::size_t> out;
    for (const bar& x : b.bars)
        if (!x.finite()) ++out[x.degree ? *x.degree : std::numeric_limits<int>::min()];
    return out;
}

barcode canonical_form(const barcode& b) {
    if (b.empty()) return {};
    value_t anchor = infinite_death;
    if (sigma_inf(b) > 0) {
        for (const bar& x : b.bars)
            if (!x.finite()) anchor = std::min(anchor, x.birth);
    } else {
        for (const bar& x : b.bars) anchor = std::min(anchor, x.birth);
    }
    return shift(b, -anchor);
}

bool multiset_equal(const barcode& a, const barcode& b) {
    if (a.size() != b.size()) return false;
    std::vector<bar> x = a.bars, y = b.bars;
    std::sort(x.begin(), x.end(), bar_less);
    std::sort(y.begin(), y.end(), bar_less);
    return x == y;
}

}  // namespace barkit
