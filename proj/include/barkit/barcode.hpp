#ifndef BARKIT_BARCODE_HPP
#define BARKIT_BARCODE_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace barkit {

using value_t = double;

inline constexpr value_t infinite_death = std::numeric_limits<value_t>::infinity();

// Half-open interval (birth, death], death == +inf for a semi-infinite bar.
// degree is nullopt for ungraded bars.
struct bar {
    value_t birth = 0.0;
    value_t death = infinite_death;
    std::optional<int> degree{};

    bool finite() const { return std::isfinite(death); }
    value_t length() const { return death - birth; }

    bool operator==(const bar& other) const = default;
};

// Total order used for multiset normalization; degree key sorts ungraded first.
bool bar_less(const bar& a, const bar& b);

// Finite multiset of bars. Order of the container is not semantic.
struct barcode {
    std::vector<bar> bars;

    barcode() = default;
    explicit barcode(std::vector<bar> b) : bars(std::move(b)) {}

    bool empty() const { return bars.empty(); }
    std::size_t size() const { return bars.size(); }
};

enum class grading_kind { empty, graded, ungraded, mixed };

grading_kind gradedness(const barcode& b);

// True when the two barcodes can legally be compared: both graded, both
// ungraded, or at least one empty.
bool grading_compatible(const barcode& a, const barcode& b);

struct validation_report {
    bool ok = true;
    std::string message;

    explicit operator bool() const { return ok; }
};

validation_report validate(const barcode& b);

// Overall shift: every endpoint moves by c, multiplicities and degrees kept.
barcode shift(const barcode& b, value_t c);

// Number of semi-infinite bars, counted with multiplicity.
std::size_t sigma_inf(const barcode& b);

// Per-degree counts of semi-infinite bars; ungraded bars are keyed under
// nullopt's stand-in (degree omitted -> single entry when ungraded).
std::map<int, std::size_t> sigma_inf_by_degree(const barcode& b);

// Shift-invariant representative: anchor the minimal semi-infinite birth at 0
// when sigma_inf > 0, otherwise the minimal birth overall; empty stays empty.
barcode canonical_form(const barcode& b);

// Multiset equality with exact endpoint comparison.
bool multiset_equal(const barcode& a, const barcode& b);

// A barcode considered up to overall shift, stored canonically.
struct shift_class {
    barcode representative;

    shift_class() = default;
    explicit shift_class(const barcode& b) : representative(canonical_form(b)) {}

    friend bool operator==(const shift_class& x, const shift_class& y) {
        return multiset_equal(x.representative, y.representative);
    }
};

}  // namespace barkit

#endif
