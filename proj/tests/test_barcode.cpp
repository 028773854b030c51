#include "barkit/barcode.hpp"

#include "doctest.h"
#include "gen.hpp"

using namespace barkit;

namespace {

barcode bc(std::initializer_list<bar> bars) { return barcode{std::vector<bar>(bars)}; }

}  // namespace

TEST_CASE("shift moves every endpoint") {
    CHECK(multiset_equal(shift(bc({{0, 1}}), 2), bc({{2, 3}})));
    CHECK(multiset_equal(shift(bc({{1, infinite_death}}), -1), bc({{0, infinite_death}})));
    barcode b = bc({{0, 2}, {0.5, infinite_death}, {0, 2}});
    CHECK(multiset_equal(shift(b, 0), b));
}

TEST_CASE("shift composes additively and preserves sigma_inf") {
    testgen::rng r(11);
    for (int trial = 0; trial < 100; ++trial) {
        barcode b = testgen::random_barcode(r);
        const double c1 = 0.25 * static_cast<double>(r.below(17));
        const double c2 = -0.25 * static_cast<double>(r.below(17));
        CHECK(multiset_equal(shift(shift(b, c1), c2), shift(b, c1 + c2)));
        CHECK(sigma_inf(shift(b, c1)) == sigma_inf(b));
    }
}

TEST_CASE("sigma_inf counts semi-infinite bars with multiplicity") {
    CHECK(sigma_inf(barcode{}) == 0);
    CHECK(sigma_inf(bc({{0, infinite_death}, {0, infinite_death}, {0, 3}})) == 2);
}

TEST_CASE("sigma_inf_by_degree splits by degree") {
    barcode b = bc({{0, infinite_death, 0}, {1, infinite_death, 0}, {0, infinite_death, 1},
                    {0, 2, 1}});
    auto by_degree = sigma_inf_by_degree(b);
    CHECK(by_degree[0] == 2);
    CHECK(by_degree[1] == 1);
}

TEST_CASE("canonical_form anchors semi-infinite births first") {
    CHECK(multiset_equal(canonical_form(bc({{5, infinite_death}, {7, 9}})),
                         bc({{0, infinite_death}, {2, 4}})));
    CHECK(canonical_form(barcode{}).empty());
    // finite-only barcode anchors on the minimal birth
    CHECK(multiset_equal(canonical_form(bc({{3, 4}, {5, 6}})), bc({{0, 1}, {2, 3}})));
}

TEST_CASE("canonical_form is idempotent and shift-invariant on grid data") {
    testgen::rng r(12);
    for (int trial = 0; trial < 200; ++trial) {
        barcode b = testgen::random_barcode(r);
        barcode canon = canonical_form(b);
        CHECK(multiset_equal(canonical_form(canon), canon));
        const double c = 0.25 * (static_cast<double>(r.below(33)) - 16.0);
        CHECK(multiset_equal(canonical_form(shift(b, c)), canon));
    }
}

TEST_CASE("validate reports the first bad bar") {
    CHECK(validate(bc({{0, 1}})).ok);
    validation_report empty_interval = validate(bc({{2, 2}}));
    CHECK_FALSE(empty_interval.ok);
    CHECK(empty_interval.message.find("empty interval") != std::string::npos);
    validation_report reversed = validate(bc({{3, 1}}));
    CHECK_FALSE(reversed.ok);
    CHECK(reversed.message.find("birth >= death") != std::string::npos);
    CHECK_FALSE(validate(bc({{-infinite_death, 1}})).ok);
    CHECK_FALSE(validate(bc({{0, 1, 0}, {0, 1}})).ok);  // mixed grading
}

TEST_CASE("shift_class equality is an equivalence relation") {
    testgen::rng r(13);
    for (int trial = 0; trial < 100; ++trial) {
        barcode b = testgen::random_barcode(r);
        shift_class x(b);
        CHECK(x == x);
        const double c = 0.25 * (static_cast<double>(r.below(33)) - 16.0);
        shift_class y(shift(b, c));
        CHECK(x == y);
        shift_class z(shift(b, c + 0.5));
        CHECK(y == z);
        CHECK(x == z);  // transitivity through the chain
    }
    // distinct classes do not compare equal
    CHECK_FALSE(shift_class(bc({{0, 1}})) == shift_class(bc({{0, 2}})));
}

TEST_CASE("gradedness classification") {
    CHECK(gradedness(barcode{}) == grading_kind::empty);
    CHECK(gradedness(bc({{0, 1, 0}})) == grading_kind::graded);
    CHECK(gradedness(bc({{0, 1}})) == grading_kind::ungraded);
    CHECK(gradedness(bc({{0, 1, 0}, {0, 1}})) == grading_kind::mixed);
    CHECK(grading_compatible(barcode{}, bc({{0, 1, 0}})));
    CHECK_FALSE(grading_compatible(bc({{0, 1}}), bc({{0, 1, 0}})));
}
