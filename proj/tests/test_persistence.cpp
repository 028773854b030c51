#include "barkit/persistence.hpp"

#include <algorithm>

#include "barkit/bottleneck.hpp"
#include "doctest.h"
#include "gen.hpp"
#include "sublevel_oracle.hpp"

using namespace barkit;

namespace {

filtered_complex two_generator_pair() {
    filtered_complex c;
    c.generators.push_back({"x", 0, 0.0});
    c.generators.push_back({"y", 1, 1.0});
    c.boundary["y"] = {"x"};
    return c;
}

}  // namespace

TEST_CASE("validate_complex accepts the axioms and rejects violations") {
    filtered_complex single;
    single.generators.push_back({"x", 0, 0.0});
    CHECK(validate_complex(single).ok);

    CHECK(validate_complex(two_generator_pair()).ok);

    filtered_complex increasing;
    increasing.generators.push_back({"x", 0, 1.0});
    increasing.generators.push_back({"y", 1, 0.0});
    increasing.boundary["y"] = {"x"};
    validation_report r = validate_complex(increasing);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("action not decreasing") != std::string::npos);

    filtered_complex bad_degree;
    bad_degree.generators.push_back({"x", 0, 0.0});
    bad_degree.generators.push_back({"y", 2, 1.0});
    bad_degree.boundary["y"] = {"x"};
    CHECK_FALSE(validate_complex(bad_degree).ok);

    filtered_complex dup;
    dup.generators.push_back({"x", 0, 0.0});
    dup.generators.push_back({"x", 0, 1.0});
    CHECK_FALSE(validate_complex(dup).ok);

    // d(d(x)) != 0: c -> {a, b}, b -> {a}  gives dd(c) = d(a) + d(b) = a
    filtered_complex square;
    square.generators.push_back({"a", 0, 0.0});
    square.generators.push_back({"b", 1, 1.0});
    square.generators.push_back({"c", 2, 2.0});
    square.boundary["b"] = {"a"};
    square.boundary["c"] = {"b"};
    validation_report sq = validate_complex(square);
    CHECK_FALSE(sq.ok);
    CHECK(sq.message.find("d(d(") != std::string::npos);
}

TEST_CASE("barcode of the elementary pair and the singleton") {
    barcode paired = barcode_of_complex(two_generator_pair());
    REQUIRE(paired.size() == 1);
    CHECK(paired.bars[0] == bar{0.0, 1.0, 0});

    filtered_complex single;
    single.generators.push_back({"x", 3, 1.5});
    barcode lone = barcode_of_complex(single);
    REQUIRE(lone.size() == 1);
    CHECK(lone.bars[0] == bar{1.5, infinite_death, 3});
}

TEST_CASE("filtered interval complex by hand") {
    // two vertices joined by an edge entering last: one component survives,
    // the younger vertex dies when the edge arrives
    filtered_complex c;
    c.generators.push_back({"v1", 0, 0.5});
    c.generators.push_back({"v2", 0, 1.0});
    c.generators.push_back({"e", 1, 1.5});
    c.boundary["e"] = {"v1", "v2"};
    REQUIRE(validate_complex(c).ok);
    barcode b = barcode_of_complex(c);
    barcode expected;
    expected.bars = {{0.5, infinite_death, 0}, {1.0, 1.5, 0}};
    CHECK(multiset_equal(b, expected));
    homology_ranks h = homology_rank(c);
    CHECK(h.total == 1);
    CHECK(h.by_degree[0] == 1);
    CHECK(h.by_degree[1] == 0);
}

TEST_CASE("sigma_inf of the barcode equals the homology rank") {
    testgen::rng r(31);
    for (int trial = 0; trial < 100; ++trial) {
        testgen::complex_fixture fx = testgen::random_complex(r, 12);
        barcode b = barcode_of_complex(fx.complex);
        homology_ranks h = homology_rank(fx.complex);
        CHECK(sigma_inf(b) == h.total);
        std::map<int, std::size_t> by_degree = sigma_inf_by_degree(b);
        for (auto& [deg, count] : h.by_degree) {
            std::size_t seen = by_degree.count(deg) ? by_degree[deg] : 0;
            CHECK(seen == count);
        }
    }
}

TEST_CASE("homology rank on hand cases") {
    CHECK(homology_rank(two_generator_pair()).total == 0);

    filtered_complex zero_boundary;
    for (int i = 0; i < 5; ++i)
        zero_boundary.generators.push_back({"g" + std::to_string(i), 0, 0.5 * (i + 1)});
    CHECK(homology_rank(zero_boundary).total == 5);

    // sphere-like fixture: exactly two unpaired generators
    filtered_complex sphere;
    sphere.generators.push_back({"bottom", 0, 0.0});
    sphere.generators.push_back({"top", 2, 1.0});
    homology_ranks h = homology_rank(sphere);
    CHECK(h.total == 2);
    CHECK(sigma_inf(barcode_of_complex(sphere)) == 2);
}

TEST_CASE("reduction matches the construction and the sublevel oracle") {
    testgen::rng r(32);
    for (int trial = 0; trial < 60; ++trial) {
        testgen::complex_fixture fx = testgen::random_complex(r, 12);
        barcode b = barcode_of_complex(fx.complex);
        CHECK(multiset_equal(b, fx.expected));
        CHECK(multiset_equal(b, testoracle::sublevel_barcode(fx.complex)));
    }
    for (int trial = 0; trial < 60; ++trial) {
        filtered_complex c = testgen::random_bipartite_complex(r, 12);
        CHECK(multiset_equal(barcode_of_complex(c), testoracle::sublevel_barcode(c)));
    }
}

TEST_CASE("pairing soundness: endpoints are generator actions") {
    testgen::rng r(33);
    for (int trial = 0; trial < 50; ++trial) {
        testgen::complex_fixture fx = testgen::random_complex(r, 10);
        barcode b = barcode_of_complex(fx.complex);
        std::size_t finite = 0;
        for (const bar& x : b.bars)
            if (x.finite()) ++finite;
        const std::size_t n = fx.complex.generators.size();
        CHECK(b.size() == n - finite);  // finite bars use two generators each
        std::vector<value_t> endpoints;
        for (const bar& x : b.bars) {
            endpoints.push_back(x.birth);
            if (x.finite()) endpoints.push_back(x.death);
        }
        std::vector<value_t> actions;
        for (const generator& g : fx.complex.generators) actions.push_back(g.action);
        std::sort(endpoints.begin(), endpoints.end());
        std::sort(actions.begin(), actions.end());
        CHECK(endpoints == actions);
    }
}

TEST_CASE("action ties are broken deterministically") {
    filtered_complex c;
    c.generators.push_back({"a", 0, 0.0});
    c.generators.push_back({"b", 0, 0.0});
    c.generators.push_back({"k", 1, 1.0});
    c.boundary["k"] = {"a", "b"};
    REQUIRE(validate_complex(c).ok);
    barcode first = barcode_of_complex(c);
    std::swap(c.generators[0], c.generators[1]);  // same complex, reordered input
    barcode second = barcode_of_complex(c);
    CHECK(multiset_equal(first, second));
    CHECK(sigma_inf(first) == 1);
}

TEST_CASE("perturb_actions is deterministic and bounded") {
    testgen::rng r(34);
    testgen::complex_fixture fx = testgen::random_complex(r, 10);

    filtered_complex same = perturb_actions(fx.complex, 0.0, 7);
    for (std::size_t i = 0; i < same.generators.size(); ++i)
        CHECK(same.generators[i].action == fx.complex.generators[i].action);

    filtered_complex p1 = perturb_actions(fx.complex, 0.1, 42);
    filtered_complex p2 = perturb_actions(fx.complex, 0.1, 42);
    for (std::size_t i = 0; i < p1.generators.size(); ++i) {
        CHECK(p1.generators[i].action == p2.generators[i].action);
        CHECK(std::abs(p1.generators[i].action - fx.complex.generators[i].action) <= 0.1);
    }
    CHECK(validate_complex(p1).ok);
}

TEST_CASE("perturbation rejection when strictness would break") {
    filtered_complex tight;
    tight.generators.push_back({"x", 0, 0.0});
    tight.generators.push_back({"y", 1, 0.01});
    tight.boundary["y"] = {"x"};
    REQUIRE(validate_complex(tight).ok);
    bool rejected = false;
    for (std::uint64_t seed = 0; seed < 50 && !rejected; ++seed) {
        try {
            (void)perturb_actions(tight, 0.1, seed);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
    }
    CHECK(rejected);
}

TEST_CASE("stability: perturbed barcode stays within delta") {
    testgen::rng r(35);
    for (int trial = 0; trial < 50; ++trial) {
        testgen::complex_fixture fx = testgen::random_complex(r, 10);
        for (value_t delta : {0.01, 0.05, 0.1}) {
            filtered_complex p = perturb_actions(fx.complex, delta, r.next());
            value_t d = bottleneck_distance(barcode_of_complex(fx.complex),
                                            barcode_of_complex(p));
            CHECK(d <= delta);
        }
    }
}
