#include "barkit/twist_word.hpp"

#include "doctest.h"
#include "gen.hpp"

using namespace barkit;

namespace {

const rank_hypotheses a2_equal{2, false};   // hf(L0, L1) in the A2 rank table
const rank_hypotheses a2_greater{3, false}; // hf(L1, L2) in the A2 rank table

}  // namespace

TEST_CASE("parse_and_reduce performs free reduction") {
    CHECK(parse_and_reduce("A^2 A^-2").trivial());
    twist_word w = parse_and_reduce("B^1 A^3 A^-1");
    REQUIRE(w.syllables.size() == 2);
    CHECK(w.syllables[0] == syllable{twist_letter::B, 1});
    CHECK(w.syllables[1] == syllable{twist_letter::A, 2});
    twist_word merged = parse_and_reduce("A^1 B^0 A^1");
    REQUIRE(merged.syllables.size() == 1);
    CHECK(merged.syllables[0] == syllable{twist_letter::A, 2});
    CHECK(parse_and_reduce("").trivial());
    CHECK_THROWS_AS((void)parse_and_reduce("C^1"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_and_reduce("A^x"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_and_reduce("A2"), std::invalid_argument);
}

TEST_CASE("hypothesis validation") {
    CHECK(validate(rank_hypotheses{2, false}).ok);
    CHECK(validate(rank_hypotheses{7, false}).ok);
    CHECK_FALSE(validate(rank_hypotheses{1, false}).ok);
    CHECK_FALSE(validate(rank_hypotheses{2, true}).ok);
    CHECK_FALSE(validate(rank_hypotheses{5, true}).ok);
    CHECK_THROWS_AS((void)derive_obstruction(parse_and_reduce("A^1"), rank_hypotheses{1, false}),
                    hypothesis_error);
}

TEST_CASE("trivial word is inconclusive") {
    obstruction_certificate c = derive_obstruction(twist_word{}, a2_equal);
    CHECK(c.conclusion == certificate_conclusion::inconclusive);
    CHECK(c.steps.empty());
    CHECK(verify_certificate(c, twist_word{}, a2_equal));
}

TEST_CASE("the hf = 2 chain on B^1 A^1 reaches the 2 < 2 contradiction") {
    twist_word w = parse_and_reduce("B^1 A^1");
    obstruction_certificate c = derive_obstruction(w, a2_equal);
    CHECK(c.conclusion == certificate_conclusion::obstructed);
    REQUIRE(c.steps.size() == 3);
    CHECK(c.steps[0].rule == rule_kind::base_rank);
    CHECK_FALSE(c.steps[0].strict);  // 2 = 2 base
    CHECK(c.steps[1].rule == rule_kind::twist_seed);
    CHECK(c.steps.back().rule == rule_kind::path_invariance);
    CHECK(c.steps.back().lesser_value == 2);
    CHECK(c.steps.back().greater_value == 2);
    CHECK(verify_certificate(c, w, a2_equal));
    std::string text = render(c);
    CHECK(text.find("contradiction") != std::string::npos);
    CHECK(text.find("identity component") != std::string::npos);
}

TEST_CASE("pure powers use the single-twist chain") {
    twist_word w = parse_and_reduce("A^3");
    obstruction_certificate c = derive_obstruction(w, a2_greater);
    CHECK(c.conclusion == certificate_conclusion::obstructed);
    REQUIRE(c.steps.size() == 3);
    CHECK(c.steps[0].rule == rule_kind::base_rank);
    CHECK(c.steps[0].strict);  // 3 > 2 base
    CHECK(c.steps[1].rule == rule_kind::twist_flip);
    // the transported inequality claims hf < 2 against hf = 3
    CHECK(c.steps.back().lesser_value == 3);
    CHECK(c.steps.back().greater_value == 2);
    CHECK(verify_certificate(c, w, a2_greater));

    for (int k : {-5, -1, 1, 5}) {
        for (const char* letter : {"A^", "B^"}) {
            twist_word power = parse_and_reduce(letter + std::to_string(k));
            for (const rank_hypotheses& h : {a2_equal, a2_greater}) {
                obstruction_certificate cert = derive_obstruction(power, h);
                CHECK(cert.conclusion == certificate_conclusion::obstructed);
                CHECK(verify_certificate(cert, power, h));
            }
        }
    }
}

TEST_CASE("every reduced word yields a verified certificate in both branches") {
    testgen::rng r(51);
    for (int trial = 0; trial < 200; ++trial) {
        twist_word w = testgen::random_word(r, 1 + r.below(8));
        for (const rank_hypotheses& h : {a2_equal, a2_greater}) {
            obstruction_certificate c = derive_obstruction(w, h);
            CHECK(c.conclusion == certificate_conclusion::obstructed);
            verify_result v = verify_certificate_detailed(c, w, h);
            if (!v.ok) {
                CAPTURE(to_string(w));
                CAPTURE(v.step);
                CAPTURE(v.reason);
            }
            CHECK(v.ok);
        }
    }
}

TEST_CASE("a flipped inequality direction is rejected at that step") {
    twist_word w = parse_and_reduce("B^2 A^-1 B^1");
    obstruction_certificate c = derive_obstruction(w, a2_greater);
    REQUIRE(verify_certificate(c, w, a2_greater));
    obstruction_certificate bad = c;
    std::swap(bad.steps[1].derived.lesser, bad.steps[1].derived.greater);
    verify_result v = verify_certificate_detailed(bad, w, a2_greater);
    CHECK_FALSE(v.ok);
    CHECK(v.step == 2);  // 1-based step numbering
}

TEST_CASE("random single-field mutations are always rejected") {
    testgen::rng r(52);
    int rejected = 0, total = 0;
    while (total < 300) {
        twist_word w = testgen::random_word(r, 1 + r.below(6));
        const rank_hypotheses& h = r.coin() ? a2_equal : a2_greater;
        obstruction_certificate c = derive_obstruction(w, h);
        REQUIRE(verify_certificate(c, w, h));
        obstruction_certificate m = testgen::mutate_certificate(r, c);
        ++total;
        if (!verify_certificate(m, w, h)) ++rejected;
    }
    CHECK(rejected == total);
}

TEST_CASE("letter swap symmetry") {
    testgen::rng r(53);
    for (int trial = 0; trial < 100; ++trial) {
        twist_word w = testgen::random_word(r, 1 + r.below(6));
        const rank_hypotheses& h = r.coin() ? a2_equal : a2_greater;
        obstruction_certificate c = derive_obstruction(w, h);
        obstruction_certificate mirrored = derive_obstruction(swap_letters(w), h);
        obstruction_certificate swapped = swap_letters(c);
        CHECK(swapped.word == mirrored.word);
        REQUIRE(swapped.steps.size() == mirrored.steps.size());
        for (std::size_t i = 0; i < swapped.steps.size(); ++i)
            CHECK(swapped.steps[i] == mirrored.steps[i]);
        CHECK(verify_certificate(swapped, swap_letters(w), h));
    }
}

TEST_CASE("conclusions avoid smooth-category claims") {
    obstruction_certificate c = derive_obstruction(parse_and_reduce("B^1 A^1"), a2_equal);
    std::string text = render(c);
    CHECK(text.find("C0 symplectic mapping class group") != std::string::npos);
    CHECK(text.find("diffeomorphism") == std::string::npos);
}

TEST_CASE("verifier rejects cross-wired inputs") {
    twist_word w = parse_and_reduce("B^1 A^1");
    obstruction_certificate c = derive_obstruction(w, a2_equal);
    CHECK_FALSE(verify_certificate(c, parse_and_reduce("B^1 A^2"), a2_equal));
    CHECK_FALSE(verify_certificate(c, w, a2_greater));
    obstruction_certificate lying = c;
    lying.conclusion = certificate_conclusion::inconclusive;
    CHECK_FALSE(verify_certificate(lying, w, a2_equal));
}
