#ifndef BARKIT_TWIST_WORD_HPP
#define BARKIT_TWIST_WORD_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "barkit/barcode.hpp"

namespace barkit {

// Letter A is the twist about the sphere L, letter B the twist about L'.
// The same enum names the sphere a letter twists.
enum class twist_letter { A, B };

twist_letter other(twist_letter t);
std::string letter_name(twist_letter t);  // "A" / "B"
std::string sphere_name(twist_letter t);  // "L" / "L'"

struct syllable {
    twist_letter letter;
    int exponent = 0;

    bool operator==(const syllable&) const = default;
};

// Reduced word in the free group on the two twists. Syllables are stored in
// composition order: front() is the outermost twist (applied last), back()
// the innermost. Empty = the trivial word.
struct twist_word {
    std::vector<syllable> syllables;

    bool trivial() const { return syllables.empty(); }
    bool operator==(const twist_word&) const = default;
};

// Parses whitespace-separated syllables A^<int> / B^<int> and freely
// reduces. Throws std::invalid_argument on malformed input.
twist_word parse_and_reduce(const std::string& text);

std::string to_string(const twist_word& w);

// Checks reduced form: alternating letters, nonzero exponents.
validation_report validate(const twist_word& w);

// Rank hypotheses of the obstruction engine. Self-ranks hf(L,L) = hf(L',L')
// are fixed at 2 (Lagrangian spheres).
struct rank_hypotheses {
    int hf = 2;                    // rank of HF(L, L')
    bool quasi_isomorphic = false;
    bool operator==(const rank_hypotheses&) const = default;
};

validation_report validate(const rank_hypotheses& h);

// Thrown when the hypotheses fall outside the engine's admissible class.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inference rules of the derivation chain:
//   base_rank        the fixed self-rank 2 and hf(L,L') of the hypotheses
//   twist_seed       twisting by T makes the T side strictly smaller
//                    (seeds the chain when hf(L,L') = 2)
//   twist_flip       a strict inequality flips under the twist about the
//                    currently greater sphere
//   path_invariance  sigma_inf is constant along paths of barcodes, so the
//                    final inequality transports to the untwisted pairs
enum class rule_kind { base_rank, twist_seed, twist_flip, path_invariance };

std::string rule_name(rule_kind r);

// hf(lesser, word(target)) < hf(greater, word(target)); for the base step of
// the hf = 2 branch the relation is an equality (strict = false).
struct rank_inequality {
    twist_letter lesser;
    twist_letter greater;
    twist_word word;     // word applied to the target sphere so far
    twist_letter target; // the sphere the word acts on

    bool operator==(const rank_inequality&) const = default;
};

struct certificate_step {
    rule_kind rule;
    rank_inequality derived;
    bool strict = true;
    std::optional<syllable> applied;  // twist_seed / twist_flip only
    int lesser_value = -1;            // base_rank / path_invariance only
    int greater_value = -1;

    bool operator==(const certificate_step&) const = default;
};

enum class certificate_conclusion { obstructed, inconclusive };

struct obstruction_certificate {
    twist_word word;
    rank_hypotheses hypotheses;
    std::vector<certificate_step> steps;
    certificate_conclusion conclusion = certificate_conclusion::inconclusive;
};

// Derives the obstruction chain for a reduced word: pure powers and mixed
// words both land on a strict sigma_inf inequality that contradicts the base
// ranks after transport along barcode paths. Throws hypothesis_error when
// the hypotheses are inadmissible.
obstruction_certificate derive_obstruction(const twist_word& w, const rank_hypotheses& h);

struct verify_result {
    bool ok = true;
    std::size_t step = 0;  // first bad step (1-based; 0 = global defect)
    std::string reason;

    explicit operator bool() const { return ok; }
};

// Independent replay: checks every step against the rule set and the base
// ranks without re-deriving.
verify_result verify_certificate_detailed(const obstruction_certificate& c,
                                          const twist_word& w, const rank_hypotheses& h);
bool verify_certificate(const obstruction_certificate& c, const twist_word& w,
                        const rank_hypotheses& h);

// Swaps the roles of the two letters/spheres everywhere.
twist_word swap_letters(const twist_word& w);
obstruction_certificate swap_letters(const obstruction_certificate& c);

// Human-readable numbered steps, one rule citation per line.
std::string render(const obstruction_certificate& c);

}  // namespace barkit

#endif
