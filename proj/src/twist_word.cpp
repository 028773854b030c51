#include "barkit/twist_word.hpp"

#include <charconv>
#include <sstream>

namespace barkit {

twist_letter other(twist_letter t) {
    return t == twist_letter::A ? twist_letter::B : twist_letter::A;
}

std::string letter_name(twist_letter t) { return t == twist_letter::A ? "A" : "B"; }

std::string sphere_name(twist_letter t) { return t == twist_letter::A ? "L" : "L'"; }

twist_word parse_and_reduce(const std::string& text) {
    std::vector<syllable> raw;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token.size() < 3 || (token[0] != 'A' && token[0] != 'B') || token[1] != '^')
            throw std::invalid_argument("malformed syllable '" + token +
                                        "' (expected A^<int> or B^<int>)");
        twist_letter letter = token[0] == 'A' ? twist_letter::A : twist_letter::B;
        int exponent = 0;
        const char* first = token.data() + 2;
        const char* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, exponent);
        if (ec != std::errc() || ptr != last)
            throw std::invalid_argument("malformed exponent in '" + token + "'");
        raw.push_back({letter, exponent});
    }
    // free reduction: drop zero exponents, merge adjacent equal letters
    twist_word w;
    for (const syllable& s : raw) {
        if (s.exponent == 0) continue;
        if (!w.syllables.empty() && w.syllables.back().letter == s.letter) {
            w.syllables.back().exponent += s.exponent;
            if (w.syllables.back().exponent == 0) w.syllables.pop_back();
        } else {
            w.syllables.push_back(s);
        }
    }
    return w;
}

std::string to_string(const twist_word& w) {
    if (w.trivial()) return "1";
    std::string out;
    for (const syllable& s : w.syllables) {
        if (!out.empty()) out += ' ';
        out += letter_name(s.letter) + "^" + std::to_string(s.exponent);
    }
    return out;
}

validation_report validate(const twist_word& w) {
    for (std::size_t i = 0; i < w.syllables.size(); ++i) {
        if (w.syllables[i].exponent == 0)
            return {false, "syllable " + std::to_string(i) + " has exponent 0"};
        if (i > 0 && w.syllables[i].letter == w.syllables[i - 1].letter)
            return {false, "adjacent syllables share letter " +
                               letter_name(w.syllables[i].letter)};
    }
    return {};
}

validation_report validate(const rank_hypotheses& h) {
    if (h.hf < 2)
        return {false, "hf(L,L') = " + std::to_string(h.hf) + " < 2"};
    if (h.quasi_isomorphic) {
        if (h.hf == 2)
            return {false, "hf(L,L') = 2 requires L and L' not quasi-isomorphic"};
        return {false, "quasi-isomorphic spheres force hf(L,L') = 2, got " +
                           std::to_string(h.hf)};
    }
    return {};
}

std::string rule_name(rule_kind r) {
    switch (r) {
        case rule_kind::base_rank: return "base-rank";
        case rule_kind::twist_seed: return "twist-seed";
        case rule_kind::twist_flip: return "twist-flip";
        case rule_kind::path_invariance: return "path-invariance";
    }
    return "?";
}

namespace {

constexpr int sphere_self_rank = 2;

int pair_rank(twist_letter s, twist_letter target, const rank_hypotheses& h) {
    return s == target ? sphere_self_rank : h.hf;
}

twist_word prepend(const syllable& s, const twist_word& w) {
    twist_word out;
    out.syllables.reserve(w.syllables.size() + 1);
    out.syllables.push_back(s);
    out.syllables.insert(out.syllables.end(), w.syllables.begin(), w.syllables.end());
    return out;
}

std::string obstructed_statement(const twist_word& w) {
    return "word " + to_string(w) +
           " is not in the identity component of the C0 symplectic mapping class group";
}

}  // namespace

obstruction_certificate derive_obstruction(const twist_word& w, const rank_hypotheses& h) {
    validation_report hv = validate(h);
    if (!hv.ok) throw hypothesis_error("hypotheses rejected: " + hv.message);
    validation_report wv = validate(w);
    if (!wv.ok) throw std::invalid_argument("word not reduced: " + wv.message);

    obstruction_certificate cert;
    cert.word = w;
    cert.hypotheses = h;
    if (w.trivial()) {
        cert.conclusion = certificate_conclusion::inconclusive;
        return cert;
    }

    // The word acts on the sphere not twisted by its outermost syllable, so
    // the chain always ends on a twist of the currently greater sphere.
    const twist_letter target = other(w.syllables.front().letter);

    std::vector<syllable> inner_first(w.syllables.rbegin(), w.syllables.rend());
    std::size_t next = 0;

    // The innermost twist about the target sphere fixes it and is absorbed
    // into the base step.
    twist_word applied_word;
    if (inner_first[0].letter == target) {
        applied_word = prepend(inner_first[0], applied_word);
        next = 1;
    }

    certificate_step base;
    base.rule = rule_kind::base_rank;
    base.derived = {target, other(target), applied_word, target};
    base.strict = h.hf > sphere_self_rank;
    base.lesser_value = sphere_self_rank;
    base.greater_value = h.hf;
    cert.steps.push_back(base);

    rank_inequality current = base.derived;
    if (h.hf == sphere_self_rank) {
        const syllable s = inner_first[next++];
        applied_word = prepend(s, applied_word);
        certificate_step seed;
        seed.rule = rule_kind::twist_seed;
        seed.derived = {s.letter, other(s.letter), applied_word, target};
        seed.applied = s;
        cert.steps.push_back(seed);
        current = seed.derived;
    }
    for (; next < inner_first.size(); ++next) {
        const syllable s = inner_first[next];
        if (s.letter != current.greater)
            throw std::logic_error("twist-flip side condition broken during derivation");
        applied_word = prepend(s, applied_word);
        certificate_step flip;
        flip.rule = rule_kind::twist_flip;
        flip.derived = {s.letter, current.lesser, applied_word, target};
        flip.applied = s;
        cert.steps.push_back(flip);
        current = flip.derived;
    }
    if (current.lesser != other(target) || !(current.word == w))
        throw std::logic_error("derivation did not land on the expected inequality");

    certificate_step transport;
    transport.rule = rule_kind::path_invariance;
    transport.derived = {current.lesser, current.greater, twist_word{}, target};
    transport.lesser_value = pair_rank(current.lesser, target, h);
    transport.greater_value = pair_rank(current.greater, target, h);
    cert.steps.push_back(transport);

    cert.conclusion = certificate_conclusion::obstructed;
    return cert;
}

namespace {

verify_result fail(std::size_t step, std::string reason) {
    return {false, step, std::move(reason)};
}

}  // namespace

verify_result verify_certificate_detailed(const obstruction_certificate& c,
                                          const twist_word& w, const rank_hypotheses& h) {
    validation_report hv = validate(h);
    if (!hv.ok) return fail(0, "hypotheses invalid: " + hv.message);
    if (!(c.hypotheses == h)) return fail(0, "certificate hypotheses differ from given");
    if (!(c.word == w)) return fail(0, "certificate word differs from given");
    validation_report wv = validate(w);
    if (!wv.ok) return fail(0, "word not reduced: " + wv.message);

    if (w.trivial()) {
        if (c.conclusion != certificate_conclusion::inconclusive)
            return fail(0, "trivial word cannot carry an obstruction");
        if (!c.steps.empty()) return fail(1, "trivial word admits no derivation steps");
        return {};
    }
    if (c.conclusion != certificate_conclusion::obstructed)
        return fail(0, "nonempty reduced word must conclude with an obstruction");
    if (c.steps.empty()) return fail(0, "no derivation steps");

    const twist_letter target = other(w.syllables.front().letter);
    std::vector<syllable> inner_first(w.syllables.rbegin(), w.syllables.rend());
    std::size_t next = 0;

    // step 1: base ranks
    const certificate_step& base = c.steps.front();
    if (base.rule != rule_kind::base_rank) return fail(1, "first step must cite base-rank");
    if (base.applied) return fail(1, "base-rank applies no twist");
    if (base.lesser_value != sphere_self_rank || base.greater_value != h.hf)
        return fail(1, "base-rank values do not match the hypotheses");
    if (base.strict != (h.hf > sphere_self_rank))
        return fail(1, "base-rank strictness contradicts the hypotheses");
    if (base.derived.target != target)
        return fail(1, "base step target is not the sphere fixed by the outermost twist");
    if (base.derived.lesser != target || base.derived.greater != other(target))
        return fail(1, "base step sides must be (target, other)");
    if (base.derived.word.trivial()) {
        // no absorption: the innermost syllable must not fix the target
        if (inner_first[0].letter == target)
            return fail(1, "innermost twist fixes the target and must be absorbed");
    } else {
        if (base.derived.word.syllables.size() != 1 ||
            base.derived.word.syllables[0] != inner_first[0] ||
            inner_first[0].letter != target)
            return fail(1, "absorbed word must be the innermost twist of the target sphere");
        next = 1;
    }

    rank_inequality current = base.derived;
    std::size_t si = 1;

    if (h.hf == sphere_self_rank) {
        if (si >= c.steps.size()) return fail(si, "missing twist-seed step");
        const certificate_step& seed = c.steps[si];
        if (seed.rule != rule_kind::twist_seed)
            return fail(si + 1, "hf(L,L') = 2 chain must be seeded by twist-seed");
        if (!seed.applied) return fail(si + 1, "twist-seed must record its syllable");
        if (next >= inner_first.size() || !(*seed.applied == inner_first[next]))
            return fail(si + 1, "twist-seed syllable is not the next syllable of the word");
        if (seed.applied->exponent == 0) return fail(si + 1, "zero exponent");
        if (seed.applied->letter == target)
            return fail(si + 1, "twist-seed must twist the non-target sphere");
        if (!seed.strict) return fail(si + 1, "twist-seed derives a strict inequality");
        rank_inequality expect{seed.applied->letter, other(seed.applied->letter),
                               prepend(*seed.applied, current.word), target};
        if (!(seed.derived == expect)) return fail(si + 1, "twist-seed conclusion malformed");
        current = seed.derived;
        ++next;
        ++si;
    } else {
        if (!base.strict) return fail(1, "hf(L,L') > 2 base step must be strict");
    }

    for (; si + 1 < c.steps.size(); ++si) {
        const certificate_step& flip = c.steps[si];
        if (flip.rule != rule_kind::twist_flip)
            return fail(si + 1, "expected a twist-flip step");
        if (!flip.applied) return fail(si + 1, "twist-flip must record its syllable");
        if (next >= inner_first.size())
            return fail(si + 1, "twist-flip beyond the end of the word");
        if (!(*flip.applied == inner_first[next]))
            return fail(si + 1, "twist-flip syllable is not the next syllable of the word");
        if (flip.applied->exponent == 0) return fail(si + 1, "zero exponent");
        if (flip.applied->letter != current.greater)
            return fail(si + 1, "twist-flip must twist the currently greater sphere");
        if (!flip.strict) return fail(si + 1, "twist-flip derives a strict inequality");
        rank_inequality expect{flip.applied->letter, current.lesser,
                               prepend(*flip.applied, current.word), target};
        if (!(flip.derived == expect)) return fail(si + 1, "twist-flip conclusion malformed");
        current = flip.derived;
        ++next;
    }

    if (next != inner_first.size())
        return fail(c.steps.size(), "derivation does not consume the whole word");
    if (!(current.word == w)) return fail(c.steps.size(), "accumulated word mismatch");

    const certificate_step& transport = c.steps.back();
    if (transport.rule != rule_kind::path_invariance)
        return fail(c.steps.size(), "final step must cite path-invariance");
    if (transport.applied) return fail(c.steps.size(), "path-invariance applies no twist");
    if (!transport.strict)
        return fail(c.steps.size(), "transported inequality must stay strict");
    rank_inequality expect{current.lesser, current.greater, twist_word{}, target};
    if (!(transport.derived == expect))
        return fail(c.steps.size(), "transport must erase the word and keep the sides");
    if (transport.lesser_value != pair_rank(current.lesser, target, h) ||
        transport.greater_value != pair_rank(current.greater, target, h))
        return fail(c.steps.size(), "transported values do not match the base ranks");
    // the contradiction: the claimed strict inequality is false on base ranks
    if (transport.lesser_value < transport.greater_value)
        return fail(c.steps.size(), "transported inequality is consistent, no contradiction");

    return {};
}

bool verify_certificate(const obstruction_certificate& c, const twist_word& w,
                        const rank_hypotheses& h) {
    return verify_certificate_detailed(c, w, h).ok;
}

twist_word swap_letters(const twist_word& w) {
    twist_word out = w;
    for (syllable& s : out.syllables) s.letter = other(s.letter);
    return out;
}

obstruction_certificate swap_letters(const obstruction_certificate& c) {
    obstruction_certificate out = c;
    out.word = swap_letters(c.word);
    for (certificate_step& s : out.steps) {
        s.derived.lesser = other(s.derived.lesser);
        s.derived.greater = other(s.derived.greater);
        s.derived.target = other(s.derived.target);
        s.derived.word = swap_letters(s.derived.word);
        if (s.applied) s.applied->letter = other(s.applied->letter);
    }
    return out;
}

namespace {

std::string render_side(twist_letter s, const rank_inequality& q) {
    std::string w = q.word.trivial() ? "" : to_string(q.word) + " ";
    return "hf(" + sphere_name(s) + ", " + w + sphere_name(q.target) + ")";
}

std::string render_relation(const rank_inequality& q, bool strict) {
    return render_side(q.lesser, q) + (strict ? " < " : " = ") + render_side(q.greater, q);
}

}  // namespace

std::string render(const obstruction_certificate& c) {
    std::ostringstream os;
    os << "word: " << to_string(c.word) << "\n";
    os << "hypotheses: hf(L,L') = " << c.hypotheses.hf << ", quasi_isomorphic = "
       << (c.hypotheses.quasi_isomorphic ? "true" : "false") << "\n";
    if (c.conclusion == certificate_conclusion::inconclusive) {
        os << "conclusion: inconclusive (the trivial word carries no obstruction)\n";
        return os.str();
    }
    std::size_t n = 0;
    for (const certificate_step& s : c.steps) {
        os << ++n << ". [" << rule_name(s.rule) << "] ";
        switch (s.rule) {
            case rule_kind::base_rank:
                os << "sigma_inf B(" << sphere_name(other(s.derived.target)) << ","
                   << sphere_name(s.derived.target) << ") = " << s.greater_value
                   << "; sigma_inf B(" << sphere_name(s.derived.target) << ","
                   << sphere_name(s.derived.target) << ") = " << s.lesser_value;
                if (!s.derived.word.trivial())
                    os << "; " << to_string(s.derived.word) << " fixes "
                       << sphere_name(s.derived.target);
                if (s.strict)
                    os << "; hence "
                       << render_relation(s.derived, true);
                break;
            case rule_kind::twist_seed:
            case rule_kind::twist_flip:
                os << "apply " << letter_name(s.applied->letter) << "^"
                   << s.applied->exponent << ": " << render_relation(s.derived, s.strict);
                break;
            case rule_kind::path_invariance:
                os << "sigma_inf is constant along the barcode paths, so "
                   << render_relation(s.derived, s.strict) << ", i.e. " << s.lesser_value
                   << " < " << s.greater_value << " -- contradiction";
                break;
        }
        os << "\n";
    }
    os << "conclusion: " << obstructed_statement(c.word) << "\n";
    return os.str();
}

}  // namespace barkit
