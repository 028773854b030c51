#include "barkit/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace barkit {

bool compatible(const bar& i, const bar& j, value_t delta) {
    if (i.finite() != j.finite()) return false;
    if (!i.finite()) return std::abs(i.birth - j.birth) <= delta;
    return std::max(std::abs(i.birth - j.birth), std::abs(i.death - j.death)) <= delta;
}

bool deletable(const bar& i, value_t delta) {
    return i.finite() && i.length() <= 2.0 * delta;
}

namespace {

// Hopcroft-Karp maximum matching. Left vertices carry the adjacency lists.
class bipartite_matcher {
public:
    bipartite_matcher(std::size_t n_left, std::size_t n_right)
        : adj_(n_left), match_left_(n_left, npos), match_right_(n_right, npos) {}

    void add_edge(std::size_t u, std::size_t v) { adj_[u].push_back(v); }

    std::size_t max_matching() {
        std::size_t result = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < adj_.size(); ++u)
                if (match_left_[u] == npos && dfs(u)) ++result;
        }
        return result;
    }

    const std::vector<std::size_t>& match_left() const { return match_left_; }
    const std::vector<std::size_t>& match_right() const { return match_right_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    bool bfs() {
        std::queue<std::size_t> q;
        dist_.assign(adj_.size(), npos);
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            if (match_left_[u] == npos) {
                dist_[u] = 0;
                q.push(u);
            }
        }
        bool reachable = false;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj_[u]) {
                std::size_t w = match_right_[v];
                if (w == npos) {
                    reachable = true;
                } else if (dist_[w] == npos) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return reachable;
    }

    bool dfs(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            std::size_t w = match_right_[v];
            if (w == npos || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = npos;
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_left_, match_right_;
    std::vector<std::size_t> dist_;
};

// One matching problem on plain bar lists (one degree group).
// Left side: bars of b1, then one dummy per bar of b2. Right side: bars of
// b2, then one dummy per bar of b1. A bar may pair with its own dummy only
// when deletable; dummies pair with each other freely, which keeps the two
// sides balanced so a perfect matching is exactly a delta-matching.
bool match_group(const std::vector<bar>& left, const std::vector<bar>& right,
                 value_t delta, matching_witness* witness) {
    const std::size_t n1 = left.size(), n2 = right.size();
    bipartite_matcher m(n1 + n2, n2 + n1);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j)
            if (compatible(left[i], right[j], delta)) m.add_edge(i, j);
        if (deletable(left[i], delta)) m.add_edge(i, n2 + i);
    }
    for (std::size_t j = 0; j < n2; ++j) {
        if (deletable(right[j], delta)) m.add_edge(n1 + j, j);
        for (std::size_t i = 0; i < n1; ++i) m.add_edge(n1 + j, n2 + i);
    }
    if (m.max_matching() != n1 + n2) return false;
    if (witness) {
        for (std::size_t i = 0; i < n1; ++i) {
            std::size_t v = m.match_left()[i];
            if (v < n2)
                witness->pairs.emplace_back(left[i], right[v]);
            else
                witness->deleted_left.push_back(left[i]);
        }
        for (std::size_t j = 0; j < n2; ++j)
            if (m.match_right()[j] >= n1) witness->deleted_right.push_back(right[j]);
    }
    return true;
}

constexpr int ungraded_key = std::numeric_limits<int>::min();

int group_key(const bar& b) { return b.degree ? *b.degree : ungraded_key; }

// Bars split by degree; ungraded barcodes form a single group.
std::map<int, std::pair<std::vector<bar>, std::vector<bar>>> degree_groups(
    const barcode& b1, const barcode& b2) {
    std::map<int, std::pair<std::vector<bar>, std::vector<bar>>> groups;
    for (const bar& x : b1.bars) groups[group_key(x)].first.push_back(x);
    for (const bar& x : b2.bars) groups[group_key(x)].second.push_back(x);
    return groups;
}

void require_comparable(const barcode& b1, const barcode& b2, const char* op) {
    if (!grading_compatible(b1, b2))
        throw std::invalid_argument(std::string(op) +
                                    ": graded/ungraded barcode mismatch");
}

void remove_one(std::vector<bar>& pool, const bar& x, const char* what,
                validation_report& report) {
    auto it = std::find(pool.begin(), pool.end(), x);
    if (it == pool.end()) {
        if (report.ok) report = {false, std::string(what) + ": bar not available (reused or foreign)"};
        return;
    }
    pool.erase(it);
}

// Candidate deltas for a single degree group (see candidate_deltas below).
void group_candidates(const std::vector<bar>& left, const std::vector<bar>& right,
                      std::vector<value_t>& out) {
    std::vector<value_t> births, deaths;
    for (const bar& x : left) {
        births.push_back(x.birth);
        if (x.finite()) deaths.push_back(x.death);
    }
    for (const bar& x : right) {
        births.push_back(x.birth);
        if (x.finite()) deaths.push_back(x.death);
    }
    for (std::size_t i = 0; i < births.size(); ++i)
        for (std::size_t j = i + 1; j < births.size(); ++j)
            out.push_back(std::abs(births[i] - births[j]));
    for (std::size_t i = 0; i < deaths.size(); ++i)
        for (std::size_t j = i + 1; j < deaths.size(); ++j)
            out.push_back(std::abs(deaths[i] - deaths[j]));
    for (value_t b : births)
        for (value_t d : deaths) out.push_back(std::abs(b - d) / 2.0);
}

value_t group_distance(const std::vector<bar>& left, const std::vector<bar>& right) {
    std::size_t inf_left = 0, inf_right = 0;
    for (const bar& x : left)
        if (!x.finite()) ++inf_left;
    for (const bar& x : right)
        if (!x.finite()) ++inf_right;
    if (inf_left != inf_right) return infinite_death;

    std::vector<value_t> cands{0.0};
    group_candidates(left, right, cands);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    auto feasible = [&](value_t d) { return match_group(left, right, d, nullptr); };
    if (!feasible(cands.back())) return infinite_death;
    std::size_t lo = 0, hi = cands.size() - 1;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(cands[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cands[lo];
}

}  // namespace

validation_report check_witness(const matching_witness& w, const barcode& b1,
                                const barcode& b2) {
    if (w.delta < 0) return {false, "witness: negative delta"};
    validation_report report;
    std::vector<bar> pool_left = b1.bars, pool_right = b2.bars;
    for (const auto& [i, j] : w.pairs) {
        if (!compatible(i, j, w.delta))
            return {false, "witness: matched pair not compatible at delta"};
        remove_one(pool_left, i, "witness pair (left)", report);
        remove_one(pool_right, j, "witness pair (right)", report);
    }
    for (const bar& x : w.deleted_left) {
        if (!deletable(x, w.delta))
            return {false, "witness: deleted left bar not deletable at delta"};
        remove_one(pool_left, x, "witness deletion (left)", report);
    }
    for (const bar& x : w.deleted_right) {
        if (!deletable(x, w.delta))
            return {false, "witness: deleted right bar not deletable at delta"};
        remove_one(pool_right, x, "witness deletion (right)", report);
    }
    if (!report.ok) return report;
    if (!pool_left.empty() || !pool_right.empty())
        return {false, "witness: does not cover all bars"};
    return {};
}

std::optional<matching_witness> delta_matching(const barcode& b1, const barcode& b2,
                                               value_t delta) {
    require_comparable(b1, b2, "delta_matching");
    if (delta < 0) return std::nullopt;
    matching_witness witness;
    witness.delta = delta;
    for (auto& [deg, group] : degree_groups(b1, b2))
        if (!match_group(group.first, group.second, delta, &witness))
            return std::nullopt;
    validation_report self_check = check_witness(witness, b1, b2);
    if (!self_check.ok)
        throw std::logic_error("delta_matching produced an invalid witness: " +
                               self_check.message);
    return witness;
}

bool delta_matching_exists(const barcode& b1, const barcode& b2, value_t delta) {
    require_comparable(b1, b2, "delta_matching_exists");
    if (delta < 0) return false;
    for (auto& [deg, group] : degree_groups(b1, b2))
        if (!match_group(group.first, group.second, delta, nullptr)) return false;
    return true;
}

std::vector<value_t> candidate_deltas(const barcode& b1, const barcode& b2) {
    std::vector<value_t> out{0.0};
    group_candidates(b1.bars, b2.bars, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

value_t bottleneck_distance(const barcode& b1, const barcode& b2) {
    require_comparable(b1, b2, "bottleneck_distance");
    value_t result = 0.0;
    for (auto& [deg, group] : degree_groups(b1, b2)) {
        value_t d = group_distance(group.first, group.second);
        if (d == infinite_death) return infinite_death;
        result = std::max(result, d);
    }
    return result;
}

namespace {

// Cost of pairing two bars in the brute-force oracle: the least delta at
// which they are compatible.
value_t pair_cost(const bar& i, const bar& j) {
    if (i.finite() != j.finite()) return infinite_death;
    if (!i.finite()) return std::abs(i.birth - j.birth);
    return std::max(std::abs(i.birth - j.birth), std::abs(i.death - j.death));
}

value_t delete_cost(const bar& i) {
    return i.finite() ? std::abs(i.birth - i.death) / 2.0 : infinite_death;
}

// Minimum over bijections of the max pair cost, by permutation enumeration.
value_t best_bijection(const std::vector<bar>& a, const std::vector<bar>& b) {
    if (a.size() != b.size()) return infinite_death;
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    value_t best = infinite_death;
    do {
        value_t cost = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            cost = std::max(cost, pair_cost(a[i], b[perm[i]]));
        best = std::min(best, cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

value_t brute_group_distance(const std::vector<bar>& left,
                             const std::vector<bar>& right) {
    std::vector<bar> fin_l, fin_r, inf_l, inf_r;
    for (const bar& x : left) (x.finite() ? fin_l : inf_l).push_back(x);
    for (const bar& x : right) (x.finite() ? fin_r : inf_r).push_back(x);
    if (inf_l.size() != inf_r.size()) return infinite_death;

    value_t inf_cost = inf_l.empty() ? 0.0 : best_bijection(inf_l, inf_r);

    value_t best = infinite_death;
    const std::uint32_t nl = static_cast<std::uint32_t>(fin_l.size());
    const std::uint32_t nr = static_cast<std::uint32_t>(fin_r.size());
    for (std::uint32_t keep_l = 0; keep_l < (1u << nl); ++keep_l) {
        std::vector<bar> kept_l;
        value_t del_l = 0.0;
        for (std::uint32_t i = 0; i < nl; ++i) {
            if (keep_l & (1u << i))
                kept_l.push_back(fin_l[i]);
            else
                del_l = std::max(del_l, delete_cost(fin_l[i]));
        }
        for (std::uint32_t keep_r = 0; keep_r < (1u << nr); ++keep_r) {
            std::vector<bar> kept_r;
            value_t del_r = del_l;
            for (std::uint32_t j = 0; j < nr; ++j) {
                if (keep_r & (1u << j))
                    kept_r.push_back(fin_r[j]);
                else
                    del_r = std::max(del_r, delete_cost(fin_r[j]));
            }
            if (kept_l.size() != kept_r.size()) continue;
            value_t cost = std::max({inf_cost, del_r, best_bijection(kept_l, kept_r)});
            best = std::min(best, cost);
        }
    }
    return best;
}

}  // namespace

value_t brute_force_distance(const barcode& b1, const barcode& b2) {
    if (b1.size() + b2.size() > 8)
        throw std::invalid_argument("brute_force_distance: more than 8 bars total");
    require_comparable(b1, b2, "brute_force_distance");
    value_t result = 0.0;
    for (auto& [deg, group] : degree_groups(b1, b2)) {
        value_t d = brute_group_distance(group.first, group.second);
        if (d == infinite_death) return infinite_death;
        result = std::max(result, d);
    }
    return result;
}

}  // namespace barkit
