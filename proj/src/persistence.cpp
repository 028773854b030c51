#include "barkit/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace barkit {

namespace {

std::vector<std::size_t> filtration_order(const filtered_complex& c) {
    std::vector<std::size_t> order(c.generators.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const generator &ga = c.generators[a], &gb = c.generators[b];
        if (ga.action != gb.action) return ga.action < gb.action;
        return ga.id < gb.id;
    });
    return order;
}

std::map<std::string, std::size_t> id_index(const filtered_complex& c) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < c.generators.size(); ++i) idx[c.generators[i].id] = i;
    return idx;
}

// xor-merge of two sorted index columns
std::vector<std::size_t> add_columns(const std::vector<std::size_t>& a,
                                     const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

validation_report validate_complex(const filtered_complex& c) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        const generator& g = c.generators[i];
        if (g.id.empty()) return {false, "generator with empty id"};
        if (!std::isfinite(g.action))
            return {false, "generator '" + g.id + "': action must be finite"};
        if (!idx.emplace(g.id, i).second)
            return {false, "duplicate generator id '" + g.id + "'"};
    }
    for (const auto& [src, targets] : c.boundary) {
        auto s = idx.find(src);
        if (s == idx.end())
            return {false, "boundary of unknown generator '" + src + "'"};
        const generator& gs = c.generators[s->second];
        std::set<std::string> seen;
        for (const std::string& t : targets) {
            auto d = idx.find(t);
            if (d == idx.end())
                return {false, "boundary of '" + src + "' names unknown generator '" + t + "'"};
            if (!seen.insert(t).second)
                return {false, "boundary of '" + src + "' lists '" + t + "' twice"};
            const generator& gd = c.generators[d->second];
            if (gd.degree != gs.degree - 1) {
                std::ostringstream os;
                os << "boundary of '" << src << "' (degree " << gs.degree
                   << ") hits '" << t << "' of degree " << gd.degree
                   << ", expected degree " << gs.degree - 1;
                return {false, os.str()};
            }
            if (!(gd.action < gs.action)) {
                std::ostringstream os;
                os << "action not decreasing: '" << src << "' (action " << gs.action
                   << ") -> '" << t << "' (action " << gd.action << ")";
                return {false, os.str()};
            }
        }
    }
    // d(d(x)) = 0 over Z/2
    for (const auto& [src, targets] : c.boundary) {
        std::set<std::string> square;
        for (const std::string& t : targets) {
            auto it = c.boundary.find(t);
            if (it == c.boundary.end()) continue;
            for (const std::string& u : it->second) {
                auto [pos, inserted] = square.insert(u);
                if (!inserted) square.erase(pos);
            }
        }
        if (!square.empty())
            return {false, "d(d('" + src + "')) != 0 (contains '" + *square.begin() + "')"};
    }
    return {};
}

barcode barcode_of_complex(const filtered_complex& c) {
    validation_report v = validate_complex(c);
    if (!v.ok) throw std::invalid_argument("barcode_of_complex: " + v.message);

    const std::vector<std::size_t> order = filtration_order(c);
    const std::size_t n = order.size();
    std::vector<std::size_t> position(n);  // generator index -> filtration position
    for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;
    const std::map<std::string, std::size_t> idx = id_index(c);

    std::vector<std::vector<std::size_t>> columns(n);
    for (std::size_t p = 0; p < n; ++p) {
        auto it = c.boundary.find(c.generators[order[p]].id);
        if (it == c.boundary.end()) continue;
        for (const std::string& t : it->second)
            columns[p].push_back(position[idx.at(t)]);
        std::sort(columns[p].begin(), columns[p].end());
    }

    constexpr std::size_t unpaired = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pivot_owner(n, unpaired);  // row -> column with that pivot
    std::vector<bool> paired(n, false);
    barcode result;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t>& col = columns[j];
        while (!col.empty() && pivot_owner[col.back()] != unpaired)
            col = add_columns(col, columns[pivot_owner[col.back()]]);
        if (col.empty()) continue;
        std::size_t i = col.back();
        pivot_owner[i] = j;
        paired[i] = paired[j] = true;
        const generator& birth = c.generators[order[i]];
        const generator& death = c.generators[order[j]];
        result.bars.push_back({birth.action, death.action, birth.degree});
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (paired[p]) continue;
        const generator& g = c.generators[order[p]];
        result.bars.push_back({g.action, infinite_death, g.degree});
    }
    return result;
}

namespace {

// Rank of a dense Z/2 matrix given as row bitsets, by row echelon reduction.
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t ncols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        const std::size_t word = col / 64, bit = col % 64;
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if ((rows[r][word] >> bit) & 1ull) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && ((rows[r][word] >> bit) & 1ull))
                for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
        ++rank;
    }
    return rank;
}

}  // namespace

homology_ranks homology_rank(const filtered_complex& c) {
    validation_report v = validate_complex(c);
    if (!v.ok) throw std::invalid_argument("homology_rank: " + v.message);

    // index generators per degree
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        by_degree[c.generators[i].degree].push_back(i);
    const std::map<std::string, std::size_t> idx = id_index(c);

    // rank of d restricted to degree-d sources, as a dense matrix into
    // degree-(d-1) targets
    std::map<int, std::size_t> boundary_rank;
    for (const auto& [deg, sources] : by_degree) {
        auto targets_it = by_degree.find(deg - 1);
        if (targets_it == by_degree.end()) {
            boundary_rank[deg] = 0;
            continue;
        }
        std::map<std::size_t, std::size_t> target_col;
        for (std::size_t k = 0; k < targets_it->second.size(); ++k)
            target_col[targets_it->second[k]] = k;
        const std::size_t ncols = targets_it->second.size();
        const std::size_t nwords = (ncols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows;
        for (std::size_t src : sources) {
            auto b = c.boundary.find(c.generators[src].id);
            if (b == c.boundary.end() || b->second.empty()) continue;
            std::vector<std::uint64_t> row(nwords, 0);
            for (const std::string& t : b->second) {
                std::size_t col = target_col.at(idx.at(t));
                row[col / 64] |= 1ull << (col % 64);
            }
            rows.push_back(std::move(row));
        }
        boundary_rank[deg] = gf2_rank(std::move(rows), ncols);
    }

    homology_ranks out;
    for (const auto& [deg, gens] : by_degree) {
        std::size_t r_in = boundary_rank.count(deg) ? boundary_rank[deg] : 0;
        std::size_t r_out = boundary_rank.count(deg + 1) ? boundary_rank[deg + 1] : 0;
        std::size_t h = gens.size() - r_in - r_out;
        out.by_degree[deg] = h;
        out.total += h;
    }
    return out;
}

filtered_complex perturb_actions(const filtered_complex& c, value_t delta,
                                 std::uint64_t seed) {
    validation_report v = validate_complex(c);
    if (!v.ok) throw std::invalid_argument("perturb_actions: " + v.message);
    if (delta < 0) throw std::invalid_argument("perturb_actions: delta must be >= 0");

    filtered_complex out = c;
    std::uint64_t state = seed;
    for (generator& g : out.generators) {
        const value_t u = static_cast<value_t>(splitmix64(state) >> 11) * 0x1.0p-53;
        g.action += delta * (2.0 * u - 1.0);
    }
    validation_report pv = validate_complex(out);
    if (!pv.ok)
        throw std::invalid_argument(
            "perturb_actions: perturbation breaks strict action decrease (" + pv.message +
            ")");
    return out;
}

}  // namespace barkit
