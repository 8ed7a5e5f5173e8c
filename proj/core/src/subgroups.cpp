#include "grouplen/subgroups.hpp"

#include "grouplen/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace grouplen {

namespace {

using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(std::size_t n) { return Bitset((n + 63) / 64, 0); }

bool get_bit(const Bitset& b, std::uint32_t i) {
    return (b[i >> 6] >> (i & 63)) & 1u;
}

void set_bit(Bitset& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t(1) << (i & 63); }

bool subset_of(const Bitset& a, const Bitset& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        if ((a[w] & ~b[w]) != 0) return false;
    }
    return true;
}

struct SubgroupData {
    Bitset bits;
    std::vector<std::uint32_t> elems;  // ascending element indices
    std::vector<std::uint32_t> gens;   // element indices of a generating set
};

struct Lattice {
    std::vector<Permutation> elements;      // sorted element list of G
    std::vector<std::vector<std::uint32_t>> mult;  // mult[a][b] = index of a*b
    std::vector<SubgroupData> subgroups;    // sorted by (order, element list)
};

std::uint32_t element_index(const std::vector<Permutation>& els, const Permutation& p) {
    auto it = std::lower_bound(els.begin(), els.end(), p);
    if (it == els.end() || !(*it == p)) {
        throw verification_error("subgroup lattice: product left the element list");
    }
    return static_cast<std::uint32_t>(it - els.begin());
}

// Join of a subgroup H (given by its closed element set) with one extra
// element g, computed coset by coset: the join is a union of right cosets of
// H, and right multiplication by the generators moves cosets to cosets.
SubgroupData join_with_element(const Lattice& lat, const SubgroupData& h, std::uint32_t g,
                               std::uint64_t group_order, std::uint32_t identity_index) {
    const std::size_t n = lat.elements.size();
    SubgroupData out;
    out.bits = h.bits;
    out.gens = h.gens;
    out.gens.push_back(g);
    std::uint64_t count = h.elems.size();

    std::vector<std::uint32_t> mult_set = out.gens;
    std::vector<std::uint32_t> rep_queue = {identity_index};
    bool whole_group = false;
    for (std::size_t qi = 0; qi < rep_queue.size() && !whole_group; ++qi) {
        const std::uint32_t r = rep_queue[qi];
        for (std::uint32_t x : mult_set) {
            const std::uint32_t y = lat.mult[r][x];
            if (get_bit(out.bits, y)) continue;
            for (std::uint32_t e : h.elems) set_bit(out.bits, lat.mult[e][y]);
            count += h.elems.size();
            rep_queue.push_back(y);
            if (2 * count > group_order) {
                whole_group = true;
                break;
            }
        }
    }
    if (whole_group) {
        count = group_order;
        out.bits = make_bitset(n);
        for (std::size_t w = 0; w < out.bits.size(); ++w) out.bits[w] = ~std::uint64_t(0);
        const std::size_t spare = out.bits.size() * 64 - n;
        if (spare > 0) out.bits.back() >>= spare;
    }
    if (count == 0 || group_order % count != 0) {
        throw verification_error("subgroup lattice: join size does not divide the group order");
    }
    out.elems.reserve(count);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (get_bit(out.bits, i)) out.elems.push_back(i);
    }
    if (out.elems.size() != count) {
        throw verification_error("subgroup lattice: join element count mismatch");
    }
    return out;
}

Lattice build_lattice(const PermutationGroup& group, const Config& config) {
    const std::uint64_t order = group.order();
    if (order > config.subgroup_cap) {
        throw cap_error("subgroup_cap", config.subgroup_cap, order);
    }
    Lattice lat;
    lat.elements = group.elements(std::max<std::uint64_t>(config.element_cap, order));
    const std::size_t n = lat.elements.size();

    lat.mult.assign(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            lat.mult[a][b] = element_index(lat.elements, lat.elements[a] * lat.elements[b]);
        }
    }
    const std::uint32_t identity_index =
        element_index(lat.elements, Permutation(group.degree()));

    // Seed with the cyclic subgroups (deduplicated by element set).
    std::set<Bitset> seen;
    std::vector<SubgroupData> cyclic;
    for (std::uint32_t e = 0; e < n; ++e) {
        SubgroupData c;
        c.bits = make_bitset(n);
        std::uint32_t x = e;
        while (!get_bit(c.bits, x)) {
            set_bit(c.bits, x);
            x = lat.mult[x][e];
        }
        if (!seen.insert(c.bits).second) continue;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (get_bit(c.bits, i)) c.elems.push_back(i);
        }
        c.gens = {e};
        cyclic.push_back(std::move(c));
    }

    // Close under joins with cyclic subgroups; every subgroup is reached by
    // adjoining one cyclic generator at a time.
    std::vector<SubgroupData> subs = cyclic;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (const auto& c : cyclic) {
            if (subset_of(c.bits, subs[i].bits)) continue;
            SubgroupData j =
                join_with_element(lat, subs[i], c.gens[0], order, identity_index);
            if (seen.insert(j.bits).second) subs.push_back(std::move(j));
        }
    }

    std::sort(subs.begin(), subs.end(), [](const SubgroupData& a, const SubgroupData& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    lat.subgroups = std::move(subs);
    return lat;
}

PermutationGroup materialize(const Lattice& lat, const SubgroupData& s, std::size_t degree) {
    std::vector<Permutation> gens;
    gens.reserve(s.gens.size());
    for (std::uint32_t g : s.gens) gens.push_back(lat.elements[g]);
    return PermutationGroup::with_certified_order(degree, gens, s.elems.size());
}

}  // namespace

std::vector<PermutationGroup> all_subgroups(const PermutationGroup& group,
                                            const Config& config) {
    Lattice lat = build_lattice(group, config);
    std::vector<PermutationGroup> out;
    out.reserve(lat.subgroups.size());
    for (const auto& s : lat.subgroups) out.push_back(materialize(lat, s, group.degree()));
    return out;
}

std::vector<PermutationGroup> maximal_subgroups(const PermutationGroup& group,
                                                const Config& config) {
    Lattice lat = build_lattice(group, config);
    const std::size_t total = lat.subgroups.size();
    const std::size_t full = lat.elements.size();
    std::vector<PermutationGroup> out;
    for (std::size_t i = 0; i < total; ++i) {
        const auto& h = lat.subgroups[i];
        if (h.elems.size() == full) continue;  // the whole group is not proper
        bool covered = false;
        for (std::size_t j = 0; j < total && !covered; ++j) {
            if (j == i) continue;
            const auto& k = lat.subgroups[j];
            if (k.elems.size() == full || k.elems.size() <= h.elems.size()) continue;
            covered = subset_of(h.bits, k.bits);
        }
        if (!covered) out.push_back(materialize(lat, h, group.degree()));
    }
    return out;
}

bool is_maximal(const PermutationGroup& group, const PermutationGroup& candidate,
                const Config& config) {
    (void)config;
    if (candidate.degree() != group.degree()) {
        throw std::invalid_argument("is_maximal: degree mismatch");
    }
    if (!contains_subgroup(group, candidate)) {
        throw std::invalid_argument("is_maximal: candidate is not a subgroup");
    }
    if (candidate.order() == group.order()) return false;

    // Walk the coset graph of the candidate: one representative per coset,
    // discovered by right-multiplying known representatives by the group's
    // generators. Every representative outside the candidate must generate
    // the whole group together with it.
    std::set<std::vector<point_t>> seen_cosets;
    std::vector<Permutation> reps = {Permutation(group.degree())};
    seen_cosets.insert(candidate.canonical_coset_key(reps[0]));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (const auto& s : group.generators()) {
            Permutation y = reps[i] * s;
            auto key = candidate.canonical_coset_key(y);
            if (!seen_cosets.insert(std::move(key)).second) continue;
            if (!candidate.contains(y)) {
                std::vector<Permutation> gens = candidate.generators();
                gens.push_back(y);
                PermutationGroup joined(group.degree(), gens);
                if (joined.order() != group.order()) return false;
            }
            reps.push_back(std::move(y));
        }
    }
    return true;
}

}  // namespace grouplen
