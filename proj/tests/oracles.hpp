#pragma once

// Brute-force reference implementations used to validate the engines.
// Everything here favours obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "grouplen/config.hpp"
#include "grouplen/gmodule.hpp"
#include "grouplen/group.hpp"
#include "grouplen/permutation.hpp"
#include "grouplen/primefield.hpp"
#include "grouplen/structure.hpp"

namespace oracles {

using namespace grouplen;

inline PermutationGroup G(std::size_t degree, std::vector<std::string> cycles) {
    std::vector<Permutation> gens;
    for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));
    return PermutationGroup(degree, gens);
}

// Exhaustive group order: closure of the generators under multiplication.
inline std::uint64_t brute_order(const PermutationGroup& g) {
    std::set<Permutation> seen;
    std::vector<Permutation> frontier{Permutation(g.degree())};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        const Permutation x = frontier.back();
        frontier.pop_back();
        for (const auto& s : g.generators()) {
            const Permutation y = x * s;
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen.size();
}

// Largest normal subgroup lying in the class (the radical, for a Fitting
// class), found by scanning every normal subgroup.
template <typename Pred>
PermutationGroup brute_radical(const PermutationGroup& g, Pred&& in_class,
                               const Config& cfg) {
    const auto normals = normal_subgroups(g, cfg);
    const PermutationGroup* best = nullptr;
    for (const auto& n : normals) {
        if (!in_class(n)) continue;
        if (!best || n.order() > best->order()) best = &n;
    }
    return *best;  // the trivial subgroup is always in a Fitting class
}

// Module irreducibility by exhaustive spinning: reducible iff some nonzero
// vector spins to a proper subspace.  Exponential in dim, fine for dim <= 6
// and p <= 7.
inline bool brute_irreducible(const GModule& mod) {
    if (mod.dimension == 0) return false;
    if (mod.dimension == 1) return true;
    const unsigned d = mod.dimension;
    const std::uint32_t p = mod.p;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
        std::vector<std::uint32_t> v(d);
        std::uint64_t c = code;
        for (unsigned i = 0; i < d; ++i) {
            v[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        const auto basis = spin_basis({v}, mod.actions);
        if (basis.size() < d) return false;
    }
    return true;
}

}  // namespace oracles
