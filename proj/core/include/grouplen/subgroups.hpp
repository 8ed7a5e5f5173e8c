#pragma once

#include <vector>

#include "grouplen/config.hpp"
#include "grouplen/group.hpp"

namespace grouplen {

// Every subgroup of G: join-closure of the cyclic subgroups.  Sorted by
// (order, canonical element key).  Throws cap_error("subgroup_cap") when the
// lattice outgrows the cap and cap_error("element_cap") when |G| does.
std::vector<PermutationGroup> all_subgroups(const PermutationGroup& G,
                                            const Config& cfg);

// Maximal subgroups: proper subgroups with no proper intermediate subgroup.
std::vector<PermutationGroup> maximal_subgroups(const PermutationGroup& G,
                                                const Config& cfg);

// True when M < G and no subgroup lies strictly between.  Works without the
// full lattice: it closes M with single extra elements of G and checks every
// such closure is G.
bool is_maximal(const PermutationGroup& G, const PermutationGroup& M,
                const Config& cfg);

}  // namespace grouplen
