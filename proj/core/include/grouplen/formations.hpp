#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grouplen/config.hpp"
#include "grouplen/group.hpp"
#include "grouplen/radicals.hpp"
#include "grouplen/sigma.hpp"

namespace grouplen {

// A formation is identified by a name plus a membership predicate.  The
// residual engine assumes the predicate is quotient-closed and closed under
// subdirect products (true for every built-in below).
struct Formation {
    std::string name;
    std::function<bool(const PermutationGroup&, const Config&)> contains;
};

// Built-in formations.
Formation fm_nilpotent();
Formation fm_soluble();
Formation fm_sigma_nilpotent(const SigmaPartition& sigma);
// Soluble groups with a normal Sylow p-subgroup (p-closed).
Formation fm_p_closed_soluble(std::uint64_t p);
// p-closed soluble groups of Fitting height at most h.
Formation fm_p_closed_soluble_bounded(std::uint64_t p, std::uint64_t h);

// Registry for CLI use: "N" (nilpotent), "Sol", "Nsigma" (sigma-nilpotent
// for the ambient partition), "PClosedSol:<p>", "PClosedSolH:<p>,<h>".
// Throws parse_error for unknown names.
Formation parse_formation(const std::string& text, const SigmaPartition& sigma);
std::vector<std::string> registered_formation_names();

// F-residual G^F: the smallest normal subgroup with quotient in the
// formation.  Computed as the intersection-free descent over normal
// subgroups: the minimal N (by order, then canonical key) among the normal
// subgroups with G/N in the formation; the engine verifies minimality is
// unique (it is, for formations, since N1 cap N2 also works).
PermutationGroup formation_residual(const PermutationGroup& G,
                                    const Formation& fm, const Config& cfg);

// n_F(G) = h(G^F): Fitting height of the residual.
Length residual_fitting_height(const PermutationGroup& G, const Formation& fm,
                               const Config& cfg);
// n_sigma-style variant: l_sigma(G^F).
Length residual_sigma_length(const PermutationGroup& G, const Formation& fm,
                             const SigmaPartition& sigma, const Config& cfg);

}  // namespace grouplen
