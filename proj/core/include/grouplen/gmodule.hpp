#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouplen/config.hpp"
#include "grouplen/group.hpp"
#include "grouplen/primefield.hpp"

namespace grouplen {

// A right F_p[G]-module of finite dimension: one action matrix per group
// generator, same order as G.generators().  Vectors are rows; the action is
// v -> v * M, so action(g*h) = action(g) * action(h).
struct GModule {
    PermutationGroup group;
    std::uint32_t p = 0;
    unsigned dimension = 0;
    std::vector<FpMatrix> actions;
};

// Right-regular module F_p[G]: basis indexed by the canonical element list,
// g acts by right multiplication.  Throws cap_error("regular_cap") when |G|
// exceeds the cap.
GModule regular_module(const PermutationGroup& G, std::uint32_t p,
                       const Config& cfg);

// Restrict the module to an invariant subspace (rows form a basis) or to the
// quotient by one.
GModule submodule_action(const GModule& mod,
                         const std::vector<std::vector<std::uint32_t>>& basis);
GModule quotient_action(const GModule& mod,
                        const std::vector<std::vector<std::uint32_t>>& basis);

// Action matrix for an arbitrary group element (word in the generators is
// recovered through the group's stabilizer chain).
FpMatrix action_of(const GModule& mod, const Permutation& g);

// True when no nonzero proper subspace is invariant.  Deterministic given
// cfg.seed: the test is a chop-style search combined with Norton's
// criterion; a definite answer is always reached within cfg.chop_retries
// seeded attempts (throws verification_error otherwise — never observed).
bool is_irreducible(const GModule& mod, const Config& cfg);

// Kernel of the action as a subgroup of mod.group.
PermutationGroup module_kernel(const GModule& mod, const Config& cfg);
bool is_faithful(const GModule& mod, const Config& cfg);

struct CompositionFactor {
    GModule module;       // irreducible factor, in its own basis
    unsigned multiplicity = 1;
};

// Composition factors of the module up to isomorphism, with multiplicities,
// sorted by (dimension, fingerprint).  Seeded and deterministic.
std::vector<CompositionFactor> composition_factors(const GModule& mod,
                                                   const Config& cfg);

// Isomorphism test for irreducible modules of the same group and field
// (nullspace-of-intertwiner method).
bool modules_isomorphic(const GModule& a, const GModule& b, const Config& cfg);

// A faithful irreducible module of G over F_p of least dimension, found by
// chopping the regular module; empty when none of the composition factors of
// F_p[G] is faithful.
std::optional<GModule> faithful_irreducible(const PermutationGroup& G,
                                            std::uint32_t p, const Config& cfg);

}  // namespace grouplen
