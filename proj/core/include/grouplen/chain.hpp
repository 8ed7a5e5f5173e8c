#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplen/config.hpp"
#include "grouplen/gmodule.hpp"
#include "grouplen/group.hpp"
#include "grouplen/sigma.hpp"

namespace grouplen {

// How a recorded fact was established.
//   generic   — recomputed from scratch by the structure/radicals/formations
//               engines on the stage group;
//   certified — derived from verified small-group computations plus the
//               structural invariants of the construction (used when the
//               stage outgrows the generic engines' caps).
enum class VerifyMode { generic, certified };

std::string to_string(VerifyMode m);

struct ChainFact {
    std::string name;        // e.g. "unique_minimal_normal", "residual"
    std::string value;       // rendered value, e.g. an order or "true"
    VerifyMode mode = VerifyMode::generic;
};

struct ChainStage {
    unsigned index = 0;             // i, 1-based
    std::uint64_t module_prime = 0; // p_i
    unsigned module_dimension = 0;  // dim V_i
    GModule module;                 // V_i as an F_{p_i} G_i-module
    PermutationGroup group;         // G_{i+1} = V_i : G_i
    PermutationGroup vector_image;  // V_i inside G_{i+1}
    PermutationGroup maximal;       // M_i = <V_1, ..., V_i> inside G_{i+1}
    std::uint64_t maximal_index = 0;           // [G_{i+1} : M_i] (= p)
    std::uint64_t sigma_length_of_maximal = 0; // l_sigma(M_i) = i
    std::uint64_t difference = 0;   // n_sigma(G_{i+1}) - n_sigma(M_i) = i
    std::vector<ChainFact> facts;   // every verified equality, with its mode
};

struct ChainResult {
    SigmaPartition sigma;
    std::uint64_t p = 0;
    unsigned n = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> primes;  // p_0 = p, p_1, ..., p_n
    PermutationGroup base;              // G_1 = C_p
    std::vector<ChainStage> stages;     // stages 1..n
};

// Builds the maximal-subgroup witness chain: G_1 = C_p; for each i,
// V_i = faithful_irreducible(G_i, p_i) and G_{i+1} = V_i : G_i, where the
// primes p_1, ..., p_n form the lexicographically smallest sequence with
// consecutive members in different sigma-classes and p_i != p for i >= 1.
//
// Every stage verifies and records: V_i is the unique minimal normal
// subgroup of G_{i+1}; the sigma-Fitting subgroup of G_{i+1} is V_i; M_i is
// maximal in G_{i+1}; M_i is the residual of G_{i+1} for the p-closed
// soluble formation; l_sigma(M_i) = i; and the n_sigma difference equals i.
// Facts are recomputed generically while the stage fits the caps and
// certified structurally beyond them; a failed verification of either kind
// throws verification_error (the construction is a theorem — failure means
// an implementation bug).
//
// Throws std::invalid_argument for n = 0, non-prime p, or a sigma partition
// with a single effective class.
ChainResult counterexample_chain(const SigmaPartition& sigma, std::uint64_t p,
                                 unsigned n, const Config& cfg);

// Renders the chain's final-stage group in the corpus group-file grammar.
std::string chain_group_file(const ChainResult& chain);

}  // namespace grouplen
