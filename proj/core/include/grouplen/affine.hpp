#pragma once

#include <cstdint>
#include <vector>

#include "grouplen/config.hpp"
#include "grouplen/gmodule.hpp"
#include "grouplen/group.hpp"

namespace grouplen {

// Semidirect product V : G of a module with its group, acting on the points
// of V (so the degree is p^dim).  Points are vectors of V numbered by the
// base-p expansion x = sum x_i p^i.  The affine map (A, v): x -> xA + v.
//
// Generators: first the translations by the unit vectors e_0..e_{d-1}, then
// one affine generator (A_i, 0) per group generator.
struct AffineProduct {
    PermutationGroup product;              // V : G as a permutation group
    std::vector<Permutation> translations; // images of the unit translations
    std::vector<Permutation> linear_parts; // images of the module generators
    std::uint64_t vector_subgroup_order = 1;  // p^dim
    std::uint32_t p = 0;
    unsigned dimension = 0;
};

// Throws cap_error("degree_cap") when p^dim exceeds cfg.degree_cap.  When
// the module action is faithful, |product| = p^dim * |G| and the order is
// certified on the returned group without running a stabilizer chain.
AffineProduct affine_semidirect(const GModule& mod, const Config& cfg);

// The translation subgroup V (elementary abelian p-group) of the product.
PermutationGroup translation_subgroup(const AffineProduct& ap);

// Permutation of V-points induced by an affine pair (A, v).
Permutation affine_permutation(const FpMatrix& A,
                               const std::vector<std::uint32_t>& v);

}  // namespace grouplen
