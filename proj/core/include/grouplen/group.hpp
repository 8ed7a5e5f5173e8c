#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "grouplen/permutation.hpp"

namespace grouplen {

// A finite permutation group on {0..degree-1} given by generators.
//
// Copying is cheap (shared immutable state).  A base and strong generating
// set is built on first use by a deterministic Schreier-Sims run (base
// points are smallest moved points, generators are processed in order), so
// orders, membership tests and element enumeration are reproducible.
// Lazily computed data is guarded by a mutex; concurrent reads are safe.
//
// Constructions that know the group order on mathematical grounds (coset
// actions, affine semidirect products) may stamp a certified order to avoid
// an unnecessary stabilizer-chain build; the certified value is trusted but
// is cross-checked against the BSGS order in the test suites.
class PermutationGroup {
public:
    PermutationGroup();  // trivial group of degree 1
    PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

    static PermutationGroup trivial(std::size_t degree);
    // Caller certifies `order`; see class comment.
    static PermutationGroup with_certified_order(std::size_t degree,
                                                 std::vector<Permutation> generators,
                                                 std::uint64_t order);

    std::size_t degree() const;
    // Identity generators are dropped at construction.
    const std::vector<Permutation>& generators() const;

    std::uint64_t order() const;
    bool is_trivial() const { return order() == 1; }
    bool contains(const Permutation& p) const;

    // All elements in canonical order (sorted image vectors).
    // Throws cap_error("element_cap") when order() > element_cap.
    const std::vector<Permutation>& elements(std::uint64_t element_cap) const;

    // Canonical representative of the right coset (this group)*x, as an
    // image vector: the greedy lexicographic minimum of base-point images.
    // Equal keys <=> equal cosets.  Requires x of matching degree.
    std::vector<point_t> canonical_coset_key(const Permutation& x) const;

    // Identity of the shared state; usable as a cache key.
    const void* id() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// <<S^G>>: smallest normal subgroup of G containing the given elements.
PermutationGroup normal_closure(const PermutationGroup& G,
                                const std::vector<Permutation>& seed);

// Elements of G commuting with every generator of H (element filter).
// Throws cap_error("element_cap") when |G| exceeds the cap.
PermutationGroup centralizer(const PermutationGroup& G, const PermutationGroup& H,
                             std::uint64_t element_cap);

// Group generated by both generator sets (degrees must match).
PermutationGroup join(const PermutationGroup& A, const PermutationGroup& B);

bool contains_subgroup(const PermutationGroup& G, const PermutationGroup& H);
bool group_equal(const PermutationGroup& A, const PermutationGroup& B);

}  // namespace grouplen
