#pragma once

// Internal: deterministic Schreier-Sims stabilizer chains with explicit
// transversals.  Not installed; include only from src/.

#include <cstdint>
#include <utility>
#include <vector>

#include "grouplen/permutation.hpp"

namespace grouplen::detail {

struct BsgsLevel {
    point_t base_point = 0;
    std::vector<Permutation> gens;        // strong generators active at this level
    std::vector<point_t> orbit;           // discovery order, orbit[0] == base_point
    std::vector<std::int64_t> orbit_pos;  // point -> index into orbit, -1 when absent
    std::vector<Permutation> transversal; // transversal[k] maps base_point to orbit[k]

    void recompute_orbit(std::size_t degree);
};

struct Bsgs {
    std::size_t degree = 1;
    std::vector<BsgsLevel> levels;
    std::uint64_t order = 1;

    // Multiplies g by transversal inverses until stuck: returns the residue
    // and the number of levels passed.  Membership <=> residue is identity
    // (in which case all levels were passed).
    std::pair<Permutation, std::size_t> sift(const Permutation& g) const;
    bool contains(const Permutation& g) const;
};

// Deterministic: base points are smallest moved points, generators are
// processed in input order, orbits in breadth-first discovery order.
// Throws std::overflow_error if the order exceeds 64 bits.
Bsgs build_bsgs(std::size_t degree, const std::vector<Permutation>& generators);

}  // namespace grouplen::detail
