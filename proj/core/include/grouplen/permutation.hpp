#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grouplen {

using point_t = std::uint32_t;

// A permutation of {0, ..., degree-1}, stored as its image vector.
// Composition is left-to-right: (a * b)(x) = b(a(x)), i.e. "apply a, then b".
// This matches right actions (x^{ab} = (x^a)^b) and keeps permutation
// products consistent with row-vector matrix actions elsewhere.
class Permutation {
public:
    Permutation() = default;                       // degree-0 identity
    explicit Permutation(std::size_t degree);      // identity of given degree

    // Validates that images is a bijection on {0..n-1}.
    static Permutation from_images(std::vector<point_t> images);

    std::size_t degree() const { return images_.size(); }
    point_t operator()(point_t x) const { return images_[x]; }
    const std::vector<point_t>& images() const { return images_; }

    Permutation operator*(const Permutation& other) const;  // this, then other
    Permutation inverse() const;

    bool is_identity() const;
    // Smallest point x with x^g != x, if any.
    std::optional<point_t> smallest_moved_point() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<point_t> images_;
};

// h^{-1} g h under the left-to-right composition convention.
Permutation conjugate(const Permutation& g, const Permutation& h);
// a^{-1} b^{-1} a b.
Permutation commutator(const Permutation& a, const Permutation& b);

// Cycle notation I/O.  Text form is 1-based: "(1,2,3)(4,5)"; the identity
// prints as "()".  Parsing rejects repeated points, zero/out-of-range points
// and malformed syntax; `degree` fixes the ambient set size.
Permutation parse_cycles(const std::string& text, std::size_t degree);
std::string to_cycles(const Permutation& p);

std::size_t permutation_order(const Permutation& p);

}  // namespace grouplen
