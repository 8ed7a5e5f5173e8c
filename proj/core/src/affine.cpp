#include "grouplen/affine.hpp"

#include "grouplen/errors.hpp"

#include <stdexcept>

namespace grouplen {

Permutation affine_permutation(const FpMatrix& A, const std::vector<std::uint32_t>& v) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("affine_permutation: matrix must be square");
    }
    const unsigned d = A.rows();
    const std::uint32_t p = A.modulus();
    if (v.size() != d) throw std::invalid_argument("affine_permutation: vector length mismatch");

    std::uint64_t degree = 1;
    for (unsigned i = 0; i < d; ++i) {
        degree *= p;
        if (degree > (std::uint64_t(1) << 32)) {
            throw std::invalid_argument("affine_permutation: p^dim exceeds the point type");
        }
    }

    std::vector<std::uint64_t> flat(std::size_t(d) * d);
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = 0; j < d; ++j) flat[std::size_t(i) * d + j] = A.at(i, j);
    }
    std::vector<std::uint64_t> pow(d + 1, 1);
    for (unsigned i = 0; i < d; ++i) pow[i + 1] = pow[i] * p;

    std::vector<point_t> images(degree);
    std::vector<std::uint32_t> x(d), y(d);
    for (std::uint64_t pt = 0; pt < degree; ++pt) {
        std::uint64_t rest = pt;
        for (unsigned i = 0; i < d; ++i) {
            x[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        // y = x * A + v
        for (unsigned j = 0; j < d; ++j) y[j] = v[j] % p;
        for (unsigned i = 0; i < d; ++i) {
            const std::uint64_t xi = x[i];
            if (xi == 0) continue;
            const std::uint64_t* arow = &flat[std::size_t(i) * d];
            for (unsigned j = 0; j < d; ++j) {
                y[j] = static_cast<std::uint32_t>((y[j] + xi * arow[j]) % p);
            }
        }
        std::uint64_t out = 0;
        for (unsigned i = d; i-- > 0;) out = out * p + y[i];
        images[pt] = static_cast<point_t>(out);
    }
    return Permutation::from_images(images);
}

AffineProduct affine_semidirect(const GModule& mod, const Config& cfg) {
    if (mod.dimension == 0) throw std::invalid_argument("affine_semidirect: zero module");
    const unsigned d = mod.dimension;
    const std::uint32_t p = mod.p;

    std::uint64_t degree = 1;
    for (unsigned i = 0; i < d; ++i) {
        degree *= p;
        if (degree > cfg.degree_cap) throw cap_error("degree_cap", cfg.degree_cap, degree);
    }

    AffineProduct ap;
    ap.p = p;
    ap.dimension = d;
    ap.vector_subgroup_order = degree;

    const FpMatrix id = FpMatrix::identity(d, p);
    std::vector<Permutation> gens;
    for (unsigned i = 0; i < d; ++i) {
        std::vector<std::uint32_t> e(d, 0);
        e[i] = 1;
        ap.translations.push_back(affine_permutation(id, e));
        gens.push_back(ap.translations.back());
    }
    const std::vector<std::uint32_t> zero(d, 0);
    for (const auto& a : mod.actions) {
        ap.linear_parts.push_back(affine_permutation(a, zero));
        gens.push_back(ap.linear_parts.back());
    }

    // Distinct affine maps (A, v) are distinct permutations, so the product
    // order is p^dim * |image of G in GL_d|; with a faithful action that is
    // p^dim * |G| and no stabilizer chain is needed at the full degree.
    const std::uint64_t image_order =
        mod.group.order() / module_kernel(mod, cfg).order();
    ap.product = PermutationGroup::with_certified_order(
        static_cast<std::size_t>(degree), gens, degree * image_order);
    return ap;
}

PermutationGroup translation_subgroup(const AffineProduct& ap) {
    return PermutationGroup::with_certified_order(ap.product.degree(), ap.translations,
                                                  ap.vector_subgroup_order);
}

}  // namespace grouplen
