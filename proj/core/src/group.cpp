#include "grouplen/group.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "bsgs.hpp"
#include "grouplen/errors.hpp"

namespace grouplen {

struct PermutationGroup::Impl {
    std::size_t degree = 1;
    std::vector<Permutation> generators;
    std::optional<std::uint64_t> certified_order;

    mutable std::mutex mu;
    mutable std::optional<detail::Bsgs> bsgs;
    mutable std::optional<std::vector<Permutation>> element_list;

    const detail::Bsgs& ensure_bsgs() const {
        std::lock_guard<std::mutex> lock(mu);
        if (!bsgs) bsgs = detail::build_bsgs(degree, generators);
        return *bsgs;
    }
};

namespace {

std::vector<Permutation> sanitize_generators(std::size_t degree,
                                             std::vector<Permutation> gens) {
    std::vector<Permutation> out;
    out.reserve(gens.size());
    for (Permutation& g : gens) {
        if (g.degree() != degree)
            throw std::invalid_argument("generator degree mismatch");
        if (!g.is_identity()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

PermutationGroup::PermutationGroup() : PermutationGroup(1, {}) {}

PermutationGroup::PermutationGroup(std::size_t degree,
                                   std::vector<Permutation> generators)
    : impl_(std::make_shared<Impl>()) {
    if (degree == 0) throw std::invalid_argument("degree must be positive");
    impl_->degree = degree;
    impl_->generators = sanitize_generators(degree, std::move(generators));
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
    return PermutationGroup(degree, {});
}

PermutationGroup PermutationGroup::with_certified_order(
    std::size_t degree, std::vector<Permutation> generators, std::uint64_t order) {
    PermutationGroup g(degree, std::move(generators));
    if (order == 0) throw std::invalid_argument("certified order must be positive");
    g.impl_->certified_order = order;
    return g;
}

std::size_t PermutationGroup::degree() const { return impl_->degree; }

const std::vector<Permutation>& PermutationGroup::generators() const {
    return impl_->generators;
}

std::uint64_t PermutationGroup::order() const {
    if (impl_->certified_order) return *impl_->certified_order;
    return impl_->ensure_bsgs().order;
}

bool PermutationGroup::contains(const Permutation& p) const {
    if (p.degree() != impl_->degree)
        throw std::invalid_argument("membership test across degrees");
    if (impl_->generators.empty()) return p.is_identity();
    return impl_->ensure_bsgs().contains(p);
}

const std::vector<Permutation>& PermutationGroup::elements(
    std::uint64_t element_cap) const {
    std::uint64_t n = order();
    if (n > element_cap) throw cap_error("element_cap", element_cap, n);

    std::lock_guard<std::mutex> lock(impl_->mu);
    if (impl_->element_list) return *impl_->element_list;
    if (!impl_->bsgs) impl_->bsgs = detail::build_bsgs(impl_->degree, impl_->generators);
    const detail::Bsgs& chain = *impl_->bsgs;

    // Every element factors uniquely as u_{deepest} * ... * u_0 read through
    // the chain, i.e. as stabilizer-element * transversal-element per level.
    std::vector<Permutation> all{Permutation(impl_->degree)};
    for (std::size_t i = chain.levels.size(); i-- > 0;) {
        std::vector<Permutation> next;
        next.reserve(all.size() * chain.levels[i].transversal.size());
        for (const Permutation& stab : all)
            for (const Permutation& u : chain.levels[i].transversal)
                next.push_back(stab * u);
        all = std::move(next);
    }
    std::sort(all.begin(), all.end());
    impl_->element_list = std::move(all);
    return *impl_->element_list;
}

std::vector<point_t> PermutationGroup::canonical_coset_key(
    const Permutation& x) const {
    if (x.degree() != impl_->degree)
        throw std::invalid_argument("coset key across degrees");
    const detail::Bsgs& chain = impl_->ensure_bsgs();

    // Greedily minimize the image of each successive base point over the
    // coset; the chosen representative is unique because the pointwise
    // stabilizer of the whole base is trivial.
    Permutation r = x;
    for (const detail::BsgsLevel& lvl : chain.levels) {
        std::size_t best = 0;
        point_t best_image = r(lvl.orbit[0]);
        for (std::size_t k = 1; k < lvl.orbit.size(); ++k) {
            point_t img = r(lvl.orbit[k]);
            if (img < best_image) {
                best_image = img;
                best = k;
            }
        }
        r = lvl.transversal[best] * r;
    }
    return r.images();
}

const void* PermutationGroup::id() const { return impl_.get(); }

PermutationGroup normal_closure(const PermutationGroup& G,
                                const std::vector<Permutation>& seed) {
    for (const Permutation& s : seed)
        if (!G.contains(s))
            throw std::invalid_argument("normal closure seed outside the group");

    std::vector<Permutation> gens;
    for (const Permutation& s : seed)
        if (!s.is_identity()) gens.push_back(s);

    // Work-list closure: conjugates of newly added generators are queued
    // and processed in turn, so the result is closed under conjugation by
    // every generator of G.
    PermutationGroup K(G.degree(), gens);
    for (std::size_t ni = 0; ni < gens.size(); ++ni) {
        for (const Permutation& g : G.generators()) {
            Permutation c = conjugate(gens[ni], g);
            if (!K.contains(c)) {
                gens.push_back(std::move(c));
                K = PermutationGroup(G.degree(), gens);
            }
        }
    }
    return K;
}

PermutationGroup centralizer(const PermutationGroup& G, const PermutationGroup& H,
                             std::uint64_t element_cap) {
    if (G.degree() != H.degree())
        throw std::invalid_argument("centralizer across degrees");
    if (H.generators().empty()) return G;

    std::vector<Permutation> gens;
    PermutationGroup C = PermutationGroup::trivial(G.degree());
    for (const Permutation& g : G.elements(element_cap)) {
        bool commutes = true;
        for (const Permutation& h : H.generators()) {
            if (g * h != h * g) {
                commutes = false;
                break;
            }
        }
        if (commutes && !C.contains(g)) {
            gens.push_back(g);
            C = PermutationGroup(G.degree(), gens);
        }
    }
    return C;
}

PermutationGroup join(const PermutationGroup& A, const PermutationGroup& B) {
    if (A.degree() != B.degree())
        throw std::invalid_argument("join across degrees");
    if (B.generators().empty()) return A;
    if (A.generators().empty()) return B;
    std::vector<Permutation> gens = A.generators();
    for (const Permutation& g : B.generators())
        if (!A.contains(g)) gens.push_back(g);
    if (gens.size() == A.generators().size()) return A;
    return PermutationGroup(A.degree(), std::move(gens));
}

bool contains_subgroup(const PermutationGroup& G, const PermutationGroup& H) {
    if (G.degree() != H.degree())
        throw std::invalid_argument("containment across degrees");
    for (const Permutation& h : H.generators())
        if (!G.contains(h)) return false;
    return true;
}

bool group_equal(const PermutationGroup& A, const PermutationGroup& B) {
    if (A.id() == B.id()) return true;
    if (A.degree() != B.degree()) return false;
    return A.order() == B.order() && contains_subgroup(A, B);
}

}  // namespace grouplen
