#include "grouplen/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "grouplen/errors.hpp"
#include "grouplen/radicals.hpp"

namespace grouplen {

namespace {

// Deterministic total order on subgroups of a common parent: by order,
// then lexicographically by the canonical element list.
bool canonical_group_less(const PermutationGroup& A, const PermutationGroup& B,
                          std::uint64_t element_cap) {
    if (A.order() != B.order()) return A.order() < B.order();
    return A.elements(element_cap) < B.elements(element_cap);
}

struct ImageHash {
    std::size_t operator()(const std::vector<point_t>& v) const {
        std::size_t h = v.size();
        for (point_t x : v) h = h * 1000003u + x;
        return h;
    }
};

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(const PermutationGroup& G,
                                              const Config& cfg) {
    const std::vector<Permutation>& elements = G.elements(cfg.element_cap);
    std::unordered_map<std::vector<point_t>, std::size_t, ImageHash> index;
    index.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i].images()] = i;

    std::vector<bool> seen(elements.size(), false);
    std::vector<ConjugacyClass> classes;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (seen[i]) continue;
        // Elements are scanned in canonical order, so the first unseen
        // element is the lexicographically smallest of its class.
        ConjugacyClass cls;
        cls.representative = elements[i];
        std::vector<std::size_t> orbit{i};
        seen[i] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (const Permutation& g : G.generators()) {
                Permutation c = conjugate(elements[orbit[head]], g);
                std::size_t j = index.at(c.images());
                if (!seen[j]) {
                    seen[j] = true;
                    orbit.push_back(j);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        for (std::size_t j : orbit) cls.elements.push_back(elements[j]);
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const ConjugacyClass& a, const ConjugacyClass& b) {
                  if (a.elements.size() != b.elements.size())
                      return a.elements.size() < b.elements.size();
                  return a.representative < b.representative;
              });
    return classes;
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientGroup::Impl {
    PermutationGroup G;
    PermutationGroup N;
    PermutationGroup carrier;
    bool trivial_kernel = false;
    std::vector<Permutation> reps;  // coset representatives, reps[0] = id
    std::unordered_map<std::vector<point_t>, point_t, ImageHash> coset_index;

    point_t index_of(const Permutation& x) const {
        auto it = coset_index.find(N.canonical_coset_key(x));
        if (it == coset_index.end())
            throw std::invalid_argument("element outside the quotient's group");
        return it->second;
    }

    Permutation project_one(const Permutation& x) const {
        if (trivial_kernel) return x;
        std::vector<point_t> images(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i)
            images[i] = index_of(reps[i] * x);
        return Permutation::from_images(std::move(images));
    }
};

const PermutationGroup& QuotientGroup::group() const { return impl_->G; }
const PermutationGroup& QuotientGroup::kernel() const { return impl_->N; }
const PermutationGroup& QuotientGroup::carrier() const { return impl_->carrier; }

Permutation QuotientGroup::project(const Permutation& g) const {
    return impl_->project_one(g);
}

PermutationGroup QuotientGroup::project_subgroup(const PermutationGroup& H) const {
    if (impl_->trivial_kernel) return H;
    std::vector<Permutation> gens;
    gens.reserve(H.generators().size());
    for (const Permutation& h : H.generators())
        gens.push_back(impl_->project_one(h));
    return PermutationGroup(impl_->carrier.degree(), std::move(gens));
}

PermutationGroup QuotientGroup::pull_back(const PermutationGroup& S) const {
    if (impl_->trivial_kernel) return S;
    if (S.degree() != impl_->carrier.degree())
        throw std::invalid_argument("pull_back of a non-carrier subgroup");
    // The coset action of G is regular, so the preimage of a carrier
    // element s is the coset N * reps[s(0)]; generators of the preimage
    // subgroup are the kernel's generators plus one lift per generator.
    std::vector<Permutation> gens = impl_->N.generators();
    for (const Permutation& s : S.generators())
        gens.push_back(impl_->reps[s(0)]);
    return PermutationGroup::with_certified_order(
        impl_->G.degree(), std::move(gens), impl_->N.order() * S.order());
}

QuotientGroup quotient(const PermutationGroup& G, const PermutationGroup& N,
                       const Config& cfg) {
    if (G.degree() != N.degree())
        throw std::invalid_argument("quotient across degrees");
    if (!contains_subgroup(G, N))
        throw std::invalid_argument("quotient kernel is not a subgroup");
    for (const Permutation& n : N.generators())
        for (const Permutation& g : G.generators())
            if (!N.contains(conjugate(n, g)))
                throw std::invalid_argument("quotient kernel is not normal");

    auto impl = std::make_shared<QuotientGroup::Impl>();
    impl->G = G;
    impl->N = N;

    if (N.order() == 1) {
        impl->trivial_kernel = true;
        impl->carrier = G;
    } else {
        std::uint64_t index = G.order() / N.order();
        if (index > cfg.degree_cap)
            throw cap_error("degree_cap", cfg.degree_cap, index);

        // Breadth-first coset enumeration from the identity coset.
        impl->reps.push_back(Permutation(G.degree()));
        impl->coset_index[N.canonical_coset_key(impl->reps[0])] = 0;
        for (std::size_t head = 0; head < impl->reps.size(); ++head) {
            for (const Permutation& g : G.generators()) {
                Permutation next = impl->reps[head] * g;
                std::vector<point_t> key = N.canonical_coset_key(next);
                if (!impl->coset_index.count(key)) {
                    impl->coset_index[key] =
                        static_cast<point_t>(impl->reps.size());
                    impl->reps.push_back(std::move(next));
                }
            }
        }
        if (impl->reps.size() != index)
            throw verification_error("coset enumeration does not match the index");

        std::vector<Permutation> carrier_gens;
        carrier_gens.reserve(G.generators().size());
        for (const Permutation& g : G.generators()) {
            std::vector<point_t> images(impl->reps.size());
            for (std::size_t i = 0; i < impl->reps.size(); ++i)
                images[i] = impl->index_of(impl->reps[i] * g);
            carrier_gens.push_back(Permutation::from_images(std::move(images)));
        }
        impl->carrier = PermutationGroup::with_certified_order(
            impl->reps.size(), std::move(carrier_gens), index);
    }

    QuotientGroup q;
    q.impl_ = std::move(impl);
    return q;
}

// ---------------------------------------------------------------------------
// Normal subgroups, socle, chief series

std::vector<PermutationGroup> normal_subgroups(const PermutationGroup& G,
                                               const Config& cfg) {
    std::vector<ConjugacyClass> classes = conjugacy_classes(G, cfg);
    if (classes.size() > cfg.class_cap)
        throw cap_error("class_cap", cfg.class_cap, classes.size());

    // Distinct conjugacy-class closures.
    std::vector<PermutationGroup> found{PermutationGroup::trivial(G.degree())};
    auto add_if_new = [&](const PermutationGroup& H) {
        for (const PermutationGroup& K : found)
            if (group_equal(K, H)) return false;
        found.push_back(H);
        return true;
    };
    for (const ConjugacyClass& cls : classes) {
        if (cls.representative.is_identity()) continue;
        add_if_new(normal_closure(G, {cls.representative}));
    }

    // Close under pairwise joins (joins of normal subgroups are normal, and
    // every normal subgroup is a join of class closures).
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t j = i + 1; j < found.size(); ++j) {
            PermutationGroup joined = join(found[i], found[j]);
            add_if_new(joined);
        }
    }

    std::sort(found.begin(), found.end(),
              [&](const PermutationGroup& a, const PermutationGroup& b) {
                  return canonical_group_less(a, b, cfg.element_cap);
              });
    return found;
}

std::vector<PermutationGroup> minimal_normal_subgroups(const PermutationGroup& G,
                                                       const Config& cfg) {
    std::vector<ConjugacyClass> classes = conjugacy_classes(G, cfg);
    std::vector<PermutationGroup> closures;
    for (const ConjugacyClass& cls : classes) {
        if (cls.representative.is_identity()) continue;
        PermutationGroup C = normal_closure(G, {cls.representative});
        bool dup = false;
        for (const PermutationGroup& K : closures)
            if (group_equal(K, C)) {
                dup = true;
                break;
            }
        if (!dup) closures.push_back(std::move(C));
    }

    std::vector<PermutationGroup> minimal;
    for (const PermutationGroup& C : closures) {
        bool is_min = true;
        for (const PermutationGroup& D : closures) {
            if (D.order() < C.order() && contains_subgroup(C, D)) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(C);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const PermutationGroup& a, const PermutationGroup& b) {
                  return canonical_group_less(a, b, cfg.element_cap);
              });
    return minimal;
}

PermutationGroup socle(const PermutationGroup& G, const Config& cfg) {
    PermutationGroup S = PermutationGroup::trivial(G.degree());
    for (const PermutationGroup& M : minimal_normal_subgroups(G, cfg))
        S = join(S, M);
    return S;
}

namespace {

bool is_abelian(const PermutationGroup& G) {
    const auto& gens = G.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    return true;
}

// Classifies a minimal normal subgroup W (of some ambient group): either
// elementary abelian (p-group) or a direct power of a nonabelian simple
// group.
ChiefFactor classify_chief_factor(const PermutationGroup& W, const Config& cfg) {
    ChiefFactor f;
    f.order = W.order();
    f.abelian = is_abelian(W);
    if (f.abelian) {
        auto factors = factorize(f.order);
        if (factors.size() != 1)
            throw verification_error("abelian chief factor is not a p-group");
        f.prime = factors[0].first;
    } else {
        std::vector<PermutationGroup> components = minimal_normal_subgroups(W, cfg);
        if (components.empty())
            throw verification_error("nonabelian chief factor without components");
        f.component_order = components[0].order();
        f.component_count = static_cast<unsigned>(components.size());
        std::uint64_t product = 1;
        for (const PermutationGroup& c : components) {
            if (c.order() != f.component_order)
                throw verification_error("chief factor components of unequal order");
            product *= c.order();
        }
        if (product != f.order)
            throw verification_error("chief factor is not the product of its components");
    }
    return f;
}

}  // namespace

ChiefSeries chief_series(const PermutationGroup& G, const Config& cfg) {
    ChiefSeries series;
    series.terms.push_back(PermutationGroup::trivial(G.degree()));
    while (series.terms.back().order() < G.order()) {
        QuotientGroup q = quotient(G, series.terms.back(), cfg);
        std::vector<PermutationGroup> mins =
            minimal_normal_subgroups(q.carrier(), cfg);
        if (mins.empty())
            throw verification_error("nontrivial quotient without minimal normals");
        // minimal_normal_subgroups sorts by (order, canonical key); the
        // first entry is the deterministic choice.
        const PermutationGroup& chosen = mins[0];
        series.factors.push_back(classify_chief_factor(chosen, cfg));
        series.terms.push_back(q.pull_back(chosen));
    }
    return series;
}

// ---------------------------------------------------------------------------
// Series and predicates

PermutationGroup derived_subgroup(const PermutationGroup& H) {
    std::vector<Permutation> comms;
    const auto& gens = H.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            comms.push_back(commutator(gens[i], gens[j]));
    return normal_closure(H, comms);
}

std::vector<PermutationGroup> derived_series(const PermutationGroup& H) {
    std::vector<PermutationGroup> series{H};
    while (true) {
        PermutationGroup next = derived_subgroup(series.back());
        if (next.order() == series.back().order()) break;
        series.push_back(std::move(next));
        if (series.back().order() == 1) break;
    }
    return series;
}

std::vector<PermutationGroup> lower_central_series(const PermutationGroup& G) {
    std::vector<PermutationGroup> series{G};
    while (true) {
        std::vector<Permutation> comms;
        for (const Permutation& g : G.generators())
            for (const Permutation& l : series.back().generators())
                comms.push_back(commutator(g, l));
        PermutationGroup next = normal_closure(G, comms);
        if (next.order() == series.back().order()) break;
        series.push_back(std::move(next));
        if (series.back().order() == 1) break;
    }
    return series;
}

bool is_soluble(const PermutationGroup& G) {
    return derived_series(G).back().order() == 1;
}

bool is_nilpotent(const PermutationGroup& G) {
    return lower_central_series(G).back().order() == 1;
}

bool is_p_soluble(const PermutationGroup& G, std::uint64_t p, const Config& cfg) {
    for (const ChiefFactor& f : chief_series(G, cfg).factors)
        if (f.order % p == 0 && f.order != p_part(f.order, p)) return false;
    return true;
}

bool is_sigma_soluble(const PermutationGroup& G, const SigmaPartition& sigma,
                      const Config& cfg) {
    for (const ChiefFactor& f : chief_series(G, cfg).factors) {
        std::uint64_t q = f.abelian ? f.prime : factorize(f.order)[0].first;
        if (!sigma.is_class_number(f.order, sigma.class_id(q))) return false;
    }
    return true;
}

bool is_sigma_nilpotent(const PermutationGroup& G, const SigmaPartition& sigma,
                        const Config& cfg) {
    for (std::int64_t id : sigma.classes_meeting(G.order())) {
        std::uint64_t part = sigma.class_part(G.order(), id);
        std::uint64_t member = 0;
        for (const auto& [prime, exp] : factorize(G.order())) {
            (void)exp;
            if (sigma.class_id(prime) == id) {
                member = prime;
                break;
            }
        }
        PermutationGroup core =
            fitting_radical(G, fc_sigma_class(sigma, member), cfg);
        if (core.order() != part) return false;
    }
    return true;
}

bool is_nonabelian_semisimple(const PermutationGroup& G, const Config& cfg) {
    if (G.order() == 1) return false;
    if (soluble_radical(G, cfg).order() != 1) return false;
    return socle(G, cfg).order() == G.order();
}

PredicateReport structural_predicates(const PermutationGroup& G,
                                      const SigmaPartition& sigma,
                                      const std::vector<std::uint64_t>& primes,
                                      const Config& cfg) {
    PredicateReport report;
    report.soluble = is_soluble(G);
    report.nilpotent = is_nilpotent(G);
    for (std::uint64_t p : primes) report.p_soluble[p] = is_p_soluble(G, p, cfg);
    report.sigma_soluble = is_sigma_soluble(G, sigma, cfg);
    report.sigma_nilpotent = is_sigma_nilpotent(G, sigma, cfg);
    report.nonabelian_semisimple = is_nonabelian_semisimple(G, cfg);
    return report;
}

}  // namespace grouplen
