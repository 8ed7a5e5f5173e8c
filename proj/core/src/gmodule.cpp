#include "grouplen/gmodule.hpp"

#include "grouplen/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace grouplen {

namespace {

void validate_module(const GModule& mod) {
    if (mod.actions.size() != mod.group.generators().size()) {
        throw std::invalid_argument("GModule: one action matrix per generator required");
    }
    for (const auto& a : mod.actions) {
        if (a.rows() != mod.dimension || a.cols() != mod.dimension || a.modulus() != mod.p) {
            throw std::invalid_argument("GModule: action matrix shape mismatch");
        }
    }
}

std::uint32_t element_index_of(const std::vector<Permutation>& els, const Permutation& x) {
    auto it = std::lower_bound(els.begin(), els.end(), x);
    if (it == els.end() || !(*it == x)) {
        throw verification_error("module: element escaped the canonical list");
    }
    return static_cast<std::uint32_t>(it - els.begin());
}

// Breadth-first order of the Cayley graph: ord[k] = element index discovered
// k-th, with (parent position, generator index) edges; ord[0] = identity.
struct CayleyBfs {
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> parent_pos;
    std::vector<std::uint32_t> parent_gen;
};

CayleyBfs cayley_bfs(const PermutationGroup& g, const std::vector<Permutation>& els) {
    CayleyBfs bfs;
    const auto& gens = g.generators();
    std::vector<bool> seen(els.size(), false);
    const std::uint32_t id = element_index_of(els, Permutation(g.degree()));
    bfs.order.push_back(id);
    bfs.parent_pos.push_back(0);
    bfs.parent_gen.push_back(0);
    seen[id] = true;
    for (std::size_t pos = 0; pos < bfs.order.size(); ++pos) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const std::uint32_t child =
                element_index_of(els, els[bfs.order[pos]] * gens[gi]);
            if (seen[child]) continue;
            seen[child] = true;
            bfs.order.push_back(child);
            bfs.parent_pos.push_back(static_cast<std::uint32_t>(pos));
            bfs.parent_gen.push_back(static_cast<std::uint32_t>(gi));
        }
    }
    if (bfs.order.size() != els.size()) {
        throw verification_error("module: generators do not reach every element");
    }
    return bfs;
}

}  // namespace

GModule regular_module(const PermutationGroup& G, std::uint32_t p, const Config& cfg) {
    const std::uint64_t order = G.order();
    if (order > cfg.regular_cap) throw cap_error("regular_cap", cfg.regular_cap, order);
    const auto& els = G.elements(std::max<std::uint64_t>(cfg.element_cap, order));
    const unsigned dim = static_cast<unsigned>(els.size());
    GModule mod;
    mod.group = G;
    mod.p = p;
    mod.dimension = dim;
    for (const auto& g : G.generators()) {
        FpMatrix a(dim, dim, p);
        for (unsigned x = 0; x < dim; ++x) a.set(x, element_index_of(els, els[x] * g), 1);
        mod.actions.push_back(std::move(a));
    }
    return mod;
}

GModule submodule_action(const GModule& mod,
                         const std::vector<std::vector<std::uint32_t>>& basis) {
    validate_module(mod);
    const unsigned k = static_cast<unsigned>(basis.size());
    if (k == 0 || k > mod.dimension) {
        throw std::invalid_argument("submodule_action: bad basis size");
    }
    FpMatrix b(k, mod.dimension, mod.p);
    for (unsigned i = 0; i < k; ++i) {
        if (basis[i].size() != mod.dimension) {
            throw std::invalid_argument("submodule_action: basis width mismatch");
        }
        for (unsigned j = 0; j < mod.dimension; ++j) b.set(i, j, basis[i][j]);
    }
    if (rank(b) != k) throw std::invalid_argument("submodule_action: basis is dependent");
    GModule out;
    out.group = mod.group;
    out.p = mod.p;
    out.dimension = k;
    for (const auto& a : mod.actions) {
        FpMatrix c(k, k, mod.p);
        const FpMatrix ba = b * a;
        for (unsigned i = 0; i < k; ++i) {
            std::vector<std::uint32_t> image(mod.dimension);
            for (unsigned j = 0; j < mod.dimension; ++j) image[j] = ba.at(i, j);
            std::vector<std::uint32_t> coords;
            try {
                coords = solve_left(b, image);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("submodule_action: subspace is not invariant");
            }
            for (unsigned j = 0; j < k; ++j) c.set(i, j, coords[j]);
        }
        out.actions.push_back(std::move(c));
    }
    return out;
}

GModule quotient_action(const GModule& mod,
                        const std::vector<std::vector<std::uint32_t>>& basis) {
    validate_module(mod);
    const unsigned d = mod.dimension;
    const unsigned k = static_cast<unsigned>(basis.size());
    if (k == 0 || k >= d) throw std::invalid_argument("quotient_action: bad basis size");
    FpMatrix b(k, d, mod.p);
    for (unsigned i = 0; i < k; ++i) {
        if (basis[i].size() != d) {
            throw std::invalid_argument("quotient_action: basis width mismatch");
        }
        for (unsigned j = 0; j < d; ++j) b.set(i, j, basis[i][j]);
    }
    FpMatrix reduced = row_echelon(b);
    if (rank(reduced) != k) throw std::invalid_argument("quotient_action: basis is dependent");
    // Complete with the standard vectors at the non-pivot columns.
    std::vector<bool> pivot_col(d, false);
    for (unsigned i = 0; i < k; ++i) {
        unsigned c = 0;
        while (c < d && reduced.at(i, c) == 0) ++c;
        pivot_col[c] = true;
    }
    FpMatrix t(d, d, mod.p);
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < d; ++j) t.set(i, j, reduced.at(i, j));
    }
    unsigned row = k;
    for (unsigned c = 0; c < d; ++c) {
        if (pivot_col[c]) continue;
        t.set(row, c, 1);
        ++row;
    }
    FpMatrix tinv = inverse(t);
    GModule out;
    out.group = mod.group;
    out.p = mod.p;
    out.dimension = d - k;
    for (const auto& a : mod.actions) {
        FpMatrix full = t * a * tinv;
        for (unsigned i = 0; i < k; ++i) {
            for (unsigned j = k; j < d; ++j) {
                if (full.at(i, j) != 0) {
                    throw std::invalid_argument("quotient_action: subspace is not invariant");
                }
            }
        }
        FpMatrix c(d - k, d - k, mod.p);
        for (unsigned i = k; i < d; ++i) {
            for (unsigned j = k; j < d; ++j) c.set(i - k, j - k, full.at(i, j));
        }
        out.actions.push_back(std::move(c));
    }
    return out;
}

FpMatrix action_of(const GModule& mod, const Permutation& g) {
    validate_module(mod);
    if (!mod.group.contains(g)) {
        throw std::invalid_argument("action_of: element is not in the group");
    }
    // Walk the Cayley graph from the identity to g, multiplying the action
    // matrices of the generator edges.
    const auto& els = mod.group.elements(mod.group.order());
    auto bfs = cayley_bfs(mod.group, els);
    const std::uint32_t target = element_index_of(els, g);
    // Recover the generator word along the parent chain.
    std::vector<std::uint32_t> word;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < bfs.order.size(); ++i) {
        if (bfs.order[i] == target) {
            pos = i;
            break;
        }
    }
    while (pos != 0) {
        word.push_back(bfs.parent_gen[pos]);
        pos = bfs.parent_pos[pos];
    }
    FpMatrix m = FpMatrix::identity(mod.dimension, mod.p);
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * mod.actions[*it];
    return m;
}

namespace {

// Outcome of one full chop pass: either a certificate of irreducibility or a
// proper nonzero invariant subspace in reduced echelon form.
struct ChopOutcome {
    bool irreducible = false;
    std::vector<std::vector<std::uint32_t>> submodule;
};

std::vector<FpMatrix> transposed_actions(const GModule& mod) {
    std::vector<FpMatrix> out;
    out.reserve(mod.actions.size());
    for (const auto& a : mod.actions) out.push_back(a.transposed());
    return out;
}

ChopOutcome chop_once(const GModule& mod, const Config& cfg, std::mt19937_64& rng) {
    validate_module(mod);
    const unsigned d = mod.dimension;
    const std::uint32_t p = mod.p;
    if (d == 0) throw std::invalid_argument("chop: zero module");
    if (d == 1) return {true, {}};
    if (mod.actions.empty()) {
        // Trivial group: every line is a submodule.
        std::vector<std::uint32_t> e0(d, 0);
        e0[0] = 1;
        return {false, {e0}};
    }

    for (unsigned attempt = 0; attempt < cfg.chop_retries; ++attempt) {
        // Random element of the enveloping algebra; later attempts use
        // richer words so that a suitable spectrum is eventually hit.
        FpMatrix theta = FpMatrix::identity(d, p).scaled(static_cast<std::uint32_t>(rng() % p));
        for (const auto& a : mod.actions) {
            theta = theta + a.scaled(static_cast<std::uint32_t>(rng() % p));
        }
        for (unsigned extra = 0; extra < attempt + 1; ++extra) {
            const auto& a = mod.actions[rng() % mod.actions.size()];
            const auto& b = mod.actions[rng() % mod.actions.size()];
            theta = theta + (a * b).scaled(static_cast<std::uint32_t>(rng() % p));
        }

        const auto cp = char_poly(theta);
        const auto factors = distinct_irreducible_factors(cp, p);
        for (const auto& f : factors) {
            const FpMatrix ftheta = poly_eval(f, theta);
            const auto null_rows = nullspace_basis(ftheta);
            if (null_rows.empty()) {
                throw verification_error("chop: factor of the characteristic polynomial "
                                         "with trivial null space");
            }
            for (const auto& v : null_rows) {
                auto span = spin_basis({v}, mod.actions);
                if (span.size() < d) return {false, std::move(span)};
            }
            const unsigned degree = static_cast<unsigned>(f.size() - 1);
            if (null_rows.size() != degree) continue;  // no certificate from this factor
            // Norton's criterion: the dual spin must also fill the space.
            const auto dual_null = nullspace_basis(ftheta.transposed());
            if (dual_null.empty()) {
                throw verification_error("chop: dual null space vanished");
            }
            auto dual_span = spin_basis({dual_null.front()}, transposed_actions(mod));
            if (dual_span.size() == d) return {true, {}};
            // A proper dual submodule: its annihilator is a proper submodule.
            FpMatrix u(static_cast<unsigned>(dual_span.size()), d, p);
            for (unsigned i = 0; i < dual_span.size(); ++i) {
                for (unsigned j = 0; j < d; ++j) u.set(i, j, dual_span[i][j]);
            }
            auto perp = nullspace_basis(u.transposed());
            if (perp.empty() || perp.size() >= d) {
                throw verification_error("chop: annihilator has the wrong dimension");
            }
            // The annihilator must be invariant; verify rather than assume.
            std::vector<std::vector<std::uint32_t>> rows = perp;
            auto canon = spin_basis(rows, mod.actions);
            if (canon.size() != perp.size()) {
                throw verification_error("chop: annihilator is not invariant");
            }
            return {false, std::move(canon)};
        }
    }
    throw verification_error("chop: retries exhausted without a certificate");
}

}  // namespace

bool is_irreducible(const GModule& mod, const Config& cfg) {
    std::mt19937_64 rng(cfg.seed);
    return chop_once(mod, cfg, rng).irreducible;
}

PermutationGroup module_kernel(const GModule& mod, const Config& cfg) {
    validate_module(mod);
    const auto& els =
        mod.group.elements(std::max<std::uint64_t>(cfg.element_cap, mod.group.order()));
    auto bfs = cayley_bfs(mod.group, els);
    const unsigned d = mod.dimension;

    // For each basis vector e_i, push its image through the Cayley graph and
    // keep only the elements fixing it; survivors of every pass form the
    // kernel.  Memory stays at one row vector per element.
    std::vector<bool> candidate(els.size(), true);
    std::size_t survivors = els.size();
    for (unsigned i = 0; i < d && survivors > 1; ++i) {
        std::vector<std::vector<std::uint32_t>> image(els.size());
        std::vector<std::uint32_t> e(d, 0);
        e[i] = 1;
        image[0] = e;
        for (std::size_t posn = 1; posn < bfs.order.size(); ++posn) {
            image[posn] =
                row_times_matrix(image[bfs.parent_pos[posn]], mod.actions[bfs.parent_gen[posn]]);
        }
        for (std::size_t posn = 0; posn < bfs.order.size(); ++posn) {
            if (!candidate[bfs.order[posn]]) continue;
            if (image[posn] != e) {
                candidate[bfs.order[posn]] = false;
                --survivors;
            }
        }
    }
    std::vector<Permutation> kernel_elements;
    for (std::size_t idx = 0; idx < els.size(); ++idx) {
        if (candidate[idx]) kernel_elements.push_back(els[idx]);
    }
    return PermutationGroup::with_certified_order(mod.group.degree(), kernel_elements,
                                                  kernel_elements.size());
}

bool is_faithful(const GModule& mod, const Config& cfg) {
    return module_kernel(mod, cfg).order() == 1;
}

namespace {

// Similarity-invariant fingerprint: the characteristic polynomials of every
// generator action and of the product of all of them.
std::vector<std::uint32_t> fingerprint(const GModule& mod) {
    std::vector<std::uint32_t> out;
    FpMatrix prod = FpMatrix::identity(mod.dimension, mod.p);
    for (const auto& a : mod.actions) {
        for (std::uint32_t c : char_poly(a)) out.push_back(c);
        prod = prod * a;
    }
    for (std::uint32_t c : char_poly(prod)) out.push_back(c);
    return out;
}

}  // namespace

std::vector<CompositionFactor> composition_factors(const GModule& mod, const Config& cfg) {
    validate_module(mod);
    std::mt19937_64 rng(cfg.seed);
    std::vector<GModule> factors;
    std::vector<GModule> stack = {mod};
    std::uint64_t chopped_dimension = 0;
    while (!stack.empty()) {
        GModule current = std::move(stack.back());
        stack.pop_back();
        if (current.dimension == 0) continue;
        auto outcome = chop_once(current, cfg, rng);
        if (outcome.irreducible) {
            chopped_dimension += current.dimension;
            factors.push_back(std::move(current));
            continue;
        }
        // Quotient below the submodule so that the submodule is processed
        // first (deterministic factor order).
        stack.push_back(quotient_action(current, outcome.submodule));
        stack.push_back(submodule_action(current, outcome.submodule));
    }
    if (chopped_dimension != mod.dimension) {
        throw verification_error("composition_factors: factor dimensions do not sum up");
    }

    std::vector<CompositionFactor> grouped;
    for (auto& f : factors) {
        bool matched = false;
        for (auto& g : grouped) {
            if (g.module.dimension == f.dimension && modules_isomorphic(g.module, f, cfg)) {
                ++g.multiplicity;
                matched = true;
                break;
            }
        }
        if (!matched) grouped.push_back({std::move(f), 1});
    }
    std::stable_sort(grouped.begin(), grouped.end(),
                     [](const CompositionFactor& a, const CompositionFactor& b) {
                         if (a.module.dimension != b.module.dimension) {
                             return a.module.dimension < b.module.dimension;
                         }
                         return fingerprint(a.module) < fingerprint(b.module);
                     });
    return grouped;
}

bool modules_isomorphic(const GModule& a, const GModule& b, const Config& cfg) {
    (void)cfg;
    validate_module(a);
    validate_module(b);
    if (a.p != b.p || a.dimension != b.dimension) return false;
    if (!(a.group.degree() == b.group.degree()) ||
        !(a.group.generators() == b.group.generators())) {
        throw std::invalid_argument("modules_isomorphic: modules of different groups");
    }
    const unsigned d = a.dimension;
    const std::uint32_t p = a.p;
    if (d == 0) return true;
    for (std::size_t g = 0; g < a.actions.size(); ++g) {
        if (char_poly(a.actions[g]) != char_poly(b.actions[g])) return false;
    }
    // Solve A_g X = X B_g for all g: unknown row vector x of length d^2 with
    // x[(r, s)] = X[r][s]; one matrix column per (generator, entry) equation.
    const std::size_t k = a.actions.size();
    FpMatrix system(d * d, static_cast<unsigned>(k * d * d), p);
    for (std::size_t g = 0; g < k; ++g) {
        const FpMatrix& ag = a.actions[g];
        const FpMatrix& bg = b.actions[g];
        const unsigned base = static_cast<unsigned>(g) * d * d;
        for (unsigned r = 0; r < d; ++r) {
            for (unsigned c = 0; c < d; ++c) {
                const unsigned eq = base + r * d + c;
                for (unsigned s = 0; s < d; ++s) {
                    // + A_g[r][s] X[s][c]
                    std::uint32_t cur = system.at(s * d + c, eq);
                    system.set(s * d + c, eq,
                               static_cast<std::uint32_t>(
                                   (cur + std::uint64_t(ag.at(r, s))) % p));
                    // - X[r][s] B_g[s][c]
                    cur = system.at(r * d + s, eq);
                    system.set(r * d + s, eq,
                               static_cast<std::uint32_t>(
                                   (cur + std::uint64_t(p - 1) * bg.at(s, c)) % p));
                }
            }
        }
    }
    auto solutions = nullspace_basis(system);
    if (solutions.empty()) return false;
    FpMatrix x(d, d, p);
    for (unsigned r = 0; r < d; ++r) {
        for (unsigned c = 0; c < d; ++c) x.set(r, c, solutions.front()[r * d + c]);
    }
    // For irreducible modules a nonzero intertwiner is invertible (Schur);
    // verify both properties outright.
    if (rank(x) != d) {
        throw verification_error("modules_isomorphic: singular intertwiner between "
                                 "irreducible modules");
    }
    for (std::size_t g = 0; g < k; ++g) {
        if (!(a.actions[g] * x == x * b.actions[g])) {
            throw verification_error("modules_isomorphic: intertwiner check failed");
        }
    }
    return true;
}

std::optional<GModule> faithful_irreducible(const PermutationGroup& G, std::uint32_t p,
                                            const Config& cfg) {
    auto factors = composition_factors(regular_module(G, p, cfg), cfg);
    for (const auto& f : factors) {  // already sorted by (dimension, fingerprint)
        if (is_faithful(f.module, cfg)) return f.module;
    }
    return std::nullopt;
}

}  // namespace grouplen
