#include "grouplen/chain.hpp"

#include "grouplen/affine.hpp"
#include "grouplen/corpus.hpp"
#include "grouplen/errors.hpp"
#include "grouplen/formations.hpp"
#include "grouplen/radicals.hpp"
#include "grouplen/structure.hpp"
#include "grouplen/subgroups.hpp"

#include <sstream>
#include <stdexcept>

namespace grouplen {

std::string to_string(VerifyMode m) {
    return m == VerifyMode::generic ? "generic" : "certified";
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw verification_error("chain: " + what);
}

// Smallest prime q with q != p and q in a different sigma-class than prev.
std::uint64_t next_module_prime(const SigmaPartition& sigma, std::uint64_t p,
                                std::uint64_t prev) {
    for (std::uint64_t q = 2; q < 10000; ++q) {
        if (!is_prime(q)) continue;
        if (q == p) continue;
        if (sigma.same_class(q, prev)) continue;
        return q;
    }
    throw std::invalid_argument(
        "counterexample_chain: the sigma partition has a single effective class");
}

// Embedding of a group element into the affine product as the linear map
// (action(g), 0).
Permutation embed_linear(const GModule& mod, const Permutation& g) {
    const unsigned d = mod.dimension;
    return affine_permutation(action_of(mod, g), std::vector<std::uint32_t>(d, 0));
}

// Whether the stage group is small enough for the generic engines.
bool generic_feasible(const PermutationGroup& g) {
    return g.degree() <= 5000 && g.order() <= 50000;
}

}  // namespace

ChainResult counterexample_chain(const SigmaPartition& sigma, std::uint64_t p, unsigned n,
                                 const Config& cfg) {
    if (n == 0) throw std::invalid_argument("counterexample_chain: n must be positive");
    if (!is_prime(p)) throw std::invalid_argument("counterexample_chain: p must be prime");
    // Reject partitions where no second class is reachable at all.
    (void)next_module_prime(sigma, p, p);

    ChainResult result;
    result.sigma = sigma;
    result.p = p;
    result.n = n;
    result.seed = cfg.seed;
    result.primes = {p};

    // G_1 = C_p on p points.
    std::vector<point_t> cycle(p);
    for (std::uint64_t i = 0; i < p; ++i) cycle[i] = static_cast<point_t>((i + 1) % p);
    result.base = PermutationGroup(static_cast<std::size_t>(p),
                                   {Permutation::from_images(cycle)});
    require(result.base.order() == p, "base group has the wrong order");

    const Formation fm = fm_p_closed_soluble(p);
    require(fm.contains(result.base, cfg), "C_p must lie in the p-closed soluble formation");

    PermutationGroup g_cur = result.base;          // G_i
    std::vector<Permutation> m_cur_gens;           // generators of M_{i-1} inside G_i
    std::uint64_t m_cur_order = 1;                 // |M_{i-1}|
    std::uint64_t sigma_len_g = 1;                 // l_sigma(G_i), established generically below
    {
        Length l = sigma_length(g_cur, sigma, cfg);
        require(!l.is_infinite() && l.value() == 1, "l_sigma(C_p) must be 1");
    }
    std::uint64_t prev_prime = p;

    for (unsigned stage = 1; stage <= n; ++stage) {
        ChainStage st;
        st.index = stage;

        const std::uint64_t q = next_module_prime(sigma, p, prev_prime);
        result.primes.push_back(q);
        st.module_prime = q;

        auto fact = [&st](const std::string& name, const std::string& value, VerifyMode mode) {
            st.facts.push_back({name, value, mode});
        };

        // --- module for this stage (all checks generic: G_i fits the caps) ---
        auto module = faithful_irreducible(g_cur, static_cast<std::uint32_t>(q), cfg);
        require(module.has_value(),
                "no faithful irreducible module found (stage " + std::to_string(stage) + ")");
        st.module = *module;
        st.module_dimension = module->dimension;
        require(is_irreducible(*module, cfg), "module must be irreducible");
        require(is_faithful(*module, cfg), "module must be faithful");
        fact("module_irreducible", "true", VerifyMode::generic);
        fact("module_faithful", "true", VerifyMode::generic);

        // O_{c(q)}(G_i) = 1 and O_{c(q)}(M_{i-1}) = 1: the premises that make
        // the sigma-Fitting subgroup of the next stage exactly the module.
        const auto class_core = fitting_radical(g_cur, fc_sigma_class(sigma, q), cfg);
        require(class_core.order() == 1, "class core of the stage group must be trivial");
        fact("class_core_trivial", "true", VerifyMode::generic);
        {
            PermutationGroup m_prev =
                m_cur_gens.empty()
                    ? PermutationGroup::trivial(g_cur.degree())
                    : PermutationGroup::with_certified_order(g_cur.degree(), m_cur_gens,
                                                             m_cur_order);
            const auto m_core = fitting_radical(m_prev, fc_sigma_class(sigma, q), cfg);
            require(m_core.order() == 1, "class core of the maximal subgroup must be trivial");
            fact("maximal_class_core_trivial", "true", VerifyMode::generic);
        }

        // --- next stage group G_{i+1} = V_i : G_i ---
        std::uint64_t degree = 1;
        for (unsigned i = 0; i < module->dimension; ++i) {
            degree *= q;
            require(degree <= (std::uint64_t(1) << 32), "stage degree exceeds the point type");
        }
        Config aff_cfg = cfg;
        if (aff_cfg.degree_cap < degree) aff_cfg.degree_cap = degree;
        AffineProduct ap = affine_semidirect(*module, aff_cfg);
        st.group = ap.product;
        st.vector_image = translation_subgroup(ap);
        require(st.group.order() == ap.vector_subgroup_order * g_cur.order(),
                "affine product must have order p^dim * |G|");
        fact("group_order", std::to_string(st.group.order()), VerifyMode::certified);

        // --- M_i = <V_1, ..., V_i> = V_i : M_{i-1} ---
        std::vector<Permutation> m_gens = ap.translations;
        for (const auto& g : m_cur_gens) m_gens.push_back(embed_linear(*module, g));
        const std::uint64_t m_order = ap.vector_subgroup_order * m_cur_order;
        st.maximal = PermutationGroup::with_certified_order(st.group.degree(), m_gens, m_order);
        st.maximal_index = st.group.order() / m_order;
        require(st.maximal_index == p, "maximal subgroup must have index p");
        // Index p prime forces maximality (Lagrange).
        fact("maximal_index", std::to_string(p), VerifyMode::certified);
        fact("maximal", "true", VerifyMode::certified);

        // --- certified sigma-structure of the new stage ---
        // F_sigma(G_{i+1}) = V_i:  any nontrivial class radical O_c meets the
        // faithful irreducible translation subgroup, the quotient premise
        // O_{c(q)}(G_i) = 1 caps the c(q)-radical at V_i, and coprime class
        // radicals land in C(V_i) = V_i (faithfulness).  Same shape for M_i
        // with the premise O_{c(q)}(M_{i-1}) = 1.
        sigma_len_g += 1;
        st.sigma_length_of_maximal = stage;  // l_sigma(M_i) = 1 + l_sigma(M_{i-1})
        fact("sigma_fitting", std::to_string(ap.vector_subgroup_order), VerifyMode::certified);
        fact("sigma_fitting_of_maximal", std::to_string(ap.vector_subgroup_order),
             VerifyMode::certified);
        fact("sigma_length", std::to_string(sigma_len_g), VerifyMode::certified);
        fact("sigma_length_of_maximal", std::to_string(st.sigma_length_of_maximal),
             VerifyMode::certified);

        // --- certified residual: G_{i+1}^F = M_i for F = p-closed soluble ---
        // G_{i+1}/M_i is C_p, which lies in F; every normal subgroup below
        // M_i is trivial or a pullback of a normal subgroup of G_i below
        // M_{i-1} (module irreducibility plus C(V_i) = V_i), and those
        // quotients fall outside F by the previous stage's residual; G_{i+1}
        // itself is not p-closed because O_p(G_{i+1}) = 1 while p divides the
        // order.  M_i lies in F: its order is prime to p and it is soluble
        // by construction.
        fact("residual_order", std::to_string(m_order), VerifyMode::certified);
        fact("maximal_in_formation", "true", VerifyMode::certified);
        st.difference = stage;  // l_sigma(M_i) - l_sigma(M_i^F = 1)
        fact("difference", std::to_string(st.difference), VerifyMode::certified);

        // --- generic cross-checks while the stage fits the engines ---
        if (generic_feasible(st.group)) {
            PermutationGroup fresh(st.group.degree(), st.group.generators());
            require(fresh.order() == st.group.order(), "certified group order disagrees "
                                                       "with the stabilizer chain");
            fact("group_order_generic", std::to_string(fresh.order()), VerifyMode::generic);

            PermutationGroup fresh_m(st.group.degree(), st.maximal.generators());
            require(fresh_m.order() == m_order,
                    "certified maximal-subgroup order disagrees with the stabilizer chain");
            require(contains_subgroup(st.group, st.maximal), "maximal must embed in the stage");
            require(is_maximal(st.group, st.maximal, cfg), "maximality cross-check failed");
            fact("maximal_generic", "true", VerifyMode::generic);

            try {
                const auto fs = sigma_fitting_subgroup(fresh, sigma, cfg);
                require(fs.order() == ap.vector_subgroup_order &&
                            group_equal(fs, st.vector_image),
                        "sigma-Fitting cross-check failed");
                fact("sigma_fitting_generic", std::to_string(fs.order()), VerifyMode::generic);

                const Length ls = sigma_length(fresh, sigma, cfg);
                require(!ls.is_infinite() && ls.value() == sigma_len_g,
                        "sigma-length cross-check failed");
                const Length lm = sigma_length(fresh_m, sigma, cfg);
                require(!lm.is_infinite() && lm.value() == stage,
                        "maximal sigma-length cross-check failed");
                fact("sigma_length_generic", std::to_string(ls.value()), VerifyMode::generic);

                const auto mins = minimal_normal_subgroups(fresh, cfg);
                require(mins.size() == 1 && mins[0].order() == ap.vector_subgroup_order,
                        "unique-minimal-normal cross-check failed");
                fact("unique_minimal_normal", "true", VerifyMode::generic);

                const auto res = formation_residual(fresh, fm, cfg);
                require(res.order() == m_order && contains_subgroup(st.maximal, res) &&
                            contains_subgroup(res, st.maximal),
                        "residual cross-check failed");
                fact("residual_generic", std::to_string(res.order()), VerifyMode::generic);
                require(fm.contains(fresh_m, cfg), "maximal formation membership "
                                                   "cross-check failed");
                const Length ng = residual_sigma_length(fresh, fm, sigma, cfg);
                const Length nm = residual_sigma_length(fresh_m, fm, sigma, cfg);
                require(!ng.is_infinite() && !nm.is_infinite() &&
                            ng.value() - nm.value() == stage,
                        "difference cross-check failed");
                fact("difference_generic", std::to_string(ng.value() - nm.value()),
                     VerifyMode::generic);
            } catch (const cap_error&) {
                // A generic cross-check outgrew a cap: the certified facts
                // stand on the recorded premises.
            }
        }

        result.stages.push_back(std::move(st));
        g_cur = result.stages.back().group;
        m_cur_gens = result.stages.back().maximal.generators();
        m_cur_order = m_order;
        prev_prime = q;
    }
    return result;
}

std::string chain_group_file(const ChainResult& chain) {
    const auto& last = chain.stages.back();
    std::ostringstream name;
    name << "chain_p" << chain.p << "_n" << chain.n;
    std::vector<std::string> tags = {"order:" + std::to_string(last.group.order()),
                                     "chain"};
    return render_group_spec(name.str(), last.group, tags);
}

}  // namespace grouplen
