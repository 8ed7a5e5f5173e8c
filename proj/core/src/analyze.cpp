#include "grouplen/analyze.hpp"

#include "grouplen/errors.hpp"
#include "grouplen/formations.hpp"
#include "grouplen/radicals.hpp"
#include "grouplen/structure.hpp"

namespace grouplen {

namespace {

// Runs a field computation, downgrading resource-cap violations to a
// {"skipped": "<cap>"} marker so one oversized field never voids a report.
template <typename Fn>
json guarded(Fn&& fn) {
    try {
        return json(fn());
    } catch (const cap_error& e) {
        json j;
        j["skipped"] = e.cap_name();
        return j;
    }
}

json chief_series_json(const PermutationGroup& G, const Config& cfg) {
    return guarded([&] {
        const ChiefSeries series = chief_series(G, cfg);
        json j;
        j["length"] = series.factors.size();
        json factors = json::array();
        for (const auto& f : series.factors) {
            json fj;
            fj["order"] = f.order;
            fj["abelian"] = f.abelian;
            if (f.abelian) {
                fj["prime"] = f.prime;
            } else {
                fj["component_order"] = f.component_order;
                fj["component_count"] = f.component_count;
            }
            factors.push_back(std::move(fj));
        }
        j["factors"] = std::move(factors);
        return j;
    });
}

json radicals_json(const PermutationGroup& G, const SigmaPartition& sigma,
                   const std::vector<std::uint64_t>& primes, const Config& cfg) {
    json j;
    j["F"] = guarded([&] { return fitting_subgroup(G, cfg).order(); });
    j["Fstar"] = guarded([&] { return generalized_fitting_subgroup(G, cfg).order(); });
    j["Fsigma"] = guarded([&] { return sigma_fitting_subgroup(G, sigma, cfg).order(); });
    j["RadSol"] = guarded([&] { return soluble_radical(G, cfg).order(); });
    json op, radpsol;
    for (const auto p : primes) {
        const std::string key = std::to_string(p);
        op[key] = guarded([&] { return p_core(G, p, cfg).order(); });
        radpsol[key] = guarded([&] { return p_soluble_radical(G, p, cfg).order(); });
    }
    j["Op"] = std::move(op);
    j["RadPSol"] = std::move(radpsol);
    return j;
}

json lengths_json(const PermutationGroup& G, const SigmaPartition& sigma,
                  const std::vector<std::uint64_t>& primes, const Config& cfg) {
    json j;
    j["h"] = guarded([&] { return length_to_json(fitting_height(G, cfg)); });
    j["hstar"] = guarded([&] { return length_to_json(generalized_fitting_height(G, cfg)); });
    json lp;
    for (const auto p : primes) {
        lp[std::to_string(p)] =
            guarded([&] { return length_to_json(lambda_p_length(G, p, cfg)); });
    }
    j["lambda_p"] = std::move(lp);
    j["lambda"] = guarded([&] { return length_to_json(lambda_length(G, cfg)); });
    j["lsigma"] = guarded([&] { return length_to_json(sigma_length(G, sigma, cfg)); });
    return j;
}

json predicates_json(const PermutationGroup& G, const SigmaPartition& sigma,
                     const std::vector<std::uint64_t>& primes, const Config& cfg) {
    return guarded([&] {
        const PredicateReport rep = structural_predicates(G, sigma, primes, cfg);
        json j;
        j["soluble"] = rep.soluble;
        j["nilpotent"] = rep.nilpotent;
        json ps;
        for (const auto& [p, val] : rep.p_soluble) ps[std::to_string(p)] = val;
        j["p_soluble"] = std::move(ps);
        j["sigma_soluble"] = rep.sigma_soluble;
        j["sigma_nilpotent"] = rep.sigma_nilpotent;
        j["nonabelian_semisimple"] = rep.nonabelian_semisimple;
        return j;
    });
}

json formations_json(const PermutationGroup& G, const SigmaPartition& sigma,
                     const std::vector<std::string>& names, const Config& cfg) {
    json j;
    for (const auto& name : names) {
        const Formation fm = parse_formation(name, sigma);
        json fj;
        fj["contains"] = guarded([&] { return fm.contains(G, cfg); });
        try {
            const PermutationGroup residual = formation_residual(G, fm, cfg);
            fj["residual_order"] = residual.order();
            fj["n_F"] = guarded([&] { return length_to_json(fitting_height(residual, cfg)); });
            fj["n_sigma"] =
                guarded([&] { return length_to_json(sigma_length(residual, sigma, cfg)); });
        } catch (const cap_error& e) {
            json skipped;
            skipped["skipped"] = e.cap_name();
            fj["residual_order"] = skipped;
            fj["n_F"] = skipped;
            fj["n_sigma"] = skipped;
        }
        j[name] = std::move(fj);
    }
    return j;
}

}  // namespace

json analyze_group(const GroupSpec& spec, const SigmaPartition& sigma,
                   const std::vector<std::uint64_t>& primes,
                   const std::vector<std::string>& formation_names,
                   const Config& cfg) {
    json j;
    j["name"] = spec.name;
    j["degree"] = spec.degree;
    j["order"] = spec.group.order();
    j["tags"] = spec.tags;
    j["chief_series"] = chief_series_json(spec.group, cfg);
    j["radicals"] = radicals_json(spec.group, sigma, primes, cfg);
    j["lengths"] = lengths_json(spec.group, sigma, primes, cfg);
    j["predicates"] = predicates_json(spec.group, sigma, primes, cfg);
    j["formations"] = formations_json(spec.group, sigma, formation_names, cfg);
    return j;
}

json analyze_corpus(const std::vector<GroupSpec>& specs, const SigmaPartition& sigma,
                    const std::vector<std::uint64_t>& primes,
                    const std::vector<std::string>& formation_names,
                    const Config& cfg) {
    json j;
    j["tool_version"] = tool_version();
    j["config"] = config_to_json(cfg);
    j["sigma"] = sigma.to_string();
    j["primes"] = primes;
    j["formations"] = formation_names;
    json groups = json::array();
    for (const auto& spec : specs) {
        groups.push_back(analyze_group(spec, sigma, primes, formation_names, cfg));
    }
    j["groups"] = std::move(groups);
    json summary;
    summary["group_count"] = specs.size();
    j["summary"] = std::move(summary);
    return j;
}

}  // namespace grouplen
