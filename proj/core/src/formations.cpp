#include "grouplen/formations.hpp"

#include "grouplen/errors.hpp"
#include "grouplen/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace grouplen {

Formation fm_nilpotent() {
    return Formation{"N", [](const PermutationGroup& g, const Config&) {
        return is_nilpotent(g);
    }};
}

Formation fm_soluble() {
    return Formation{"Sol", [](const PermutationGroup& g, const Config&) {
        return is_soluble(g);
    }};
}

Formation fm_sigma_nilpotent(const SigmaPartition& sigma) {
    return Formation{"Nsigma[" + sigma.to_string() + "]",
                     [sigma](const PermutationGroup& g, const Config& cfg) {
                         return is_sigma_nilpotent(g, sigma, cfg);
                     }};
}

Formation fm_p_closed_soluble(std::uint64_t p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("fm_p_closed_soluble: p must be prime");
    }
    return Formation{"PClosedSol:" + std::to_string(p),
                     [p](const PermutationGroup& g, const Config& cfg) {
                         if (!is_soluble(g)) return false;
                         // p-closed: the p-core is a full Sylow p-subgroup.
                         return p_core(g, p, cfg).order() == p_part(g.order(), p);
                     }};
}

Formation fm_p_closed_soluble_bounded(std::uint64_t p, std::uint64_t h) {
    if (!is_prime(p)) {
        throw std::invalid_argument("fm_p_closed_soluble_bounded: p must be prime");
    }
    return Formation{
        "PClosedSolH:" + std::to_string(p) + "," + std::to_string(h),
        [p, h](const PermutationGroup& g, const Config& cfg) {
            if (!is_soluble(g)) return false;
            if (p_core(g, p, cfg).order() != p_part(g.order(), p)) return false;
            Length height = fitting_height(g, cfg);
            return !height.is_infinite() && height.value() <= h;
        }};
}

PermutationGroup formation_residual(const PermutationGroup& G, const Formation& fm,
                                    const Config& cfg) {
    auto normals = normal_subgroups(G, cfg);
    std::vector<const PermutationGroup*> candidates;
    for (const auto& n : normals) {
        if (n.order() == G.order()) {
            // G/G is trivial and the trivial group lies in every formation.
            candidates.push_back(&n);
            continue;
        }
        auto q = quotient(G, n, cfg);
        if (fm.contains(q.carrier(), cfg)) candidates.push_back(&n);
    }
    if (candidates.empty()) {
        throw verification_error("formation_residual: no normal subgroup has a quotient in " +
                                 fm.name);
    }
    const PermutationGroup* best = candidates.front();
    for (const auto* c : candidates) {
        if (c->order() < best->order()) best = c;
    }
    // The residual must be the unique minimum and lie inside every candidate;
    // both properties are checked rather than assumed.
    for (const auto* c : candidates) {
        if (c != best && c->order() == best->order()) {
            throw verification_error("formation_residual: minimal candidate is not unique for " +
                                     fm.name);
        }
        if (!contains_subgroup(*c, *best)) {
            throw verification_error(
                "formation_residual: minimal candidate is not contained in all candidates for " +
                fm.name);
        }
    }
    return *best;
}

Length residual_fitting_height(const PermutationGroup& G, const Formation& fm,
                               const Config& cfg) {
    return fitting_height(formation_residual(G, fm, cfg), cfg);
}

Length residual_sigma_length(const PermutationGroup& G, const Formation& fm,
                             const SigmaPartition& sigma, const Config& cfg) {
    return sigma_length(formation_residual(G, fm, cfg), sigma, cfg);
}

namespace {

std::uint64_t parse_prime_argument(const std::string& text, const std::string& where) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw parse_error(where + ": expected a prime number, got '" + text + "'", 0, 0);
    }
    if (pos != text.size() || !is_prime(value)) {
        throw parse_error(where + ": expected a prime number, got '" + text + "'", 0, 0);
    }
    return value;
}

}  // namespace

Formation parse_formation(const std::string& text, const SigmaPartition& sigma) {
    if (text == "N") return fm_nilpotent();
    if (text == "Sol") return fm_soluble();
    if (text == "Nsigma") return fm_sigma_nilpotent(sigma);
    const std::string pcs = "PClosedSol:";
    const std::string pcsh = "PClosedSolH:";
    if (text.rfind(pcsh, 0) == 0) {
        std::string args = text.substr(pcsh.size());
        auto comma = args.find(',');
        if (comma == std::string::npos) {
            throw parse_error("PClosedSolH expects <prime>,<height>", 0, 0);
        }
        std::uint64_t p = parse_prime_argument(args.substr(0, comma), "PClosedSolH");
        std::string htext = args.substr(comma + 1);
        std::size_t pos = 0;
        unsigned long long h = 0;
        try {
            h = std::stoull(htext, &pos);
        } catch (const std::exception&) {
            throw parse_error("PClosedSolH: expected a height bound, got '" + htext + "'", 0, 0);
        }
        if (pos != htext.size()) {
            throw parse_error("PClosedSolH: expected a height bound, got '" + htext + "'", 0, 0);
        }
        return fm_p_closed_soluble_bounded(p, h);
    }
    if (text.rfind(pcs, 0) == 0) {
        return fm_p_closed_soluble(parse_prime_argument(text.substr(pcs.size()), "PClosedSol"));
    }
    throw parse_error("unknown formation '" + text + "'", 0, 0);
}

std::vector<std::string> registered_formation_names() {
    return {"N", "Sol", "Nsigma", "PClosedSol:<p>", "PClosedSolH:<p>,<h>"};
}

}  // namespace grouplen
