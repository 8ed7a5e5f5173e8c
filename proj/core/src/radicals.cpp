#include "grouplen/radicals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "grouplen/errors.hpp"
#include "grouplen/structure.hpp"

namespace grouplen {

std::uint64_t Length::value() const {
    if (infinite_)
        throw std::logic_error("arithmetic on an infinite length");
    return value_;
}

std::string Length::to_string() const {
    return infinite_ ? std::string("infinite") : std::to_string(value_);
}

// ---------------------------------------------------------------------------
// Fitting classes

FittingClass fc_nilpotent() {
    return {"N", [](const PermutationGroup& G, const Config&) {
                return is_nilpotent(G);
            }};
}

FittingClass fc_p_group(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("fc_p_group: p must be prime");
    return {"Ep:" + std::to_string(p),
            [p](const PermutationGroup& G, const Config&) {
                return p_part(G.order(), p) == G.order();
            }};
}

FittingClass fc_soluble() {
    return {"Sol", [](const PermutationGroup& G, const Config&) {
                return is_soluble(G);
            }};
}

FittingClass fc_p_soluble(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("fc_p_soluble: p must be prime");
    return {"PSol:" + std::to_string(p),
            [p](const PermutationGroup& G, const Config& cfg) {
                return is_p_soluble(G, p, cfg);
            }};
}

FittingClass fc_sigma_nilpotent(const SigmaPartition& sigma) {
    return {"Nsigma[" + sigma.to_string() + "]",
            [sigma](const PermutationGroup& G, const Config& cfg) {
                return is_sigma_nilpotent(G, sigma, cfg);
            }};
}

FittingClass fc_sigma_class(const SigmaPartition& sigma, std::uint64_t member_prime) {
    if (!is_prime(member_prime))
        throw std::invalid_argument("fc_sigma_class: member prime required");
    std::int64_t id = sigma.class_id(member_prime);
    return {"Esigma:" + std::to_string(member_prime),
            [sigma, id](const PermutationGroup& G, const Config&) {
                return sigma.is_class_number(G.order(), id);
            }};
}

FittingClass fc_oj(std::vector<std::uint64_t> allowed_simple_orders) {
    std::sort(allowed_simple_orders.begin(), allowed_simple_orders.end());
    std::string name = "OJ:";
    for (std::size_t i = 0; i < allowed_simple_orders.size(); ++i) {
        if (i) name += ',';
        name += std::to_string(allowed_simple_orders[i]);
    }
    return {name, [orders = std::move(allowed_simple_orders)](
                      const PermutationGroup& G, const Config& cfg) {
                for (const ChiefFactor& f : chief_series(G, cfg).factors) {
                    std::uint64_t comp = f.abelian ? f.prime : f.component_order;
                    if (!std::binary_search(orders.begin(), orders.end(), comp))
                        return false;
                }
                return true;
            }};
}

// ---------------------------------------------------------------------------
// The radical engine

PermutationGroup fitting_radical(const PermutationGroup& G,
                                 const FittingClass& cls, const Config& cfg) {
    // g lies in the radical iff its conjugacy-class closure is in the class,
    // so the radical is the join of the qualifying class closures.
    PermutationGroup R = PermutationGroup::trivial(G.degree());
    for (const ConjugacyClass& c : conjugacy_classes(G, cfg)) {
        if (c.representative.is_identity()) continue;
        if (R.contains(c.representative)) continue;
        PermutationGroup closure = normal_closure(G, {c.representative});
        if (cls.contains(closure, cfg)) R = join(R, closure);
    }
    return R;
}

PermutationGroup fitting_subgroup(const PermutationGroup& G, const Config& cfg) {
    return fitting_radical(G, fc_nilpotent(), cfg);
}

PermutationGroup p_core(const PermutationGroup& G, std::uint64_t p,
                        const Config& cfg) {
    return fitting_radical(G, fc_p_group(p), cfg);
}

PermutationGroup soluble_radical(const PermutationGroup& G, const Config& cfg) {
    return fitting_radical(G, fc_soluble(), cfg);
}

PermutationGroup p_soluble_radical(const PermutationGroup& G, std::uint64_t p,
                                   const Config& cfg) {
    return fitting_radical(G, fc_p_soluble(p), cfg);
}

PermutationGroup sigma_fitting_subgroup(const PermutationGroup& G,
                                        const SigmaPartition& sigma,
                                        const Config& cfg) {
    return fitting_radical(G, fc_sigma_nilpotent(sigma), cfg);
}

PermutationGroup generalized_fitting_subgroup(const PermutationGroup& G,
                                              const Config& cfg) {
    PermutationGroup F = fitting_subgroup(G, cfg);
    PermutationGroup C = centralizer(G, F, cfg.element_cap);
    QuotientGroup q = quotient(G, F, cfg);
    PermutationGroup H = q.project_subgroup(join(C, F));
    return q.pull_back(socle(H, cfg));
}

// ---------------------------------------------------------------------------
// Functorials and series

Functorial::Functorial(std::string name,
                       std::function<PermutationGroup(const PermutationGroup&,
                                                      const Config&)> eval)
    : name_(std::move(name)), eval_(std::move(eval)) {}

const std::string& Functorial::name() const { return name_; }

PermutationGroup Functorial::operator()(const PermutationGroup& G,
                                        const Config& cfg) const {
    if (!eval_) throw std::logic_error("empty functorial");
    return eval_(G, cfg);
}

Functorial upper_product(const Functorial& outer, const Functorial& inner) {
    return Functorial(
        outer.name() + "*" + inner.name(),
        [outer, inner](const PermutationGroup& G, const Config& cfg) {
            PermutationGroup R = outer(G, cfg);
            QuotientGroup q = quotient(G, R, cfg);
            return q.pull_back(inner(q.carrier(), cfg));
        });
}

GammaSeries gamma_series(const PermutationGroup& G, const Functorial& gamma,
                         const Config& cfg) {
    GammaSeries series;
    series.terms.push_back(PermutationGroup::trivial(G.degree()));
    for (std::uint64_t step = 0; step <= cfg.max_series_steps; ++step) {
        const PermutationGroup& T = series.terms.back();
        if (T.order() == G.order()) {
            series.length =
                Length::finite(static_cast<std::uint64_t>(series.terms.size()) - 1);
            return series;
        }
        QuotientGroup q = quotient(G, T, cfg);
        PermutationGroup next = q.pull_back(gamma(q.carrier(), cfg));
        if (next.order() == T.order()) {
            series.length = Length::infinite();
            series.stalled_at = static_cast<unsigned>(series.terms.size()) - 1;
            return series;
        }
        series.terms.push_back(std::move(next));
    }
    throw cap_error("max_series_steps", cfg.max_series_steps,
                    cfg.max_series_steps + 1);
}

namespace {

Functorial radical_functorial(std::string name, FittingClass cls) {
    return Functorial(std::move(name),
                      [cls = std::move(cls)](const PermutationGroup& G,
                                             const Config& cfg) {
                          return fitting_radical(G, cls, cfg);
                      });
}

std::uint64_t parse_prime_arg(const std::string& token, const std::string& text) {
    std::size_t colon = token.find(':');
    if (colon == std::string::npos || colon + 1 == token.size())
        throw parse_error("functorial '" + token + "' needs a prime argument", 1,
                          text.find(token) + 1);
    std::uint64_t p = 0;
    try {
        p = std::stoull(token.substr(colon + 1));
    } catch (const std::exception&) {
        throw parse_error("bad prime in '" + token + "'", 1, text.find(token) + 1);
    }
    if (!is_prime(p))
        throw parse_error("'" + token + "': " + std::to_string(p) + " is not prime",
                          1, text.find(token) + 1);
    return p;
}

Functorial parse_one_functorial(const std::string& token, const std::string& text,
                                const SigmaPartition& sigma) {
    if (token == "F") return radical_functorial("F", fc_nilpotent());
    if (token == "Fstar")
        return Functorial("Fstar", [](const PermutationGroup& G, const Config& cfg) {
            return generalized_fitting_subgroup(G, cfg);
        });
    if (token == "Fsigma")
        return radical_functorial("Fsigma", fc_sigma_nilpotent(sigma));
    if (token == "RadSol") return radical_functorial("RadSol", fc_soluble());
    if (token.rfind("Op:", 0) == 0)
        return radical_functorial(token, fc_p_group(parse_prime_arg(token, text)));
    if (token.rfind("RadPSol:", 0) == 0)
        return radical_functorial(token, fc_p_soluble(parse_prime_arg(token, text)));
    if (token.rfind("Osigma:", 0) == 0)
        return radical_functorial(
            token, fc_sigma_class(sigma, parse_prime_arg(token, text)));
    if (token.rfind("OJ:", 0) == 0) {
        std::vector<std::uint64_t> orders;
        std::stringstream ss(token.substr(3));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                orders.push_back(std::stoull(item));
            } catch (const std::exception&) {
                throw parse_error("bad order list in '" + token + "'", 1,
                                  text.find(token) + 1);
            }
        }
        if (orders.empty())
            throw parse_error("'OJ:' needs at least one order", 1,
                              text.find(token) + 1);
        return radical_functorial(token, fc_oj(std::move(orders)));
    }
    throw parse_error("unknown functorial '" + token + "'", 1,
                      text.find(token) + 1);
}

}  // namespace

Functorial parse_functorial(const std::string& text, const SigmaPartition& sigma) {
    if (text.empty()) throw parse_error("empty functorial expression", 1, 1);
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (true) {
        std::size_t star = text.find('*', start);
        if (star == std::string::npos) {
            tokens.push_back(text.substr(start));
            break;
        }
        tokens.push_back(text.substr(start, star - start));
        start = star + 1;
    }
    // Left-to-right composition is bottom-up: the leftmost functorial is
    // evaluated first.
    Functorial result = parse_one_functorial(tokens[0], text, sigma);
    for (std::size_t i = 1; i < tokens.size(); ++i)
        result = upper_product(result, parse_one_functorial(tokens[i], text, sigma));
    return result;
}

std::vector<std::string> registered_functorial_names() {
    return {"F",      "Fstar",      "Fsigma",           "Osigma:<p>",
            "Op:<p>", "RadSol",     "RadPSol:<p>",      "OJ:<o1,o2,...>"};
}

// ---------------------------------------------------------------------------
// Named lengths

Length fitting_height(const PermutationGroup& G, const Config& cfg) {
    return gamma_series(G, parse_functorial("F", SigmaPartition()), cfg).length;
}

Length generalized_fitting_height(const PermutationGroup& G, const Config& cfg) {
    return gamma_series(G, parse_functorial("Fstar", SigmaPartition()), cfg).length;
}

Length lambda_p_length(const PermutationGroup& G, std::uint64_t p,
                       const Config& cfg) {
    if (is_p_soluble(G, p, cfg)) return Length::finite(0);
    std::string rho = "RadPSol:" + std::to_string(p);
    Functorial gamma =
        parse_functorial(rho + "*Fstar*" + rho, SigmaPartition());
    return gamma_series(G, gamma, cfg).length;
}

Length lambda_length(const PermutationGroup& G, const Config& cfg) {
    return lambda_p_length(G, 2, cfg);
}

Length sigma_length(const PermutationGroup& G, const SigmaPartition& sigma,
                    const Config& cfg) {
    return gamma_series(G, parse_functorial("Fsigma", sigma), cfg).length;
}

NamedLengths named_lengths(const PermutationGroup& G, const SigmaPartition& sigma,
                           const std::vector<std::uint64_t>& primes,
                           const Config& cfg) {
    NamedLengths lengths;
    lengths.fitting_height = fitting_height(G, cfg);
    lengths.generalized_height = generalized_fitting_height(G, cfg);
    for (std::uint64_t p : primes)
        lengths.lambda_p.emplace(p, lambda_p_length(G, p, cfg));
    lengths.lambda = lambda_length(G, cfg);
    lengths.sigma_length = sigma_length(G, sigma, cfg);
    return lengths;
}

}  // namespace grouplen
