#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grouplen/config.hpp"
#include "grouplen/group.hpp"
#include "grouplen/sigma.hpp"

namespace grouplen {

// Length value that may be "infinite" (series does not terminate at G).
class Length {
public:
    static Length finite(std::uint64_t v) { return Length(v, false); }
    static Length infinite() { return Length(0, true); }
    bool is_infinite() const { return infinite_; }
    std::uint64_t value() const;  // throws std::logic_error when infinite
    std::string to_string() const;
    friend bool operator==(const Length&, const Length&) = default;

private:
    Length(std::uint64_t v, bool inf) : value_(v), infinite_(inf) {}
    std::uint64_t value_ = 0;
    bool infinite_ = false;
};

// A Fitting class is identified by a name (for reports) plus a membership
// predicate; the radical engine only ever evaluates the predicate on normal
// closures of single class representatives and on their joins.
struct FittingClass {
    std::string name;
    std::function<bool(const PermutationGroup&, const Config&)> contains;
};

// Built-in Fitting classes.
FittingClass fc_nilpotent();                       // F(G) radical
FittingClass fc_p_group(std::uint64_t p);          // O_p(G)
FittingClass fc_soluble();                         // soluble radical
FittingClass fc_p_soluble(std::uint64_t p);        // p-soluble radical
FittingClass fc_sigma_nilpotent(const SigmaPartition& sigma);  // F_sigma(G)
// sigma_i-groups for the class containing the given prime: O_{sigma_i}(G).
FittingClass fc_sigma_class(const SigmaPartition& sigma, std::uint64_t member_prime);
// Groups whose composition factors all have order in the given set (each
// order names the simple group up to the ambiguities far beyond our caps).
FittingClass fc_oj(std::vector<std::uint64_t> allowed_simple_orders);

// Largest normal subgroup of G lying in the class: the join of those
// <<g^G>> (g a class representative) that lie in the class.  For Fitting
// classes this equals the class radical.
PermutationGroup fitting_radical(const PermutationGroup& G,
                                 const FittingClass& cls, const Config& cfg);

// Named radicals.
PermutationGroup fitting_subgroup(const PermutationGroup& G, const Config& cfg);
PermutationGroup p_core(const PermutationGroup& G, std::uint64_t p,
                        const Config& cfg);
PermutationGroup soluble_radical(const PermutationGroup& G, const Config& cfg);
PermutationGroup p_soluble_radical(const PermutationGroup& G, std::uint64_t p,
                                   const Config& cfg);
PermutationGroup sigma_fitting_subgroup(const PermutationGroup& G,
                                        const SigmaPartition& sigma,
                                        const Config& cfg);

// Generalized Fitting subgroup F*(G) = F(G) E(G); computed as the preimage
// of soc(C F/F) where C = C_G(F(G)).
PermutationGroup generalized_fitting_subgroup(const PermutationGroup& G,
                                              const Config& cfg);

// A "functorial" assigns to every group a normal subgroup, compatibly with
// the quotient maps used by the series builder.  Instances are created by
// the registry below or composed with upper_product.
class Functorial {
public:
    Functorial() = default;
    Functorial(std::string name,
               std::function<PermutationGroup(const PermutationGroup&,
                                              const Config&)> eval);
    const std::string& name() const;
    PermutationGroup operator()(const PermutationGroup& G, const Config& cfg) const;
    bool valid() const { return static_cast<bool>(eval_); }

private:
    std::string name_;
    std::function<PermutationGroup(const PermutationGroup&, const Config&)> eval_;
};

// (outer * inner)(G): evaluate R = outer(G), then pull back inner(G/R).
Functorial upper_product(const Functorial& outer, const Functorial& inner);

struct GammaSeries {
    std::vector<PermutationGroup> terms;  // ascending from the trivial group
    Length length = Length::infinite();   // finite k when terms.back() = G
    // Index at which the series stopped growing below G (series stalled);
    // unset when the series reached G.
    std::optional<unsigned> stalled_at;
};

// Ascending series T_0 = 1, T_{i+1}/T_i = gamma(G/T_i); stops when it
// reaches G (finite length = number of strictly increasing steps) or stalls
// below G (infinite length, stalled_at set).  Exceeding
// cfg.max_series_steps without either outcome is a resource error
// (cap_error("max_series_steps")), never a silent infinite verdict.
GammaSeries gamma_series(const PermutationGroup& G, const Functorial& gamma,
                         const Config& cfg);

// Registry: resolves names "F", "Fstar", "Fsigma", "Osigma:<p>" (the class
// containing prime p), "Op:<p>", "RadSol", "RadPSol:<p>", "OJ:<o1,o2,...>",
// and '*'-joined upper products written left-to-right bottom-up, e.g.
// "RadPSol:2*Fstar*RadPSol:2".  sigma supplies the partition for the
// sigma-dependent names.  Throws parse_error for unknown names.
Functorial parse_functorial(const std::string& text, const SigmaPartition& sigma);
std::vector<std::string> registered_functorial_names();

struct NamedLengths {
    Length fitting_height = Length::infinite();      // h  (nilpotent series)
    Length generalized_height = Length::infinite();  // h* (F* series)
    std::map<std::uint64_t, Length> lambda_p;        // per requested prime
    Length lambda = Length::infinite();              // lambda_2
    Length sigma_length = Length::infinite();        // l_sigma
};

// h(G): length of the F-series (infinite iff G is not soluble).
Length fitting_height(const PermutationGroup& G, const Config& cfg);
// h*(G): length of the F*-series (always finite for nontrivial input).
Length generalized_fitting_height(const PermutationGroup& G, const Config& cfg);
// lambda_p(G): 0 when G is p-soluble, else the length of the
// (RadPSol:p * Fstar * RadPSol:p)-series.
Length lambda_p_length(const PermutationGroup& G, std::uint64_t p,
                       const Config& cfg);
// lambda = lambda_2.
Length lambda_length(const PermutationGroup& G, const Config& cfg);
// l_sigma(G): length of the F_sigma-series (infinite iff G is not
// sigma-soluble).
Length sigma_length(const PermutationGroup& G, const SigmaPartition& sigma,
                    const Config& cfg);

NamedLengths named_lengths(const PermutationGroup& G, const SigmaPartition& sigma,
                           const std::vector<std::uint64_t>& primes,
                           const Config& cfg);

}  // namespace grouplen
