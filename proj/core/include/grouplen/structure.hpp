#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grouplen/config.hpp"
#include "grouplen/group.hpp"
#include "grouplen/sigma.hpp"

namespace grouplen {

struct ConjugacyClass {
    Permutation representative;  // lex-smallest element of the class
    std::vector<Permutation> elements;
};

// Classes ordered by (size, representative).  Throws cap_error("element_cap")
// when |G| exceeds the cap.
std::vector<ConjugacyClass> conjugacy_classes(const PermutationGroup& G,
                                              const Config& cfg);

// G/N presented as a faithful permutation group.
//
// For nontrivial N the carrier is the right-coset action of G on N's cosets
// (a regular action of degree [G:N]); for trivial N the carrier is G itself
// and project/pull_back are identity maps.  Projection is a homomorphism
// onto the carrier with kernel N; pull_back inverts it on subgroups.
class QuotientGroup {
public:
    const PermutationGroup& group() const;    // G
    const PermutationGroup& kernel() const;   // N
    const PermutationGroup& carrier() const;  // faithful image of G/N

    Permutation project(const Permutation& g) const;
    PermutationGroup project_subgroup(const PermutationGroup& H) const;
    // Preimage in G of a subgroup S of the carrier; |pull_back(S)| = |N|*|S|.
    PermutationGroup pull_back(const PermutationGroup& S) const;

private:
    friend QuotientGroup quotient(const PermutationGroup&, const PermutationGroup&,
                                  const Config&);
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// Throws std::invalid_argument if N is not normal in G and
// cap_error("degree_cap") when the index exceeds the degree cap.
QuotientGroup quotient(const PermutationGroup& G, const PermutationGroup& N,
                       const Config& cfg);

// All normal subgroups: join-closure of the conjugacy-class closures.
// Sorted by (order, canonical element key).  Caps: element_cap, class_cap.
std::vector<PermutationGroup> normal_subgroups(const PermutationGroup& G,
                                               const Config& cfg);

// Minimal elements of { <<g^G>> : g a nontrivial class representative }.
std::vector<PermutationGroup> minimal_normal_subgroups(const PermutationGroup& G,
                                                       const Config& cfg);

// Join of the minimal normal subgroups (trivial group for G = 1).
PermutationGroup socle(const PermutationGroup& G, const Config& cfg);

struct ChiefFactor {
    std::uint64_t order = 1;
    bool abelian = true;
    std::uint64_t prime = 0;            // set when the factor is a p-group
    std::uint64_t component_order = 0;  // simple-component order otherwise
    unsigned component_count = 0;
};

struct ChiefSeries {
    // Ascending: terms[0] trivial, terms.back() = G; each term normal in G
    // and each factor a chief factor of G.
    std::vector<PermutationGroup> terms;
    std::vector<ChiefFactor> factors;
};

// Deterministic chief series: at every step the minimal normal subgroup of
// the quotient with the smallest (order, canonical key) is taken.
ChiefSeries chief_series(const PermutationGroup& G, const Config& cfg);

struct PredicateReport {
    bool soluble = false;
    bool nilpotent = false;
    std::map<std::uint64_t, bool> p_soluble;  // per requested prime
    bool sigma_soluble = false;
    bool sigma_nilpotent = false;
    bool nonabelian_semisimple = false;
};

PredicateReport structural_predicates(const PermutationGroup& G,
                                      const SigmaPartition& sigma,
                                      const std::vector<std::uint64_t>& primes,
                                      const Config& cfg);

// Individual predicates.
bool is_soluble(const PermutationGroup& G);
bool is_nilpotent(const PermutationGroup& G);
bool is_p_soluble(const PermutationGroup& G, std::uint64_t p, const Config& cfg);
bool is_sigma_soluble(const PermutationGroup& G, const SigmaPartition& sigma,
                      const Config& cfg);
bool is_sigma_nilpotent(const PermutationGroup& G, const SigmaPartition& sigma,
                        const Config& cfg);
// Nontrivial, trivial soluble radical, and socle(G) = G.
bool is_nonabelian_semisimple(const PermutationGroup& G, const Config& cfg);

// Derived subgroup [H,H] of H (as a group in its own right).
PermutationGroup derived_subgroup(const PermutationGroup& H);
// Descending derived series H >= H' >= H'' >= ... down to its stable term.
std::vector<PermutationGroup> derived_series(const PermutationGroup& H);
// Lower central series G = L1 >= L2 >= ... down to its stable term.
std::vector<PermutationGroup> lower_central_series(const PermutationGroup& G);

}  // namespace grouplen
