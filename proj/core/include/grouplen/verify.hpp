#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplen/config.hpp"
#include "grouplen/corpus.hpp"
#include "grouplen/report.hpp"
#include "grouplen/sigma.hpp"

namespace grouplen {

struct VerificationOutcome {
    json report;  // {tool_version, config, checks, summary}
    unsigned passed = 0;
    unsigned failed = 0;
    unsigned skipped = 0;
};

// Runs the full verification suite over the corpus:
//   - maximal-subgroup bounds for every G and maximal M:
//     h*(G)-h*(M) <= 2; lambda_p(G)-lambda_p(M) <= 1 per requested prime;
//     lambda(G)-lambda(M) <= 1; h(G)-h(M) in {0,1,2} for soluble G;
//     l_sigma(G)-l_sigma(M) in {0,1,2} for sigma-soluble G;
//     l_sigma(G^Nsigma)-l_sigma(M^Nsigma) in {0,1,2};
//     the p-closed-soluble-height<=3 residual-height difference <= 4;
//   - radical-engine agreement with the brute-force maximal-normal oracle;
//   - radical axiom suites on all (G, N normal) pairs: projection
//     compatibility and intersection heredity for every bundled radical;
//     trivial radical of G/radical plus the N <= radical quotient identity
//     for the extension-closed instances;
//   - length subadditivity max{h(N), h(G/N)} <= h(G) <= h(G/N) + h(N) for
//     the nilpotent, generalized-Fitting, and sigma-Fitting series;
//   - centralizer self-containment of the generalized Fitting subgroup;
//   - upper-product associativity; per-prime/one-class sigma degenerations;
//   - the alternating-series shape of the lambda_p series, recording
//     whether each even factor's components have order divisible by p.
// Differences are computed only when both lengths are finite; cap
// violations become SKIPPED records carrying the cap name.
VerificationOutcome verify_corpus(const std::vector<GroupSpec>& specs,
                                  const SigmaPartition& sigma,
                                  const std::vector<std::uint64_t>& primes,
                                  const Config& cfg, bool timings = false);

}  // namespace grouplen
