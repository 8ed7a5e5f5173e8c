#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouplen/config.hpp"
#include "grouplen/corpus.hpp"
#include "grouplen/report.hpp"
#include "grouplen/sigma.hpp"

namespace grouplen {

// Full structural profile of one group: order, chief-series shape, the
// radicals F / F* / F_sigma, all named lengths, predicates, and residuals
// plus residual lengths for each requested formation (registry names).
// Cap violations turn the affected fields into {"skipped": "<cap>"} rather
// than failing the whole report.
json analyze_group(const GroupSpec& spec, const SigmaPartition& sigma,
                   const std::vector<std::uint64_t>& primes,
                   const std::vector<std::string>& formation_names,
                   const Config& cfg);

// Analyzes every spec and assembles a deterministic report document.
json analyze_corpus(const std::vector<GroupSpec>& specs,
                    const SigmaPartition& sigma,
                    const std::vector<std::uint64_t>& primes,
                    const std::vector<std::string>& formation_names,
                    const Config& cfg);

}  // namespace grouplen
