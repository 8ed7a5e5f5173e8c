#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grouplen/chain.hpp"
#include "grouplen/config.hpp"
#include "grouplen/radicals.hpp"

namespace grouplen {

// All reports use ordered_json so that serialization is byte-identical
// across runs with the same config and seed.
using json = nlohmann::ordered_json;

std::string tool_version();

// Integer for finite lengths, the string "infinite" otherwise.
json length_to_json(const Length& len);
json config_to_json(const Config& cfg);

struct CheckRecord {
    std::string check_id;
    std::string group;
    std::optional<std::string> maximal_subgroup;
    json values;                  // computed values backing the verdict
    std::string verdict;          // "PASS", "FAIL", or "SKIPPED"
    std::optional<std::string> skipped_cap;  // violated cap when SKIPPED
    std::optional<double> seconds;           // only when timings requested
};

json check_to_json(const CheckRecord& rec);

// Assembles {tool_version, config, checks, summary}.
json assemble_report(const Config& cfg, const std::vector<CheckRecord>& checks,
                     json summary);

// Chain provenance block: sigma, p, n, seed, primes, per-stage dimensions,
// orders, differences, and every recorded fact with its verification mode.
json chain_to_json(const ChainResult& chain, const Config& cfg);

}  // namespace grouplen
