#pragma once

#include <cstdint>
#include <string>

namespace grouplen {

// Resource caps and the chop seed.  Every potentially expensive operation
// checks the relevant cap before doing work and throws cap_error when the
// input is too large; defaults are sized for desk-scale groups.
//
// Values are loaded from defaults, then overridden by a JSON config file
// (if given), then by environment variables GROUPLEN_<NAME> (uppercased
// field name, e.g. GROUPLEN_ELEMENT_CAP).
struct Config {
    std::uint64_t element_cap = 200000;  // max group order for element enumeration
    std::uint64_t subgroup_cap = 400;    // max group order for full subgroup lattices
    std::uint64_t class_cap = 24;        // max conjugacy-class count for normal-subgroup joins
    std::uint64_t degree_cap = 10000;    // max permutation degree for quotients / affine points
    std::uint64_t chop_cap = 512;        // max module dimension for the meataxe
    std::uint64_t regular_cap = 400;     // max group order for regular-module construction
    std::uint64_t max_series_steps = 64; // iteration guard for radical series
    std::uint64_t chop_retries = 64;     // retry budget for random algebra elements
    std::uint64_t seed = 1;              // meataxe seed

    static Config defaults() { return Config{}; }

    // Parse a JSON object ({"element_cap": ..., ...}); unknown keys error.
    static Config from_json_text(const std::string& text);
    static Config from_json_file(const std::string& path);

    // Apply GROUPLEN_* environment overrides on top of this config.
    Config with_env_overrides() const;

    std::string to_json_text() const;
};

}  // namespace grouplen
