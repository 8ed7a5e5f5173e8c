// grouplen: analyze groups, verify length bounds, construct witness chains.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grouplen/analyze.hpp"
#include "grouplen/chain.hpp"
#include "grouplen/config.hpp"
#include "grouplen/corpus.hpp"
#include "grouplen/errors.hpp"
#include "grouplen/report.hpp"
#include "grouplen/sigma.hpp"
#include "grouplen/verify.hpp"

namespace {

using grouplen::json;

struct CommonOptions {
    std::string sigma_text = "*";
    std::string primes_text = "2,3,5,7";
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--sigma", opt.sigma_text,
                    "Partition of the primes, e.g. \"*\", \"*1\", \"2,3|5|*\"")
        ->capture_default_str();
    cmd->add_option("--config", opt.config_path, "JSON file with resource caps");
    cmd->add_option("--seed", opt.seed, "Override the meataxe seed");
    cmd->add_option("-o,--out", opt.out_path, "Write the JSON report here (default: stdout)");
}

grouplen::Config make_config(const CommonOptions& opt) {
    grouplen::Config cfg = opt.config_path.empty()
                               ? grouplen::Config::defaults()
                               : grouplen::Config::from_json_file(opt.config_path);
    cfg = cfg.with_env_overrides();
    if (opt.seed) cfg.seed = *opt.seed;
    return cfg;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
    std::vector<std::uint64_t> primes;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t pos = 0;
        const unsigned long long value = std::stoull(token, &pos);
        if (pos != token.size() || !grouplen::is_prime(value)) {
            throw std::runtime_error("--primes entries must be primes, got '" + token + "'");
        }
        primes.push_back(value);
    }
    if (primes.empty()) throw std::runtime_error("--primes must name at least one prime");
    return primes;
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group length computations and verification"};
    app.require_subcommand(1);

    // --- analyze ---
    auto* analyze = app.add_subcommand("analyze", "Full structural profile of each group");
    CommonOptions an_opt;
    std::string an_corpus;
    std::string an_primes = "2,3,5,7";
    std::vector<std::string> an_formations{"N", "Sol", "Nsigma"};
    analyze->add_option("corpus", an_corpus, "Group file to analyze")->required();
    analyze->add_option("--primes", an_primes, "Primes for per-prime lengths")
        ->capture_default_str();
    analyze->add_option("--formation", an_formations,
                        "Formation registry names (repeatable)")
        ->capture_default_str();
    add_common(analyze, an_opt);

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    CommonOptions vf_opt;
    std::string vf_corpus;
    std::string vf_primes = "2,3,5,7";
    bool vf_timings = false;
    verify->add_option("corpus", vf_corpus, "Group file to verify")->required();
    verify->add_option("--primes", vf_primes, "Primes for per-prime checks")
        ->capture_default_str();
    verify->add_flag("--timings", vf_timings,
                     "Record per-check wall time (breaks byte-for-byte determinism)");
    add_common(verify, vf_opt);

    // --- construct ---
    auto* construct =
        app.add_subcommand("construct", "Build the maximal-subgroup witness chain");
    CommonOptions cs_opt;
    std::uint64_t cs_p = 2;
    unsigned cs_n = 1;
    std::string cs_group_file;
    construct->add_option("--p", cs_p, "Index prime of the maximal subgroups")
        ->capture_default_str();
    construct->add_option("--n", cs_n, "Chain length (number of stages)")
        ->capture_default_str();
    construct->add_option("--group-file", cs_group_file,
                          "Also write the final stage group in group-file form");
    add_common(construct, cs_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            const grouplen::Config cfg = make_config(an_opt);
            const auto sigma = grouplen::SigmaPartition::parse(an_opt.sigma_text);
            const auto specs = grouplen::load_corpus_file(an_corpus);
            const json doc = grouplen::analyze_corpus(specs, sigma, parse_primes(an_primes),
                                                      an_formations, cfg);
            emit(doc, an_opt.out_path);
            return 0;
        }
        if (*verify) {
            const grouplen::Config cfg = make_config(vf_opt);
            const auto sigma = grouplen::SigmaPartition::parse(vf_opt.sigma_text);
            const auto specs = grouplen::load_corpus_file(vf_corpus);
            const auto outcome = grouplen::verify_corpus(specs, sigma,
                                                         parse_primes(vf_primes), cfg,
                                                         vf_timings);
            emit(outcome.report, vf_opt.out_path);
            std::cerr << outcome.passed << " passed, " << outcome.failed << " failed, "
                      << outcome.skipped << " skipped\n";
            return outcome.failed == 0 ? 0 : 1;
        }
        if (*construct) {
            const grouplen::Config cfg = make_config(cs_opt);
            const auto sigma = grouplen::SigmaPartition::parse(cs_opt.sigma_text);
            const auto chain = grouplen::counterexample_chain(sigma, cs_p, cs_n, cfg);
            if (!cs_group_file.empty()) {
                std::ofstream out(cs_group_file, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + cs_group_file);
                out << grouplen::chain_group_file(chain);
            }
            emit(grouplen::chain_to_json(chain, cfg), cs_opt.out_path);
            return 0;
        }
    } catch (const grouplen::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const grouplen::cap_error& e) {
        std::cerr << "error: " << e.what()
                  << " (raise the cap in --config or GROUPLEN_* environment)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
