#include "grouplen/report.hpp"

namespace grouplen {

std::string tool_version() { return "grouplen 1.0.0"; }

json length_to_json(const Length& len) {
    if (len.is_infinite()) return json("infinite");
    return json(len.value());
}

json config_to_json(const Config& cfg) {
    json j;
    j["element_cap"] = cfg.element_cap;
    j["subgroup_cap"] = cfg.subgroup_cap;
    j["class_cap"] = cfg.class_cap;
    j["degree_cap"] = cfg.degree_cap;
    j["chop_cap"] = cfg.chop_cap;
    j["regular_cap"] = cfg.regular_cap;
    j["max_series_steps"] = cfg.max_series_steps;
    j["chop_retries"] = cfg.chop_retries;
    j["seed"] = cfg.seed;
    return j;
}

json check_to_json(const CheckRecord& rec) {
    json j;
    j["check_id"] = rec.check_id;
    j["group"] = rec.group;
    if (rec.maximal_subgroup) j["maximal_subgroup"] = *rec.maximal_subgroup;
    j["values"] = rec.values;
    j["verdict"] = rec.verdict;
    if (rec.skipped_cap) j["skipped_cap"] = *rec.skipped_cap;
    if (rec.seconds) j["seconds"] = *rec.seconds;
    return j;
}

json assemble_report(const Config& cfg, const std::vector<CheckRecord>& checks,
                     json summary) {
    json j;
    j["tool_version"] = tool_version();
    j["config"] = config_to_json(cfg);
    json arr = json::array();
    for (const auto& rec : checks) arr.push_back(check_to_json(rec));
    j["checks"] = std::move(arr);
    j["summary"] = std::move(summary);
    return j;
}

json chain_to_json(const ChainResult& chain, const Config& cfg) {
    json j;
    j["tool_version"] = tool_version();
    j["config"] = config_to_json(cfg);
    j["sigma"] = chain.sigma.to_string();
    j["p"] = chain.p;
    j["n"] = chain.n;
    j["seed"] = chain.seed;
    j["primes"] = chain.primes;
    j["base_order"] = chain.base.order();
    json stages = json::array();
    for (const auto& s : chain.stages) {
        json st;
        st["index"] = s.index;
        st["module_prime"] = s.module_prime;
        st["module_dimension"] = s.module_dimension;
        st["group_degree"] = s.group.degree();
        st["group_order"] = s.group.order();
        st["maximal_order"] = s.maximal.order();
        st["maximal_index"] = s.maximal_index;
        st["sigma_length_of_maximal"] = s.sigma_length_of_maximal;
        st["difference"] = s.difference;
        json facts = json::array();
        for (const auto& f : s.facts) {
            json fj;
            fj["name"] = f.name;
            fj["value"] = f.value;
            fj["mode"] = to_string(f.mode);
            facts.push_back(std::move(fj));
        }
        st["facts"] = std::move(facts);
        stages.push_back(std::move(st));
    }
    j["stages"] = std::move(stages);
    return j;
}

}  // namespace grouplen
