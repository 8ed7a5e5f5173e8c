#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "grouplen/analyze.hpp"
#include "grouplen/corpus.hpp"
#include "grouplen/errors.hpp"
#include "grouplen/report.hpp"
#include "grouplen/verify.hpp"

using namespace grouplen;

namespace {
const char* tiny_corpus = R"(# three small groups
group S3
degree 3
gen (1,2,3)
gen (1,2)
tag order:6
end

group C6
degree 6
gen (1,2,3,4,5,6)
tag order:6 abelian
end

group S4
degree 4
gen (1,2,3,4)
gen (1,2)
tag order:24
end
)";
}  // namespace

TEST_CASE("corpus grammar accepts the documented form") {
    const auto specs = parse_corpus(tiny_corpus);
    REQUIRE(specs.size() == 3);
    CHECK(specs[0].name == "S3");
    CHECK(specs[0].degree == 3);
    CHECK(specs[0].group.order() == 6);
    CHECK(specs[0].generator_text == std::vector<std::string>{"(1,2,3)", "(1,2)"});
    CHECK(specs[1].tags == std::vector<std::string>{"order:6", "abelian"});
    CHECK(specs[2].group.order() == 24);
}

TEST_CASE("corpus grammar rejections carry line positions") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            (void)parse_corpus(text);
        } catch (const parse_error& e) {
            return e.line();
        }
        return 0;  // no throw
    };
    CHECK(line_of("bogus S3\n") == 1);
    CHECK(line_of("group S3\ngen (1,2)\n") == 2);           // degree must come first
    CHECK(line_of("group S3\ndegree 3\ngen (1,2)\n") == 3); // unterminated group
    CHECK(line_of("group S3\ndegree 3\nend\n") == 3);       // no generators
    CHECK(line_of("group A\ndegree 2\ngen (1,2)\nend\ngroup A\ndegree 2\ngen (1,2)\nend\n") ==
          5);
    CHECK(line_of("group S3\ndegree 3\ngen (1,4)\nend\n") == 4);   // out of range
    CHECK(line_of("group S3\ndegree 3\ngen (1,2\nend\n") == 4);    // unbalanced
    CHECK(line_of("group S3\ndegree 3\ngen (1,1)\nend\n") == 4);   // repeated point
    CHECK(line_of("group S3\ndegree zero\ngen (1,2)\nend\n") == 2);
    CHECK(line_of("group S3\ndegree 3\ngen (1,2,3)\ntag order:7\nend\n") == 5);
}

TEST_CASE("rendering a spec reproduces the grammar") {
    const auto specs = parse_corpus(tiny_corpus);
    const std::string text =
        render_group_spec("S4copy", specs[2].group, {"order:24", "extra"});
    const auto back = parse_corpus(text);
    REQUIRE(back.size() == 1);
    CHECK(back[0].name == "S4copy");
    CHECK(back[0].tags == std::vector<std::string>{"order:24", "extra"});
    CHECK(group_equal(back[0].group, specs[2].group));
}

TEST_CASE("configs parse, override, and round trip") {
    const Config base = Config::defaults();
    CHECK(base.element_cap == 200000);
    CHECK(base.seed == 1);

    const Config parsed = Config::from_json_text(R"({"element_cap": 99, "seed": 7})");
    CHECK(parsed.element_cap == 99);
    CHECK(parsed.seed == 7);
    CHECK(parsed.subgroup_cap == base.subgroup_cap);
    CHECK_THROWS(Config::from_json_text(R"({"element_cap": 99, "typo_cap": 1})"));
    CHECK_THROWS(Config::from_json_text("not json"));

    const Config round = Config::from_json_text(parsed.to_json_text());
    CHECK(round.to_json_text() == parsed.to_json_text());

    ::setenv("GROUPLEN_SUBGROUP_CAP", "123", 1);
    const Config env = base.with_env_overrides();
    ::unsetenv("GROUPLEN_SUBGROUP_CAP");
    CHECK(env.subgroup_cap == 123);
    CHECK(env.element_cap == base.element_cap);
}

TEST_CASE("report primitives") {
    CHECK(length_to_json(Length::finite(3)) == json(3));
    CHECK(length_to_json(Length::infinite()) == json("infinite"));

    const json cfg_json = config_to_json(Config::defaults());
    CHECK(cfg_json["element_cap"] == 200000);
    CHECK(cfg_json["seed"] == 1);

    CheckRecord rec;
    rec.check_id = "demo";
    rec.group = "S3";
    rec.values = json{{"x", 1}};
    rec.verdict = "PASS";
    json rj = check_to_json(rec);
    CHECK(rj["check_id"] == "demo");
    CHECK(!rj.contains("maximal_subgroup"));
    CHECK(!rj.contains("skipped_cap"));
    CHECK(!rj.contains("seconds"));
    rec.maximal_subgroup = "M1:o3";
    rec.verdict = "SKIPPED";
    rec.skipped_cap = "element_cap";
    rec.seconds = 0.5;
    rj = check_to_json(rec);
    CHECK(rj["maximal_subgroup"] == "M1:o3");
    CHECK(rj["skipped_cap"] == "element_cap");
    CHECK(rj["seconds"] == 0.5);

    const json rep = assemble_report(Config::defaults(), {rec}, json{{"n", 1}});
    CHECK(rep.contains("tool_version"));
    CHECK(rep.contains("config"));
    CHECK(rep["checks"].size() == 1);
    CHECK(rep["summary"]["n"] == 1);
    CHECK(tool_version() == rep["tool_version"]);
}

TEST_CASE("group analysis document") {
    const auto specs = parse_corpus(tiny_corpus);
    const SigmaPartition sing = SigmaPartition::singletons();
    const Config cfg = Config::defaults();
    const json doc = analyze_group(specs[2], sing, {2, 3}, {"N", "Sol"}, cfg);
    CHECK(doc["name"] == "S4");
    CHECK(doc["order"] == 24);
    CHECK(doc["chief_series"]["length"] == 3);
    CHECK(doc["radicals"]["F"] == 4);
    CHECK(doc["radicals"]["Op"]["2"] == 4);
    CHECK(doc["lengths"]["h"] == 3);
    CHECK(doc["lengths"]["lambda_p"]["2"] == 0);
    CHECK(doc["predicates"]["soluble"] == true);
    CHECK(doc["formations"]["N"]["contains"] == false);
    CHECK(doc["formations"]["N"]["residual_order"] == 12);
    CHECK(doc["formations"]["N"]["n_F"] == 2);
    CHECK(doc["formations"]["Sol"]["residual_order"] == 1);
    CHECK(doc["formations"]["Sol"]["n_F"] == 0);

    Config tiny = cfg;
    tiny.element_cap = 10;
    const json capped = analyze_group(specs[2], sing, {2}, {"N"}, tiny);
    CHECK(capped["order"] == 24);
    CHECK(capped["radicals"]["F"]["skipped"] == "element_cap");
    CHECK(capped["formations"]["N"]["residual_order"]["skipped"] == "element_cap");
}

TEST_CASE("corpus analysis and verification are deterministic") {
    const auto specs = parse_corpus(tiny_corpus);
    const SigmaPartition sing = SigmaPartition::singletons();
    const Config cfg = Config::defaults();

    const json a1 = analyze_corpus(specs, sing, {2, 3}, {"N"}, cfg);
    const json a2 = analyze_corpus(specs, sing, {2, 3}, {"N"}, cfg);
    CHECK(a1.dump() == a2.dump());
    CHECK(a1["summary"]["group_count"] == 3);
    CHECK(a1["groups"].size() == 3);

    const VerificationOutcome v1 = verify_corpus(specs, sing, {2, 3}, cfg);
    CHECK(v1.failed == 0);
    CHECK(v1.passed > 100);
    CHECK(v1.report["summary"]["failed"] == 0);
    const VerificationOutcome v2 = verify_corpus(specs, sing, {2, 3}, cfg);
    CHECK(v1.report.dump() == v2.report.dump());

    const VerificationOutcome timed = verify_corpus(specs, sing, {2}, cfg, true);
    REQUIRE(!timed.report["checks"].empty());
    CHECK(timed.report["checks"][0].contains("seconds"));
}
