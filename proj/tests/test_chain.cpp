#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "grouplen/chain.hpp"
#include "grouplen/corpus.hpp"
#include "grouplen/errors.hpp"

using namespace grouplen;

namespace {
const Config cfg = Config::defaults();
const SigmaPartition sing = SigmaPartition::singletons();

const ChainFact* find_fact(const ChainStage& stage, const std::string& name) {
    for (const auto& f : stage.facts)
        if (f.name == name) return &f;
    return nullptr;
}
}  // namespace

TEST_CASE("argument validation") {
    CHECK_THROWS_AS((void)counterexample_chain(sing, 2, 0, cfg), std::invalid_argument);
    CHECK_THROWS_AS((void)counterexample_chain(sing, 4, 1, cfg), std::invalid_argument);
    CHECK_THROWS_AS((void)counterexample_chain(SigmaPartition::one_class(), 2, 1, cfg),
                    std::invalid_argument);
}

TEST_CASE("single stage") {
    const ChainResult r = counterexample_chain(sing, 2, 1, cfg);
    CHECK(r.p == 2);
    CHECK(r.n == 1);
    CHECK(r.primes == std::vector<std::uint64_t>{2, 3});
    CHECK(r.base.order() == 2);
    REQUIRE(r.stages.size() == 1);

    const ChainStage& s = r.stages[0];
    CHECK(s.index == 1);
    CHECK(s.module_prime == 3);
    CHECK(s.module_dimension == 1);
    CHECK(s.group.order() == 6);
    CHECK(s.vector_image.order() == 3);
    CHECK(s.maximal.order() == 3);
    CHECK(s.maximal_index == 2);
    CHECK(s.sigma_length_of_maximal == 1);
    CHECK(s.difference == 1);
    CHECK(group_equal(s.maximal, s.vector_image));

    // Stage one is small enough that every certified fact also gets a
    // generic recomputation.
    for (const char* name :
         {"group_order_generic", "maximal_generic", "sigma_fitting_generic",
          "sigma_length_generic", "unique_minimal_normal", "residual_generic",
          "difference_generic"}) {
        const ChainFact* f = find_fact(s, name);
        REQUIRE_MESSAGE(f != nullptr, name);
        CHECK(f->mode == VerifyMode::generic);
    }
    const ChainFact* residual = find_fact(s, "residual_order");
    REQUIRE(residual != nullptr);
    CHECK(residual->value == "3");
    CHECK(residual->mode == VerifyMode::certified);
    const ChainFact* diff = find_fact(s, "difference_generic");
    REQUIRE(diff != nullptr);
    CHECK(diff->value == "1");
    CHECK(to_string(VerifyMode::certified) == "certified");
}

TEST_CASE("two stages alternate sigma classes") {
    const ChainResult r = counterexample_chain(sing, 2, 2, cfg);
    CHECK(r.primes == std::vector<std::uint64_t>{2, 3, 5});
    REQUIRE(r.stages.size() == 2);
    const ChainStage& s2 = r.stages[1];
    CHECK(s2.module_prime == 5);
    CHECK(s2.module_dimension == 2);
    CHECK(s2.group.degree() == 25);
    CHECK(s2.group.order() == 150);
    CHECK(s2.maximal.order() == 75);
    CHECK(s2.maximal_index == 2);
    CHECK(s2.sigma_length_of_maximal == 2);
    CHECK(s2.difference == 2);
    // Consecutive module primes never share a sigma class.
    for (std::size_t i = 1; i < r.primes.size(); ++i)
        CHECK(!r.sigma.same_class(r.primes[i - 1], r.primes[i]));
}

TEST_CASE("per-prime variants") {
    const ChainResult r3 = counterexample_chain(sing, 3, 1, cfg);
    CHECK(r3.primes == std::vector<std::uint64_t>{3, 2});
    CHECK(r3.stages[0].group.order() == 3 * (1ull << r3.stages[0].module_dimension));
    CHECK(r3.stages[0].maximal_index == 3);
    CHECK(r3.stages[0].difference == 1);

    const SigmaPartition merged = SigmaPartition::parse("2,3|*");
    const ChainResult rm = counterexample_chain(merged, 2, 1, cfg);
    // The first module prime must leave the class of p = 2, so 3 is skipped.
    CHECK(rm.primes == std::vector<std::uint64_t>{2, 5});
}

TEST_CASE("group file round trip") {
    const ChainResult r = counterexample_chain(sing, 2, 2, cfg);
    const std::string text = chain_group_file(r);
    const auto specs = parse_corpus(text);
    REQUIRE(specs.size() == 1);
    CHECK(specs[0].group.order() == 150);
    CHECK(specs[0].group.degree() == 25);
    CHECK(group_equal(specs[0].group, r.stages[1].group));
}
