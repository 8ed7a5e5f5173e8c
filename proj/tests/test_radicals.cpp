#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grouplen/errors.hpp"
#include "grouplen/radicals.hpp"
#include "oracles.hpp"

using namespace grouplen;
using oracles::G;

namespace {
const Config cfg = Config::defaults();
PermutationGroup s4() { return G(4, {"(1,2,3,4)", "(1,2)"}); }
PermutationGroup s5() { return G(5, {"(1,2,3,4,5)", "(1,2)"}); }
PermutationGroup a5() { return G(5, {"(1,2,3,4,5)", "(3,4,5)"}); }
// 2.A5 acting on the 24 nonzero vectors of a two-dimensional space over the
// field with five elements.
PermutationGroup sl25() {
    std::vector<Permutation> gens;
    const auto idx = [](std::uint32_t a, std::uint32_t b) { return (a * 5 + b) - 1; };
    for (const auto& m : {std::array<std::uint32_t, 4>{1, 1, 0, 1},
                          std::array<std::uint32_t, 4>{0, 4, 1, 0}}) {
        std::vector<point_t> im(24);
        for (std::uint32_t a = 0; a < 5; ++a)
            for (std::uint32_t b = 0; b < 5; ++b) {
                if (a == 0 && b == 0) continue;
                const std::uint32_t na = (a * m[0] + b * m[2]) % 5;
                const std::uint32_t nb = (a * m[1] + b * m[3]) % 5;
                im[idx(a, b)] = idx(na, nb);
            }
        gens.push_back(Permutation::from_images(im));
    }
    return PermutationGroup(24, gens);
}
}  // namespace

TEST_CASE("length values") {
    CHECK(Length::finite(3) == Length::finite(3));
    CHECK(!(Length::finite(3) == Length::finite(4)));
    CHECK(Length::infinite() == Length::infinite());
    CHECK(!(Length::infinite() == Length::finite(0)));
    CHECK(Length::finite(2).value() == 2);
    CHECK(Length::finite(2).to_string() == "2");
    CHECK(Length::infinite().to_string() == "infinite");
    CHECK_THROWS_AS((void)Length::infinite().value(), std::logic_error);
}

TEST_CASE("named radicals against the exhaustive oracle") {
    const auto s4g = s4();
    CHECK(fitting_subgroup(s4g, cfg).order() == 4);
    CHECK(p_core(s4g, 2, cfg).order() == 4);
    CHECK(p_core(s4g, 3, cfg).order() == 1);
    CHECK(soluble_radical(s5(), cfg).order() == 1);
    CHECK(p_soluble_radical(s5(), 7, cfg).order() == 120);
    CHECK(p_soluble_radical(s5(), 2, cfg).order() == 1);

    const auto brute_f = oracles::brute_radical(
        s4g, [&](const PermutationGroup& n) { return is_nilpotent(n); }, cfg);
    CHECK(group_equal(fitting_subgroup(s4g, cfg), brute_f));
    const auto brute_sol = oracles::brute_radical(
        s5(), [&](const PermutationGroup& n) { return is_soluble(n); }, cfg);
    CHECK(group_equal(soluble_radical(s5(), cfg), brute_sol));
}

TEST_CASE("generalized fitting subgroup") {
    CHECK(generalized_fitting_subgroup(s5(), cfg).order() == 60);
    CHECK(group_equal(generalized_fitting_subgroup(s5(), cfg), a5()));
    CHECK(generalized_fitting_subgroup(s4(), cfg).order() == 4);
    const auto sl = sl25();
    REQUIRE(sl.order() == 120);
    CHECK(generalized_fitting_subgroup(sl, cfg).order() == 120);
    CHECK(generalized_fitting_subgroup(a5(), cfg).order() == 60);
    // The centralizer of the generalized Fitting subgroup sits inside it.
    for (const auto& g : {s4(), s5(), a5(), sl25()}) {
        const auto fs = generalized_fitting_subgroup(g, cfg);
        const auto c = centralizer(g, fs, cfg.element_cap);
        CHECK(contains_subgroup(fs, c));
    }
}

TEST_CASE("sigma radicals depend on the partition") {
    const SigmaPartition merged = SigmaPartition::parse("2,3|*");
    CHECK(sigma_fitting_subgroup(s4(), merged, cfg).order() == 24);
    CHECK(sigma_fitting_subgroup(s4(), SigmaPartition::singletons(), cfg).order() == 4);
    CHECK(sigma_fitting_subgroup(a5(), SigmaPartition::one_class(), cfg).order() == 60);
    CHECK(sigma_fitting_subgroup(a5(), SigmaPartition::singletons(), cfg).order() == 1);
    CHECK(sigma_length(s4(), merged, cfg) == Length::finite(1));
    CHECK(sigma_length(s4(), SigmaPartition::singletons(), cfg) == Length::finite(3));

    const FittingClass oclass = fc_sigma_class(merged, 3);
    CHECK(fitting_radical(s4(), oclass, cfg).order() == 24);
    CHECK(fitting_radical(s5(), oclass, cfg).order() == 1);
}

TEST_CASE("lengths") {
    CHECK(fitting_height(s4(), cfg) == Length::finite(3));
    CHECK(fitting_height(PermutationGroup::trivial(1), cfg) == Length::finite(0));
    CHECK(fitting_height(a5(), cfg).is_infinite());
    CHECK(generalized_fitting_height(s5(), cfg) == Length::finite(2));
    CHECK(generalized_fitting_height(a5(), cfg) == Length::finite(1));
    CHECK(generalized_fitting_height(sl25(), cfg) == Length::finite(1));
    CHECK(lambda_p_length(a5(), 2, cfg) == Length::finite(1));
    CHECK(lambda_p_length(a5(), 7, cfg) == Length::finite(0));
    CHECK(lambda_p_length(s4(), 2, cfg) == Length::finite(0));
    CHECK(lambda_length(a5(), cfg) == Length::finite(1));
    CHECK(lambda_length(s5(), cfg) == Length::finite(1));

    const NamedLengths nl =
        named_lengths(a5(), SigmaPartition::singletons(), {2, 3, 5, 7}, cfg);
    CHECK(nl.fitting_height.is_infinite());
    CHECK(nl.generalized_height == Length::finite(1));
    CHECK(nl.lambda_p.at(2) == Length::finite(1));
    CHECK(nl.lambda_p.at(7) == Length::finite(0));
    CHECK(nl.lambda == Length::finite(1));
    CHECK(nl.sigma_length.is_infinite());
}

TEST_CASE("gamma series") {
    const Functorial f = parse_functorial("F", SigmaPartition::singletons());
    const GammaSeries s = gamma_series(s4(), f, cfg);
    REQUIRE(s.terms.size() == 4);
    CHECK(s.terms[0].is_trivial());
    CHECK(s.terms[1].order() == 4);
    CHECK(s.terms[2].order() == 12);
    CHECK(s.terms[3].order() == 24);
    CHECK(s.length == Length::finite(3));
    CHECK(!s.stalled_at.has_value());

    const GammaSeries stalled = gamma_series(a5(), f, cfg);
    CHECK(stalled.length.is_infinite());
    REQUIRE(stalled.stalled_at.has_value());
    CHECK(stalled.terms.back().order() == 1);
}

TEST_CASE("functorial registry and upper products") {
    CHECK(parse_functorial("Fstar", SigmaPartition::singletons())(s5(), cfg).order() == 60);
    CHECK(parse_functorial("Op:2", SigmaPartition::singletons())(s4(), cfg).order() == 4);
    CHECK(parse_functorial("OJ:2,3,5,60", SigmaPartition::singletons())(s5(), cfg).order() ==
          120);
    CHECK(parse_functorial("OJ:2,3,5", SigmaPartition::singletons())(s5(), cfg).order() == 1);
    CHECK_THROWS_AS(parse_functorial("Nope", SigmaPartition::singletons()), parse_error);
    CHECK_THROWS_AS(parse_functorial("Op:4", SigmaPartition::singletons()), parse_error);
    CHECK_THROWS_AS(parse_functorial("", SigmaPartition::singletons()), parse_error);

    const Functorial lam =
        parse_functorial("RadPSol:2*Fstar*RadPSol:2", SigmaPartition::singletons());
    CHECK(lam(s5(), cfg).order() == 120);
    CHECK(lam(a5(), cfg).order() == 60);

    const Functorial built = upper_product(
        upper_product(parse_functorial("RadPSol:2", SigmaPartition::singletons()),
                      parse_functorial("Fstar", SigmaPartition::singletons())),
        parse_functorial("RadPSol:2", SigmaPartition::singletons()));
    CHECK(built(s5(), cfg).order() == lam(s5(), cfg).order());

    const auto names = registered_functorial_names();
    CHECK(!names.empty());
}
