#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grouplen/errors.hpp"
#include "grouplen/formations.hpp"
#include "oracles.hpp"

using namespace grouplen;
using oracles::G;

namespace {
const Config cfg = Config::defaults();
const SigmaPartition sing = SigmaPartition::singletons();
PermutationGroup s3() { return G(3, {"(1,2,3)", "(1,2)"}); }
PermutationGroup s4() { return G(4, {"(1,2,3,4)", "(1,2)"}); }
PermutationGroup a4() { return G(4, {"(1,2,3)", "(1,2)(3,4)"}); }
PermutationGroup a5() { return G(5, {"(1,2,3,4,5)", "(3,4,5)"}); }
PermutationGroup d8() { return G(4, {"(1,2,3,4)", "(1,3)"}); }
PermutationGroup c6() { return G(6, {"(1,2,3,4,5,6)"}); }
}  // namespace

TEST_CASE("membership predicates") {
    CHECK(fm_nilpotent().contains(d8(), cfg));
    CHECK(!fm_nilpotent().contains(s4(), cfg));
    CHECK(fm_soluble().contains(s4(), cfg));
    CHECK(!fm_soluble().contains(a5(), cfg));
    CHECK(fm_sigma_nilpotent(SigmaPartition::one_class()).contains(a5(), cfg));
    CHECK(!fm_sigma_nilpotent(sing).contains(s3(), cfg));

    const Formation pc2 = fm_p_closed_soluble(2);
    CHECK(pc2.contains(d8(), cfg));
    CHECK(pc2.contains(c6(), cfg));
    CHECK(!pc2.contains(s3(), cfg));
    CHECK(!pc2.contains(s4(), cfg));
    CHECK(!pc2.contains(a5(), cfg));
    CHECK(pc2.contains(PermutationGroup::trivial(1), cfg));

    const Formation bounded = fm_p_closed_soluble_bounded(2, 3);
    CHECK(bounded.contains(d8(), cfg));
    CHECK(bounded.contains(c6(), cfg));
    CHECK(!bounded.contains(s4(), cfg));
}

TEST_CASE("residuals") {
    CHECK(group_equal(formation_residual(s4(), fm_nilpotent(), cfg), a4()));
    CHECK(formation_residual(G(5, {"(1,2,3,4,5)", "(1,2)"}), fm_soluble(), cfg).order() ==
          60);
    CHECK(formation_residual(s4(), fm_soluble(), cfg).is_trivial());
    CHECK(formation_residual(a5(), fm_nilpotent(), cfg).order() == 60);
    CHECK(formation_residual(s3(), fm_p_closed_soluble(2), cfg).order() == 3);
    CHECK(formation_residual(d8(), fm_nilpotent(), cfg).is_trivial());
}

TEST_CASE("residual lengths") {
    CHECK(residual_fitting_height(s4(), fm_nilpotent(), cfg) == Length::finite(2));
    CHECK(residual_fitting_height(s4(), fm_soluble(), cfg) == Length::finite(0));
    CHECK(residual_fitting_height(a5(), fm_nilpotent(), cfg).is_infinite());
    CHECK(residual_sigma_length(s4(), fm_nilpotent(), sing, cfg) == Length::finite(2));
    CHECK(residual_sigma_length(s4(), fm_sigma_nilpotent(SigmaPartition::one_class()),
                                SigmaPartition::one_class(), cfg) == Length::finite(0));
    CHECK(residual_fitting_height(s3(), fm_p_closed_soluble_bounded(2, 3), cfg) ==
          Length::finite(1));
}

TEST_CASE("formation registry") {
    CHECK(parse_formation("N", sing).contains(d8(), cfg));
    CHECK(parse_formation("Sol", sing).contains(s4(), cfg));
    CHECK(parse_formation("Nsigma", SigmaPartition::one_class()).contains(a5(), cfg));
    CHECK(!parse_formation("Nsigma", sing).contains(a5(), cfg));
    CHECK(!parse_formation("PClosedSol:2", sing).contains(s3(), cfg));
    CHECK(!parse_formation("PClosedSolH:2,3", sing).contains(s3(), cfg));
    CHECK(parse_formation("PClosedSolH:2,3", sing).contains(c6(), cfg));
    CHECK_THROWS_AS(parse_formation("Bogus", sing), parse_error);
    CHECK_THROWS_AS(parse_formation("PClosedSol:4", sing), parse_error);
    CHECK_THROWS_AS(parse_formation("PClosedSolH:2", sing), parse_error);
    CHECK_THROWS_AS(parse_formation("", sing), parse_error);
    CHECK(!registered_formation_names().empty());
}
