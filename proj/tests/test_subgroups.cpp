#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "grouplen/errors.hpp"
#include "grouplen/subgroups.hpp"
#include "oracles.hpp"

using namespace grouplen;
using oracles::G;

namespace {
const Config cfg = Config::defaults();
PermutationGroup s4() { return G(4, {"(1,2,3,4)", "(1,2)"}); }
PermutationGroup a5() { return G(5, {"(1,2,3,4,5)", "(3,4,5)"}); }

std::map<std::uint64_t, unsigned> order_histogram(
    const std::vector<PermutationGroup>& subs) {
    std::map<std::uint64_t, unsigned> h;
    for (const auto& s : subs) ++h[s.order()];
    return h;
}
}  // namespace

TEST_CASE("full subgroup lattices") {
    CHECK(all_subgroups(s4(), cfg).size() == 30);
    CHECK(all_subgroups(G(4, {"(1,2,3)", "(1,2)(3,4)"}), cfg).size() == 10);
    CHECK(all_subgroups(G(6, {"(1,2,3,4,5,6)"}), cfg).size() == 4);
    // Quaternion group on eight points (right regular action).
    const PermutationGroup q8 =
        G(8, {"(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)"});
    REQUIRE(q8.order() == 8);
    CHECK(all_subgroups(q8, cfg).size() == 6);

    const auto subs = all_subgroups(s4(), cfg);
    for (std::size_t i = 1; i < subs.size(); ++i)
        CHECK(subs[i - 1].order() <= subs[i].order());

    Config tiny = cfg;
    tiny.subgroup_cap = 10;
    CHECK_THROWS_AS((void)all_subgroups(s4(), tiny), cap_error);
}

TEST_CASE("maximal subgroups") {
    const auto s4_max = maximal_subgroups(s4(), cfg);
    CHECK(order_histogram(s4_max) ==
          std::map<std::uint64_t, unsigned>{{6, 4}, {8, 3}, {12, 1}});
    const auto a5_max = maximal_subgroups(a5(), cfg);
    CHECK(order_histogram(a5_max) ==
          std::map<std::uint64_t, unsigned>{{6, 10}, {10, 6}, {12, 5}});
    const auto c12_max = maximal_subgroups(G(12, {"(1,2,3,4,5,6,7,8,9,10,11,12)"}), cfg);
    CHECK(order_histogram(c12_max) ==
          std::map<std::uint64_t, unsigned>{{4, 1}, {6, 1}});
    CHECK(maximal_subgroups(PermutationGroup::trivial(3), cfg).empty());
}

TEST_CASE("maximality test works without the lattice") {
    const PermutationGroup s6 = G(6, {"(1,2,3,4,5,6)", "(1,2)"});
    const PermutationGroup s5_in_s6 = G(6, {"(1,2,3,4,5)", "(1,2)"});
    const PermutationGroup a6 = G(6, {"(1,2,3)", "(2,3,4,5,6)"});
    REQUIRE(s6.order() == 720);
    REQUIRE(a6.order() == 360);
    // The lattice of the degree-six symmetric group exceeds the subgroup cap,
    // but maximality of individual subgroups is still decidable.
    CHECK(is_maximal(s6, s5_in_s6, cfg));
    CHECK(is_maximal(s6, a6, cfg));
    CHECK(!is_maximal(s6, G(6, {"(1,2,3,4,5)"}), cfg));
    CHECK(!is_maximal(s6, s6, cfg));

    CHECK(is_maximal(s4(), G(4, {"(1,2,3)", "(1,2)(3,4)"}), cfg));
    CHECK(!is_maximal(s4(), G(4, {"(1,2)(3,4)", "(1,3)(2,4)"}), cfg));
    CHECK_THROWS_AS((void)is_maximal(s4(), PermutationGroup::trivial(5), cfg),
                    std::invalid_argument);
}
