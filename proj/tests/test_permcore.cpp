#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grouplen/errors.hpp"
#include "grouplen/group.hpp"
#include "grouplen/permutation.hpp"
#include "oracles.hpp"

using namespace grouplen;
using oracles::G;

TEST_CASE("cycle notation round trip and validation") {
    const Permutation p = parse_cycles("(1,2,3)(4,5)", 6);
    CHECK(p.degree() == 6);
    CHECK(p(0) == 1);
    CHECK(p(1) == 2);
    CHECK(p(2) == 0);
    CHECK(p(3) == 4);
    CHECK(p(4) == 3);
    CHECK(p(5) == 5);
    CHECK(to_cycles(p) == "(1,2,3)(4,5)");
    CHECK(to_cycles(Permutation(4)) == "()");
    CHECK(parse_cycles("()", 3).is_identity());

    CHECK_THROWS(parse_cycles("(1,1)", 3));       // repeated point
    CHECK_THROWS(parse_cycles("(0,1)", 3));       // zero point
    CHECK_THROWS(parse_cycles("(1,5)", 3));       // out of range
    CHECK_THROWS(parse_cycles("(1,2", 3));        // unbalanced
    CHECK_THROWS(Permutation::from_images({0, 0, 1}));  // not a bijection
}

TEST_CASE("composition is left-to-right") {
    const Permutation a = parse_cycles("(1,2)", 3);
    const Permutation b = parse_cycles("(2,3)", 3);
    const Permutation ab = a * b;
    // (a*b)(x) = b(a(x)): 1 -> 2 -> 3.
    CHECK(ab(0) == 2);
    CHECK(to_cycles(ab) == "(1,3,2)");
    CHECK((a * a.inverse()).is_identity());
    // conjugate(g, h) = h^{-1} g h.
    const Permutation c = conjugate(parse_cycles("(1,2)", 3), parse_cycles("(1,3)", 3));
    CHECK(to_cycles(c) == "(2,3)");
    const Permutation k =
        commutator(parse_cycles("(1,2)", 3), parse_cycles("(1,3)", 3));
    CHECK(to_cycles(k) == "(1,3,2)");
    CHECK(parse_cycles("(1,2,3)", 4).smallest_moved_point() == point_t{0});
    CHECK(!Permutation(4).smallest_moved_point().has_value());
}

TEST_CASE("deterministic orders match the exhaustive closure") {
    const struct {
        PermutationGroup g;
        std::uint64_t order;
    } cases[] = {
        {G(3, {"(1,2,3)", "(1,2)"}), 6},
        {G(4, {"(1,2,3,4)", "(1,2)"}), 24},
        {G(5, {"(1,2,3,4,5)", "(3,4,5)"}), 60},
        {G(6, {"(1,2,3,4,5,6)", "(1,2)"}), 720},
        {G(7, {"(1,2,3,4,5,6,7)"}), 7},
        {G(8, {"(1,3,2,4)(5,8,6,7)", "(1,5,2,6)(3,7,4,8)"}), 8},  // quaternion
    };
    for (const auto& c : cases) {
        CHECK(c.g.order() == c.order);
        CHECK(oracles::brute_order(c.g) == c.order);
    }
    CHECK(PermutationGroup::trivial(5).order() == 1);
    CHECK(PermutationGroup().is_trivial());
}

TEST_CASE("membership, enumeration, and the element cap") {
    const PermutationGroup s4 = G(4, {"(1,2,3,4)", "(1,2)"});
    const PermutationGroup a4 = G(4, {"(1,2,3)", "(1,2)(3,4)"});
    CHECK(s4.contains(parse_cycles("(1,2)", 4)));
    CHECK(!a4.contains(parse_cycles("(1,2)", 4)));
    CHECK(a4.contains(parse_cycles("(1,2)(3,4)", 4)));

    const auto& elems = s4.elements(1000);
    CHECK(elems.size() == 24);
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    CHECK_THROWS_AS((void)s4.elements(10), cap_error);

    const PermutationGroup cert = PermutationGroup::with_certified_order(
        4, {parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4)}, 24);
    CHECK(cert.order() == 24);
    CHECK(cert.contains(parse_cycles("(1,3)", 4)));
}

TEST_CASE("normal closure, centralizer, join") {
    const PermutationGroup s4 = G(4, {"(1,2,3,4)", "(1,2)"});
    const PermutationGroup closure3 = normal_closure(s4, {parse_cycles("(1,2,3)", 4)});
    CHECK(closure3.order() == 12);  // the alternating subgroup
    const PermutationGroup closure2 = normal_closure(s4, {parse_cycles("(1,2)", 4)});
    CHECK(closure2.order() == 24);
    const PermutationGroup closure22 =
        normal_closure(s4, {parse_cycles("(1,2)(3,4)", 4)});
    CHECK(closure22.order() == 4);

    const PermutationGroup cent =
        centralizer(s4, G(4, {"(1,2,3,4)"}), 1000);
    CHECK(cent.order() == 4);  // cyclic subgroups are self-centralizing here

    const PermutationGroup j = join(G(3, {"(1,2)"}), G(3, {"(2,3)"}));
    CHECK(j.order() == 6);
    CHECK(contains_subgroup(s4, G(4, {"(1,2,3)", "(1,2)(3,4)"})));
    CHECK(!contains_subgroup(G(4, {"(1,2,3)", "(1,2)(3,4)"}), s4));
}

TEST_CASE("coset keys identify right cosets") {
    const PermutationGroup a4 = G(4, {"(1,2,3)", "(1,2)(3,4)"});
    const Permutation x = parse_cycles("(1,2)", 4);
    const Permutation h = parse_cycles("(1,2,3)", 4);
    CHECK(a4.canonical_coset_key(x) == a4.canonical_coset_key(h * x));
    CHECK(a4.canonical_coset_key(x) != a4.canonical_coset_key(Permutation(4)));
    CHECK(group_equal(a4, G(4, {"(1,2,3)", "(2,3,4)"})));
    CHECK(!group_equal(a4, G(4, {"(1,2,3)"})));
}
