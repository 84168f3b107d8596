#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "skewmorph/abelian_group.hpp"
#include "skewmorph/errors.hpp"

using namespace skewmorph;

namespace {

const std::vector<std::vector<int>> kSmallGroups = {{2}, {3}, {4}, {6}, {8}, {9}, {12}, {2, 2},
                                                    {2, 4}, {3, 3}, {2, 6}, {2, 2, 2}, {4, 4}};

}

TEST_SUITE("abelian_group") {

TEST_CASE("parse and label") {
    CHECK(AbelianGroup::parse("Z6").factors() == std::vector<int>{6});
    CHECK(AbelianGroup::parse("z2 x Z4").factors() == std::vector<int>{2, 4});
    CHECK(AbelianGroup::parse("Z1").order() == 1);
    CHECK(AbelianGroup::parse("Z1").label() == "Z1");
    CHECK(AbelianGroup::parse("Z3xZ3").label() == "Z3xZ3");
    CHECK_THROWS_AS(AbelianGroup::parse("Q8"), GroupError);
    CHECK_THROWS_AS(AbelianGroup::parse("Z2x"), GroupError);
    CHECK_THROWS_AS(AbelianGroup::parse(""), GroupError);
    CHECK_THROWS_AS(AbelianGroup::parse("Z2xZ1"), GroupError);
    CHECK_THROWS_AS(AbelianGroup({0}), GroupError);
}

TEST_CASE("arithmetic matches coordinates") {
    for (const auto& f : kSmallGroups) {
        const AbelianGroup G(f);
        for (Element a = 0; a < G.order(); ++a) {
            CHECK(G.coords(a) == oracle::coords(G, a));
            CHECK(G.index(G.coords(a)) == a);
            CHECK(G.neg(a) == oracle::neg(G, a));
            for (Element b = 0; b < G.order(); ++b) CHECK(G.add(a, b) == oracle::add(G, a, b));
            Element x = 0;
            for (int k = 0; k < 7; ++k) {
                CHECK(G.multiple(a, k) == x);
                CHECK(G.multiple(a, -k) == oracle::neg(G, x));
                x = oracle::add(G, x, a);
            }
            int ord = 1;
            for (Element y = a; y != 0; y = oracle::add(G, y, a)) ++ord;
            CHECK(G.element_order(a) == ord);
        }
    }
}

TEST_CASE("is_cyclic") {
    CHECK(AbelianGroup({2, 3}).is_cyclic());
    CHECK(AbelianGroup({5}).is_cyclic());
    CHECK(AbelianGroup().is_cyclic());
    CHECK_FALSE(AbelianGroup({2, 2}).is_cyclic());
    CHECK_FALSE(AbelianGroup({3, 6}).is_cyclic());
}

TEST_CASE("permutations") {
    const Permutation p({1, 2, 0, 4, 3});
    CHECK(p.order() == 6);
    CHECK(p.power(3).is_identity() == false);
    CHECK(p.power(6).is_identity());
    CHECK(p.power(-1) == p.inverse());
    CHECK(p.compose(p.inverse()).is_identity());
    for (Element x = 0; x < 5; ++x) CHECK(p.apply_power(x, 4) == p.power(4)[x]);
    CHECK(p.cycles().size() == 2);
    CHECK_THROWS(Permutation({0, 0, 1}));
    CHECK_FALSE(is_bijection(std::vector<Element>{1, 1}));
}

TEST_CASE("subgroups match spans of small generating sets") {
    for (const auto& f : kSmallGroups) {
        const AbelianGroup G(f);
        const auto subs = enumerate_subgroups(G);
        std::set<std::vector<Element>> got;
        for (const auto& S : subs) {
            got.insert(S.members);
            CHECK(oracle::span(G, S.generators) == S.members);
            CHECK(S.generators.size() <= G.rank());
        }
        CHECK(got.size() == subs.size());
        const auto expected = oracle::all_subgroups(G);
        CHECK(got == std::set<std::vector<Element>>(expected.begin(), expected.end()));
    }
    CHECK(enumerate_subgroups(AbelianGroup({2, 2})).size() == 5);
    CHECK(enumerate_subgroups(AbelianGroup({12})).size() == 6);
}

TEST_CASE("as_subgroup rejects non-closed sets") {
    const AbelianGroup G({6});
    CHECK(as_subgroup(G, {0, 2, 4}).ok());
    CHECK_FALSE(as_subgroup(G, {0, 1}).ok());
}

TEST_CASE("automorphisms match exhaustive homomorphism search") {
    for (const auto& f : kSmallGroups) {
        const AbelianGroup G(f);
        if (G.order() > 9) continue;
        std::vector<std::vector<Element>> got;
        for (const auto& a : enumerate_automorphisms(G)) got.push_back(a.perm().table());
        CHECK(got == oracle::all_automorphisms(G));
    }
    // |GL(2,3)| = 48, |GL(3,2)| = 168, |GL(2,2)| = 6.
    CHECK(enumerate_automorphisms(AbelianGroup({3, 3})).size() == 48);
    CHECK(enumerate_automorphisms(AbelianGroup({2, 2, 2})).size() == 168);
    CHECK(enumerate_automorphisms(AbelianGroup({2, 2})).size() == 6);
}

TEST_CASE("subgroup automorphisms are automorphisms of the subgroup") {
    const AbelianGroup G({2, 4});
    for (const auto& S : enumerate_subgroups(G)) {
        const auto maps = subgroup_automorphisms(G, S.members);
        for (const auto& m : maps)
            for (Element a : S.members) {
                CHECK(S.contains(static_cast<Element>(m[a])));
                for (Element b : S.members) CHECK(m[G.add(a, b)] == G.add(static_cast<Element>(m[a]), static_cast<Element>(m[b])));
            }
    }
}

TEST_CASE("quotients") {
    for (const auto& f : kSmallGroups) {
        const AbelianGroup G(f);
        for (const auto& S : enumerate_subgroups(G)) {
            const auto Q = quotient_group(G, S);
            CHECK(Q.group.order() * S.size() == G.order());
            for (Element a = 0; a < G.order(); ++a) {
                CHECK((Q.projection[a] == 0) == S.contains(a));
                for (Element b = 0; b < G.order(); ++b)
                    CHECK(Q.projection[G.add(a, b)] == Q.group.add(Q.projection[a], Q.projection[b]));
            }
        }
    }
}

TEST_CASE("invariant factors and primary components") {
    CHECK(invariant_factors(std::vector<int>{2, 3}) == std::vector<int>{6});
    CHECK(invariant_factors(std::vector<int>{4, 6}) == std::vector<int>{2, 12});
    CHECK(invariant_factors(std::vector<int>{3, 3}) == std::vector<int>{3, 3});
    const AbelianGroup G({2, 32});
    const auto comps = primary_components(G);
    std::multiset<std::int64_t> orders;
    std::vector<Element> basis;
    for (const auto& c : comps) {
        orders.insert(c.order());
        CHECK(G.element_order(c.generator) == c.order());
        basis.push_back(c.generator);
    }
    CHECK(orders == std::multiset<std::int64_t>{2, 32});
    CHECK(oracle::span(G, basis).size() == G.order());
}

}
