#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "skewmorph/enumerate.hpp"
#include "skewmorph/number_theory.hpp"

using namespace skewmorph;

namespace {

std::vector<std::vector<Element>> tables(const std::vector<SkewMorphism>& ms) {
    std::vector<std::vector<Element>> out;
    for (const auto& m : ms) out.push_back(m.perm().table());
    return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("enumeration equals the exhaustive oracle up to order 9") {
    for (const auto& f : std::vector<std::vector<int>>{
             {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {2, 2}, {2, 2, 2}, {2, 4}, {3, 3}}) {
        const AbelianGroup G(f);
        const auto rep = enumerate_skew_morphisms(G);
        CHECK_MESSAGE(tables(rep.morphisms) == oracle::all_skew_morphisms(G), G.label());
        CHECK(tables(brute_force_oracle(G).morphisms) == tables(rep.morphisms));
    }
}

TEST_CASE("trivial group") {
    const auto rep = enumerate_skew_morphisms(AbelianGroup());
    REQUIRE(rep.morphisms.size() == 1);
    CHECK(rep.morphisms[0].perm().table() == std::vector<Element>{0});
}

TEST_CASE("counts are consistent and automorphisms are all present") {
    for (const auto& f : std::vector<std::vector<int>>{{10}, {12}, {16}, {18}, {2, 6}, {2, 8}, {3, 6}, {4, 4}}) {
        const AbelianGroup G(f);
        const auto rep = enumerate_skew_morphisms(G);
        const auto& c = rep.counts;
        CHECK(c.total == rep.morphisms.size());
        CHECK(c.automorphisms + c.proper == c.total);
        CHECK(c.smooth + c.nonsmooth == c.total);
        CHECK(c == tally(rep.morphisms));
        CHECK(c.automorphisms == enumerate_automorphisms(G).size());
        if (G.is_cyclic()) CHECK(c.automorphisms == static_cast<std::size_t>(nt::euler_phi(G.order())));
        CHECK(std::is_sorted(rep.morphisms.begin(), rep.morphisms.end()));

        // Closed under conjugation by automorphisms.
        const auto listed = tables(rep.morphisms);
        const std::set<std::vector<Element>> all(listed.begin(), listed.end());
        for (const auto& theta : enumerate_automorphisms(G))
            for (const auto& phi : rep.morphisms) CHECK(all.count(conjugate(phi, theta).perm().table()) == 1);
    }
}

TEST_CASE("prime order groups carry only automorphisms") {
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        CHECK(enumerate_skew_morphisms(AbelianGroup({p})).counts.proper == 0);
    CHECK(enumerate_skew_morphisms(AbelianGroup({4})).counts.proper == 0);
    CHECK(enumerate_skew_morphisms(AbelianGroup({15})).counts.proper == 0);  // gcd(15, phi(15)) = 1
}

TEST_CASE("threads do not change the result") {
    for (const auto& f : std::vector<std::vector<int>>{{24}, {2, 8}}) {
        const AbelianGroup G(f);
        const auto one = enumerate_skew_morphisms(G, {0, 1});
        const auto four = enumerate_skew_morphisms(G, {0, 4});
        CHECK(tables(one.morphisms) == tables(four.morphisms));
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(enumerate_skew_morphisms(AbelianGroup({65})), GuardError);
    CHECK_THROWS_AS(enumerate_skew_morphisms(AbelianGroup({2, 18})), GuardError);
    CHECK_THROWS_AS(brute_force_oracle(AbelianGroup({11})), GuardError);
    CHECK_NOTHROW(enumerate_skew_morphisms(AbelianGroup({5}), {5, 1}));
    CHECK_THROWS_AS(enumerate_skew_morphisms(AbelianGroup({6}), {5, 1}), GuardError);
}

TEST_CASE("smooth-only predicate") {
    const std::set<std::int64_t> not_smooth_only = {9, 18, 25, 27, 32, 36};
    for (std::int64_t n = 1; n <= 40; ++n) CHECK(smooth_only_predicate(n) == (not_smooth_only.count(n) == 0));
    CHECK(smooth_only_predicate(48));
    CHECK(smooth_only_predicate(105));
    CHECK_FALSE(smooth_only_predicate(64));
    CHECK_THROWS(smooth_only_predicate(0));
}

TEST_CASE("theorem2 necessary condition") {
    CHECK_FALSE(theorem2_necessary(AbelianGroup({3, 3})));
    CHECK_FALSE(theorem2_necessary(AbelianGroup({2, 32})));
    CHECK_FALSE(theorem2_necessary(AbelianGroup({3, 6})));
    CHECK(theorem2_necessary(AbelianGroup({2, 2})));
    CHECK(theorem2_necessary(AbelianGroup({2, 16})));
    CHECK_THROWS_AS(theorem2_necessary(AbelianGroup({6})), std::invalid_argument);
}

TEST_CASE("non-smooth morphisms of small cyclic groups appear exactly where predicted") {
    const auto v = verify_theorem1(20);
    CHECK(v.pass);
    std::set<std::int64_t> nonsmooth;
    for (const auto& row : v.rows)
        if (row.nonsmooth) nonsmooth.insert(row.n);
    CHECK(nonsmooth == std::set<std::int64_t>{9, 18});
}

}
