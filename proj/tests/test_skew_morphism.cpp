#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "skewmorph/enumerate.hpp"
#include "skewmorph/skew_morphism.hpp"

using namespace skewmorph;

namespace {

const std::vector<std::vector<int>> kOracleGroups = {{2}, {3}, {4}, {5}, {6}, {7}, {8}, {2, 2}, {2, 4}, {2, 2, 2}};

bool nt_mod_eq(std::int64_t a, std::int64_t b, std::int64_t m) { return ((a - b) % m + m) % m == 0; }

std::vector<Element> naive_kernel(const oracle::Skew& s) {
    std::vector<Element> k;
    for (Element a = 0; a < s.power.size(); ++a)
        if (s.power[a] == 1 % s.order) k.push_back(a);
    return k;
}

}  // namespace

TEST_SUITE("skew_morphism") {

TEST_CASE("validate agrees with the exponent-by-exponent oracle on every permutation") {
    for (const auto& f : kOracleGroups) {
        const AbelianGroup G(f);
        std::vector<Element> t(G.order());
        std::iota(t.begin(), t.end(), Element{0});
        std::size_t accepted = 0;
        do {
            const auto expected = oracle::validate(G, t);
            const auto got = validate(G, Permutation(t));
            REQUIRE(got.ok() == expected.has_value());
            if (!expected) continue;
            ++accepted;
            const SkewMorphism& phi = *got;
            CHECK(phi.order() == expected->order);
            for (Element a = 0; a < G.order(); ++a) CHECK(phi.power()[a] == expected->power[a] % expected->order);
            CHECK(kernel(phi).members == naive_kernel(*expected));
            CHECK(skew_type(phi) == static_cast<std::int64_t>(G.order() / naive_kernel(*expected).size()));
            bool smooth = true;
            for (Element a = 0; a < G.order(); ++a)
                if (expected->power[t[a]] != expected->power[a]) smooth = false;
            CHECK(is_smooth(phi) == smooth);
            CHECK(is_automorphism(phi) == oracle::is_homomorphism(G, t));
        } while (std::next_permutation(t.begin() + 1, t.end()));
        CHECK(accepted > 0);
    }
}

TEST_CASE("rejections name the first failing element") {
    const AbelianGroup G({4});
    const auto moved = validate(G, Permutation({1, 0, 2, 3}));
    REQUIRE_FALSE(moved.ok());
    CHECK(moved.rejection().reason == "identity moved");

    // 0 -> 0, 1 -> 2, 2 -> 1, 3 -> 3: a = 0 always passes, a = 1 fails.
    const auto bad = validate(G, Permutation({0, 2, 1, 3}));
    REQUIRE_FALSE(bad.ok());
    REQUIRE(bad.rejection().a.has_value());
    CHECK(*bad.rejection().a == 1);
    CHECK_THROWS_AS(require_skew(G, Permutation({0, 2, 1, 3}), "test"), ConsistencyError);
    CHECK_THROWS_AS(validate(G, Permutation({0, 1})), std::invalid_argument);
}

TEST_CASE("the identity has order 1 and power 0") {
    const auto id = require_skew(AbelianGroup({5}), Permutation::identity(5), "test");
    CHECK(id.order() == 1);
    CHECK(id.power() == std::vector<std::int64_t>(5, 0));
    CHECK(is_automorphism(id));
    CHECK(is_smooth(id));
    CHECK(skew_type(id) == 1);
}

TEST_CASE("csm table for Z6 is a proper smooth skew morphism") {
    const auto phi = require_skew(AbelianGroup({6}), Permutation({0, 3, 2, 5, 4, 1}), "test");
    CHECK(phi.order() == 3);
    CHECK(phi.power() == std::vector<std::int64_t>{1, 2, 1, 2, 1, 2});
    CHECK(is_proper(phi));
    CHECK(is_smooth(phi));
    CHECK(skew_type(phi) == 2);
    CHECK(kernel(phi).members == std::vector<Element>{0, 2, 4});
}

TEST_CASE("power_sum composes the defining identity") {
    const auto all = enumerate_skew_morphisms(AbelianGroup({9})).morphisms;
    for (const auto& phi : all) {
        const AbelianGroup& G = phi.group();
        for (Element a = 0; a < G.order(); ++a)
            for (std::int64_t k = 0; k <= phi.order() + 1; ++k) {
                const auto s = power_sum(phi, a, k);
                for (Element b = 0; b < G.order(); ++b)
                    CHECK(phi.apply_power(G.add(a, b), k) == G.add(phi.apply_power(a, k), phi.apply_power(b, s)));
            }
    }
}

TEST_CASE("kernel, core and pi(a) = pi(b) iff a - b in Ker (corrected reading)") {
    for (const auto& f : std::vector<std::vector<int>>{{8}, {9}, {12}, {2, 4}, {3, 3}, {2, 6}}) {
        for (const auto& phi : enumerate_skew_morphisms(AbelianGroup(f)).morphisms) {
            const auto K = kernel(phi);
            CHECK(core(phi) == K);
            for (Element a : K.members) CHECK(K.contains(phi(a)));
            if (phi.group().order() > 1) CHECK(K.size() > 1);
            for (Element a = 0; a < phi.group().order(); ++a)
                for (Element b = 0; b < phi.group().order(); ++b)
                    CHECK((phi.power()[a] == phi.power()[b]) == K.contains(phi.group().sub(a, b)));
        }
    }
}

TEST_CASE("quotient_skew induces pi-bar from pi") {
    for (const auto& phi : enumerate_skew_morphisms(AbelianGroup({2, 6})).morphisms) {
        const auto& G = phi.group();
        for (const auto& B : enumerate_subgroups(G)) {
            bool invariant = true;
            for (Element a = 0; a < G.order() && invariant; ++a)
                for (Element b : B.members)
                    if (!B.contains(G.sub(phi(G.add(a, b)), phi(a)))) invariant = false;
            const auto r = quotient_skew(phi, B);
            CHECK(r.ok() == invariant);
            if (!r) continue;
            const auto& bar = r->morphism;
            const auto& proj = r->quotient.projection;
            for (Element a = 0; a < G.order(); ++a) {
                CHECK(bar(proj[a]) == proj[phi(a)]);
                CHECK(nt_mod_eq(bar.power()[proj[a]], phi.power()[a], bar.order()));
            }
        }
        CHECK(quotient_skew(phi, kernel(phi)).ok());
    }
}

TEST_CASE("conjugation preserves order, smoothness, skew-type and kernel size") {
    const AbelianGroup G({3, 3});
    const auto autos = enumerate_automorphisms(G);
    const auto all = enumerate_skew_morphisms(G).morphisms;
    std::set<std::vector<Element>> tables;
    for (const auto& phi : all) tables.insert(phi.perm().table());
    for (const auto& phi : all)
        for (const auto& theta : autos) {
            const auto psi = conjugate(phi, theta);
            CHECK(psi.order() == phi.order());
            CHECK(is_smooth(psi) == is_smooth(phi));
            CHECK(skew_type(psi) == skew_type(phi));
            CHECK(kernel(psi).size() == kernel(phi).size());
            CHECK(tables.count(psi.perm().table()) == 1);
        }
    const auto classes = equivalence_classes(all, autos);
    std::size_t covered = 0;
    for (const auto& c : classes) covered += c.size();
    CHECK(covered == all.size());
}

TEST_CASE("reciprocal pairs") {
    const auto z1 = enumerate_skew_morphisms(AbelianGroup()).morphisms;
    CHECK(is_reciprocal_pair(z1[0], z1[0]));

    const auto z3 = enumerate_skew_morphisms(AbelianGroup({3})).morphisms;
    std::size_t count = 0;
    for (const auto& a : z3)
        for (const auto& b : z3) count += is_reciprocal_pair(a, b);
    CHECK(count == 1);

    CHECK_THROWS_AS(is_reciprocal_pair(enumerate_skew_morphisms(AbelianGroup({2, 2})).morphisms[0], z3[0]),
                    std::invalid_argument);

    for (int m = 2; m <= 12; ++m)
        for (int n = 2; n <= 12; ++n) {
            const auto A = enumerate_skew_morphisms(AbelianGroup({m})).morphisms;
            const auto B = enumerate_skew_morphisms(AbelianGroup({n})).morphisms;
            for (const auto& a : A)
                for (const auto& b : B) {
                    if (!is_reciprocal_pair(a, b)) continue;
                    CHECK(n % a.order() == 0);
                    CHECK(m % b.order() == 0);
                    if (is_automorphism(a)) CHECK(is_smooth(b));
                    if (is_automorphism(b)) CHECK(is_smooth(a));
                    CHECK(is_reciprocal_pair(b, a));
                }
        }
}

}
