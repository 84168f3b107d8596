#include <doctest.h>

#include <set>

#include "skewmorph/enumerate.hpp"
#include "skewmorph/skew_product.hpp"

using namespace skewmorph;

TEST_SUITE("skew_product") {

TEST_CASE("skew product group is L_A <phi> with trivial intersection") {
    for (const auto& f : std::vector<std::vector<int>>{{6}, {8}, {9}, {2, 4}, {3, 3}}) {
        for (const auto& phi : enumerate_skew_morphisms(AbelianGroup(f)).morphisms) {
            const SkewProductGroup P(phi);
            const auto n = phi.group().order();
            CHECK(P.order() == n * static_cast<std::size_t>(phi.order()));

            std::set<std::vector<Element>> tables;
            for (const auto& x : P.elements()) tables.insert(P.as_permutation(x).table());
            CHECK(tables.size() == P.order());
            CHECK(P.verify_closure_exhaustive());

            // L_a o phi^i fixes 0 only when a = 0.
            for (const auto& x : P.elements())
                if (P.as_permutation(x)[0] == 0) CHECK(x.a == 0);

            for (const auto& x : P.elements()) {
                const auto inv = P.inverse(x);
                CHECK(P.multiply(x, inv) == ProductElement{0, 0});
            }
            CHECK(is_corefree_cyclic_part(P));
            CHECK(core_of_translations(P) == core(phi));
        }
    }
}

TEST_CASE("multiplication is composition of permutations") {
    const auto all = enumerate_skew_morphisms(AbelianGroup({9})).morphisms;
    for (const auto& phi : all) {
        const SkewProductGroup P(phi);
        for (const auto& x : P.elements())
            for (const auto& y : P.elements())
                CHECK(P.as_permutation(P.multiply(x, y)) == P.as_permutation(x).compose(P.as_permutation(y)));
    }
}

}
