#include "skewmorph/invariants.hpp"

#include "skewmorph/number_theory.hpp"
#include "skewmorph/skew_product.hpp"

namespace skewmorph {

namespace {

InvariantFailure fail(const char* property, std::optional<Element> a = {}, std::optional<Element> b = {}) {
    return InvariantFailure{property, a, b};
}

}  // namespace

std::optional<InvariantFailure> check_invariants(const SkewMorphism& phi) {
    const AbelianGroup& G = phi.group();
    const auto n = static_cast<Element>(G.order());
    const std::int64_t m = phi.order();
    const auto& pw = phi.power();

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (phi(G.add(a, b)) != G.add(phi(a), phi.apply_power(b, pw[a]))) return fail("defining identity", a, b);

    const Subgroup K = kernel(phi);
    for (Element a : K.members)
        for (Element b : K.members)
            if (!K.contains(G.add(a, b))) return fail("kernel is a subgroup", a, b);
    for (Element a : K.members)
        if (!K.contains(phi(a))) return fail("phi(Ker) = Ker", a);
    if (n > 1 && K.size() == 1) return fail("nontrivial kernel");

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if ((pw[a] == pw[b]) != K.contains(G.sub(a, b))) return fail("pi(a) = pi(b) iff a - b in Ker", a, b);

    if (core(phi) != K) return fail("core = kernel");

    bool constant_on_cycles = true;
    for (Element a = 0; a < n; ++a)
        if (pw[phi(a)] != pw[a]) constant_on_cycles = false;
    if (constant_on_cycles != is_smooth(phi)) return fail("smooth iff pi constant on cycles");

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            std::int64_t sum = 0;
            Element x = b;
            for (std::int64_t i = 0; i < pw[a]; ++i, x = phi(x)) sum += pw[x];
            if (nt::mod(sum, m) != pw[G.add(a, b)]) return fail("sum identity", a, b);
        }

    const SkewProductGroup product(phi);
    if (product.order() != static_cast<std::size_t>(n) * static_cast<std::size_t>(m))
        return fail("skew product group order");
    if (core_of_translations(product) != K) return fail("core of translations = core");
    return std::nullopt;
}

}  // namespace skewmorph
