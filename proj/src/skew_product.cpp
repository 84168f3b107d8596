#include "skewmorph/skew_product.hpp"

#include <set>

#include "skewmorph/number_theory.hpp"

namespace skewmorph {

namespace {

std::vector<Element> translation_compose(const AbelianGroup& A, Element a, const std::vector<Element>& t) {
    std::vector<Element> out(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) out[x] = A.add(a, t[x]);
    return out;
}

}  // namespace

SkewProductGroup::SkewProductGroup(SkewMorphism phi) : phi_(std::move(phi)) {
    const auto& A = phi_.group();
    const std::size_t n = A.order();
    const std::int64_t m = phi_.order();

    std::set<std::vector<Element>> tables;
    for (Element a = 0; a < n; ++a)
        for (std::int64_t i = 0; i < m; ++i) {
            elements_.push_back({a, i});
            tables.insert(as_permutation({a, i}).table());
        }
    if (tables.size() != n * static_cast<std::size_t>(m))
        throw ConsistencyError("skew product group: factorization L_A<phi> is not complementary");

    // Closure under the generators L_g (g a generator of A) and phi, checked
    // on raw permutations and against the coset rule.
    std::vector<ProductElement> gens{{0, m > 1 ? 1 : 0}};
    std::vector<Element> all(n);
    for (Element x = 0; x < n; ++x) all[x] = x;
    for (Element g : minimal_generators(A, all)) gens.push_back({g, 0});
    for (const auto& x : elements_)
        for (const auto& g : gens) {
            const auto composed = as_permutation(x).compose(as_permutation(g));
            if (!tables.count(composed.table()))
                throw ConsistencyError("skew product group: not closed under a generator");
            if (as_permutation(multiply(x, g)) != composed)
                throw ConsistencyError("skew product group: coset rule disagrees with composition");
        }
}

ProductElement SkewProductGroup::multiply(ProductElement x, ProductElement y) const {
    const auto& A = phi_.group();
    const Element a = A.add(x.a, phi_.apply_power(y.a, x.i));
    const std::int64_t i = nt::mod(power_sum(phi_, y.a, x.i) + y.i, phi_.order());
    return {a, i};
}

ProductElement SkewProductGroup::inverse(ProductElement x) const {
    // (a, i)^{-1} = phi^{-i} L_{-a}; phi^{-i} = phi^{m-i} brings it to normal form.
    const std::int64_t m = phi_.order();
    const ProductElement rot{0, nt::mod(-x.i, m)};
    return multiply(rot, {phi_.group().neg(x.a), 0});
}

Permutation SkewProductGroup::as_permutation(ProductElement x) const {
    const auto power = phi_.perm().power(x.i);
    return Permutation(translation_compose(phi_.group(), x.a, power.table()));
}

bool SkewProductGroup::verify_closure_exhaustive() const {
    std::vector<Permutation> perms;
    perms.reserve(elements_.size());
    for (const auto& e : elements_) perms.push_back(as_permutation(e));
    for (std::size_t u = 0; u < elements_.size(); ++u)
        for (std::size_t v = 0; v < elements_.size(); ++v)
            if (perms[u].compose(perms[v]) != as_permutation(multiply(elements_[u], elements_[v]))) return false;
    for (std::size_t u = 0; u < elements_.size(); ++u)
        if (!perms[u].compose(as_permutation(inverse(elements_[u]))).is_identity()) return false;
    return true;
}

bool is_corefree_cyclic_part(const SkewProductGroup& G) {
    const auto& phi = G.base();
    const auto& A = phi.group();
    const std::size_t n = A.order();
    std::set<std::vector<Element>> cyclic;
    for (std::int64_t i = 0; i < phi.order(); ++i) cyclic.insert(phi.perm().power(i).table());

    // phi^i is in the core iff L_a phi^i L_{-a} lies in <phi> for every a.
    for (std::int64_t i = 1; i < phi.order(); ++i) {
        const auto pi = phi.perm().power(i);
        bool in_all = true;
        for (Element a = 0; a < n && in_all; ++a) {
            std::vector<Element> t(n);
            for (Element x = 0; x < n; ++x) t[x] = A.add(a, pi[A.sub(x, a)]);
            in_all = cyclic.count(t) > 0;
        }
        if (in_all) return false;
    }
    return true;
}

Subgroup core_of_translations(const SkewProductGroup& G) {
    const auto& phi = G.base();
    const auto& A = phi.group();
    const std::size_t n = A.order();
    std::vector<Permutation> powers;
    for (std::int64_t j = 0; j < phi.order(); ++j) powers.push_back(phi.perm().power(j));

    std::vector<Element> members;
    for (Element b = 0; b < n; ++b) {
        bool normal = true;
        for (std::int64_t j = 0; j < phi.order() && normal; ++j) {
            const auto& fwd = powers[j];
            const auto& back = powers[static_cast<std::size_t>(nt::mod(-j, phi.order()))];
            // phi^j L_b phi^{-j} must be a translation x -> x + c.
            const Element c = fwd[A.add(b, back[0])];
            for (Element x = 0; x < n && normal; ++x) normal = fwd[A.add(b, back[x])] == A.add(x, c);
        }
        if (normal) members.push_back(b);
    }
    auto s = as_subgroup(A, std::move(members));
    if (!s) throw ConsistencyError("core of translations is not a subgroup");
    return std::move(s).value();
}

}  // namespace skewmorph
