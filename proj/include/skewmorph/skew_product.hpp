#pragma once

#include <cstdint>
#include <vector>

#include "skewmorph/skew_morphism.hpp"

namespace skewmorph {

/// L_a o phi^i, named by its unique factorization.
struct ProductElement {
    Element a;
    std::int64_t i;
    auto operator<=>(const ProductElement&) const = default;
};

/// The permutation group <L_A, phi> = L_A <phi>. Elements are stored as
/// (a, i) pairs and multiplied with the coset rule
///   phi^i L_b = L_{phi^i(b)} phi^{sigma(b, i)}.
/// Construction checks the factorization against the actual permutations:
/// |A| * |phi| distinct tables, closed under multiplication by generators.
class SkewProductGroup {
  public:
    explicit SkewProductGroup(SkewMorphism phi);

    const SkewMorphism& base() const noexcept { return phi_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<ProductElement>& elements() const noexcept { return elements_; }

    ProductElement multiply(ProductElement x, ProductElement y) const;
    ProductElement inverse(ProductElement x) const;
    /// x -> a + phi^i(x).
    Permutation as_permutation(ProductElement x) const;

    /// Composes every pair of elements as permutations and checks the result
    /// against the coset rule. Quadratic in the group order; for tests.
    bool verify_closure_exhaustive() const;

  private:
    SkewMorphism phi_;
    std::vector<ProductElement> elements_;
};

/// Whether <phi> contains no nontrivial subgroup normal in G (intersection of
/// the conjugates of <phi>).
bool is_corefree_cyclic_part(const SkewProductGroup& G);

/// Largest B <= A with L_B normal in G, computed from permutation tables.
Subgroup core_of_translations(const SkewProductGroup& G);

}  // namespace skewmorph
