#pragma once

// Skew morphisms of finite abelian groups: a permutation phi fixing the
// identity such that phi(a + b) = phi(a) + phi^pi(a)(b) for all a, b. The power
// function pi is derived here, never accepted on trust.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "skewmorph/abelian_group.hpp"

namespace skewmorph {

class SkewMorphism;

/// Checks the defining identity and derives the power function. Rejections
/// name the smallest failing a (and b when one exists).
Result<SkewMorphism> validate(const AbelianGroup& G, const Permutation& p);

class SkewMorphism {
  public:
    const AbelianGroup& group() const noexcept { return group_; }
    const Permutation& perm() const noexcept { return perm_; }
    /// |phi|, the order of the permutation.
    std::int64_t order() const noexcept { return order_; }
    /// pi as canonical residues in [0, order). For order 1 every value is 0.
    const std::vector<std::int64_t>& power() const noexcept { return power_; }

    Element operator()(Element a) const { return perm_[a]; }
    /// phi^k(a); k may be negative.
    Element apply_power(Element a, std::int64_t k) const;

    bool operator==(const SkewMorphism& o) const { return group_ == o.group_ && perm_ == o.perm_; }
    bool operator<(const SkewMorphism& o) const { return perm_ < o.perm_; }

  private:
    friend Result<SkewMorphism> validate(const AbelianGroup&, const Permutation&);
    SkewMorphism(AbelianGroup g, Permutation p, std::int64_t m, std::vector<std::int64_t> pw)
        : group_(std::move(g)), perm_(std::move(p)), order_(m), power_(std::move(pw)) {}

    AbelianGroup group_;
    Permutation perm_;
    std::int64_t order_;
    std::vector<std::int64_t> power_;
};

/// Convenience: validate and throw ConsistencyError with the rejection text.
SkewMorphism require_skew(const AbelianGroup& G, const Permutation& p, const char* context);

/// pi == 1 (mod |phi|) everywhere. Vacuous for order 1.
bool is_automorphism(const SkewMorphism& phi);
inline bool is_proper(const SkewMorphism& phi) { return !is_automorphism(phi); }

/// pi(phi(a)) == pi(a) (mod |phi|) for all a.
bool is_smooth(const SkewMorphism& phi);

/// {a : pi(a) == 1 (mod |phi|)}.
Subgroup kernel(const SkewMorphism& phi);

/// Intersection of phi^i(Ker phi) over i = 1..|phi|.
Subgroup core(const SkewMorphism& phi);

/// |A : Ker phi|.
std::int64_t skew_type(const SkewMorphism& phi);

/// sum_{i=0}^{k-1} pi(phi^i(a)) mod |phi|: the exponent in
/// phi^k(a + b) = phi^k(a) + phi^{sigma(a,k)}(b).
std::int64_t power_sum(const SkewMorphism& phi, Element a, std::int64_t k);

/// The morphism induced on A/B. Rejected when the coset partition of B is not
/// phi-invariant; throws ConsistencyError if the induced map is invariant but
/// fails validation or breaks pi-bar(a-bar) == pi(a) (mod |phi-bar|).
struct InducedSkew {
    SkewMorphism morphism;
    Quotient quotient;
};
Result<InducedSkew> quotient_skew(const SkewMorphism& phi, const Subgroup& B);

/// theta * phi * theta^{-1}, revalidated.
SkewMorphism conjugate(const SkewMorphism& phi, const Automorphism& theta);

/// Orbits of the conjugation action of `autos` on `morphisms`. Each class
/// lists indices into `morphisms`, classes ordered by their first index.
std::vector<std::vector<std::size_t>> equivalence_classes(std::span<const SkewMorphism> morphisms,
                                                          std::span<const Automorphism> autos);

/// Reciprocity of phi on Z_m and psi on Z_n. Throws std::invalid_argument when
/// either group is not given as a single cyclic factor (or trivial).
bool is_reciprocal_pair(const SkewMorphism& phi, const SkewMorphism& psi);

}  // namespace skewmorph
