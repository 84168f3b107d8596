#pragma once

// Finite abelian groups Z_{f1} x ... x Z_{fr} with elements encoded as
// mixed-radix indices (last factor least significant, index 0 = identity),
// plus permutations of the element set, subgroups, automorphisms and
// quotients.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewmorph/errors.hpp"

namespace skewmorph {

inline constexpr std::size_t kDefaultSubgroupGuard = 256;

class AbelianGroup {
  public:
    /// Trivial group.
    AbelianGroup();
    /// Throws GroupError if any factor is < 2.
    explicit AbelianGroup(std::vector<int> factors);

    /// Parses "Z6", "Z2xZ4", "z3xz3" (case-insensitive). "Z1" alone is the
    /// trivial group.
    static AbelianGroup parse(std::string_view literal);

    const std::vector<int>& factors() const noexcept { return factors_; }
    std::size_t order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    /// Canonical literal, e.g. "Z2xZ4"; the trivial group prints as "Z1".
    std::string label() const;

    /// True iff the group is cyclic, i.e. its factors are pairwise coprime.
    bool is_cyclic() const noexcept;

    static constexpr Element identity() noexcept { return 0; }

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    /// k*a for any integer k (negative allowed).
    Element multiple(Element a, std::int64_t k) const;
    int element_order(Element a) const;

    std::vector<int> coords(Element a) const;
    Element index(std::span<const int> coords) const;

    /// Unit vector of factor i: (0,...,1,...,0).
    Element unit(std::size_t i) const;

    void check(Element a) const;

    bool operator==(const AbelianGroup& o) const noexcept { return factors_ == o.factors_; }

  private:
    std::vector<int> factors_;
    std::size_t order_ = 1;
    std::vector<std::size_t> stride_;
    // Shared immutable caches; copies of a group share them.
    std::shared_ptr<const std::vector<Element>> add_table_;
    std::shared_ptr<const std::vector<Element>> neg_table_;

    Element add_slow(Element a, Element b) const;
};

AbelianGroup make_group(std::vector<int> factors);

/// A bijection of {0, ..., n-1}; image of i is table[i].
class Permutation {
  public:
    Permutation() = default;
    /// Throws std::invalid_argument if `table` is not a bijection.
    explicit Permutation(std::vector<Element> table);
    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return table_.size(); }
    Element operator[](Element i) const { return table_[i]; }
    const std::vector<Element>& table() const noexcept { return table_; }

    /// (this * q)(x) = this(q(x)).
    Permutation compose(const Permutation& q) const;
    Permutation inverse() const;
    /// Handles negative k via the inverse.
    Permutation power(std::int64_t k) const;
    /// Image of x under this^k without materializing the power.
    Element apply_power(Element x, std::int64_t k) const;
    /// lcm of cycle lengths. Throws GuardError on 64-bit overflow.
    std::uint64_t order() const;
    std::vector<std::vector<Element>> cycles() const;
    bool is_identity() const noexcept;

    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<Element> table_;
};

bool is_bijection(std::span<const Element> table);

/// An element subset closed under the group operation.
struct Subgroup {
    std::vector<Element> members;     // sorted
    std::vector<Element> generators;  // minimal generating sequence

    std::size_t size() const noexcept { return members.size(); }
    bool contains(Element a) const;
    bool operator==(const Subgroup& o) const { return members == o.members; }
};

/// Subgroup generated by `gens`.
Subgroup generate_subgroup(const AbelianGroup& G, std::span<const Element> gens);
/// Builds a Subgroup from a member set; nullopt-like rejection if not closed.
Result<Subgroup> as_subgroup(const AbelianGroup& G, std::vector<Element> members);
/// Minimal generating sequence of the subgroup with these (sorted) members.
std::vector<Element> minimal_generators(const AbelianGroup& G, std::span<const Element> members);

/// Every subgroup exactly once, sorted by (size, members).
std::vector<Subgroup> enumerate_subgroups(const AbelianGroup& G,
                                          std::size_t guard = kDefaultSubgroupGuard);

class Automorphism {
  public:
    /// Throws std::invalid_argument unless `p` is additive on G.
    Automorphism(const AbelianGroup& G, Permutation p);
    const Permutation& perm() const noexcept { return perm_; }
    Element operator()(Element a) const { return perm_[a]; }
    Automorphism compose(const Automorphism& o) const;
    Automorphism inverse() const;

  private:
    friend std::vector<Automorphism> enumerate_automorphisms(const AbelianGroup&, std::size_t);
    Automorphism(Permutation p, int) : perm_(std::move(p)) {}
    Permutation perm_;
};

bool is_automorphism(const AbelianGroup& G, const Permutation& p);

/// Automorphisms of the subgroup with these members, each as a map on G's
/// element indices (-1 outside the subgroup). Sorted.
std::vector<std::vector<std::int64_t>> subgroup_automorphisms(const AbelianGroup& G,
                                                              std::span<const Element> members);

/// All automorphisms, sorted by table. Images of a minimal generating
/// sequence are assigned by depth-first search and the induced map validated.
std::vector<Automorphism> enumerate_automorphisms(const AbelianGroup& G,
                                                  std::size_t guard = kDefaultSubgroupGuard);

struct Quotient {
    AbelianGroup group;              // invariant-factor form
    std::vector<Element> projection;  // element of G -> element of the quotient
};

/// G / B in invariant-factor form with an explicit projection homomorphism.
/// Throws std::invalid_argument if B is not closed.
Quotient quotient_group(const AbelianGroup& G, const Subgroup& B);

/// One cyclic primary summand Z_{p^e} of G together with a basis element of
/// that order; the listed elements form a basis of G.
struct PrimaryComponent {
    std::int64_t prime;
    int exponent;
    Element generator;
    std::int64_t order() const;
};

std::vector<PrimaryComponent> primary_components(const AbelianGroup& G);

/// Invariant factors (d1 | d2 | ...) of an abelian group with these cyclic factors.
std::vector<int> invariant_factors(std::span<const int> factors);

}  // namespace skewmorph
