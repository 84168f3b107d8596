#pragma once

// Exhaustive enumeration of the skew morphisms of a small abelian group: a
// factorial oracle and a search organised by kernel (the restriction to the
// kernel is an automorphism and the cosets are permuted by a skew morphism of
// the quotient), plus the arithmetic predicates they are compared against.

#include <cstdint>
#include <vector>

#include "skewmorph/skew_morphism.hpp"

namespace skewmorph {

inline constexpr std::size_t kOracleGuard = 10;
inline constexpr std::size_t kCyclicGuard = 64;
inline constexpr std::size_t kGeneralGuard = 32;

struct Counts {
    std::size_t total = 0;
    std::size_t automorphisms = 0;
    std::size_t proper = 0;
    std::size_t smooth = 0;
    std::size_t nonsmooth = 0;
    bool operator==(const Counts&) const = default;
};

struct EnumerationReport {
    AbelianGroup group;
    std::vector<SkewMorphism> morphisms;  // sorted by perm table
    Counts counts;
    double elapsed_ms = 0;
};

Counts tally(std::span<const SkewMorphism> morphisms);

/// Every permutation fixing the identity, filtered by validate.
EnumerationReport brute_force_oracle(const AbelianGroup& G, std::size_t guard = kOracleGuard);

struct EnumerationOptions {
    /// Largest admissible |G|; 0 selects kCyclicGuard or kGeneralGuard.
    std::size_t max_order = 0;
    /// Worker threads for the root branches (at least 1).
    unsigned threads = 1;
};

/// Throws GuardError if |G| exceeds options.max_order or the default guard.
void require_within_guard(const AbelianGroup& G, const EnumerationOptions& options = {});

EnumerationReport enumerate_skew_morphisms(const AbelianGroup& G, const EnumerationOptions& options = {});

/// n = 2^e * n1 with e <= 4 and n1 odd square-free.
bool smooth_only_predicate(std::int64_t n);

/// For non-cyclic G: odd part of |G| square-free and no cyclic 2-primary
/// summand of order 2^e with e >= 5. Throws std::invalid_argument for cyclic G.
bool theorem2_necessary(const AbelianGroup& G);

struct Theorem1Row {
    std::int64_t n = 0;
    std::size_t total = 0;
    std::size_t nonsmooth = 0;
    bool predicate = false;  // smooth_only_predicate(n)
    bool pass = false;       // (nonsmooth == 0) == predicate
    double elapsed_ms = 0;
};

struct Theorem1Verdict {
    std::vector<Theorem1Row> rows;
    bool pass = true;
};

/// Enumerates Z_1 .. Z_max_n and compares against smooth_only_predicate.
Theorem1Verdict verify_theorem1(std::int64_t max_n, const EnumerationOptions& options = {});

}  // namespace skewmorph
