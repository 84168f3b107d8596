#pragma once

// Explicit families of skew morphisms: smooth skew morphisms of cyclic groups,
// square roots of automorphisms, proper skew morphisms of Z_p x Z_p, direct
// products, and non-smooth witnesses. Every output is revalidated and checked
// against its closed-form order, skew-type and power function.

#include <cstdint>
#include <optional>
#include <vector>

#include "skewmorph/skew_morphism.hpp"

namespace skewmorph {

/// Smooth cyclic family on Z_n:
///   phi(x) = x + r*k*(1 + tau + ... + tau^(x-1)),  tau = tau(s, t),
///   pi(x)  = t^x (mod m).
struct CsmParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t m = 0;  // derived by check_csm
    auto operator<=>(const CsmParams&) const = default;
};

/// Canonicalizes r, s into [0, n/k), computes m and checks conditions (a)-(d).
/// Throws ParameterError naming the failing condition.
CsmParams check_csm(CsmParams p);
SkewMorphism csm_construct(const CsmParams& params);
/// Every (k, r, s, t) with k a proper divisor > 1, r in [0, n/k), s a unit in
/// [1, n/k), t a unit in [1, m), passing (a)-(d). Sorted.
std::vector<CsmParams> enumerate_csm_params(std::int64_t n, std::int64_t guard = 4096);

/// Square roots of automorphisms on Z_n:
///   phi(x) = s*x - x(x-1)/2 * n/k,  |phi| = 2*k*l,  pi(x) = 1 + 2*x*w'*l.
struct RootParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t s = 0;
    // derived by check_root
    std::int64_t ell = 0;
    std::int64_t w = 0;
    std::int64_t w_inv = 0;
    std::int64_t m = 0;
};

RootParams check_root(RootParams p);
SkewMorphism root_construct(const RootParams& params);

/// Non-smooth witness on Z_{p^e}, p odd prime, e >= 2 (k = p, s = -1).
SkewMorphism pns_witness_odd(std::int64_t p, int e);
/// Non-smooth witness on Z_{2^e}, e >= 5 (k = 4, s = -1).
SkewMorphism pns_witness_two(int e);

/// Proper skew morphisms of Z_p x Z_p in the basis a = (1,0), x = (0,1):
///   a^i x^j -> a^(r*i + d*r*nu*j(j-1)/2) (b x^r)^j,  b = a^beta,
/// with beta the unique value that makes the table a skew morphism.
struct NseParams {
    std::int64_t p = 0;
    std::int64_t d = 0;
    std::int64_t nu = 0;
    std::int64_t r = 0;
    // derived by nse_construct
    std::int64_t beta = 0;
    std::int64_t k = 0;
};

struct NseResult {
    SkewMorphism morphism;
    NseParams params;
};

/// Throws ParameterError for bad parameters and ConsistencyError if zero or
/// several kernel elements b validate.
NseResult nse_construct(NseParams params);

/// phi x psi on A x B (factors of A followed by those of B), accepted iff
/// pi_phi(a) == pi_psi(b) == 1 (mod gcd(|phi|, |psi|)) for all a, b.
Result<SkewMorphism> direct_product(const SkewMorphism& phi, const SkewMorphism& psi);

/// Identity morphism of G.
SkewMorphism identity_morphism(const AbelianGroup& G);

/// Transports phi along the isomorphism `iso` (element of phi's group -> element of H).
SkewMorphism transport(const SkewMorphism& phi, const AbelianGroup& H, const std::vector<Element>& iso);

/// A non-smooth skew morphism of G built from the families above extended by
/// the identity, or nullopt if none of the constructions applies.
std::optional<SkewMorphism> nonsmooth_witness(const AbelianGroup& G);

}  // namespace skewmorph
