#pragma once

// Small integer helpers shared by the group code and the constructors.
// Everything works on int64_t; callers keep moduli well below 2^31 so that
// products fit without overflow.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace skewmorph::nt {

/// Canonical residue of `a` modulo `m` in [0, m). Requires m > 0.
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Least l >= 1 with a^l == 1 (mod m), or nullopt when gcd(a, m) != 1.
/// Every residue has order 1 modulo 1.
std::optional<std::int64_t> multiplicative_order(std::int64_t a, std::int64_t m);

/// Inverse of a modulo m, or nullopt when it does not exist.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_prime(std::int64_t n);
bool is_square_free(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Merge x == r1 (mod m1) with x == r2 (mod m2). Returns (r, lcm) or nullopt
/// when the two congruences are incompatible.
std::optional<std::pair<std::int64_t, std::int64_t>> crt(std::int64_t r1, std::int64_t m1,
                                                         std::int64_t r2, std::int64_t m2);

/// tau(s, t) = 1 + s + ... + s^(t-1) reduced modulo m.
std::int64_t geometric_sum(std::int64_t s, std::int64_t t, std::int64_t m);

/// lcm with overflow detection; nullopt if the result exceeds `limit`.
std::optional<std::uint64_t> checked_lcm(std::uint64_t a, std::uint64_t b,
                                         std::uint64_t limit = UINT64_MAX / 2);

}  // namespace skewmorph::nt
