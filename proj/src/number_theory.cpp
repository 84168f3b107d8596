#include "skewmorph/number_theory.hpp"

#include <numeric>
#include <stdexcept>

namespace skewmorph::nt {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
    std::int64_t result = 1 % m;
    std::int64_t b = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = static_cast<std::int64_t>((__int128)result * b % m);
        b = static_cast<std::int64_t>((__int128)b * b % m);
        exp >>= 1;
    }
    return result;
}

std::optional<std::int64_t> multiplicative_order(std::int64_t a, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
    if (m == 1) return 1;
    a = mod(a, m);
    if (std::gcd(a, m) != 1) return std::nullopt;
    std::int64_t x = a;
    for (std::int64_t l = 1; l <= m; ++l) {
        if (x == 1) return l;
        x = static_cast<std::int64_t>((__int128)x * a % m);
    }
    return std::nullopt;  // unreachable for units
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("inverse_mod: modulus must be positive");
    std::int64_t old_r = mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::swap(old_r, r);
        r -= q * old_r;
        std::swap(old_s, s);
        s -= q * old_s;
    }
    if (old_r != 1 && m != 1) return std::nullopt;
    return mod(old_s, m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_square_free(std::int64_t n) {
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

std::optional<std::pair<std::int64_t, std::int64_t>> crt(std::int64_t r1, std::int64_t m1,
                                                         std::int64_t r2, std::int64_t m2) {
    r1 = mod(r1, m1);
    r2 = mod(r2, m2);
    std::int64_t g = std::gcd(m1, m2);
    if ((r2 - r1) % g != 0) return std::nullopt;
    std::int64_t l = m1 / g * m2;
    // Solve r1 + m1*k == r2 (mod m2)  =>  k == (r2-r1)/g * inv(m1/g) (mod m2/g)
    std::int64_t m2g = m2 / g;
    std::int64_t k = 0;
    if (m2g > 1) {
        auto inv = inverse_mod(m1 / g, m2g);
        k = static_cast<std::int64_t>((__int128)mod((r2 - r1) / g, m2g) * *inv % m2g);
    }
    return std::make_pair(mod(r1 + m1 * k, l), l);
}

std::int64_t geometric_sum(std::int64_t s, std::int64_t t, std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("geometric_sum: modulus must be positive");
    std::int64_t sum = 0, term = 1 % m;
    s = mod(s, m);
    for (std::int64_t i = 0; i < t; ++i) {
        sum = (sum + term) % m;
        term = static_cast<std::int64_t>((__int128)term * s % m);
    }
    return sum;
}

std::optional<std::uint64_t> checked_lcm(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
    std::uint64_t g = std::gcd(a, b);
    std::uint64_t q = a / g;
    if (b != 0 && q > limit / b) return std::nullopt;
    return q * b;
}

}  // namespace skewmorph::nt
