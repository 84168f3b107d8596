#include "skewmorph/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "skewmorph/number_theory.hpp"

namespace skewmorph {

namespace {

using nt::mod;

[[noreturn]] void reject(const std::string& condition, const std::string& what) {
    throw ParameterError(condition, what + " [condition " + condition + "]");
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError(what);
}

// Least m >= 1 with r * tau(s, m) == 0 (mod N). The affine map
// x -> s*x + 1 is a bijection of Z_N (s a unit), so tau(s, .) returns to 0.
std::int64_t csm_order(std::int64_t r, std::int64_t s, std::int64_t N) {
    std::int64_t tau = 0;
    for (std::int64_t m = 1; m <= N * N + 1; ++m) {
        tau = mod(tau * s + 1, N);
        if (mod(r * tau, N) == 0) return m;
    }
    throw ConsistencyError("csm: tau(s, m) never vanishes");
}

// Name of the first failing condition of a CSM tuple with m already set.
std::optional<std::string> csm_failure(const CsmParams& p) {
    const std::int64_t N = p.n / p.k;
    if (p.t < 1 || std::gcd(p.t, p.m) != 1) return "(b)";
    auto ord = nt::multiplicative_order(p.t, p.m);
    if (!ord || *ord != p.k) return "(b)";
    const std::int64_t tau = nt::geometric_sum(p.s, p.t, N);
    // r * (tau^k - 1) / (tau - 1) computed as r * sum_{j<k} tau^j.
    if (mod(p.s - 1, N) != mod(p.r * nt::geometric_sum(tau, p.k, N), N)) return "(c)";
    if (nt::pow_mod(p.s, p.t - 1, N) != 1 % N) return "(d)";
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- smooth cyclic family

CsmParams check_csm(CsmParams p) {
    if (p.n < 2) reject("n", "n must be > 1");
    if (p.k <= 1 || p.k >= p.n || p.n % p.k != 0) reject("k", "k must be a proper divisor of n with k > 1");
    const std::int64_t N = p.n / p.k;
    p.r = mod(p.r, N);
    p.s = mod(p.s, N);
    if (std::gcd(p.s, N) != 1) reject("s", "s must be a unit modulo n/k");
    if (p.t < 1) reject("t", "t must be positive");
    p.m = csm_order(p.r, p.s, N);
    if (auto f = csm_failure(p)) reject(*f, "csm parameters fail");
    return p;
}

SkewMorphism csm_construct(const CsmParams& params) {
    const CsmParams p = check_csm(params);
    const std::int64_t N = p.n / p.k;
    const std::int64_t tau = nt::geometric_sum(p.s, p.t, N);
    const std::int64_t rk = mod(p.r * p.k, p.n);

    std::vector<Element> table(static_cast<std::size_t>(p.n));
    std::int64_t geo = 0, term = 1 % N;  // geo = sum_{j<x} tau^j (mod N)
    for (std::int64_t x = 0; x < p.n; ++x) {
        table[static_cast<std::size_t>(x)] = static_cast<Element>(mod(x + rk * geo, p.n));
        geo = mod(geo + term, N);
        term = mod(term * tau, N);
    }
    const AbelianGroup G({static_cast<int>(p.n)});
    SkewMorphism phi = require_skew(G, Permutation(std::move(table)), "csm_construct");

    expect(phi.order() == p.m, "csm_construct: order differs from m");
    expect(skew_type(phi) == p.k, "csm_construct: skew-type differs from k");
    for (std::int64_t x = 0; x < p.n; ++x)
        expect(phi.power()[static_cast<Element>(x)] == nt::pow_mod(p.t, x, p.m),
               "csm_construct: power function differs from t^x");
    expect(is_smooth(phi), "csm_construct: result is not smooth");
    return phi;
}

std::vector<CsmParams> enumerate_csm_params(std::int64_t n, std::int64_t guard) {
    if (n > guard) throw GuardError("enumerate_csm_params: n exceeds guard");
    std::vector<CsmParams> out;
    for (std::int64_t k = 2; k < n; ++k) {
        if (n % k != 0) continue;
        const std::int64_t N = n / k;
        for (std::int64_t r = 0; r < N; ++r)
            for (std::int64_t s = 1; s < N; ++s) {
                if (std::gcd(s, N) != 1) continue;
                const std::int64_t m = csm_order(r, s, N);
                for (std::int64_t t = 1; t < m; ++t) {
                    CsmParams p{n, k, r, s, t, m};
                    if (!csm_failure(p)) out.push_back(p);
                }
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- square roots of automorphisms

RootParams check_root(RootParams p) {
    if (p.n < 2) reject("n", "n must be > 1");
    if (p.k < 2) reject("k", "k must be > 1");
    p.s = mod(p.s, p.n);
    if (p.k % 2 == 1) {
        if (p.n % (p.k * p.k) != 0) reject("(a)", "k^2 must divide n");
        if (std::gcd(p.s, p.n) != 1) reject("(a)", "s must be a unit modulo n");
    } else {
        if (p.n % (2 * p.k * p.k) != 0) reject("(a)", "2k^2 must divide n");
        if (std::gcd(p.s, p.n / 2) != 1) reject("(a)", "s must be a unit modulo n/2");
    }
    if (mod(p.s + 1, p.k) != 0) reject("(b)", "s must be -1 modulo k");
    const std::int64_t N = p.n / p.k;
    auto ord = nt::multiplicative_order(p.s, N);
    if (!ord || *ord % 2 != 0) reject("(b)", "s must have even multiplicative order modulo n/k");
    p.ell = *ord / 2;
    // (k/n)(s^{2l} - 1) is an integer because s^{2l} == 1 (mod n/k).
    const std::int64_t lifted = mod(nt::pow_mod(p.s, 2 * p.ell, p.n) - 1, p.n) / N;
    const std::int64_t tri = mod(p.s * (p.s - 1) / 2, p.k);
    p.w = mod(lifted - tri * p.ell, p.k);
    auto inv = nt::inverse_mod(p.w, p.k);
    if (std::gcd(p.w, p.k) != 1 || !inv) reject("(b)", "w must be coprime to k");
    p.w_inv = *inv;
    p.m = 2 * p.k * p.ell;
    return p;
}

SkewMorphism root_construct(const RootParams& params) {
    const RootParams p = check_root(params);
    const std::int64_t N = p.n / p.k;
    std::vector<Element> table(static_cast<std::size_t>(p.n));
    for (std::int64_t x = 0; x < p.n; ++x) {
        const std::int64_t tri = mod((x * (x - 1) / 2) % p.n * (N % p.n), p.n);
        table[static_cast<std::size_t>(x)] = static_cast<Element>(mod(p.s * x - tri, p.n));
    }
    const AbelianGroup G({static_cast<int>(p.n)});
    SkewMorphism phi = require_skew(G, Permutation(std::move(table)), "root_construct");

    expect(is_automorphism(G, phi.perm().compose(phi.perm())), "root_construct: phi^2 is not an automorphism");
    expect(phi.order() == p.m, "root_construct: order differs from 2kl");
    expect(skew_type(phi) == p.k, "root_construct: skew-type differs from k");
    for (std::int64_t x = 0; x < p.n; ++x)
        expect(phi.power()[static_cast<Element>(x)] == mod(1 + 2 * x * p.w_inv * p.ell, p.m),
               "root_construct: power function differs from 1 + 2xw'l");
    return phi;
}

namespace {

// phi(x) = -x - c * x(x-1)/2 on Z_n.
std::vector<Element> negated_quadratic(std::int64_t n, std::int64_t c) {
    std::vector<Element> t(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x)
        t[static_cast<std::size_t>(x)] = static_cast<Element>(mod(-x - mod(c * ((x * (x - 1) / 2) % n), n), n));
    return t;
}

void check_pns(const SkewMorphism& phi, std::int64_t m) {
    expect(phi.order() == m, "pns witness: unexpected order");
    expect(!is_smooth(phi), "pns witness: morphism is smooth");
    expect(phi.power()[1] == mod(-1, m), "pns witness: pi(1) != -1");
    expect(phi.power()[phi(1)] == mod(3, m), "pns witness: pi(phi(1)) != 3");
    for (Element x = 0; x < phi.group().order(); ++x)
        expect(phi.power()[x] == mod(1 - 2 * static_cast<std::int64_t>(x), m),
               "pns witness: pi(x) != 1 - 2x");
}

}  // namespace

SkewMorphism pns_witness_odd(std::int64_t p, int e) {
    if (p < 3 || !nt::is_prime(p)) reject("p", "p must be an odd prime");
    if (e < 2) reject("e", "e must be >= 2");
    std::int64_t n = 1;
    for (int i = 0; i < e; ++i) n *= p;
    if (n > (1 << 20)) reject("e", "p^e too large");
    SkewMorphism phi = root_construct({n, p, n - 1});
    expect(phi.perm().table() == negated_quadratic(n, n / p), "pns witness: closed forms disagree");
    check_pns(phi, 2 * p);
    return phi;
}

SkewMorphism pns_witness_two(int e) {
    if (e < 5) reject("e", "e must be >= 5");
    if (e > 20) reject("e", "2^e too large");
    const std::int64_t n = std::int64_t{1} << e;
    SkewMorphism phi = root_construct({n, 4, n - 1});
    // -x - 2^{e-3} x(x-1) == -x - 2^{e-2} * x(x-1)/2
    expect(phi.perm().table() == negated_quadratic(n, n / 4), "pns witness: closed forms disagree");
    check_pns(phi, 8);
    return phi;
}

// ---------------------------------------------------------------- Z_p x Z_p

NseResult nse_construct(NseParams params) {
    const std::int64_t p = params.p;
    if (p < 3 || !nt::is_prime(p)) reject("p", "p must be an odd prime");
    if (p > 97) reject("p", "p too large");
    params.d = mod(params.d, p);
    params.nu = mod(params.nu, p);
    params.r = mod(params.r, p);
    if (params.d == 0) reject("d", "d must be a unit modulo p");
    if (params.nu == 0) reject("nu", "nu must be a unit modulo p");
    if (params.r < 2) reject("r", "r must lie in [2, p)");
    params.k = *nt::multiplicative_order(params.r, p);

    const AbelianGroup G({static_cast<int>(p), static_cast<int>(p)});
    auto build = [&](std::int64_t beta) {
        std::vector<Element> table(static_cast<std::size_t>(p * p));
        for (std::int64_t i = 0; i < p; ++i)
            for (std::int64_t j = 0; j < p; ++j) {
                const std::int64_t first =
                    mod(params.r * i + params.d * params.r % p * params.nu % p * ((j * (j - 1) / 2) % p) + beta * j, p);
                const std::int64_t second = mod(params.r * j, p);
                table[static_cast<std::size_t>(i * p + j)] = static_cast<Element>(first * p + second);
            }
        return table;
    };

    // Two values of b can give a valid table (one for nu and one for another
    // power function); b is the one whose power function is 1 + j*nu*k.
    const std::int64_t m = p * params.k;
    auto has_stated_power = [&](const SkewMorphism& phi) {
        if (phi.order() != m) return false;
        for (std::int64_t i = 0; i < p; ++i)
            for (std::int64_t j = 0; j < p; ++j)
                if (phi.power()[static_cast<Element>(i * p + j)] != mod(1 + j * params.nu * params.k, m)) return false;
        return true;
    };
    std::vector<std::pair<std::int64_t, SkewMorphism>> valid;
    for (std::int64_t beta = 0; beta < p; ++beta) {
        auto table = build(beta);
        if (!is_bijection(table)) continue;
        auto r = validate(G, Permutation(std::move(table)));
        if (r && has_stated_power(*r)) valid.emplace_back(beta, std::move(r).value());
    }
    if (valid.size() != 1)
        throw ConsistencyError("nse_construct: expected exactly one kernel element b, found " +
                               std::to_string(valid.size()));
    params.beta = valid[0].first;
    SkewMorphism phi = std::move(valid[0].second);

    const auto K = kernel(phi);
    std::vector<Element> axis;
    for (std::int64_t i = 0; i < p; ++i) axis.push_back(static_cast<Element>(i * p));
    expect(K.members == axis, "nse_construct: kernel differs from <a>");
    expect(!is_smooth(phi), "nse_construct: morphism is smooth");
    return {std::move(phi), params};
}

// ---------------------------------------------------------------- products and witnesses

SkewMorphism identity_morphism(const AbelianGroup& G) {
    return require_skew(G, Permutation::identity(G.order()), "identity_morphism");
}

Result<SkewMorphism> direct_product(const SkewMorphism& phi, const SkewMorphism& psi) {
    const auto& A = phi.group();
    const auto& B = psi.group();
    const std::int64_t d = std::gcd(phi.order(), psi.order());
    for (Element a = 0; a < A.order(); ++a)
        if (mod(phi.power()[a], d) != mod(1, d))
            return Rejection{"pi_phi(a) != 1 modulo gcd(|phi|, |psi|)", a, {}};
    for (Element b = 0; b < B.order(); ++b)
        if (mod(psi.power()[b], d) != mod(1, d))
            return Rejection{"pi_psi(b) != 1 modulo gcd(|phi|, |psi|)", {}, b};

    std::vector<int> factors = A.factors();
    factors.insert(factors.end(), B.factors().begin(), B.factors().end());
    const AbelianGroup AB(factors);
    const auto nb = static_cast<Element>(B.order());
    std::vector<Element> table(AB.order());
    for (Element a = 0; a < A.order(); ++a)
        for (Element b = 0; b < nb; ++b) table[a * nb + b] = phi(a) * nb + psi(b);
    SkewMorphism prod = require_skew(AB, Permutation(std::move(table)), "direct_product");

    for (Element a = 0; a < A.order(); ++a)
        for (Element b = 0; b < nb; ++b) {
            const auto pw = prod.power()[a * nb + b];
            expect(mod(pw, phi.order()) == phi.power()[a] && mod(pw, psi.order()) == psi.power()[b],
                   "direct_product: product power function disagrees with the factors");
        }
    return prod;
}

SkewMorphism transport(const SkewMorphism& phi, const AbelianGroup& H, const std::vector<Element>& iso) {
    const auto& G = phi.group();
    if (iso.size() != G.order() || H.order() != G.order() || !is_bijection(iso))
        throw std::invalid_argument("transport: map is not a bijection between the groups");
    for (Element a = 0; a < G.order(); ++a)
        for (Element b = 0; b < G.order(); ++b)
            if (iso[G.add(a, b)] != H.add(iso[a], iso[b]))
                throw std::invalid_argument("transport: map is not a homomorphism");
    std::vector<Element> table(H.order());
    for (Element x = 0; x < G.order(); ++x) table[iso[x]] = iso[phi(x)];
    return require_skew(H, Permutation(std::move(table)), "transport");
}

std::optional<SkewMorphism> nonsmooth_witness(const AbelianGroup& G) {
    const auto comps = primary_components(G);
    std::optional<SkewMorphism> seed;
    std::vector<std::size_t> used;

    for (std::size_t i = 0; i < comps.size() && !seed; ++i)
        if (comps[i].prime == 2 && comps[i].exponent >= 5) {
            seed = pns_witness_two(comps[i].exponent);
            used = {i};
        }
    for (std::size_t i = 0; i < comps.size() && !seed; ++i)
        if (comps[i].prime > 2 && comps[i].exponent >= 2) {
            seed = pns_witness_odd(comps[i].prime, comps[i].exponent);
            used = {i};
        }
    for (std::size_t i = 0; i < comps.size() && !seed; ++i)
        for (std::size_t j = i + 1; j < comps.size() && !seed; ++j)
            if (comps[i].prime > 2 && comps[i].prime == comps[j].prime && comps[i].exponent == 1 &&
                comps[j].exponent == 1) {
                seed = nse_construct({comps[i].prime, 1, 1, 2}).morphism;
                used = {i, j};
            }
    if (!seed) return std::nullopt;

    // H = (seed group) x (remaining primary summands); basis lines up with H's factors.
    std::vector<Element> basis;
    for (auto i : used) basis.push_back(comps[i].generator);
    std::vector<int> rest_factors;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (std::find(used.begin(), used.end(), i) == used.end()) {
            rest_factors.push_back(static_cast<int>(comps[i].order()));
            basis.push_back(comps[i].generator);
        }
    const auto product = direct_product(*seed, identity_morphism(AbelianGroup(rest_factors)));
    if (!product) throw ConsistencyError("nonsmooth_witness: extension by the identity was rejected");
    const auto& H = product->group();

    std::vector<Element> iso(H.order());
    for (Element h = 0; h < H.order(); ++h) {
        const auto c = H.coords(h);
        Element x = 0;
        for (std::size_t t = 0; t < c.size(); ++t) x = G.add(x, G.multiple(basis[t], c[t]));
        iso[h] = x;
    }
    SkewMorphism phi = transport(*product, G, iso);
    expect(!is_smooth(phi), "nonsmooth_witness: witness is smooth");
    return phi;
}

}  // namespace skewmorph
