#include "skewmorph/skew_morphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "skewmorph/number_theory.hpp"

namespace skewmorph {

Result<SkewMorphism> validate(const AbelianGroup& G, const Permutation& p) {
    const std::size_t n = G.order();
    if (p.size() != n)
        throw std::invalid_argument("validate: permutation has " + std::to_string(p.size()) +
                                    " points, group has " + std::to_string(n));
    if (p[0] != 0) return Rejection{"identity moved", Element{0}, {}};

    // Cycle id and position of every point; phi^j(b) == c iff b and c share a
    // cycle and pos[c] - pos[b] == j (mod its length).
    std::vector<std::uint32_t> cycle_of(n), pos(n);
    std::vector<std::int64_t> cycle_len;
    std::vector<bool> seen(n, false);
    std::uint64_t m = 1;
    for (Element s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::uint32_t id = static_cast<std::uint32_t>(cycle_len.size());
        std::uint32_t k = 0;
        for (Element x = s; !seen[x]; x = p[x]) {
            seen[x] = true;
            cycle_of[x] = id;
            pos[x] = k++;
        }
        cycle_len.push_back(k);
        auto l = nt::checked_lcm(m, k, std::uint64_t{1} << 62);
        if (!l) throw GuardError("validate: permutation order overflows");
        m = *l;
    }
    const auto order = static_cast<std::int64_t>(m);

    std::vector<std::int64_t> power(n, 0);
    std::vector<std::int64_t> offset(cycle_len.size());
    for (Element a = 0; a < n; ++a) {
        const Element pa = p[a];
        std::fill(offset.begin(), offset.end(), -1);
        std::int64_t R = 0, M = 1;
        for (Element b = 0; b < n; ++b) {
            const Element d = G.sub(p[G.add(a, b)], pa);
            const auto cb = cycle_of[b];
            if (cycle_of[d] != cb)
                return Rejection{"no power of the permutation matches the displacement map", a, b};
            const std::int64_t L = cycle_len[cb];
            const std::int64_t o = nt::mod(static_cast<std::int64_t>(pos[d]) - pos[b], L);
            if (offset[cb] < 0) {
                offset[cb] = o;
                auto merged = nt::crt(R, M, o, L);
                if (!merged) return Rejection{"displacement map is not a power of the permutation", a, b};
                std::tie(R, M) = *merged;
            } else if (offset[cb] != o) {
                return Rejection{"displacement map is not a power of the permutation", a, b};
            }
        }
        power[a] = nt::mod(R, order);
    }
    return SkewMorphism(G, p, order, std::move(power));
}

SkewMorphism require_skew(const AbelianGroup& G, const Permutation& p, const char* context) {
    auto r = validate(G, p);
    if (!r) {
        std::string msg = std::string(context) + ": " + r.rejection().reason;
        if (r.rejection().a) msg += " at a=" + std::to_string(*r.rejection().a);
        if (r.rejection().b) msg += ", b=" + std::to_string(*r.rejection().b);
        throw ConsistencyError(msg);
    }
    return std::move(r).value();
}

Element SkewMorphism::apply_power(Element a, std::int64_t k) const { return perm_.apply_power(a, k); }

bool is_automorphism(const SkewMorphism& phi) {
    const auto m = phi.order();
    return std::all_of(phi.power().begin(), phi.power().end(),
                       [m](std::int64_t v) { return v == nt::mod(1, m); });
}

bool is_smooth(const SkewMorphism& phi) {
    const auto& pw = phi.power();
    for (Element a = 0; a < pw.size(); ++a)
        if (pw[phi(a)] != pw[a]) return false;
    return true;
}

Subgroup kernel(const SkewMorphism& phi) {
    const auto one = nt::mod(1, phi.order());
    std::vector<Element> members;
    for (Element a = 0; a < phi.power().size(); ++a)
        if (phi.power()[a] == one) members.push_back(a);
    auto s = as_subgroup(phi.group(), std::move(members));
    if (!s) throw ConsistencyError("kernel is not a subgroup: " + s.rejection().reason);
    return std::move(s).value();
}

Subgroup core(const SkewMorphism& phi) {
    const auto K = kernel(phi);
    const std::size_t n = phi.group().order();
    std::vector<int> count(n, 0);
    // x lies in phi^i(K) iff phi^{-i}(x) lies in K.
    for (Element x = 0; x < n; ++x) {
        Element y = x;
        bool all = true;
        for (std::int64_t i = 1; i <= phi.order() && all; ++i) {
            y = phi.apply_power(y, -1);
            all = K.contains(y);
        }
        if (all) count[x] = 1;
    }
    std::vector<Element> members;
    for (Element x = 0; x < n; ++x)
        if (count[x]) members.push_back(x);
    auto s = as_subgroup(phi.group(), std::move(members));
    if (!s) throw ConsistencyError("core is not a subgroup");
    return std::move(s).value();
}

std::int64_t skew_type(const SkewMorphism& phi) {
    return static_cast<std::int64_t>(phi.group().order() / kernel(phi).size());
}

std::int64_t power_sum(const SkewMorphism& phi, Element a, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("power_sum: k must be non-negative");
    const auto m = phi.order();
    std::int64_t s = 0;
    Element x = a;
    // The summand is periodic in i with the length of a's cycle.
    std::int64_t len = 1;
    for (Element y = phi(a); y != a; y = phi(y)) ++len;
    std::int64_t full = 0;
    for (std::int64_t i = 0; i < len; ++i) {
        full = (full + phi.power()[x]) % m;
        x = phi(x);
    }
    s = static_cast<std::int64_t>((__int128)(k / len) * full % m);
    x = a;
    for (std::int64_t i = 0; i < k % len; ++i) {
        s = (s + phi.power()[x]) % m;
        x = phi(x);
    }
    return s;
}

Result<InducedSkew> quotient_skew(const SkewMorphism& phi, const Subgroup& B) {
    const auto& G = phi.group();
    auto closed = as_subgroup(G, B.members);
    if (!closed) return Rejection{"B is not a subgroup: " + closed.rejection().reason, {}, {}};
    Quotient Q = quotient_group(G, *closed);
    const std::size_t qn = Q.group.order();

    std::vector<std::int64_t> induced(qn, -1);
    for (Element x = 0; x < G.order(); ++x) {
        const Element from = Q.projection[x];
        const Element to = Q.projection[phi(x)];
        if (induced[from] < 0)
            induced[from] = to;
        else if (induced[from] != to)
            return Rejection{"coset partition is not invariant under the morphism", x, {}};
    }
    std::vector<Element> table(qn);
    for (std::size_t i = 0; i < qn; ++i) table[i] = static_cast<Element>(induced[i]);
    SkewMorphism bar = require_skew(Q.group, Permutation(std::move(table)), "quotient_skew: induced map");

    for (Element a = 0; a < G.order(); ++a) {
        const Element abar = Q.projection[a];
        if (bar(abar) != Q.projection[phi(a)])
            throw ConsistencyError("quotient_skew: induced map does not commute with projection");
        if (bar.power()[abar] != nt::mod(phi.power()[a], bar.order()))
            throw ConsistencyError("quotient_skew: induced power function disagrees at a=" + std::to_string(a));
    }
    return InducedSkew{std::move(bar), std::move(Q)};
}

SkewMorphism conjugate(const SkewMorphism& phi, const Automorphism& theta) {
    const std::size_t n = phi.group().order();
    if (theta.perm().size() != n) throw std::invalid_argument("conjugate: automorphism of a different group");
    const auto inv = theta.perm().inverse();
    std::vector<Element> table(n);
    for (Element x = 0; x < n; ++x) table[x] = theta(phi(inv[x]));
    return require_skew(phi.group(), Permutation(std::move(table)), "conjugate");
}

std::vector<std::vector<std::size_t>> equivalence_classes(std::span<const SkewMorphism> morphisms,
                                                          std::span<const Automorphism> autos) {
    std::map<std::vector<Element>, std::size_t> index;
    for (std::size_t i = 0; i < morphisms.size(); ++i) index.emplace(morphisms[i].perm().table(), i);

    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> done(morphisms.size(), false);
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> cls;
        const auto& phi = morphisms[i];
        const std::size_t n = phi.group().order();
        for (const auto& theta : autos) {
            const auto inv = theta.perm().inverse();
            std::vector<Element> table(n);
            for (Element x = 0; x < n; ++x) table[x] = theta(phi(inv[x]));
            auto it = index.find(table);
            if (it != index.end() && !done[it->second]) {
                done[it->second] = true;
                cls.push_back(it->second);
            }
        }
        if (!done[i]) {  // autos may omit the identity
            done[i] = true;
            cls.push_back(i);
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

bool is_reciprocal_pair(const SkewMorphism& phi, const SkewMorphism& psi) {
    if (phi.group().rank() > 1 || psi.group().rank() > 1)
        throw std::invalid_argument("is_reciprocal_pair: both groups must be given as Z<k>");
    const auto m = static_cast<std::int64_t>(phi.group().order());
    const auto n = static_cast<std::int64_t>(psi.group().order());
    if (n % phi.order() != 0 || m % psi.order() != 0) return false;

    const auto minus_one_n = static_cast<Element>(n - 1);
    for (std::int64_t x = 0; x < m; ++x) {
        const auto y = static_cast<std::int64_t>(psi.apply_power(minus_one_n, -x));
        if (phi.power()[static_cast<Element>(x)] != nt::mod(-y, phi.order())) return false;
    }
    const auto minus_one_m = static_cast<Element>(m - 1);
    for (std::int64_t y = 0; y < n; ++y) {
        const auto x = static_cast<std::int64_t>(phi.apply_power(minus_one_m, -y));
        if (psi.power()[static_cast<Element>(y)] != nt::mod(-x, psi.order())) return false;
    }
    return true;
}

}  // namespace skewmorph
