#include "skewmorph/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

#include "skewmorph/number_theory.hpp"

namespace skewmorph {

namespace {

// Group tables are cached up to this order (n^2 entries).
constexpr std::size_t kTableLimit = 2048;

}  // namespace

AbelianGroup::AbelianGroup() : AbelianGroup(std::vector<int>{}) {}

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
    order_ = 1;
    for (int f : factors_) {
        if (f < 2) throw GroupError("invalid factor " + std::to_string(f) + ": every factor must be >= 2");
        if (order_ > (std::size_t{1} << 40) / static_cast<std::size_t>(f))
            throw GroupError("group order too large");
        order_ *= static_cast<std::size_t>(f);
    }
    stride_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;)
        stride_[i - 1] = stride_[i] * static_cast<std::size_t>(factors_[i]);

    if (order_ <= kTableLimit) {
        auto add = std::make_shared<std::vector<Element>>(order_ * order_);
        auto neg = std::make_shared<std::vector<Element>>(order_);
        for (Element a = 0; a < order_; ++a)
            for (Element b = 0; b < order_; ++b) (*add)[a * order_ + b] = add_slow(a, b);
        for (Element a = 0; a < order_; ++a)
            for (Element b = 0; b < order_; ++b)
                if ((*add)[a * order_ + b] == 0) {
                    (*neg)[a] = b;
                    break;
                }
        add_table_ = std::move(add);
        neg_table_ = std::move(neg);
    }
}

AbelianGroup AbelianGroup::parse(std::string_view literal) {
    std::string s;
    for (char c : literal)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s.empty()) throw GroupError("empty group literal");

    std::vector<int> factors;
    std::size_t pos = 0;
    while (true) {
        if (pos >= s.size() || s[pos] != 'z')
            throw GroupError("malformed group literal '" + std::string(literal) + "': expected 'Z<k>'");
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || pos - start > 9)
            throw GroupError("malformed group literal '" + std::string(literal) + "': bad factor");
        factors.push_back(std::stoi(s.substr(start, pos - start)));
        if (pos == s.size()) break;
        if (s[pos] != 'x')
            throw GroupError("malformed group literal '" + std::string(literal) + "': expected 'x'");
        ++pos;
    }
    if (factors.size() == 1 && factors[0] == 1) return AbelianGroup();
    return AbelianGroup(std::move(factors));
}

std::string AbelianGroup::label() const {
    if (factors_.empty()) return "Z1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += 'x';
        out += 'Z' + std::to_string(factors_[i]);
    }
    return out;
}

bool AbelianGroup::is_cyclic() const noexcept {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        for (std::size_t j = i + 1; j < factors_.size(); ++j)
            if (std::gcd(factors_[i], factors_[j]) != 1) return false;
    return true;
}

void AbelianGroup::check(Element a) const {
    if (a >= order_)
        throw std::out_of_range("element index " + std::to_string(a) + " out of range for " + label());
}

Element AbelianGroup::add_slow(Element a, Element b) const {
    Element out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto f = static_cast<std::size_t>(factors_[i]);
        std::size_t da = (a / stride_[i]) % f, db = (b / stride_[i]) % f;
        out += static_cast<Element>(((da + db) % f) * stride_[i]);
    }
    return out;
}

Element AbelianGroup::add(Element a, Element b) const {
    check(a);
    check(b);
    if (add_table_) return (*add_table_)[a * order_ + b];
    return add_slow(a, b);
}

Element AbelianGroup::neg(Element a) const {
    check(a);
    if (neg_table_) return (*neg_table_)[a];
    Element out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto f = static_cast<std::size_t>(factors_[i]);
        std::size_t d = (a / stride_[i]) % f;
        out += static_cast<Element>(((f - d) % f) * stride_[i]);
    }
    return out;
}

Element AbelianGroup::multiple(Element a, std::int64_t k) const {
    check(a);
    Element out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::int64_t f = factors_[i];
        std::int64_t d = static_cast<std::int64_t>((a / stride_[i]) % static_cast<std::size_t>(f));
        out += static_cast<Element>(nt::mod(static_cast<std::int64_t>((__int128)d * k % f), f)) *
               static_cast<Element>(stride_[i]);
    }
    return out;
}

int AbelianGroup::element_order(Element a) const {
    check(a);
    std::int64_t result = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::int64_t f = factors_[i];
        std::int64_t d = static_cast<std::int64_t>((a / stride_[i]) % static_cast<std::size_t>(f));
        result = std::lcm(result, f / std::gcd(f, d));
    }
    return static_cast<int>(result);
}

std::vector<int> AbelianGroup::coords(Element a) const {
    check(a);
    std::vector<int> out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        out[i] = static_cast<int>((a / stride_[i]) % static_cast<std::size_t>(factors_[i]));
    return out;
}

Element AbelianGroup::index(std::span<const int> coords) const {
    if (coords.size() != factors_.size()) throw std::invalid_argument("coordinate arity mismatch");
    Element out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= factors_[i]) throw std::out_of_range("coordinate out of range");
        out += static_cast<Element>(static_cast<std::size_t>(coords[i]) * stride_[i]);
    }
    return out;
}

Element AbelianGroup::unit(std::size_t i) const {
    if (i >= factors_.size()) throw std::out_of_range("unit vector index");
    return static_cast<Element>(stride_[i]);
}

AbelianGroup make_group(std::vector<int> factors) { return AbelianGroup(std::move(factors)); }

// ---------------------------------------------------------------- permutations

bool is_bijection(std::span<const Element> table) {
    std::vector<bool> seen(table.size(), false);
    for (Element v : table) {
        if (v >= table.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation::Permutation(std::vector<Element> table) : table_(std::move(table)) {
    if (!is_bijection(table_)) throw std::invalid_argument("table is not a bijection");
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Element> t(n);
    std::iota(t.begin(), t.end(), Element{0});
    Permutation p;
    p.table_ = std::move(t);
    return p;
}

Permutation Permutation::compose(const Permutation& q) const {
    if (q.size() != size()) throw std::invalid_argument("compose: size mismatch");
    Permutation out;
    out.table_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) out.table_[i] = table_[q.table_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.table_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) out.table_[table_[i]] = static_cast<Element>(i);
    return out;
}

Element Permutation::apply_power(Element x, std::int64_t k) const {
    // Walk along the cycle of x; the cycle length bounds the walk.
    std::int64_t len = 1;
    for (Element y = table_[x]; y != x; y = table_[y]) ++len;
    std::int64_t steps = nt::mod(k, len);
    for (std::int64_t i = 0; i < steps; ++i) x = table_[x];
    return x;
}

Permutation Permutation::power(std::int64_t k) const {
    Permutation out;
    out.table_.resize(size());
    for (const auto& cyc : cycles()) {
        std::int64_t len = static_cast<std::int64_t>(cyc.size());
        std::int64_t shift = nt::mod(k, len);
        for (std::size_t i = 0; i < cyc.size(); ++i)
            out.table_[cyc[i]] = cyc[static_cast<std::size_t>((static_cast<std::int64_t>(i) + shift) % len)];
    }
    return out;
}

std::vector<std::vector<Element>> Permutation::cycles() const {
    std::vector<std::vector<Element>> out;
    std::vector<bool> seen(size(), false);
    for (Element s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        std::vector<Element> cyc;
        for (Element x = s; !seen[x]; x = table_[x]) {
            seen[x] = true;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::uint64_t Permutation::order() const {
    std::uint64_t result = 1;
    for (const auto& cyc : cycles()) {
        auto l = nt::checked_lcm(result, cyc.size());
        if (!l) throw GuardError("permutation order overflows 64 bits");
        result = *l;
    }
    return result;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < size(); ++i)
        if (table_[i] != i) return false;
    return true;
}

// ---------------------------------------------------------------- subgroups

bool Subgroup::contains(Element a) const { return std::binary_search(members.begin(), members.end(), a); }

namespace {

// Members of <S, g> given S as a sorted member list.
std::vector<Element> join_cyclic(const AbelianGroup& G, const std::vector<Element>& S, Element g) {
    std::vector<bool> in(G.order(), false);
    for (Element s : S) in[s] = true;
    std::vector<Element> out = S;
    Element step = g;
    while (!in[step]) {
        // Adds the coset step + S; cosets are disjoint from S until step wraps in.
        for (Element s : S) {
            Element y = G.add(step, s);
            if (!in[y]) {
                in[y] = true;
                out.push_back(y);
            }
        }
        step = G.add(step, g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Element> minimal_generators(const AbelianGroup& G, std::span<const Element> members) {
    // Repeatedly pick an element of maximal order modulo the span so far; for
    // abelian groups this yields as many generators as invariant factors.
    std::vector<Element> gens;
    std::vector<Element> span{0};
    std::vector<bool> in(G.order(), false);
    in[0] = true;
    while (span.size() < members.size()) {
        Element best = 0;
        int best_order = 0;
        for (Element h : members) {
            if (in[h]) continue;
            int k = 1;
            Element x = h;
            while (!in[x]) {
                x = G.add(x, h);
                ++k;
            }
            if (k > best_order) {
                best_order = k;
                best = h;
            }
        }
        gens.push_back(best);
        span = join_cyclic(G, span, best);
        for (Element s : span) in[s] = true;
    }
    return gens;
}

Subgroup generate_subgroup(const AbelianGroup& G, std::span<const Element> gens) {
    std::vector<Element> span{0};
    for (Element g : gens) {
        G.check(g);
        span = join_cyclic(G, span, g);
    }
    Subgroup out;
    out.generators = minimal_generators(G, span);
    out.members = std::move(span);
    return out;
}

Result<Subgroup> as_subgroup(const AbelianGroup& G, std::vector<Element> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Element m : members) G.check(m);
    if (members.empty() || members.front() != 0) return Rejection{"subset does not contain the identity", {}, {}};
    std::vector<bool> in(G.order(), false);
    for (Element m : members) in[m] = true;
    for (Element a : members)
        for (Element b : members)
            if (!in[G.add(a, b)]) return Rejection{"subset is not closed under addition", a, b};
    Subgroup out;
    out.generators = minimal_generators(G, members);
    out.members = std::move(members);
    return out;
}

std::vector<Subgroup> enumerate_subgroups(const AbelianGroup& G, std::size_t guard) {
    if (G.order() > guard)
        throw GuardError("subgroup enumeration guard exceeded: order " + std::to_string(G.order()) + " > " +
                         std::to_string(guard));
    std::set<std::vector<Element>> found{{0}};
    std::vector<std::vector<Element>> frontier{{0}};
    while (!frontier.empty()) {
        std::vector<std::vector<Element>> next;
        for (const auto& S : frontier) {
            std::vector<bool> in(G.order(), false);
            for (Element s : S) in[s] = true;
            for (Element g = 1; g < G.order(); ++g) {
                if (in[g]) continue;
                auto J = join_cyclic(G, S, g);
                if (found.insert(J).second) next.push_back(std::move(J));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& members : found) {
        Subgroup s;
        s.generators = minimal_generators(G, members);
        s.members = members;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

// ---------------------------------------------------------------- automorphisms

bool is_automorphism(const AbelianGroup& G, const Permutation& p) {
    if (p.size() != G.order() || p[0] != 0) return false;
    for (Element a = 0; a < G.order(); ++a)
        for (Element b = a; b < G.order(); ++b)
            if (p[G.add(a, b)] != G.add(p[a], p[b])) return false;
    return true;
}

Automorphism::Automorphism(const AbelianGroup& G, Permutation p) : perm_(std::move(p)) {
    if (!is_automorphism(G, perm_)) throw std::invalid_argument("permutation is not an automorphism");
}

Automorphism Automorphism::compose(const Automorphism& o) const { return Automorphism(perm_.compose(o.perm_), 0); }

Automorphism Automorphism::inverse() const { return Automorphism(perm_.inverse(), 0); }

std::vector<std::vector<std::int64_t>> subgroup_automorphisms(const AbelianGroup& G,
                                                              std::span<const Element> members) {
    const std::size_t n = G.order();
    const auto gens = minimal_generators(G, members);

    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> map(n, -1);
    map[0] = 0;

    // Extends the partial homomorphism from <g_0..g_{i-1}> to <g_0..g_i>.
    auto extend = [&](auto&& self, std::size_t i, std::vector<Element> domain) -> void {
        if (i == gens.size()) {
            out.push_back(map);
            return;
        }
        const Element g = gens[i];
        const int og = G.element_order(g);
        for (Element h : members) {
            if (h == 0 || G.element_order(h) != og) continue;
            std::vector<std::int64_t> saved = map;
            std::vector<Element> added;
            bool ok = true;
            for (Element x : domain) {
                Element src = x, img = static_cast<Element>(map[x]);
                for (int k = 1; k < og && ok; ++k) {
                    src = G.add(src, g);
                    img = G.add(img, h);
                    if (map[src] < 0) {
                        map[src] = img;
                        added.push_back(src);
                    } else if (map[src] != img) {
                        ok = false;
                    }
                }
                if (!ok) break;
            }
            if (ok) {
                // Injectivity on the enlarged domain.
                std::vector<Element> dom = domain;
                dom.insert(dom.end(), added.begin(), added.end());
                std::vector<bool> hit(n, false);
                for (Element x : dom) {
                    auto y = static_cast<Element>(map[x]);
                    if (hit[y]) {
                        ok = false;
                        break;
                    }
                    hit[y] = true;
                }
                if (ok) self(self, i + 1, std::move(dom));
            }
            map = std::move(saved);
        }
    };
    extend(extend, 0, std::vector<Element>{0});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Automorphism> enumerate_automorphisms(const AbelianGroup& G, std::size_t guard) {
    if (G.order() > guard)
        throw GuardError("automorphism enumeration guard exceeded: order " + std::to_string(G.order()) + " > " +
                         std::to_string(guard));
    std::vector<Element> all(G.order());
    std::iota(all.begin(), all.end(), Element{0});
    std::vector<Automorphism> out;
    for (const auto& map : subgroup_automorphisms(G, all)) {
        std::vector<Element> table(map.begin(), map.end());
        out.push_back(Automorphism(Permutation(std::move(table)), 0));
    }
    return out;
}

// ---------------------------------------------------------------- quotients

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

// Smith normal form of `a` (rows x cols), tracking the unimodular row
// transform U so that U * a * V is diagonal. Returns the diagonal.
std::vector<std::int64_t> smith_normal_form(Matrix a, Matrix& U) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    U.assign(rows, std::vector<std::int64_t>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) U[i][i] = 1;

    auto row_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {  // row dst -= q*row src
        for (std::size_t j = 0; j < cols; ++j) a[dst][j] -= q * a[src][j];
        for (std::size_t j = 0; j < rows; ++j) U[dst][j] -= q * U[src][j];
    };
    auto col_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(U[i], U[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
    };

    std::vector<std::int64_t> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) return diag;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                row_op(i, t, a[i][t] / a[t][t]);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                col_op(j, t, a[t][j] / a[t][t]);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_op(t, bad, -1);  // row t += row bad
        }
        if (a[t][t] < 0) {
            for (auto& v : a[t]) v = -v;
            for (auto& v : U[t]) v = -v;
        }
        diag.push_back(a[t][t]);
    }
    return diag;
}

}  // namespace

std::vector<int> invariant_factors(std::span<const int> factors) {
    const std::size_t r = factors.size();
    Matrix a(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) a[i][i] = factors[i];
    Matrix U;
    std::vector<int> out;
    for (auto d : smith_normal_form(a, U))
        if (d > 1) out.push_back(static_cast<int>(d));
    return out;
}

Quotient quotient_group(const AbelianGroup& G, const Subgroup& B) {
    auto closed = as_subgroup(G, B.members);
    if (!closed) throw std::invalid_argument("quotient_group: " + closed.rejection().reason);

    const std::size_t r = G.rank();
    const auto gens = closed->generators;
    Matrix rel(r, std::vector<std::int64_t>(r + gens.size(), 0));
    for (std::size_t i = 0; i < r; ++i) rel[i][i] = G.factors()[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
        auto c = G.coords(gens[j]);
        for (std::size_t i = 0; i < r; ++i) rel[i][r + j] = c[i];
    }
    Matrix U;
    auto diag = smith_normal_form(rel, U);

    std::vector<int> qf;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < diag.size(); ++i)
        if (diag[i] > 1) {
            qf.push_back(static_cast<int>(diag[i]));
            kept.push_back(i);
        }
    Quotient out{AbelianGroup(qf), std::vector<Element>(G.order())};
    std::vector<int> qc(qf.size());
    for (Element x = 0; x < G.order(); ++x) {
        auto c = G.coords(x);
        for (std::size_t k = 0; k < kept.size(); ++k) {
            std::int64_t v = 0;
            for (std::size_t j = 0; j < r; ++j) v += U[kept[k]][j] * c[j];
            qc[k] = static_cast<int>(nt::mod(v, qf[k]));
        }
        out.projection[x] = out.group.index(qc);
    }
    return out;
}

std::int64_t PrimaryComponent::order() const {
    std::int64_t q = 1;
    for (int i = 0; i < exponent; ++i) q *= prime;
    return q;
}

std::vector<PrimaryComponent> primary_components(const AbelianGroup& G) {
    std::vector<PrimaryComponent> out;
    for (std::size_t i = 0; i < G.rank(); ++i) {
        const int f = G.factors()[i];
        for (auto [p, e] : nt::factorize(f)) {
            PrimaryComponent c{p, e, 0};
            c.generator = G.multiple(G.unit(i), f / c.order());
            out.push_back(c);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const PrimaryComponent& a, const PrimaryComponent& b) {
        return a.prime != b.prime ? a.prime < b.prime : a.exponent > b.exponent;
    });
    return out;
}

}  // namespace skewmorph
