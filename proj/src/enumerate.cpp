#include "skewmorph/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "skewmorph/number_theory.hpp"

namespace skewmorph {

namespace {

using Clock = std::chrono::steady_clock;
using Cache = std::map<std::vector<int>, std::vector<SkewMorphism>>;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

EnumerationReport make_report(const AbelianGroup& G, std::vector<SkewMorphism> found, Clock::time_point start) {
    std::sort(found.begin(), found.end());
    EnumerationReport rep{G, std::move(found), {}, 0};
    rep.counts = tally(rep.morphisms);
    rep.elapsed_ms = ms_since(start);
    return rep;
}

// Runs task(i, sink) for i in [0, count) on `threads` workers and
// concatenates the sinks.
std::vector<SkewMorphism> run_tasks(std::size_t count, unsigned threads,
                                    const std::function<void(std::size_t, std::vector<SkewMorphism>&)>& task) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<std::vector<SkewMorphism>> sinks(threads);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&](unsigned id) {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) task(i, sinks[id]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<SkewMorphism> out;
    for (auto& s : sinks)
        for (auto& phi : s) out.push_back(std::move(phi));
    return out;
}

// ------------------------------------------------------------------ kernel search
//
// Proper skew morphisms are organized by their kernel K. For k in K,
// phi(x + k) = phi(k) + phi(x), so phi is determined by theta = phi|K and one
// image per coset of K. For abelian A the kernel is a nontrivial phi-invariant
// subgroup, so theta is an automorphism of K and phi permutes the cosets
// through a skew morphism psi of A/K (pi-bar(x + K) = pi(x)). Both searches
// below run over (K, psi) and keep a completed table iff it validates and its
// kernel is exactly K.

// Cyclic A = <g>: with c = phi(g) and p = pi(g), the defining identity at a = g
// reads phi(z + g) = c + phi^p(z). The table is filled a coset at a time by
// propagating this identity; when it stalls, an undefined phi(w) is branched
// over the points of the coset psi(w + K).
class CyclicSearch {
  public:
    CyclicSearch(const AbelianGroup& G, Element g, const Subgroup& K, const Quotient& Q,
                 const std::vector<std::vector<std::int64_t>>& thetas)
        : G_(G), g_(g), K_(K), Q_(Q), thetas_(thetas), coset_(Q.group.order()) {
        for (Element x = 0; x < G.order(); ++x) coset_[Q.projection[x]].push_back(x);
    }

    void run(const SkewMorphism& psi, std::vector<SkewMorphism>& out) {
        psi_ = &psi;
        out_ = &out;
        const auto n = static_cast<std::int64_t>(G_.order());
        phi_.assign(G_.order(), kUnset);
        used_.assign(G_.order(), false);
        for (const auto& theta : thetas_) {
            theta_ = &theta;
            const auto mark = trail_.size();
            if (!assign(0, 0)) throw ConsistencyError("enumerate: kernel automorphism moves the identity");
            for (p_ = psi.power()[Q_.projection[g_]]; p_ < n - 1; p_ += psi.order())
                for (Element c : coset_[psi(Q_.projection[g_])]) {
                    c_ = c;
                    const auto inner = trail_.size();
                    if (assign(g_, c)) search();
                    undo(inner);
                }
            undo(mark);
        }
    }

  private:
    static constexpr Element kUnset = std::numeric_limits<Element>::max();
    const AbelianGroup& G_;
    Element g_;
    const Subgroup& K_;
    const Quotient& Q_;
    const std::vector<std::vector<std::int64_t>>& thetas_;
    std::vector<std::vector<Element>> coset_;
    std::vector<Element> phi_;
    std::vector<bool> used_;
    std::vector<Element> trail_;
    std::int64_t p_ = 0;
    Element c_ = 0;
    const SkewMorphism* psi_ = nullptr;
    const std::vector<std::int64_t>* theta_ = nullptr;
    std::vector<SkewMorphism>* out_ = nullptr;

    // Sets phi(w + k) = v + theta(k) for every k in K.
    bool assign(Element w, Element v) {
        if (Q_.projection[v] != (*psi_)(Q_.projection[w])) return false;
        for (Element k : K_.members) {
            const Element x = G_.add(w, k);
            const Element y = G_.add(v, static_cast<Element>((*theta_)[k]));
            if (phi_[x] == y) continue;
            if (phi_[x] != kUnset || used_[y]) return false;
            phi_[x] = y;
            used_[y] = true;
            trail_.push_back(x);
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const Element x = trail_.back();
            trail_.pop_back();
            used_[phi_[x]] = false;
            phi_[x] = kUnset;
        }
    }

    // Applies phi(z + g) = c + phi^p(z) in both directions until nothing new
    // follows. Returns false on a contradiction; otherwise `blocked` is an
    // undefined point (kUnset once phi is complete).
    bool propagate(Element& blocked) {
        const auto n = static_cast<Element>(G_.order());
        for (bool changed = true; changed;) {
            changed = false;
            blocked = kUnset;
            for (Element z = 0; z < n; ++z) {
                const Element next = G_.add(z, g_);
                Element w = z;
                std::int64_t i = 0;
                for (; i < p_ && phi_[w] != kUnset; ++i) w = phi_[w];
                if (i == p_) {
                    const Element target = G_.add(c_, w);
                    if (phi_[next] == target) continue;
                    if (!assign(next, target)) return false;
                    changed = true;
                } else if (i + 1 == p_ && phi_[next] != kUnset) {
                    if (!assign(w, G_.sub(phi_[next], c_))) return false;
                    changed = true;
                } else if (blocked == kUnset) {
                    blocked = w;
                }
            }
        }
        for (Element x = 0; x < n && blocked == kUnset; ++x)
            if (phi_[x] == kUnset) blocked = x;
        return true;
    }

    void search() {
        Element w = kUnset;
        if (!propagate(w)) return;
        if (w == kUnset) return finish();
        for (Element v : coset_[(*psi_)(Q_.projection[w])]) {
            const auto mark = trail_.size();
            if (assign(w, v)) search();
            undo(mark);
        }
    }

    void finish() {
        auto r = validate(G_, Permutation(phi_));
        if (r && r->power()[g_] == p_ && kernel(*r) == K_) out_->push_back(std::move(r).value());
    }
};

// Non-cyclic A: theta ranges over Aut(K) and each coset representative is sent
// to one of the |K| points of its target coset.
class KernelSearch {
  public:
    KernelSearch(const AbelianGroup& G, const Subgroup& K, const Quotient& Q,
                 const std::vector<std::vector<std::int64_t>>& thetas)
        : G_(G), K_(K), Q_(Q), thetas_(thetas) {
        rep_.assign(Q.group.order(), static_cast<Element>(G.order()));
        for (Element x = 0; x < G.order(); ++x) rep_[Q.projection[x]] = std::min(rep_[Q.projection[x]], x);
    }

    void run(const SkewMorphism& psi, std::vector<SkewMorphism>& out) {
        psi_ = &psi;
        out_ = &out;
        image_.assign(Q_.group.order(), 0);
        for (const auto& theta : thetas_) {
            theta_ = &theta;
            choose(1);
        }
    }

  private:
    const AbelianGroup& G_;
    const Subgroup& K_;
    const Quotient& Q_;
    const std::vector<std::vector<std::int64_t>>& thetas_;
    std::vector<Element> rep_;    // smallest element of each coset
    std::vector<Element> image_;  // phi(rep_[q])
    const SkewMorphism* psi_ = nullptr;
    const std::vector<std::int64_t>* theta_ = nullptr;
    std::vector<SkewMorphism>* out_ = nullptr;

    void choose(std::size_t q) {
        if (q == image_.size()) return finish();
        const Element target = rep_[(*psi_)(static_cast<Element>(q))];
        for (Element k : K_.members) {
            image_[q] = G_.add(target, k);
            choose(q + 1);
        }
    }

    void finish() {
        std::vector<Element> table(G_.order());
        for (Element x = 0; x < G_.order(); ++x) {
            const Element q = Q_.projection[x];
            const Element k = G_.sub(x, rep_[q]);
            table[x] = G_.add(image_[q], static_cast<Element>((*theta_)[k]));
        }
        auto r = validate(G_, Permutation(std::move(table)));
        if (r && kernel(*r) == K_) out_->push_back(std::move(r).value());
    }
};

const std::vector<SkewMorphism>& enumerate_cached(const AbelianGroup& G, unsigned threads, Cache& cache);

std::vector<SkewMorphism> enumerate_all(const AbelianGroup& G, unsigned threads, Cache& cache) {
    std::vector<SkewMorphism> out;
    for (const auto& a : enumerate_automorphisms(G, std::numeric_limits<std::size_t>::max()))
        out.push_back(require_skew(G, a.perm(), "enumerate: automorphism"));

    const bool cyclic = G.is_cyclic();
    Element g = 0;
    if (cyclic) {
        std::vector<Element> all(G.order());
        std::iota(all.begin(), all.end(), Element{0});
        g = minimal_generators(G, all).at(0);
    }
    const auto subgroups = enumerate_subgroups(G, std::numeric_limits<std::size_t>::max());
    std::vector<Quotient> quotients(subgroups.size());
    std::vector<std::vector<std::vector<std::int64_t>>> thetas(subgroups.size());
    std::vector<const std::vector<SkewMorphism>*> psis(subgroups.size(), nullptr);
    std::vector<std::pair<std::size_t, std::size_t>> tasks;  // (kernel, psi)
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        const auto& K = subgroups[i];
        if (K.size() == 1 || K.size() == G.order()) continue;
        quotients[i] = quotient_group(G, K);
        thetas[i] = subgroup_automorphisms(G, K.members);
        psis[i] = &enumerate_cached(quotients[i].group, threads, cache);
        for (std::size_t j = 0; j < psis[i]->size(); ++j) tasks.emplace_back(i, j);
    }
    auto proper = run_tasks(tasks.size(), threads, [&](std::size_t t, std::vector<SkewMorphism>& sink) {
        const auto [i, j] = tasks[t];
        if (cyclic) {
            CyclicSearch search(G, g, subgroups[i], quotients[i], thetas[i]);
            search.run((*psis[i])[j], sink);
        } else {
            KernelSearch search(G, subgroups[i], quotients[i], thetas[i]);
            search.run((*psis[i])[j], sink);
        }
    });
    for (auto& phi : proper) out.push_back(std::move(phi));
    return out;
}

const std::vector<SkewMorphism>& enumerate_cached(const AbelianGroup& G, unsigned threads, Cache& cache) {
    auto it = cache.find(G.factors());
    if (it != cache.end()) return it->second;
    std::vector<SkewMorphism> found;
    if (G.order() == 1)
        found.push_back(require_skew(G, Permutation::identity(1), "enumerate"));
    else
        found = enumerate_all(G, threads, cache);
    std::sort(found.begin(), found.end());
    return cache.emplace(G.factors(), std::move(found)).first->second;
}

}  // namespace

Counts tally(std::span<const SkewMorphism> morphisms) {
    Counts c;
    for (const auto& phi : morphisms) {
        ++c.total;
        if (is_automorphism(phi))
            ++c.automorphisms;
        else
            ++c.proper;
        if (is_smooth(phi))
            ++c.smooth;
        else
            ++c.nonsmooth;
    }
    return c;
}

EnumerationReport brute_force_oracle(const AbelianGroup& G, std::size_t guard) {
    if (G.order() > guard)
        throw GuardError("brute_force_oracle: |G| = " + std::to_string(G.order()) + " exceeds guard " +
                         std::to_string(guard));
    const auto start = Clock::now();
    std::vector<Element> table(G.order());
    std::iota(table.begin(), table.end(), Element{0});
    std::vector<SkewMorphism> found;
    do {
        auto r = validate(G, Permutation(table));
        if (r) found.push_back(std::move(r).value());
    } while (std::next_permutation(table.begin() + 1, table.end()));
    return make_report(G, std::move(found), start);
}

void require_within_guard(const AbelianGroup& G, const EnumerationOptions& options) {
    const std::size_t guard = options.max_order ? options.max_order : (G.is_cyclic() ? kCyclicGuard : kGeneralGuard);
    if (G.order() > guard)
        throw GuardError("enumerate: |G| = " + std::to_string(G.order()) + " exceeds guard " + std::to_string(guard));
}

EnumerationReport enumerate_skew_morphisms(const AbelianGroup& G, const EnumerationOptions& options) {
    require_within_guard(G, options);
    const auto start = Clock::now();
    Cache cache;
    auto found = enumerate_cached(G, options.threads, cache);
    return make_report(G, std::move(found), start);
}

bool smooth_only_predicate(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("smooth_only_predicate: n must be positive");
    int e = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++e;
    }
    return e <= 4 && nt::is_square_free(n);
}

bool theorem2_necessary(const AbelianGroup& G) {
    if (G.is_cyclic())
        throw std::invalid_argument("theorem2_necessary: " + G.label() +
                                    " is cyclic; use smooth_only_predicate on its order");
    std::int64_t odd = static_cast<std::int64_t>(G.order());
    while (odd % 2 == 0) odd /= 2;
    if (!nt::is_square_free(odd)) return false;
    for (const auto& c : primary_components(G))
        if (c.prime == 2 && c.exponent >= 5) return false;
    return true;
}

Theorem1Verdict verify_theorem1(std::int64_t max_n, const EnumerationOptions& options) {
    const std::size_t guard = options.max_order ? options.max_order : kCyclicGuard;
    if (max_n < 1 || static_cast<std::size_t>(max_n) > guard)
        throw GuardError("verify_theorem1: max_n must lie in [1, " + std::to_string(guard) + "]");
    Theorem1Verdict v;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const AbelianGroup G = n == 1 ? AbelianGroup() : AbelianGroup({static_cast<int>(n)});
        const auto rep = enumerate_skew_morphisms(G, options);
        Theorem1Row row{n, rep.counts.total, rep.counts.nonsmooth, smooth_only_predicate(n), false, rep.elapsed_ms};
        row.pass = (row.nonsmooth == 0) == row.predicate;
        v.pass = v.pass && row.pass;
        v.rows.push_back(row);
    }
    return v;
}

}  // namespace skewmorph
