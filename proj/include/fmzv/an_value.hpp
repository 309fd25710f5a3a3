#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fmzv/cache.hpp"
#include "fmzv/harmonic_sums.hpp"
#include "fmzv/ncpoly.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/primes.hpp"

namespace fmzv {

struct EvalOptions {
    FmzvCache* cache = nullptr;
    int jobs = 1;
};

// A finite-window model of an element of A_N: one residue mod p^N per prime
// in the window. A prime is undefined when the value involved a rational
// whose denominator that prime divides; undefinedness propagates through
// arithmetic and is skipped by comparisons.
class AnValue {
public:
    AnValue(std::shared_ptr<const PrimeWindow> window, int depth)
        : depth_(depth), window_(std::move(window)), residues_(window_->primes.size()) {
        if (depth < 1) throw config_error("depth N must be >= 1");
    }

    int depth() const { return depth_; }
    const PrimeWindow& window() const { return *window_; }
    const std::shared_ptr<const PrimeWindow>& window_ptr() const { return window_; }
    std::size_t size() const { return residues_.size(); }

    const std::optional<Int>& at(std::size_t i) const { return residues_[i]; }
    void set(std::size_t i, std::optional<Int> r) { residues_[i] = std::move(r); }

    static AnValue constant(const Int& c, std::shared_ptr<const PrimeWindow> window, int depth) {
        AnValue v(std::move(window), depth);
        for (std::size_t i = 0; i < v.size(); ++i) {
            PrimePower pp(v.window().primes[i], depth);
            Int r = c % pp.modulus();
            if (r < 0) r += pp.modulus();
            v.residues_[i] = r;
        }
        return v;
    }

    static AnValue zero(std::shared_ptr<const PrimeWindow> window, int depth) {
        return constant(0, std::move(window), depth);
    }
    static AnValue one(std::shared_ptr<const PrimeWindow> window, int depth) {
        return constant(1, std::move(window), depth);
    }

    AnValue project_depth(int m) const {
        if (m < 1 || m > depth_) throw config_error("project_depth requires 1 <= m <= N");
        AnValue v(window_, m);
        for (std::size_t i = 0; i < size(); ++i) {
            if (!residues_[i]) continue;
            v.residues_[i] = *residues_[i] % PrimePower(window_->primes[i], m).modulus();
        }
        return v;
    }

    friend AnValue operator+(const AnValue& a, const AnValue& b) {
        return a.zip(b, [](const Int& x, const Int& y) { return x + y; });
    }
    friend AnValue operator-(const AnValue& a, const AnValue& b) {
        return a.zip(b, [](const Int& x, const Int& y) { return x - y; });
    }
    friend AnValue operator*(const AnValue& a, const AnValue& b) {
        return a.zip(b, [](const Int& x, const Int& y) { return x * y; });
    }
    friend AnValue operator-(const AnValue& a) {
        AnValue r(a.window_, a.depth_);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a.residues_[i]) continue;
            PrimePower pp(a.window().primes[i], a.depth_);
            Int v = (pp.modulus() - *a.residues_[i]) % pp.modulus();
            r.residues_[i] = v;
        }
        return r;
    }

    bool operator==(const AnValue&) const = default;

private:
    template <class F>
    AnValue zip(const AnValue& o, F&& f) const {
        if (depth_ != o.depth_) throw config_error("AnValue depth mismatch");
        if (!(*window_ == *o.window_)) throw config_error("AnValue window mismatch");
        AnValue r(window_, depth_);
        for (std::size_t i = 0; i < size(); ++i) {
            if (!residues_[i] || !o.residues_[i]) continue;  // undefined propagates
            PrimePower pp(window_->primes[i], depth_);
            Int v = f(*residues_[i], *o.residues_[i]) % pp.modulus();
            if (v < 0) v += pp.modulus();
            r.residues_[i] = v;
        }
        return r;
    }

    int depth_;
    std::shared_ptr<const PrimeWindow> window_;
    std::vector<std::optional<Int>> residues_;
};

// The element p-bold^n at depth N: residue p^n mod p^N per prime, hence zero
// once n >= N. This is what truncates the infinite p-power sums at n <= N-1.
inline AnValue pbold_pow(int n, std::shared_ptr<const PrimeWindow> window, int depth) {
    if (n < 0) throw config_error("pbold_pow requires n >= 0");
    AnValue v(window, depth);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (n >= depth) {
            v.set(i, Int(0));
            continue;
        }
        Int r = 1;
        for (int j = 0; j < n; ++j) r *= v.window().primes[i];
        v.set(i, r);
    }
    return v;
}

namespace detail {

inline Int cached_harmonic_sum(const Composition& k, std::int64_t p, int N,
                               std::unique_ptr<HarmonicSumEvaluator>& ev, FmzvCache* cache) {
    if (cache) {
        if (auto hit = cache->get(k, p, N)) return *hit;
    }
    if (!ev) ev = std::make_unique<HarmonicSumEvaluator>(p, N);
    Int r = ev->eval(k);
    if (cache) cache->put(k, p, N, r);
    return r;
}

}  // namespace detail

// zeta_{A_N}(k) over the window: the harmonic-sum DP per prime, prime loop
// parallelized. Every residue is defined (only 1..p-1 get inverted).
inline AnValue zeta_window(const Composition& k, std::shared_ptr<const PrimeWindow> window, int depth,
                           const EvalOptions& opts = {}) {
    AnValue v(window, depth);
    parallel_for(v.size(), opts.jobs, [&](std::size_t i) {
        std::int64_t p = v.window().primes[i];
        std::unique_ptr<HarmonicSumEvaluator> ev;
        v.set(i, detail::cached_harmonic_sum(k, p, depth, ev, opts.cache));
    });
    return v;
}

// Z_{A_N} on H^1, extended Q-linearly: each word z_{k_1}...z_{k_r} maps to
// zeta_{A_N}(k_1,...,k_r). A coefficient a/b contributes a * b^{-1} mod p^N;
// primes dividing b are flagged undefined instead.
inline AnValue eval_poly(const NCPoly& poly, std::shared_ptr<const PrimeWindow> window, int depth,
                         const EvalOptions& opts = {}) {
    if (!poly.in_h1()) throw domain_error("eval_poly requires an element of H^1");
    std::vector<std::pair<Composition, Rat>> terms;
    terms.reserve(poly.term_count());
    for (const auto& [w, c] : poly.terms()) terms.emplace_back(word_to_comp(w), c);

    AnValue v(window, depth);
    parallel_for(v.size(), opts.jobs, [&](std::size_t i) {
        const std::int64_t p = v.window().primes[i];
        PrimePower pp(p, depth);
        std::unique_ptr<HarmonicSumEvaluator> ev;
        Int acc = 0;
        for (const auto& [k, c] : terms) {
            Int den = denominator(c);
            if (den % p == 0) {
                v.set(i, std::nullopt);
                return;
            }
            Int num = numerator(c) % pp.modulus();
            if (num < 0) num += pp.modulus();
            Int coeff = num * inv_mod_pn(den, p, depth) % pp.modulus();
            acc = (acc + coeff * detail::cached_harmonic_sum(k, p, depth, ev, opts.cache)) % pp.modulus();
        }
        v.set(i, acc);
    });
    return v;
}

// All compositions with weight <= max_weight and depth <= max_depth, by
// weight then lexicographically. The empty composition is excluded.
inline std::vector<Composition> compositions_up_to(int max_weight, int max_depth) {
    std::vector<Composition> out;
    std::vector<int> stack;
    auto gen = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(stack);
            return;
        }
        if (static_cast<int>(stack.size()) == max_depth) return;
        for (int k = 1; k <= remaining; ++k) {
            stack.push_back(k);
            self(self, remaining - k);
            stack.pop_back();
        }
    };
    for (int w = 1; w <= max_weight; ++w) gen(gen, w);
    return out;
}

// Evaluates many compositions over one window. Parallel over primes; one
// inverse table per prime is shared by all compositions, and cache hits skip
// the DP entirely.
inline std::vector<AnValue> zeta_table(const std::vector<Composition>& ks,
                                       std::shared_ptr<const PrimeWindow> window, int depth,
                                       const EvalOptions& opts = {}) {
    const std::size_t nprimes = window->primes.size();
    std::vector<std::vector<Int>> grid(ks.size(), std::vector<Int>(nprimes));
    parallel_for(nprimes, opts.jobs, [&](std::size_t i) {
        const std::int64_t p = window->primes[i];
        std::unique_ptr<HarmonicSumEvaluator> ev;
        for (std::size_t j = 0; j < ks.size(); ++j)
            grid[j][i] = detail::cached_harmonic_sum(ks[j], p, depth, ev, opts.cache);
    });
    std::vector<AnValue> out;
    out.reserve(ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j) {
        AnValue v(window, depth);
        for (std::size_t i = 0; i < nprimes; ++i) v.set(i, std::move(grid[j][i]));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace fmzv
