#pragma once

#include <cstdint>
#include <vector>

#include "fmzv/modular.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

// Truncated multiple harmonic sums mod p^N for a single prime:
//
//   zeta_{A_N}(k_1,...,k_r) = sum_{1 <= n_1 < ... < n_r <= p-1}
//                             n_1^{-k_1} ... n_r^{-k_r}  mod p^N.
//
// All inverses of 1..p-1 are batch-computed once (prefix products plus a
// single Fermat/Newton inversion), then each composition costs O(p * depth)
// modular multiplications via the ascending DP
//
//   s_j(m) = s_j(m-1) + s_{j-1}(m-1) * m^{-k_j}.
class HarmonicSumEvaluator {
public:
    HarmonicSumEvaluator(std::int64_t p, int N) : pp_(p, N) {}

    std::int64_t prime() const { return pp_.prime(); }
    int depth() const { return pp_.exponent(); }

    Int eval(const Composition& k) {
        if (pp_.fits64()) {
            detail::Arith64 ar{pp_.modulus64()};
            if (inv64_.empty()) inv64_ = build_inverses(ar);
            return Int(dp(ar, inv64_, k));
        }
        detail::ArithBig ar{pp_.modulus()};
        if (invbig_.empty()) invbig_ = build_inverses(ar);
        return dp(ar, invbig_, k);
    }

private:
    template <class A>
    std::vector<typename A::value> build_inverses(const A& ar) const {
        const std::int64_t p = pp_.prime();
        std::vector<typename A::value> table(static_cast<std::size_t>(p));
        table[0] = ar.reduce(Int(1));  // slot 0 holds prefix[0] = 1 transiently
        for (std::int64_t i = 1; i < p; ++i)
            table[static_cast<std::size_t>(i)] = ar.mul(table[static_cast<std::size_t>(i - 1)], ar.reduce(Int(i)));
        typename A::value t = detail::inv_pn(ar, table[static_cast<std::size_t>(p - 1)], p, pp_.exponent());
        for (std::int64_t i = p - 1; i >= 1; --i) {
            typename A::value inv_i = ar.mul(t, table[static_cast<std::size_t>(i - 1)]);
            t = ar.mul(t, ar.reduce(Int(i)));
            table[static_cast<std::size_t>(i)] = inv_i;
        }
        table[0] = ar.reduce(Int(0));
        return table;
    }

    template <class A>
    Int dp(const A& ar, const std::vector<typename A::value>& inv, const Composition& k) const {
        const std::int64_t p = pp_.prime();
        const int r = k.depth();
        std::vector<typename A::value> s(static_cast<std::size_t>(r) + 1, ar.reduce(Int(0)));
        s[0] = ar.reduce(Int(1));
        for (std::int64_t m = 1; m < p; ++m) {
            const typename A::value& inv_m = inv[static_cast<std::size_t>(m)];
            for (int j = r; j >= 1; --j) {
                const auto e = static_cast<std::uint64_t>(k.parts()[static_cast<std::size_t>(j - 1)]);
                s[static_cast<std::size_t>(j)] =
                    ar.add(s[static_cast<std::size_t>(j)],
                           ar.mul(s[static_cast<std::size_t>(j - 1)], ar.pow(inv_m, e)));
            }
        }
        return Int(ar.widen(s[static_cast<std::size_t>(r)]));
    }

    PrimePower pp_;
    std::vector<std::uint64_t> inv64_;
    std::vector<Int> invbig_;
};

// One-shot evaluation; builds the inverse table for this prime each call.
// Use HarmonicSumEvaluator (or the window evaluators) for repeated queries.
inline Int fmzv_residue(const Composition& k, std::int64_t p, int N) {
    return HarmonicSumEvaluator(p, N).eval(k);
}

}  // namespace fmzv
