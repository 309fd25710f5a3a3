#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fmzv/biseries.hpp"
#include "fmzv/ncpoly.hpp"

namespace fmzv {

namespace detail {

// Memo table for the product recursions, keyed by the word pair. One table
// lives per top-level call, so concurrent calls never share state.
using WordPairMemo = std::unordered_map<std::string, NCPoly>;

inline std::string memo_key(const Word& a, const Word& b) { return a.str() + '|' + b.str(); }

// Splits a nonempty H^1 word into its leading z_k block and the rest.
inline std::pair<int, Word> split_first_z(const Word& w) {
    int k = 1;
    int i = 1;
    while (i < w.weight() && w.at(i) == Letter::x) {
        ++k;
        ++i;
    }
    return {k, w.suffix_from(i)};
}

inline const NCPoly& stuffle_words(const Word& w1, const Word& w2, WordPairMemo& memo) {
    auto key = memo_key(w1, w2);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    NCPoly r;
    if (w1.empty()) {
        r = NCPoly(w2);
    } else if (w2.empty()) {
        r = NCPoly(w1);
    } else {
        // z_k a * z_l b = z_k (a * z_l b) + z_l (z_k a * b) + z_{k+l} (a * b)
        auto [k, a] = split_first_z(w1);
        auto [l, b] = split_first_z(w2);
        for (const auto& [w, c] : stuffle_words(a, w2, memo).terms()) r.add_term(concat(Word::z(k), w), c);
        for (const auto& [w, c] : stuffle_words(w1, b, memo).terms()) r.add_term(concat(Word::z(l), w), c);
        for (const auto& [w, c] : stuffle_words(a, b, memo).terms()) r.add_term(concat(Word::z(k + l), w), c);
    }
    return memo.emplace(std::move(key), std::move(r)).first->second;
}

inline const NCPoly& shuffle_words(const Word& w1, const Word& w2, WordPairMemo& memo) {
    auto key = memo_key(w1, w2);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    NCPoly r;
    if (w1.empty()) {
        r = NCPoly(w2);
    } else if (w2.empty()) {
        r = NCPoly(w1);
    } else {
        // a w1' sh b w2' = a (w1' sh b w2') + b (a w1' sh w2')
        Word a = w1.prefix(1), b = w2.prefix(1);
        for (const auto& [w, c] : shuffle_words(w1.suffix_from(1), w2, memo).terms())
            r.add_term(concat(a, w), c);
        for (const auto& [w, c] : shuffle_words(w1, w2.suffix_from(1), memo).terms())
            r.add_term(concat(b, w), c);
    }
    return memo.emplace(std::move(key), std::move(r)).first->second;
}

}  // namespace detail

// Harmonic (stuffle) product on H^1, extended bilinearly.
inline NCPoly harmonic(const NCPoly& p1, const NCPoly& p2) {
    if (!p1.in_h1() || !p2.in_h1()) throw domain_error("harmonic product requires arguments in H^1");
    detail::WordPairMemo memo;
    NCPoly r;
    for (const auto& [w1, c1] : p1.terms())
        for (const auto& [w2, c2] : p2.terms()) {
            const NCPoly& s = detail::stuffle_words(w1, w2, memo);
            for (const auto& [w, c] : s.terms()) r.add_term(w, c1 * c2 * c);
        }
    return r;
}

// Shuffle product on all of H, extended bilinearly.
inline NCPoly shuffle(const NCPoly& p1, const NCPoly& p2) {
    detail::WordPairMemo memo;
    NCPoly r;
    for (const auto& [w1, c1] : p1.terms())
        for (const auto& [w2, c2] : p2.terms()) {
            const NCPoly& s = detail::shuffle_words(w1, w2, memo);
            for (const auto& [w, c] : s.terms()) r.add_term(w, c1 * c2 * c);
        }
    return r;
}

namespace detail {

template <class Product>
BiSeries bilinear_series(const BiSeries& s1, const BiSeries& s2, Product&& prod) {
    if (!(s1.caps() == s2.caps()))
        throw config_error("series caps mismatch: " + to_string(s1.caps()) + " vs " + to_string(s2.caps()));
    BiSeries r(s1.caps());
    for (const auto& [i1, p1] : s1.coeffs())
        for (const auto& [i2, p2] : s2.coeffs()) {
            int m = i1.first + i2.first, n = i1.second + i2.second;
            if (m > r.caps().max_u || n > r.caps().max_v) continue;
            r.add_coeff(m, n, prod(p1, p2));
        }
    return r;
}

}  // namespace detail

// The u,v-bilinear extensions of the two products to truncated series.
inline BiSeries harmonic_series(const BiSeries& s1, const BiSeries& s2) {
    return detail::bilinear_series(s1, s2, [](const NCPoly& a, const NCPoly& b) { return harmonic(a, b); });
}

inline BiSeries shuffle_series(const BiSeries& s1, const BiSeries& s2) {
    return detail::bilinear_series(s1, s2, [](const NCPoly& a, const NCPoly& b) { return shuffle(a, b); });
}

// The derivation d_l on H, determined by d_l(x) = y z^{l-1} x and
// d_l(y) = -y z^{l-1} x with z = x + y, extended by Leibniz and linearity.
inline NCPoly derive(int l, const NCPoly& p) {
    if (l < 1) throw domain_error("derive requires l >= 1");
    NCPoly g = NCPoly::y();
    for (int i = 1; i < l; ++i) g *= NCPoly::z();
    g *= NCPoly::x();  // g = y z^{l-1} x
    NCPoly r;
    for (const auto& [w, c] : p.terms()) {
        for (int i = 0; i < w.weight(); ++i) {
            NCPoly mid = w.at(i) == Letter::x ? g : -g;
            NCPoly term = NCPoly(w.prefix(i)) * mid * NCPoly(w.suffix_from(i + 1));
            r += term * c;
        }
    }
    return r;
}

// d_l applied to every coefficient of a series (u, v are constants for it).
inline BiSeries derive_series(int l, const BiSeries& s) {
    BiSeries r(s.caps());
    for (const auto& [idx, p] : s.coeffs()) r.set_coeff(idx.first, idx.second, derive(l, p));
    return r;
}

// The automorphism Delta_u = exp(sum_{l>=1} d_l / l (-u)^l) of the truncated
// series ring. The inner derivation D = sum_l (-1)^l u^l d_l / l raises
// u-degree by at least one, so both sums stop at max_u.
inline BiSeries delta_u(const BiSeries& s) {
    const int cap = s.caps().max_u;
    auto D = [&](const BiSeries& t) {
        BiSeries out(t.caps());
        for (int l = 1; l <= cap; ++l) {
            BiSeries dl = derive_series(l, t);
            for (int i = 0; i < l; ++i) dl = shift_u(dl);
            out += dl * Rat(Int((l % 2) ? -1 : 1), Int(l));
        }
        return out;
    };
    BiSeries result = s;
    BiSeries power = s;
    for (int j = 1; j <= cap; ++j) {
        power = D(power);
        if (power.is_zero()) break;
        result += power * Rat(Int(1), factorial(j));
    }
    return result;
}

// R_x: right multiplication by x.
inline NCPoly rx(const NCPoly& p) { return p * NCPoly::x(); }

// R_x^{-1}: strips the trailing x of every word; defined only on Hx.
inline NCPoly rx_inv(const NCPoly& p) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) {
        if (!w.ends_with_x())
            throw domain_error("rx_inv: word '" + to_string(w) + "' does not end with x");
        r.add_term(w.prefix(w.weight() - 1), c);
    }
    return r;
}

inline BiSeries rx(const BiSeries& s) {
    BiSeries r(s.caps());
    for (const auto& [idx, p] : s.coeffs()) r.set_coeff(idx.first, idx.second, rx(p));
    return r;
}

inline BiSeries rx_inv(const BiSeries& s) {
    BiSeries r(s.caps());
    for (const auto& [idx, p] : s.coeffs()) r.set_coeff(idx.first, idx.second, rx_inv(p));
    return r;
}

// R_x^{-1} Delta_u R_x (w - w y u (1+xu)^{-1} x v (1-xv)^{-1}) for w in yH.
// Delta_u(...x) always ends in x, so the outer rx_inv cannot fail; if it does,
// the engine itself is broken.
inline BiSeries theorem_kernel(const NCPoly& w, SeriesCaps caps) {
    if (!w.in_h1() || w.constant() != 0)
        throw domain_error("theorem_kernel requires w in yH (every word starting with y)");
    const BiSeries wy_u = shift_u(BiSeries::embed(w * NCPoly::y(), caps));
    const BiSeries inv_one_plus_xu = geometric(shift_u(BiSeries::embed(-NCPoly::x(), caps)));
    const BiSeries xv = shift_v(BiSeries::embed(NCPoly::x(), caps));
    const BiSeries inv_one_minus_xv = geometric(xv);
    const BiSeries W = BiSeries::embed(w, caps) - wy_u * inv_one_plus_xu * xv * inv_one_minus_xv;
    try {
        return rx_inv(delta_u(rx(W)));
    } catch (const domain_error& e) {
        throw std::logic_error(std::string("theorem_kernel: internal invariant violated: ") + e.what());
    }
}

}  // namespace fmzv
