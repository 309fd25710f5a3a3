#pragma once

#include <cstdint>
#include <string>

#include "fmzv/errors.hpp"
#include "fmzv/rational.hpp"

namespace fmzv {

// The modulus p^N. Arithmetic runs on native 64-bit words whenever p^N fits
// below 2^63 and falls back to big integers above that; the crossover is a
// property of the magnitude, not a configuration switch.
class PrimePower {
public:
    PrimePower(std::int64_t p, int n) : p_(p), n_(n) {
        if (p < 2) throw config_error("prime must be >= 2");
        if (n < 1) throw config_error("depth N must be >= 1");
        mod_ = 1;
        for (int i = 0; i < n; ++i) mod_ *= p;
        fits64_ = mod_ < (Int(1) << 63);
        mod64_ = fits64_ ? mod_.convert_to<std::uint64_t>() : 0;
    }

    std::int64_t prime() const { return p_; }
    int exponent() const { return n_; }
    const Int& modulus() const { return mod_; }
    bool fits64() const { return fits64_; }
    std::uint64_t modulus64() const { return mod64_; }

private:
    std::int64_t p_;
    int n_;
    Int mod_;
    bool fits64_;
    std::uint64_t mod64_;
};

namespace detail {

// 64-bit residue arithmetic; modulus < 2^63 so sums never overflow.
struct Arith64 {
    using value = std::uint64_t;
    std::uint64_t m;

    value reduce(const Int& a) const {
        Int r = a % m;
        if (r < 0) r += m;
        return r.convert_to<std::uint64_t>();
    }
    Int widen(value a) const { return Int(a); }

    value add(value a, value b) const {
        value s = a + b;
        return s >= m ? s - m : s;
    }
    value sub(value a, value b) const { return a >= b ? a - b : a + (m - b); }
    value mul(value a, value b) const {
        return static_cast<value>(static_cast<unsigned __int128>(a) * b % m);
    }
    value pow(value a, std::uint64_t e) const {
        value r = 1 % m;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

struct ArithBig {
    using value = Int;
    Int m;

    value reduce(const Int& a) const {
        Int r = a % m;
        if (r < 0) r += m;
        return r;
    }
    const Int& widen(const value& a) const { return a; }

    value add(const value& a, const value& b) const {
        Int s = a + b;
        if (s >= m) s -= m;
        return s;
    }
    value sub(const value& a, const value& b) const { return a >= b ? value(a - b) : value(a + (m - b)); }
    value mul(const value& a, const value& b) const { return a * b % m; }
    value pow(const value& a, std::uint64_t e) const { return boost::multiprecision::powm(a, e, m); }
};

// Inverse mod p^N: Fermat inverse mod p, then Newton iterations
// r <- r (2 - a r), each doubling the number of correct p-adic digits.
template <class A>
typename A::value inv_pn(const A& ar, typename A::value a, std::int64_t p, int n) {
    Arith64 base{static_cast<std::uint64_t>(p)};
    std::uint64_t a_mod_p = base.reduce(ar.widen(a));
    if (a_mod_p == 0) throw domain_error("inverse does not exist: p divides argument");
    typename A::value r = ar.reduce(Int(base.pow(a_mod_p, static_cast<std::uint64_t>(p - 2))));
    typename A::value two = ar.reduce(Int(2));
    for (int prec = 1; prec < n; prec *= 2) r = ar.mul(r, ar.sub(two, ar.mul(a, r)));
    return r;
}

}  // namespace detail

// Residue r with a r == 1 mod p^N; requires p not dividing a.
inline Int inv_mod_pn(const Int& a, std::int64_t p, int N) {
    PrimePower pp(p, N);
    if (pp.fits64()) {
        detail::Arith64 ar{pp.modulus64()};
        return Int(detail::inv_pn(ar, ar.reduce(a), p, N));
    }
    detail::ArithBig ar{pp.modulus()};
    return detail::inv_pn(ar, ar.reduce(a), p, N);
}

}  // namespace fmzv
