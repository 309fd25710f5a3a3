#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "fmzv/errors.hpp"
#include "fmzv/ncpoly.hpp"

namespace fmzv {

// Truncation caps for bivariate series: coefficients of u^m v^n are kept for
// 0 <= m <= max_u, 0 <= n <= max_v. Caps are fixed per value; mixing caps in
// arithmetic is a configuration error.
struct SeriesCaps {
    int max_u = 0;
    int max_v = 0;
    bool operator==(const SeriesCaps&) const = default;
};

inline std::string to_string(SeriesCaps c) {
    return "(" + std::to_string(c.max_u) + "," + std::to_string(c.max_v) + ")";
}

// A truncated formal power series in commuting u, v with NCPoly coefficients:
// an element of Q<<x,y>>[[u,v]] modeled up to the caps. Absent coefficients
// are zero; stored coefficients are nonzero and canonical.
class BiSeries {
public:
    using Index = std::pair<int, int>;  // (u-degree, v-degree)
    using CoeffMap = std::map<Index, NCPoly>;

    explicit BiSeries(SeriesCaps caps) : caps_(caps) {
        if (caps.max_u < 0 || caps.max_v < 0) throw config_error("series caps must be >= 0");
    }

    static BiSeries embed(const NCPoly& p, SeriesCaps caps) {
        BiSeries s(caps);
        s.set_coeff(0, 0, p);
        return s;
    }

    static BiSeries one(SeriesCaps caps) { return embed(NCPoly(1), caps); }

    SeriesCaps caps() const { return caps_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    // Unchecked read; beta() is the checked public extraction.
    NCPoly coeff(int m, int n) const {
        auto it = coeffs_.find({m, n});
        return it == coeffs_.end() ? NCPoly() : it->second;
    }

    void set_coeff(int m, int n, NCPoly p) {
        if (m < 0 || n < 0 || m > caps_.max_u || n > caps_.max_v) return;  // truncation discards
        if (p.is_zero())
            coeffs_.erase({m, n});
        else
            coeffs_[{m, n}] = std::move(p);
    }

    void add_coeff(int m, int n, const NCPoly& p) {
        if (m < 0 || n < 0 || m > caps_.max_u || n > caps_.max_v) return;
        auto it = coeffs_.find({m, n});
        if (it == coeffs_.end()) {
            if (!p.is_zero()) coeffs_.emplace(Index{m, n}, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    bool is_zero() const { return coeffs_.empty(); }

    BiSeries& operator+=(const BiSeries& o) {
        require_same_caps(o);
        for (const auto& [idx, p] : o.coeffs_) add_coeff(idx.first, idx.second, p);
        return *this;
    }
    BiSeries& operator-=(const BiSeries& o) {
        require_same_caps(o);
        for (const auto& [idx, p] : o.coeffs_) add_coeff(idx.first, idx.second, -p);
        return *this;
    }

    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator-(const BiSeries& a) {
        BiSeries r(a.caps_);
        for (const auto& [idx, p] : a.coeffs_) r.coeffs_.emplace(idx, -p);
        return r;
    }

    // Cauchy product in (u,v); coefficient products are noncommutative.
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        a.require_same_caps(b);
        BiSeries r(a.caps_);
        for (const auto& [ia, pa] : a.coeffs_)
            for (const auto& [ib, pb] : b.coeffs_) {
                int m = ia.first + ib.first, n = ia.second + ib.second;
                if (m > a.caps_.max_u || n > a.caps_.max_v) continue;
                r.add_coeff(m, n, pa * pb);
            }
        return r;
    }
    BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }

    friend BiSeries operator*(BiSeries a, const Rat& c) {
        if (c == 0) return BiSeries(a.caps_);
        for (auto& [idx, p] : a.coeffs_) p *= c;
        return a;
    }
    friend BiSeries operator*(const Rat& c, BiSeries a) { return std::move(a) * c; }

    bool operator==(const BiSeries&) const = default;

private:
    void require_same_caps(const BiSeries& o) const {
        if (!(caps_ == o.caps_))
            throw config_error("series caps mismatch: " + to_string(caps_) + " vs " + to_string(o.caps_));
    }

    SeriesCaps caps_;
    CoeffMap coeffs_;
};

// Multiplication by u: (m,n) -> (m+1,n), top coefficient discarded.
inline BiSeries shift_u(const BiSeries& s) {
    BiSeries r(s.caps());
    for (const auto& [idx, p] : s.coeffs()) r.set_coeff(idx.first + 1, idx.second, p);
    return r;
}

inline BiSeries shift_v(const BiSeries& s) {
    BiSeries r(s.caps());
    for (const auto& [idx, p] : s.coeffs()) r.set_coeff(idx.first, idx.second + 1, p);
    return r;
}

// The coefficient of u^m v^n. Reading beyond the caps is an error: that
// coefficient was never computed.
inline NCPoly beta(int m, int n, const BiSeries& s) {
    if (m < 0 || n < 0 || m > s.caps().max_u || n > s.caps().max_v)
        throw config_error("beta(" + std::to_string(m) + "," + std::to_string(n) + ") outside caps " +
                           to_string(s.caps()));
    return s.coeff(m, n);
}

// Sum_{i>=0} a^i truncated at the caps; the two-sided inverse of (1 - a).
// Requires a to have zero constant coefficient so the sum is finite: powers
// beyond max_u + max_v vanish under truncation.
inline BiSeries geometric(const BiSeries& a) {
    if (!a.coeff(0, 0).is_zero())
        throw domain_error("geometric: argument must have positive (u,v)-valuation");
    const int bound = a.caps().max_u + a.caps().max_v;
    BiSeries acc = BiSeries::one(a.caps());
    for (int i = 0; i < bound; ++i) acc = BiSeries::one(a.caps()) + a * acc;
    return acc;
}

// One coefficient per line, "u^m v^n : poly", in index order.
inline std::string to_string(const BiSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, p] : s.coeffs()) {
        if (!first) os << '\n';
        first = false;
        os << "u^" << idx.first << " v^" << idx.second << " : " << to_string(p);
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const BiSeries& s) { return os << to_string(s); }

}  // namespace fmzv
