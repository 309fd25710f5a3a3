#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "fmzv/rational.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

// An element of H = Q<x,y> in canonical form: finitely many words mapped to
// nonzero rationals. Equality is structural equality of the term map.
class NCPoly {
public:
    using TermMap = std::map<Word, Rat>;

    NCPoly() = default;
    NCPoly(int c) { add_term(Word(), Rat(c)); }
    NCPoly(const Rat& c) { add_term(Word(), c); }
    NCPoly(const Word& w) { add_term(w, Rat(1)); }

    static NCPoly letter(Letter a) { return NCPoly(Word::single(a)); }
    static NCPoly x() { return letter(Letter::x); }
    static NCPoly y() { return letter(Letter::y); }
    // z = x + y
    static NCPoly z() { return x() + y(); }
    static NCPoly z(int k) { return NCPoly(Word::z(k)); }
    static NCPoly zword(const Composition& k) { return NCPoly(comp_to_word(k)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat constant() const { return coeff(Word()); }

    // Largest word weight present; 0 for the zero polynomial.
    int max_word_weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }

    void add_term(const Word& w, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NCPoly& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [w, v] : terms_) v *= c;
        }
        return *this;
    }

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(const NCPoly& a) {
        NCPoly r = a;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }
    friend NCPoly operator*(NCPoly a, const Rat& c) { return a *= c; }
    friend NCPoly operator*(const Rat& c, NCPoly a) { return a *= c; }

    // Noncommutative product: bilinear extension of word concatenation.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
        return r;
    }
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    bool operator==(const NCPoly&) const = default;

    // every word empty or starting with y (element of H^1 = Q + yH)
    bool in_h1() const {
        for (const auto& [w, c] : terms_)
            if (!w.empty() && !w.starts_with_y()) return false;
        return true;
    }

    // every word empty or in yHx (element of H^0 = Q + yHx)
    bool in_h0() const {
        for (const auto& [w, c] : terms_)
            if (!w.empty() && !(w.starts_with_y() && w.ends_with_x())) return false;
        return true;
    }

    // every word nonempty and ending with x (element of Hx)
    bool ends_with_x() const {
        for (const auto& [w, c] : terms_)
            if (!w.ends_with_x()) return false;
        return true;
    }

private:
    TermMap terms_;
};

// "3 + yx - 2/3*yxy": terms in canonical word order, coefficient omitted when
// it is +-1 on a nonempty word. Parses back through the expression language.
inline std::string to_string(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (w.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += w.str();
        } else {
            out += to_string(mag);
            out += '*';
            out += w.str();
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const NCPoly& p) { return os << to_string(p); }

}  // namespace fmzv
