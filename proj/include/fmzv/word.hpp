#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fmzv/errors.hpp"

namespace fmzv {

enum class Letter : char { x = 'x', y = 'y' };

// A monomial of Q<x,y>: a finite string over {x,y}. The empty word is the
// unit monomial 1. Words order by weight first, then lexicographically with
// x < y, which is exactly what byte comparison of the backing string gives.
class Word {
public:
    Word() = default;

    explicit Word(std::string_view letters) : letters_(letters) {
        for (char c : letters_)
            if (c != 'x' && c != 'y')
                throw domain_error("word letters must be 'x' or 'y', got '" + std::string(1, c) + "'");
    }

    static Word single(Letter a) { return Word(std::string(1, static_cast<char>(a))); }

    // z_k = y x^{k-1}
    static Word z(int k) {
        if (k < 1) throw domain_error("z_k requires k >= 1");
        std::string s = "y";
        s.append(static_cast<std::size_t>(k - 1), 'x');
        return Word(s);
    }

    int weight() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    Letter at(int i) const { return static_cast<Letter>(letters_.at(static_cast<std::size_t>(i))); }

    bool starts_with_y() const { return !letters_.empty() && letters_.front() == 'y'; }
    bool ends_with_x() const { return !letters_.empty() && letters_.back() == 'x'; }

    const std::string& str() const { return letters_; }

    Word prefix(int n) const { return Word(letters_.substr(0, static_cast<std::size_t>(n))); }
    Word suffix_from(int i) const { return Word(letters_.substr(static_cast<std::size_t>(i))); }

    friend Word concat(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }

    bool operator==(const Word&) const = default;

    // weight, then lex with x < y
    std::strong_ordering operator<=>(const Word& o) const {
        if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
        return letters_.compare(o.letters_) <=> 0;
    }

private:
    std::string letters_;
};

inline std::string to_string(const Word& w) { return w.empty() ? "1" : w.str(); }

// An index (k_1,...,k_r) of positive integers. Encodes to the word
// z_{k_1}...z_{k_r} and back.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int k : parts_)
            if (k < 1) throw domain_error("composition parts must be >= 1");
    }

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    // "1,2" or "-" (empty); whitespace not accepted
    static Composition parse(std::string_view s) {
        if (s == "-" || s.empty()) return Composition();
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string_view field = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            if (field.empty()) throw domain_error("bad composition '" + std::string(s) + "'");
            int v = 0;
            for (char c : field) {
                if (c < '0' || c > '9') throw domain_error("bad composition '" + std::string(s) + "'");
                v = v * 10 + (c - '0');
                if (v > 1'000'000) throw domain_error("composition part too large");
            }
            if (v < 1) throw domain_error("composition parts must be >= 1");
            parts.push_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Composition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const Composition& k) {
    if (k.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < k.parts().size(); ++i) {
        if (i) os << ',';
        os << k.parts()[i];
    }
    return os.str();
}

inline Word comp_to_word(const Composition& k) {
    std::string s;
    for (int part : k.parts()) {
        s += 'y';
        s.append(static_cast<std::size_t>(part - 1), 'x');
    }
    return Word(s);
}

// Inverse of comp_to_word on monomials of H^1 (empty or starting with y).
inline Composition word_to_comp(const Word& w) {
    if (w.empty()) return Composition();
    if (!w.starts_with_y()) throw domain_error("word '" + w.str() + "' is not in H^1 (must start with y)");
    std::vector<int> parts;
    for (char c : w.str()) {
        if (c == 'y')
            parts.push_back(1);
        else
            ++parts.back();
    }
    return Composition(std::move(parts));
}

}  // namespace fmzv
