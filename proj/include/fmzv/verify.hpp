#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fmzv/an_value.hpp"
#include "fmzv/operators.hpp"

namespace fmzv {

enum class VerdictStatus { pass, fail, undefined, below_floor };

inline const char* to_cstr(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::undefined: return "undefined";
        case VerdictStatus::below_floor: return "below-floor";
    }
    return "?";
}

// One checked prime or coefficient. `where` is a compact token such as
// "p:13", "coeff:u2v0" or "chain-a:u1v2"; `detail` carries the differing
// residues or polynomials on a mismatch.
struct Verdict {
    std::string where;
    VerdictStatus status = VerdictStatus::pass;
    std::string detail;
};

// Deterministic outcome of one identity check. The parameters are enough to
// reproduce the run exactly; the report passes iff no verdict at or above the
// prime floor failed (below-floor mismatches are informational).
struct VerifyReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Verdict> verdicts;

    void param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }

    std::size_t count(VerdictStatus s) const {
        std::size_t n = 0;
        for (const auto& v : verdicts) n += v.status == s ? 1 : 0;
        return n;
    }

    std::size_t sub_floor_mismatches() const {
        std::size_t n = 0;
        for (const auto& v : verdicts)
            n += (v.status == VerdictStatus::below_floor && !v.detail.empty()) ? 1 : 0;
        return n;
    }

    bool passed() const { return count(VerdictStatus::fail) == 0; }
};

namespace detail {

inline bool needs_quotes(const std::string& s) {
    return s.empty() || s.find_first_of(" ,\"=") != std::string::npos;
}

inline std::string record_quote(const std::string& s) {
    if (!needs_quotes(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

}  // namespace detail

inline std::string summary_line(const VerifyReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS" : "FAIL") << " (" << r.count(VerdictStatus::pass) << " pass, "
       << r.count(VerdictStatus::fail) << " fail, " << r.count(VerdictStatus::undefined) << " undefined, "
       << r.count(VerdictStatus::below_floor) << " below floor";
    if (auto m = r.sub_floor_mismatches()) os << "; " << m << " sub-floor mismatch(es), informational";
    os << ")";
    return os.str();
}

inline void render_text(const VerifyReport& r, std::ostream& os) {
    os << "verify " << r.identity << ": " << summary_line(r) << "\n";
    for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << "\n";
    for (const auto& v : r.verdicts) {
        if (v.status == VerdictStatus::fail)
            os << "  FAIL " << v.where << ": " << v.detail << "\n";
        else if (v.status == VerdictStatus::below_floor && !v.detail.empty())
            os << "  info " << v.where << " (below floor): " << v.detail << "\n";
        else if (v.status == VerdictStatus::undefined)
            os << "  skip " << v.where << ": " << v.detail << "\n";
    }
}

// One verdict per line: identity, parameters, where, status, detail.
inline void render_records(const VerifyReport& r, std::ostream& os) {
    std::string prefix = "identity=" + detail::record_quote(r.identity);
    for (const auto& [k, v] : r.params) prefix += " " + k + "=" + detail::record_quote(v);
    for (const auto& v : r.verdicts) {
        os << prefix << " where=" << v.where << " status=" << to_cstr(v.status);
        if (!v.detail.empty()) os << " detail=" << detail::record_quote(v.detail);
        os << "\n";
    }
    os << prefix << " summary=" << (r.passed() ? "pass" : "fail") << "\n";
}

inline void render_csv(const VerifyReport& r, std::ostream& os, bool header = true) {
    if (header) os << "identity,params,where,status,detail\n";
    std::string params;
    for (const auto& [k, v] : r.params) {
        if (!params.empty()) params += ';';
        params += k + "=" + v;
    }
    for (const auto& v : r.verdicts)
        os << detail::csv_quote(r.identity) << ',' << detail::csv_quote(params) << ',' << v.where << ','
           << to_cstr(v.status) << ',' << detail::csv_quote(v.detail) << "\n";
}

// Options shared by the numeric verifiers. The floor is the smallest prime at
// which the identity is asserted; identities in A / A-hat are allowed finitely
// many exceptional primes, so smaller primes are only reported. When unset it
// defaults to (heaviest word involved) + N + 2.
struct VerifierOptions {
    std::shared_ptr<const PrimeWindow> window;
    std::optional<std::int64_t> floor;
    int jobs = 1;
    FmzvCache* cache = nullptr;

    EvalOptions eval() const { return EvalOptions{cache, jobs}; }
};

namespace detail {

inline std::int64_t auto_floor(std::initializer_list<const NCPoly*> polys, int N) {
    int heaviest = 0;
    for (const NCPoly* p : polys) heaviest = std::max(heaviest, p->max_word_weight());
    return heaviest + N + 2;
}

inline std::vector<Verdict> compare_windows(const AnValue& lhs, const AnValue& rhs, std::int64_t floor) {
    std::vector<Verdict> out;
    out.reserve(lhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        std::int64_t p = lhs.window().primes[i];
        Verdict v;
        v.where = "p:" + std::to_string(p);
        if (!lhs.at(i) || !rhs.at(i)) {
            v.status = VerdictStatus::undefined;
            v.detail = "p divides a coefficient denominator";
        } else {
            const bool equal = *lhs.at(i) == *rhs.at(i);
            if (p < floor) {
                v.status = VerdictStatus::below_floor;
                if (!equal)
                    v.detail = "lhs=" + lhs.at(i)->str() + " rhs=" + rhs.at(i)->str();
            } else if (equal) {
                v.status = VerdictStatus::pass;
            } else {
                v.status = VerdictStatus::fail;
                v.detail = "lhs=" + lhs.at(i)->str() + " rhs=" + rhs.at(i)->str();
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

inline void require_in_yHx(const NCPoly& w, const char* who) {
    if (!(w.in_h0() && w.constant() == 0))
        throw domain_error(std::string(who) + " requires w in yHx (every word starting with y, ending with x)");
}

inline void require_in_yH(const NCPoly& w, const char* who) {
    if (!(w.in_h1() && w.constant() == 0))
        throw domain_error(std::string(who) + " requires w in yH (every word starting with y)");
}

inline NCPoly y_power(int m) {
    NCPoly p(1);
    for (int i = 0; i < m; ++i) p = p * NCPoly::y();
    return p;
}

inline void window_params(VerifyReport& r, const VerifierOptions& opts, std::int64_t floor) {
    r.param("window", to_string(*opts.window));
    r.param("floor", std::to_string(floor));
}

}  // namespace detail

// Theorem: Z_A(R_x^{-1} d_l(w)) = 0 for w in yHx, checked per prime at N = 1.
inline VerifyReport verify_derivation_A(int l, const NCPoly& w, const VerifierOptions& opts) {
    if (l < 1) throw domain_error("verify_derivation_A requires l >= 1");
    detail::require_in_yHx(w, "verify_derivation_A");
    NCPoly q = rx_inv(derive(l, w));
    const std::int64_t floor = opts.floor.value_or(detail::auto_floor({&q}, 1));
    VerifyReport r;
    r.identity = "derivation";
    r.param("l", std::to_string(l));
    r.param("w", to_string(w));
    r.param("N", "1");
    detail::window_params(r, opts, floor);
    AnValue lhs = eval_poly(q, opts.window, 1, opts.eval());
    r.verdicts = detail::compare_windows(lhs, AnValue::zero(opts.window, 1), floor);
    return r;
}

// Remark: Z_A(beta_{m,0} R_x^{-1} Delta_u R_x (w)) = 0 for w in yHx and
// m >= 1. At m = 0 the extracted coefficient is w itself and the statement
// degenerates; that case is recorded as trivial and checked as Z(w) = Z(w).
inline VerifyReport verify_remark(int m, const NCPoly& w, const VerifierOptions& opts) {
    if (m < 0) throw domain_error("verify_remark requires m >= 0");
    detail::require_in_yHx(w, "verify_remark");
    SeriesCaps caps{m, 0};
    NCPoly q = beta(m, 0, rx_inv(delta_u(rx(BiSeries::embed(w, caps)))));
    const std::int64_t floor = opts.floor.value_or(detail::auto_floor({&q, &w}, 1));
    VerifyReport r;
    r.identity = "remark";
    r.param("m", std::to_string(m));
    r.param("w", to_string(w));
    r.param("N", "1");
    detail::window_params(r, opts, floor);
    AnValue lhs = eval_poly(q, opts.window, 1, opts.eval());
    if (m == 0) {
        r.param("note", "trivial case: beta_{0,0} R_x^{-1} Delta_u R_x (w) = w");
        r.verdicts = detail::compare_windows(lhs, eval_poly(w, opts.window, 1, opts.eval()), floor);
    } else {
        r.verdicts = detail::compare_windows(lhs, AnValue::zero(opts.window, 1), floor);
    }
    return r;
}

// Main theorem at depth N:
//   sum_{n=0}^{N-1} Z(beta_{m,n} K(w)) p-bold^n = Z(w) Z(y^m)
// where K is the theorem kernel and terms n >= N die because p-bold^N = 0.
inline VerifyReport verify_main(int m, const NCPoly& w, int N, const VerifierOptions& opts) {
    if (m < 0) throw domain_error("verify_main requires m >= 0");
    if (N < 1) throw config_error("verify_main requires N >= 1");
    detail::require_in_yH(w, "verify_main");
    SeriesCaps caps{m, N - 1};
    BiSeries kernel = theorem_kernel(w, caps);
    std::vector<NCPoly> coeffs;
    for (int n = 0; n < N; ++n) coeffs.push_back(beta(m, n, kernel));
    NCPoly ym = detail::y_power(m);

    int heaviest = std::max(w.max_word_weight(), ym.max_word_weight());
    for (const NCPoly& q : coeffs) heaviest = std::max(heaviest, q.max_word_weight());
    const std::int64_t floor = opts.floor.value_or(heaviest + N + 2);

    VerifyReport r;
    r.identity = "main";
    r.param("m", std::to_string(m));
    r.param("w", to_string(w));
    r.param("N", std::to_string(N));
    r.param("caps", to_string(caps));
    detail::window_params(r, opts, floor);

    AnValue lhs = AnValue::zero(opts.window, N);
    for (int n = 0; n < N; ++n)
        lhs = lhs + eval_poly(coeffs[static_cast<std::size_t>(n)], opts.window, N, opts.eval()) *
                        pbold_pow(n, opts.window, N);
    AnValue rhs =
        eval_poly(w, opts.window, N, opts.eval()) * eval_poly(ym, opts.window, N, opts.eval());
    r.verdicts = detail::compare_windows(lhs, rhs, floor);
    return r;
}

// Hoffman's relation in A-hat at depth N:
//   Z(R_x^{-1} d_1(w x)) = -sum_{n=1}^{N-1} Z(w y x^n) p-bold^n - Z(w) Z(y).
inline VerifyReport verify_hoffman_Ahat(const NCPoly& w, int N, const VerifierOptions& opts) {
    if (N < 1) throw config_error("verify_hoffman_Ahat requires N >= 1");
    detail::require_in_yH(w, "verify_hoffman_Ahat");
    NCPoly lhs_poly = rx_inv(derive(1, w * NCPoly::x()));

    std::vector<NCPoly> tail;  // w y x^n for n = 1..N-1
    NCPoly wyxn = w * NCPoly::y();
    for (int n = 1; n < N; ++n) {
        wyxn = wyxn * NCPoly::x();
        tail.push_back(wyxn);
    }

    int heaviest = std::max(lhs_poly.max_word_weight(), w.max_word_weight() + 1);
    for (const NCPoly& q : tail) heaviest = std::max(heaviest, q.max_word_weight());
    const std::int64_t floor = opts.floor.value_or(heaviest + N + 2);

    VerifyReport r;
    r.identity = "hoffman";
    r.param("w", to_string(w));
    r.param("N", std::to_string(N));
    detail::window_params(r, opts, floor);

    AnValue lhs = eval_poly(lhs_poly, opts.window, N, opts.eval());
    AnValue rhs = -(eval_poly(w, opts.window, N, opts.eval()) *
                    eval_poly(NCPoly::y(), opts.window, N, opts.eval()));
    for (int n = 1; n < N; ++n)
        rhs = rhs - eval_poly(tail[static_cast<std::size_t>(n - 1)], opts.window, N, opts.eval()) *
                        pbold_pow(n, opts.window, N);
    r.verdicts = detail::compare_windows(lhs, rhs, floor);
    return r;
}

// Stuffle homomorphism: Z(w1 * w2) = Z(w1) Z(w2) exactly, at every prime and
// depth, because the truncated sums themselves satisfy the quasi-shuffle
// decomposition. No floor: a failure here is an engine bug.
inline VerifyReport verify_stuffle_hom(const NCPoly& w1, const NCPoly& w2, int N,
                                       const VerifierOptions& opts) {
    if (N < 1) throw config_error("verify_stuffle_hom requires N >= 1");
    if (!w1.in_h1() || !w2.in_h1()) throw domain_error("verify_stuffle_hom requires H^1 elements");
    VerifyReport r;
    r.identity = "stuffle";
    r.param("w1", to_string(w1));
    r.param("w2", to_string(w2));
    r.param("N", std::to_string(N));
    r.param("window", to_string(*opts.window));
    r.param("floor", "none");
    AnValue lhs = eval_poly(harmonic(w1, w2), opts.window, N, opts.eval());
    AnValue rhs = eval_poly(w1, opts.window, N, opts.eval()) *
                  eval_poly(w2, opts.window, N, opts.eval());
    r.verdicts = detail::compare_windows(lhs, rhs, 0);
    return r;
}

// Jarossay-Seki shuffle formula at depth N, for w2 = z_{k_1}...z_{k_r}:
//   Z(w1 sh w2) = (-1)^{|k|} sum_{l_1..l_r >= 0} [prod binom(k_i+l_i-1, l_i)]
//                 Z(w1 z_{k_r+l_r}...z_{k_1+l_1}) p-bold^{sum l_i},
// truncated at sum l_i <= N-1 since p-bold^N = 0.
inline VerifyReport verify_jarossay_seki(const NCPoly& w1, const Composition& k, int N,
                                         const VerifierOptions& opts) {
    if (N < 1) throw config_error("verify_jarossay_seki requires N >= 1");
    if (!w1.in_h1()) throw domain_error("verify_jarossay_seki requires w1 in H^1");
    const Word w2 = comp_to_word(k);
    NCPoly lhs_poly = shuffle(w1, NCPoly(w2));

    // group the truncated sum by s = l_1 + ... + l_r
    const int r_depth = k.depth();
    std::vector<NCPoly> by_power(static_cast<std::size_t>(N));
    std::vector<int> ls(static_cast<std::size_t>(r_depth), 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == r_depth) {
            Int coeff = 1;
            for (int j = 0; j < r_depth; ++j)
                coeff *= binomial(k.parts()[static_cast<std::size_t>(j)] + ls[static_cast<std::size_t>(j)] - 1,
                                  ls[static_cast<std::size_t>(j)]);
            NCPoly word = w1;
            for (int j = r_depth - 1; j >= 0; --j)
                word = word * NCPoly::z(k.parts()[static_cast<std::size_t>(j)] + ls[static_cast<std::size_t>(j)]);
            by_power[static_cast<std::size_t>(used)] += Rat(coeff) * word;
            return;
        }
        for (int l = 0; used + l <= N - 1; ++l) {
            ls[static_cast<std::size_t>(i)] = l;
            self(self, i + 1, used + l);
        }
        ls[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, 0);

    int heaviest = lhs_poly.max_word_weight();
    for (const NCPoly& q : by_power) heaviest = std::max(heaviest, q.max_word_weight());
    const std::int64_t floor = opts.floor.value_or(heaviest + N + 2);

    VerifyReport r;
    r.identity = "jarossay-seki";
    r.param("w1", to_string(w1));
    r.param("k", to_string(k));
    r.param("N", std::to_string(N));
    detail::window_params(r, opts, floor);

    const Rat sign = (k.weight() % 2) ? Rat(-1) : Rat(1);
    AnValue rhs = AnValue::zero(opts.window, N);
    for (int s = 0; s < N; ++s)
        rhs = rhs + eval_poly(sign * by_power[static_cast<std::size_t>(s)], opts.window, N, opts.eval()) *
                        pbold_pow(s, opts.window, N);
    AnValue lhs = eval_poly(lhs_poly, opts.window, N, opts.eval());
    r.verdicts = detail::compare_windows(lhs, rhs, floor);
    return r;
}

// IKZ identity, purely symbolic: 1/(1-yu) * w = 1/(1-yu) sh Delta_u(w),
// compared coefficientwise for all u-degrees <= max_u.
inline VerifyReport verify_ikz_symbolic(const Word& w, int max_u) {
    if (!w.empty() && !w.starts_with_y()) throw domain_error("verify_ikz_symbolic requires an H^1 word");
    if (max_u < 0) throw config_error("verify_ikz_symbolic requires max_u >= 0");
    SeriesCaps caps{max_u, 0};
    BiSeries g = geometric(shift_u(BiSeries::embed(NCPoly::y(), caps)));
    BiSeries ws = BiSeries::embed(NCPoly(w), caps);
    BiSeries lhs = harmonic_series(g, ws);
    BiSeries rhs = shuffle_series(g, delta_u(ws));

    VerifyReport r;
    r.identity = "ikz";
    r.param("w", to_string(w));
    r.param("max_u", std::to_string(max_u));
    for (int m = 0; m <= max_u; ++m) {
        Verdict v;
        v.where = "coeff:u" + std::to_string(m);
        NCPoly a = lhs.coeff(m, 0), b = rhs.coeff(m, 0);
        if (a == b) {
            v.status = VerdictStatus::pass;
        } else {
            v.status = VerdictStatus::fail;
            v.detail = "lhs=" + to_string(a) + " rhs=" + to_string(b);
        }
        r.verdicts.push_back(std::move(v));
    }
    return r;
}

// The series chain behind the main theorem, checked coefficientwise:
//  (a) {1 + yu (1-xv)^{-1}}^{-1}
//        = (1-xv) (1 - Delta_u(x) v)^{-1} (1+yu)^{-1}
//  (b)   = R_x^{-1} Delta_u R_x (1 - yu (1+xu)^{-1} xv (1-xv)^{-1}).
inline VerifyReport verify_series_chain(SeriesCaps caps) {
    const BiSeries one = BiSeries::one(caps);
    const BiSeries yu = shift_u(BiSeries::embed(NCPoly::y(), caps));
    const BiSeries xu = shift_u(BiSeries::embed(NCPoly::x(), caps));
    const BiSeries xv = shift_v(BiSeries::embed(NCPoly::x(), caps));

    BiSeries f1 = geometric(-(yu * geometric(xv)));
    BiSeries dx_v = shift_v(delta_u(BiSeries::embed(NCPoly::x(), caps)));
    BiSeries f2 = (one - xv) * geometric(dx_v) * geometric(-yu);
    BiSeries f3 = rx_inv(delta_u(rx(one - yu * geometric(-xu) * xv * geometric(xv))));

    VerifyReport r;
    r.identity = "chain";
    r.param("caps", to_string(caps));
    auto check = [&](const char* tag, const BiSeries& lhs, const BiSeries& rhs) {
        for (int m = 0; m <= caps.max_u; ++m)
            for (int n = 0; n <= caps.max_v; ++n) {
                Verdict v;
                v.where = std::string("chain-") + tag + ":u" + std::to_string(m) + "v" + std::to_string(n);
                NCPoly a = lhs.coeff(m, n), b = rhs.coeff(m, n);
                if (a == b) {
                    v.status = VerdictStatus::pass;
                } else {
                    v.status = VerdictStatus::fail;
                    v.detail = "lhs=" + to_string(a) + " rhs=" + to_string(b);
                }
                r.verdicts.push_back(std::move(v));
            }
    };
    check("a", f1, f2);
    check("b", f1, f3);
    return r;
}

// Batch mode: one run of every verifier over the standard basket of z-words
// of weight <= 6, l <= 3, m <= 2, N <= 3. Exercises every code path in a few
// seconds against the configured window.
inline std::vector<VerifyReport> verify_default_basket(const VerifierOptions& opts) {
    std::vector<VerifyReport> out;
    const auto comps6 = compositions_up_to(6, 6);

    for (const Composition& k : comps6) {
        if (k.parts().back() < 2) continue;  // yHx needs a trailing x
        NCPoly w = NCPoly::zword(k);
        for (int l = 1; l <= 3; ++l) out.push_back(verify_derivation_A(l, w, opts));
        for (int m = 0; m <= 2; ++m) out.push_back(verify_remark(m, w, opts));
    }
    for (const Composition& k : comps6) {
        NCPoly w = NCPoly::zword(k);
        for (int m = 0; m <= 2; ++m) out.push_back(verify_main(m, w, 3, opts));
        out.push_back(verify_hoffman_Ahat(w, 3, opts));
    }
    for (const Composition& a : comps6)
        for (const Composition& b : comps6) {
            if (a.weight() + b.weight() > 6) continue;
            out.push_back(verify_stuffle_hom(NCPoly::zword(a), NCPoly::zword(b), 3, opts));
        }
    for (const Composition& a : compositions_up_to(3, 3))
        for (const Composition& k : compositions_up_to(3, 3))
            out.push_back(verify_jarossay_seki(NCPoly::zword(a), k, 2, opts));
    out.push_back(verify_ikz_symbolic(Word(), 3));
    for (const Composition& k : compositions_up_to(4, 4))
        out.push_back(verify_ikz_symbolic(comp_to_word(k), 3));
    out.push_back(verify_series_chain(SeriesCaps{3, 3}));
    return out;
}

}  // namespace fmzv
