#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fmzv/verify.hpp"

using namespace fmzv;

namespace {

VerifierOptions small_opts() {
    VerifierOptions opts;
    opts.window = make_window(11, 199);
    opts.jobs = 2;
    return opts;
}

}  // namespace

TEST_CASE("derivation relation holds numerically", "[verify]") {
    auto opts = small_opts();
    REQUIRE(verify_derivation_A(1, NCPoly::z(2), opts).passed());
    REQUIRE(verify_derivation_A(1, NCPoly::zword(Composition{1, 2}), opts).passed());
    REQUIRE(verify_derivation_A(3, NCPoly::zword(Composition{2, 2}), opts).passed());
    // linear combinations in yHx are fine too
    REQUIRE(verify_derivation_A(2, NCPoly::z(2) - Rat(3) * NCPoly::zword(Composition{1, 3}), opts).passed());
    REQUIRE_THROWS_AS(verify_derivation_A(1, NCPoly::z(1), opts), domain_error);  // y does not end in x
    REQUIRE_THROWS_AS(verify_derivation_A(0, NCPoly::z(2), opts), domain_error);
}

TEST_CASE("derivation floor defaults to weight + l + 2", "[verify]") {
    auto opts = small_opts();
    auto report = verify_derivation_A(2, NCPoly::z(3), opts);
    // heaviest word of R_x^{-1} d_2(z_3) has weight 3 + 2 - 1 = 4, N = 1
    for (const auto& [k, v] : report.params)
        if (k == "floor") REQUIRE(v == "7");
}

TEST_CASE("remark identity and its trivial case", "[verify]") {
    auto opts = small_opts();
    REQUIRE(verify_remark(1, NCPoly::z(2), opts).passed());
    REQUIRE(verify_remark(2, NCPoly::zword(Composition{1, 2}), opts).passed());
    auto trivial = verify_remark(0, NCPoly::z(2), opts);
    REQUIRE(trivial.passed());
    bool noted = false;
    for (const auto& [k, v] : trivial.params) noted = noted || k == "note";
    REQUIRE(noted);
}

TEST_CASE("remark agrees with the kernel coefficient route", "[verify]") {
    // cross-check: the v-free kernel coefficient beta(m,0,theorem_kernel(w))
    // is the same polynomial the remark verifier evaluates at N = 1
    auto opts = small_opts();
    NCPoly w = NCPoly::zword(Composition{1, 2});
    for (int m = 1; m <= 2; ++m) {
        NCPoly via_kernel = beta(m, 0, theorem_kernel(w, SeriesCaps{m, 1}));
        NCPoly direct = beta(m, 0, rx_inv(delta_u(rx(BiSeries::embed(w, SeriesCaps{m, 0})))));
        REQUIRE(via_kernel == direct);
        REQUIRE(eval_poly(via_kernel, opts.window, 1) == eval_poly(direct, opts.window, 1));
        REQUIRE(verify_remark(m, w, opts).passed());
    }
}

TEST_CASE("main theorem instances", "[verify]") {
    auto opts = small_opts();
    for (int m = 0; m <= 2; ++m) {
        REQUIRE(verify_main(m, NCPoly::z(1), 2, opts).passed());
        REQUIRE(verify_main(m, NCPoly::z(2), 2, opts).passed());
    }
    REQUIRE(verify_main(1, NCPoly::zword(Composition{1, 2}), 3, opts).passed());
    REQUIRE_THROWS_AS(verify_main(1, NCPoly::x(), 2, opts), domain_error);
    REQUIRE_THROWS_AS(verify_main(-1, NCPoly::z(2), 2, opts), domain_error);
    REQUIRE_THROWS_AS(verify_main(1, NCPoly::z(2), 0, opts), config_error);
}

TEST_CASE("hoffman relation instances", "[verify]") {
    auto opts = small_opts();
    REQUIRE(verify_hoffman_Ahat(NCPoly::z(1), 3, opts).passed());
    REQUIRE(verify_hoffman_Ahat(NCPoly::z(2), 2, opts).passed());
    REQUIRE(verify_hoffman_Ahat(NCPoly::zword(Composition{1, 1}), 1, opts).passed());
    REQUIRE_THROWS_AS(verify_hoffman_Ahat(NCPoly(1), 2, opts), domain_error);
}

TEST_CASE("stuffle homomorphism has no floor", "[verify]") {
    VerifierOptions opts;
    opts.window = make_window(2, 199);
    opts.jobs = 2;
    auto report = verify_stuffle_hom(NCPoly::z(1), NCPoly::z(1), 2, opts);
    REQUIRE(report.passed());
    REQUIRE(report.count(VerdictStatus::below_floor) == 0);
    REQUIRE(report.count(VerdictStatus::pass) == report.verdicts.size());

    REQUIRE(verify_stuffle_hom(NCPoly::z(2), NCPoly::z(3), 2, opts).passed());
    REQUIRE_THROWS_AS(verify_stuffle_hom(NCPoly::x(), NCPoly::z(1), 1, opts), domain_error);
}

TEST_CASE("jarossay-seki instances", "[verify]") {
    auto opts = small_opts();
    REQUIRE(verify_jarossay_seki(NCPoly::z(1), Composition{1}, 1, opts).passed());
    REQUIRE(verify_jarossay_seki(NCPoly::z(1), Composition{2}, 2, opts).passed());
    REQUIRE(verify_jarossay_seki(NCPoly::z(2), Composition{1, 1}, 2, opts).passed());
    REQUIRE(verify_jarossay_seki(NCPoly(1), Composition{2}, 2, opts).passed());
}

TEST_CASE("ikz symbolic verifier", "[verify]") {
    REQUIRE(verify_ikz_symbolic(Word(), 3).passed());
    REQUIRE(verify_ikz_symbolic(Word("yx"), 3).passed());
    REQUIRE(verify_ikz_symbolic(Word("yyx"), 4).passed());
    REQUIRE_THROWS_AS(verify_ikz_symbolic(Word("xy"), 2), domain_error);
}

TEST_CASE("series chain verifier", "[verify]") {
    auto report = verify_series_chain(SeriesCaps{3, 3});
    REQUIRE(report.passed());
    REQUIRE(report.verdicts.size() == 2 * 4 * 4);
}

TEST_CASE("reports are deterministic and render in all formats", "[verify]") {
    auto opts = small_opts();
    auto r1 = verify_main(1, NCPoly::z(2), 2, opts);
    auto r2 = verify_main(1, NCPoly::z(2), 2, opts);

    std::ostringstream rec1, rec2, text, csv;
    render_records(r1, rec1);
    render_records(r2, rec2);
    REQUIRE(rec1.str() == rec2.str());
    REQUIRE(rec1.str().find("identity=main") == 0);
    REQUIRE(rec1.str().find("status=pass") != std::string::npos);
    REQUIRE(rec1.str().find("summary=pass") != std::string::npos);

    render_text(r1, text);
    REQUIRE(text.str().find("verify main: PASS") == 0);
    render_csv(r1, csv);
    REQUIRE(csv.str().rfind("identity,params,where,status,detail\n", 0) == 0);
}

TEST_CASE("failures report the differing residues", "[verify]") {
    // compare a deliberately false pair: Z(1) = 1 against 0 at every prime
    auto W = make_window(11, 31);
    AnValue lhs = eval_poly(NCPoly(1), W, 1);
    auto verdicts = detail::compare_windows(lhs, AnValue::zero(W, 1), 13);
    bool some_fail = false, some_info = false;
    for (const auto& v : verdicts) {
        if (v.status == VerdictStatus::fail) {
            some_fail = true;
            REQUIRE(v.detail == "lhs=1 rhs=0");
        }
        if (v.status == VerdictStatus::below_floor) {
            some_info = true;  // p = 11 mismatch is reported, not asserted
            REQUIRE_FALSE(v.detail.empty());
        }
    }
    REQUIRE(some_fail);
    REQUIRE(some_info);
}

TEST_CASE("below-floor primes are informational", "[verify]") {
    VerifierOptions opts;
    opts.window = make_window(2, 31);
    opts.floor = 100;  // everything below floor
    auto report = verify_derivation_A(1, NCPoly::z(2), opts);
    REQUIRE(report.passed());
    REQUIRE(report.count(VerdictStatus::pass) == 0);
    REQUIRE(report.count(VerdictStatus::below_floor) + report.count(VerdictStatus::undefined) ==
            report.verdicts.size());
}
