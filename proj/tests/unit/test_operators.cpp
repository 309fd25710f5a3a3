#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fmzv/operators.hpp"
#include "test_util.hpp"

using namespace fmzv;

namespace {

NCPoly z(int k) { return NCPoly::z(k); }
NCPoly zw(std::initializer_list<int> parts) { return NCPoly::zword(Composition(parts)); }

BiSeries embed(const NCPoly& p, SeriesCaps caps) { return BiSeries::embed(p, caps); }

}  // namespace

TEST_CASE("harmonic product on words", "[operators]") {
    NCPoly w = zw({1, 2});
    REQUIRE(harmonic(NCPoly(1), w) == w);
    REQUIRE(harmonic(w, NCPoly(1)) == w);
    REQUIRE(harmonic(z(1), z(1)) == Rat(2) * zw({1, 1}) + z(2));
    REQUIRE(harmonic(z(2), z(3)) == zw({2, 3}) + zw({3, 2}) + z(5));
    REQUIRE_THROWS_AS(harmonic(NCPoly::x(), NCPoly::y()), domain_error);
}

TEST_CASE("shuffle product on words", "[operators]") {
    NCPoly w = NCPoly(Word("xy"));
    REQUIRE(shuffle(NCPoly(1), w) == w);
    REQUIRE(shuffle(NCPoly::x(), NCPoly::y()) == NCPoly(Word("xy")) + NCPoly(Word("yx")));
    REQUIRE(shuffle(NCPoly::y(), NCPoly::y()) == Rat(2) * NCPoly(Word("yy")));
}

TEST_CASE("products are commutative and associative", "[operators]") {
    std::mt19937 rng(29);
    for (int i = 0; i < 20; ++i) {
        NCPoly a = testutil::random_poly(rng, 2, 3, true);
        NCPoly b = testutil::random_poly(rng, 2, 3, true);
        NCPoly c = testutil::random_poly(rng, 2, 2, true);
        REQUIRE(harmonic(a, b) == harmonic(b, a));
        REQUIRE(harmonic(harmonic(a, b), c) == harmonic(a, harmonic(b, c)));
        NCPoly d = testutil::random_poly(rng, 2, 3, false);
        NCPoly e = testutil::random_poly(rng, 2, 3, false);
        REQUIRE(shuffle(d, e) == shuffle(e, d));
        REQUIRE(shuffle(shuffle(d, e), c) == shuffle(d, shuffle(e, c)));
    }
}

TEST_CASE("shuffle coefficients sum to a binomial", "[operators]") {
    std::mt19937 rng(31);
    for (int i = 0; i < 30; ++i) {
        Word w1 = testutil::random_word(rng, 4, false);
        Word w2 = testutil::random_word(rng, 4, false);
        Rat total = 0;
        NCPoly sh = shuffle(NCPoly(w1), NCPoly(w2));
        for (const auto& [w, c] : sh.terms()) total += c;
        REQUIRE(total == Rat(binomial(w1.weight() + w2.weight(), w1.weight())));
    }
}

TEST_CASE("series products", "[operators]") {
    SeriesCaps caps{2, 0};
    BiSeries g = geometric(shift_u(embed(NCPoly::y(), caps)));
    REQUIRE(harmonic_series(g, BiSeries::one(caps)) == g);
    REQUIRE(shuffle_series(embed(NCPoly::y(), caps), embed(NCPoly::y(), caps)) ==
            embed(Rat(2) * NCPoly(Word("yy")), caps));
    REQUIRE(beta(1, 0, harmonic_series(g, embed(z(2), caps))) == harmonic(NCPoly::y(), z(2)));
}

TEST_CASE("derivation generator images", "[operators]") {
    REQUIRE(derive(1, NCPoly::x()) == NCPoly(Word("yx")));
    REQUIRE(derive(1, NCPoly::y()) == -NCPoly(Word("yx")));
    REQUIRE(derive(2, NCPoly::x()) == NCPoly(Word("yxx")) + NCPoly(Word("yyx")));
    REQUIRE(derive(1, NCPoly(Word("xy"))) == NCPoly(Word("yxy")) - NCPoly(Word("xyx")));
}

TEST_CASE("derivation kills constants and z", "[operators]") {
    for (int l = 1; l <= 6; ++l) {
        REQUIRE(derive(l, NCPoly(1)).is_zero());
        REQUIRE(derive(l, NCPoly::z()).is_zero());
    }
}

TEST_CASE("Leibniz rule", "[operators]") {
    std::mt19937 rng(37);
    for (int i = 0; i < 25; ++i) {
        NCPoly a = testutil::random_poly(rng, 3, 3, false);
        NCPoly b = testutil::random_poly(rng, 3, 3, false);
        for (int l = 1; l <= 4; ++l)
            REQUIRE(derive(l, a * b) == derive(l, a) * b + a * derive(l, b));
    }
}

TEST_CASE("delta_u closed form on x", "[operators]") {
    SeriesCaps caps{4, 0};
    BiSeries dx = delta_u(embed(NCPoly::x(), caps));
    for (int i = 0; i <= 4; ++i) {
        NCPoly expected = NCPoly(Word(std::string(static_cast<std::size_t>(i), 'y') + "x"));
        if (i % 2) expected = -expected;
        REQUIRE(dx.coeff(i, 0) == expected);
    }
    BiSeries closed = geometric(shift_u(embed(-NCPoly::y(), caps))) * embed(NCPoly::x(), caps);
    REQUIRE(dx == closed);
}

TEST_CASE("delta_u fixes z and the unit", "[operators]") {
    SeriesCaps caps{3, 1};
    REQUIRE(delta_u(embed(NCPoly::z(), caps)) == embed(NCPoly::z(), caps));
    REQUIRE(delta_u(BiSeries::one(caps)) == BiSeries::one(caps));
    REQUIRE(delta_u(embed(NCPoly::y(), caps)).coeff(1, 0) == NCPoly(Word("yx")));
}

TEST_CASE("delta_u inverse closed form", "[operators]") {
    // x = Delta_u(x + y (1+xu)^{-1} x u)
    SeriesCaps caps{4, 0};
    BiSeries inv_one_plus_xu = geometric(shift_u(embed(-NCPoly::x(), caps)));
    BiSeries arg = embed(NCPoly::x(), caps) +
                   shift_u(embed(NCPoly::y(), caps) * inv_one_plus_xu * embed(NCPoly::x(), caps));
    REQUIRE(delta_u(arg) == embed(NCPoly::x(), caps));
}

TEST_CASE("delta_u is multiplicative", "[operators]") {
    std::mt19937 rng(41);
    SeriesCaps caps{2, 2};
    for (int i = 0; i < 10; ++i) {
        BiSeries a(caps), b(caps);
        std::uniform_int_distribution<int> mdist(0, 2), ndist(0, 2);
        for (int t = 0; t < 3; ++t) {
            a.add_coeff(mdist(rng), ndist(rng), testutil::random_poly(rng, 2, 2, false));
            b.add_coeff(mdist(rng), ndist(rng), testutil::random_poly(rng, 2, 2, false));
        }
        REQUIRE(delta_u(a * b) == delta_u(a) * delta_u(b));
    }
}

TEST_CASE("rx and its partial inverse", "[operators]") {
    SeriesCaps caps{1, 1};
    REQUIRE(rx_inv(embed(NCPoly(Word("yx")), caps)) == embed(NCPoly::y(), caps));
    REQUIRE(rx_inv(NCPoly(Word("yx")) + NCPoly(Word("yxx"))) == NCPoly::y() + NCPoly(Word("yx")));
    REQUIRE_THROWS_AS(rx_inv(embed(NCPoly::y(), caps)), domain_error);
    REQUIRE_THROWS_AS(rx_inv(NCPoly(2)), domain_error);

    std::mt19937 rng(43);
    for (int i = 0; i < 20; ++i) {
        NCPoly p = testutil::random_poly(rng, 3, 3, false);
        REQUIRE(rx_inv(rx(p)) == p);
    }
}

TEST_CASE("IKZ identity for small words", "[operators]") {
    for (const auto& [wstr, max_u] :
         std::vector<std::pair<std::string, int>>{{"", 3}, {"yx", 3}, {"yyx", 4}, {"yxy", 3}}) {
        SeriesCaps caps{max_u, 0};
        BiSeries g = geometric(shift_u(embed(NCPoly::y(), caps)));
        BiSeries w = embed(Word(wstr).empty() ? NCPoly(1) : NCPoly(Word(wstr)), caps);
        REQUIRE(harmonic_series(g, w) == shuffle_series(g, delta_u(w)));
    }
}

TEST_CASE("theorem kernel coefficients", "[operators]") {
    for (const NCPoly& w : {z(2), zw({1, 2}), z(1), zw({2, 1})}) {
        SeriesCaps caps{1, 4};
        BiSeries kernel = theorem_kernel(w, caps);

        // v-free part: beta(m,0) agrees with R_x^{-1} Delta_u R_x (w)
        BiSeries plain = rx_inv(delta_u(rx(embed(w, caps))));
        REQUIRE(beta(1, 0, kernel) == beta(1, 0, plain));
        REQUIRE(beta(0, 0, kernel) == w);

        // beta(1,0) = -R_x^{-1} d_1 R_x (w)
        REQUIRE(beta(1, 0, kernel) == -rx_inv(derive(1, w * NCPoly::x())));

        // beta(1,n) = -w y x^n for n >= 1
        for (int n = 1; n <= 4; ++n) {
            NCPoly expected = -(w * NCPoly::y());
            for (int i = 0; i < n; ++i) expected = expected * NCPoly::x();
            REQUIRE(beta(1, n, kernel) == expected);
        }
    }
}

TEST_CASE("theorem kernel domain checks", "[operators]") {
    SeriesCaps caps{1, 1};
    REQUIRE_THROWS_AS(theorem_kernel(NCPoly::x(), caps), domain_error);
    REQUIRE_THROWS_AS(theorem_kernel(NCPoly::y() + NCPoly(1), caps), domain_error);
}
