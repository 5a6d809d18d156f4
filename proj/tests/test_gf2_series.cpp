#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "riograph/gf2_series.hpp"

using riograph::Gf2Series;
using riograph::HypothesisError;

namespace {

Gf2Series random_series(std::mt19937_64& rng, int trunc, bool unit_const) {
    Gf2Series s(trunc);
    for (int i = 0; i <= trunc; ++i) s.set_coeff(i, rng() & 1);
    if (unit_const) s.set_coeff(0, true);
    return s;
}

// Quadratic convolution written the obvious way, as a check on the
// word-shifted implementation.
Gf2Series naive_mul(const Gf2Series& a, const Gf2Series& b) {
    const int t = std::min(a.trunc(), b.trunc());
    Gf2Series r(t);
    for (int k = 0; k <= t; ++k) {
        bool bit = false;
        for (int i = 0; i <= k; ++i)
            if (i <= a.trunc() && k - i <= b.trunc())
                bit ^= a.coeff(i) && b.coeff(k - i);
        r.set_coeff(k, bit);
    }
    return r;
}

}  // namespace

TEST_CASE("constructors and coefficient access") {
    Gf2Series s(10);
    CHECK(s.trunc() == 10);
    CHECK(s.is_zero());
    s.set_coeff(3, true);
    CHECK(s.coeff(3));
    CHECK_FALSE(s.coeff(2));
    CHECK_THROWS_AS(s.coeff(11), HypothesisError);
    CHECK_THROWS_AS(s.coeff(-1), HypothesisError);
    CHECK_THROWS_AS(Gf2Series(-1), HypothesisError);

    CHECK(Gf2Series::one(5).coeff(0));
    CHECK(Gf2Series::z(5).coeff(1));
    CHECK_FALSE(Gf2Series::z(5).coeff(0));
}

TEST_CASE("addition is coefficientwise xor and truncation-safe") {
    auto a = Gf2Series::from_bits({1, 0, 1, 1}, 3);
    auto b = Gf2Series::from_bits({1, 1, 1, 0, 1, 1}, 5);
    auto c = a + b;
    CHECK(c.trunc() == 3);
    CHECK(c.dump() == "0,1,0,1");
    CHECK(riograph::identical(a - b, c));

    std::mt19937_64 rng(11);
    auto r = random_series(rng, 200, false);
    CHECK((r + r).is_zero());
}

TEST_CASE("multiplication matches the naive convolution") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 40; ++rep) {
        auto a = random_series(rng, 64 + static_cast<int>(rng() % 130), false);
        auto b = random_series(rng, 64 + static_cast<int>(rng() % 130), false);
        CHECK(riograph::identical(a * b, naive_mul(a, b)));
    }
}

TEST_CASE("squaring doubles exponents in characteristic 2") {
    std::mt19937_64 rng(23);
    auto a = random_series(rng, 150, false);
    auto sq = a * a;
    for (int i = 0; i <= sq.trunc(); ++i)
        CHECK(sq.coeff(i) == (i % 2 == 0 && a.coeff(i / 2)));

    auto b = random_series(rng, 150, false);
    auto lhs = (a + b) * (a + b);
    auto rhs = a * a + b * b;
    CHECK(riograph::identical(lhs, rhs));
}

TEST_CASE("inverse against known series and the defining identity") {
    auto one_minus_z = Gf2Series::from_bits({1, 1}, 40);
    auto geo = one_minus_z.inverse();
    for (int i = 0; i <= 40; ++i) CHECK(geo.coeff(i));

    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = random_series(rng, 120, true);
        auto prod = a * a.inverse();
        CHECK(riograph::identical(prod, Gf2Series::one(120)));
    }

    auto no_unit = Gf2Series::z(8);
    CHECK_THROWS_AS(no_unit.inverse(), HypothesisError);
    CHECK_THROWS_AS(Gf2Series::one(8) / no_unit, HypothesisError);
}

TEST_CASE("division") {
    auto num = Gf2Series::z(30);
    auto den = Gf2Series::from_bits({1, 1}, 30);
    auto q = num / den;  // z/(1-z) = z + z^2 + ...
    CHECK_FALSE(q.coeff(0));
    for (int i = 1; i <= 30; ++i) CHECK(q.coeff(i));
}

TEST_CASE("catalan series has ones exactly at 2^k - 1") {
    auto c = Gf2Series::catalan(1 << 12);
    for (int i = 0; i <= c.trunc(); ++i) {
        const bool pow2 = (i & (i + 1)) == 0;  // i+1 is a power of two
        CHECK(c.coeff(i) == pow2);
    }
    // and it satisfies its own functional equation
    auto rhs = Gf2Series::one(1 << 12) + (c * c).shifted_up(1);
    CHECK(prefix_equal(c, rhs));
}

TEST_CASE("pow is iterated multiplication") {
    std::mt19937_64 rng(37);
    auto a = random_series(rng, 100, false);
    auto acc = Gf2Series::one(100);
    for (unsigned k = 0; k <= 6; ++k) {
        CHECK(riograph::identical(a.pow(k), acc));
        acc = acc * a;
    }
}

TEST_CASE("composition") {
    std::mt19937_64 rng(41);
    auto g = random_series(rng, 60, false);
    CHECK(riograph::identical(g.compose(Gf2Series::z(60)), g));

    // brute force: sum g_i * f^i
    auto f = random_series(rng, 60, false);
    f.set_coeff(0, false);
    Gf2Series expect(60);
    auto fi = Gf2Series::one(60);
    for (int i = 0; i <= 60; ++i) {
        if (g.coeff(i)) expect = expect + fi;
        fi = fi * f;
    }
    CHECK(riograph::identical(g.compose(f), expect));

    auto bad = Gf2Series::one(10);
    CHECK_THROWS_AS(g.compose(bad), HypothesisError);
}

TEST_CASE("shifts") {
    auto a = Gf2Series::from_bits({1, 0, 1}, 2);
    auto up = a.shifted_up(2);
    CHECK(up.trunc() == 4);
    CHECK(up.dump() == "0,0,1,0,1");
    CHECK(riograph::identical(up.shifted_down(2), a));
    CHECK_THROWS_AS(up.shifted_down(3), HypothesisError);  // drops a 1
    auto z2 = Gf2Series::z(5);
    CHECK_THROWS_AS(z2.shifted_down(2), HypothesisError);
}

TEST_CASE("even and odd parts recombine to the original") {
    std::mt19937_64 rng(43);
    auto a = random_series(rng, 101, false);
    auto e = a.even_part();
    auto o = a.odd_part();
    CHECK(e.trunc() == 50);
    CHECK(o.trunc() == 50);
    for (int i = 0; i <= 50; ++i) {
        CHECK(e.coeff(i) == a.coeff(2 * i));
        CHECK(o.coeff(i) == a.coeff(2 * i + 1));
    }
}

TEST_CASE("ones_count_prefix") {
    auto a = Gf2Series::from_bits({1, 0, 1, 1, 0, 0, 1}, 6);
    CHECK(a.ones_count_prefix(-5) == 0);
    CHECK(a.ones_count_prefix(0) == 1);
    CHECK(a.ones_count_prefix(3) == 3);
    CHECK(a.ones_count_prefix(6) == 4);
    CHECK_THROWS_AS(a.ones_count_prefix(7), HypothesisError);

    std::mt19937_64 rng(47);
    auto big = random_series(rng, 300, false);
    int running = 0;
    for (int i = 0; i <= 300; ++i) {
        if (big.coeff(i)) ++running;
        CHECK(big.ones_count_prefix(i) == running);
    }
}

TEST_CASE("dump / parse round trip") {
    std::mt19937_64 rng(53);
    auto a = random_series(rng, 90, false);
    auto back = Gf2Series::parse_bits(a.dump());
    CHECK(riograph::identical(a, back));
    CHECK_THROWS_AS(Gf2Series::parse_bits("1,2,0"), riograph::ParseError);
    CHECK_THROWS_AS(Gf2Series::parse_bits(""), riograph::ParseError);
}

TEST_CASE("prefix equality") {
    auto a = Gf2Series::from_bits({1, 1, 0, 1}, 3);
    auto b = Gf2Series::from_bits({1, 1, 0, 1, 1, 0}, 5);
    CHECK(prefix_equal(a, b));
    CHECK_FALSE(riograph::identical(a, b));
    auto c = Gf2Series::from_bits({1, 0}, 1);
    CHECK_FALSE(prefix_equal(a, c));
}

TEST_CASE("poly_expr renders sparse polynomials") {
    CHECK(Gf2Series::from_bits({1, 1, 0, 0, 1}, 4).poly_expr() == "1+z+z^4");
    CHECK(Gf2Series(3).poly_expr() == "0");
    CHECK(Gf2Series::z(2).poly_expr() == "z");
}
