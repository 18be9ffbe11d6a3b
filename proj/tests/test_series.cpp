#include <doctest.h>

#include <random>

#include "mixedpoly/series.hpp"

using namespace mixedpoly;

namespace {

XPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rat> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) {
        c.emplace_back(num(rng), den(rng));
    }
    return XPoly(std::move(c));
}

TSeries random_series(std::mt19937& rng, std::size_t T) {
    std::vector<XPoly> c;
    for (std::size_t n = 0; n <= T; ++n) {
        c.push_back(random_poly(rng, 2));
    }
    return TSeries(std::move(c));
}

TSeries random_unit(std::mt19937& rng, std::size_t T) {
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<XPoly> c{XPoly(Rat(sign(rng) != 0 ? num(rng) : -num(rng), num(rng)))};
    for (std::size_t n = 1; n <= T; ++n) {
        c.push_back(random_poly(rng, 2));
    }
    return TSeries(std::move(c));
}

} // namespace

TEST_CASE("binomial series at T=2") {
    const TSeries s = primitive_series(Primitive::BinomialX, 2);
    CHECK(s.to_string() == "1 + x·t + (1/2·x^2 - 1/2·x)·t^2");
}

TEST_CASE("mixed truncation orders are rejected") {
    CHECK_THROWS_AS(TSeries::one(3) + TSeries::one(4), TruncationMismatch);
    CHECK_THROWS_AS(TSeries::one(3) * TSeries::t(2), TruncationMismatch);
}

TEST_CASE("division needs a nonzero scalar constant term") {
    CHECK_THROWS_AS(ts_div(TSeries::one(4), TSeries::t(4)), DivisionError);
    CHECK_THROWS_AS(ts_div(TSeries::one(4), TSeries::constant(XPoly::x(), 4)), DivisionError);
    const TSeries g = TSeries::one(4) - TSeries::t(4);
    const TSeries inv = ts_div(TSeries::one(4), g);
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(inv.coeff(n) == XPoly(1));
    }
}

TEST_CASE("composition needs a vanishing inner constant term") {
    CHECK_THROWS_AS(ts_compose(primitive_series(Primitive::Log1p, 4), TSeries::one(4)),
                    CompositionError);
}

TEST_CASE("log1p and expm1 are inverse") {
    const std::size_t T = 16;
    CHECK(ts_compose(primitive_series(Primitive::Log1p, T), primitive_series(Primitive::Expm1, T))
          == TSeries::t(T));
    CHECK(ts_compose(primitive_series(Primitive::Expm1, T), primitive_series(Primitive::Log1p, T))
          == TSeries::t(T));
}

TEST_CASE("exp(x log(1+t)) is the binomial series") {
    const std::size_t T = 16;
    CHECK(ts_compose(primitive_series(Primitive::ExpXt, T), primitive_series(Primitive::Log1p, T))
          == primitive_series(Primitive::BinomialX, T));
}

TEST_CASE("2/(2+t) has coefficients (-1/2)^n") {
    const TSeries g = primitive_series(Primitive::Geom2, 6);
    Rat c = 1;
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(g.coeff(n) == XPoly(c));
        c *= Rat(-1, 2);
    }
}

TEST_CASE("valuation and index shift") {
    const TSeries l = primitive_series(Primitive::Log1p, 6);
    CHECK(l.valuation() == 1);
    CHECK(TSeries(6).valuation() == 7);
    const TSeries q = l.divided_by_t(1);
    CHECK(q.trunc() == 5);
    CHECK(q.coeff(0) == XPoly(1));
    CHECK(q.coeff(1) == XPoly(Rat(-1, 2)));
    CHECK_THROWS_AS(TSeries::one(3).divided_by_t(1), DivisionError);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(7);
    const std::size_t T = 6;
    for (int trial = 0; trial < 25; ++trial) {
        const TSeries a = random_series(rng, T);
        const TSeries b = random_series(rng, T);
        const TSeries c = random_series(rng, T);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * TSeries::one(T) == a);
        CHECK(a - a == TSeries(T));
    }
}

TEST_CASE("ts_pow agrees with repeated multiplication") {
    std::mt19937 rng(11);
    const std::size_t T = 6;
    for (int trial = 0; trial < 10; ++trial) {
        const TSeries f = random_unit(rng, T);
        TSeries acc = TSeries::one(T);
        for (long k = 0; k <= 6; ++k) {
            CHECK(ts_pow(f, k) == acc);
            acc = acc * f;
        }
        CHECK(ts_pow(f, -3) * ts_pow(f, 3) == TSeries::one(T));
    }
}

TEST_CASE("division inverts multiplication") {
    std::mt19937 rng(13);
    const std::size_t T = 7;
    for (int trial = 0; trial < 15; ++trial) {
        const TSeries f = random_series(rng, T);
        const TSeries g = random_unit(rng, T);
        CHECK(ts_div(f * g, g) == f);
    }
}

TEST_CASE("nth_poly and egf_series round trip") {
    const TSeries b = primitive_series(Primitive::BinomialX, 5);
    const XPoly x = XPoly::x();
    CHECK(nth_poly(b, 3) == x * (x - XPoly(1)) * (x - XPoly(2)));
    std::vector<XPoly> polys;
    for (std::size_t n = 0; n <= 5; ++n) {
        polys.push_back(nth_poly(b, n));
    }
    CHECK(egf_series(polys) == b);
}
