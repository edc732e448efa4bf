// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include "lz/checks/oracles.hpp"
#include "lz/checks/random.hpp"
#include "lz/error.hpp"
#include "lz/lambda/lambda.hpp"
#include "lz/lambda/special.hpp"
#include "lz/lambda/witt.hpp"

using namespace lz;
using namespace lz::lambda;

namespace {

Elem E(const char* text) { return Elem(parse_poly(text)); }

WittElement witt(const Ring& r, std::vector<const char*> tail, std::size_t precision) {
    std::vector<Elem> c;
    for (auto* s : tail)
        c.push_back(r.from_poly(parse_poly(s)));
    return WittElement::from_coeffs(r, c, precision);
}

WittElement random_witt(checks::Gen& gen, const Ring& r, std::size_t precision, std::size_t degree) {
    std::vector<Elem> tail;
    for (std::size_t i = 1; i < precision && i <= degree; ++i)
        tail.push_back(gen.elem(r, 2, 1, 2));
    return WittElement::from_coeffs(r, tail, precision);
}

GradedSpace G(std::vector<long> d) {
    std::vector<BigInt> b;
    for (long x : d)
        b.emplace_back(x);
    return GradedSpace(b);
}

} // namespace

TEST_CASE("Witt addition") {
    Ring z = Ring::integers();
    WittElement f = witt(z, {"1"}, 6);
    CHECK(witt_eq(witt_add(f, f), witt(z, {"2", "1"}, 6)));
    CHECK(witt_eq(witt_add(f, WittElement::zero(z, 6)), f));
    CHECK_THROWS_AS(WittElement(TruncSeries::from_poly(z, {E("2")}, 3)), DomainError);
}

TEST_CASE("Witt multiplication examples") {
    Ring r = Ring::poly({"a", "b"});
    CHECK(witt_eq(witt_mul(witt(r, {"a"}, 6), witt(r, {"b"}, 6)), witt(r, {"a*b"}, 6)));
    Ring z = Ring::integers();
    WittElement sq = witt(z, {"2", "1"}, 8);
    WittElement lin = witt(z, {"1"}, 8);
    TruncSeries oracle = checks::explicit_root_product(z, {z.one(), z.one()}, {z.one()}, 8);
    CHECK(series_eq(witt_mul(sq, lin).series(), oracle));
    CHECK(witt_eq(witt_mul(sq, lin), sq));
    CHECK(witt_eq(witt_mul(sq, WittElement::one(z, 8)), sq));
}

TEST_CASE("Witt product agrees with explicit roots and ghost components") {
    checks::Gen gen(21);
    Ring r = Ring::poly({"L"});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Elem> a;
        std::vector<Elem> b;
        for (long i = gen.integer(1, 3); i > 0; --i)
            a.push_back(gen.elem(r, 2, 1, 2));
        for (long i = gen.integer(1, 3); i > 0; --i)
            b.push_back(gen.elem(r, 2, 1, 2));
        std::size_t prec = 12;
        WittElement f(checks::explicit_root_product(r, a, {r.one()}, prec));
        WittElement g(checks::explicit_root_product(r, b, {r.one()}, prec));
        WittElement prod = witt_mul(f, g);
        CHECK(series_eq(prod.series(), checks::explicit_root_product(r, a, b, prec)));
        CHECK(witt_eq(prod, checks::ghost_witt_product(f, g)));
        for (std::size_t p = a.size() * b.size() + 1; p < prec; ++p)
            CHECK(r.is_zero(prod.coeff(p)));
    }
}

TEST_CASE("Witt lambda examples") {
    Ring z = Ring::integers();
    WittElement cube = witt(z, {"3", "3", "1"}, 10);
    CHECK(witt_eq(witt_lambda(1, cube), cube));
    CHECK(witt_eq(witt_lambda(2, cube), cube));
    CHECK(witt_lambda(2, cube).precision() == 5);
    CHECK(witt_eq(witt_lambda(0, cube), WittElement::one(z, 10)));
    CHECK(witt_eq(witt_lambda(3, cube), witt(z, {"1"}, 10)));
}

TEST_CASE("lambda axioms on Witt elements") {
    checks::Gen gen(23);
    Ring r = Ring::poly({"L"});
    for (int trial = 0; trial < 6; ++trial) {
        WittElement f = random_witt(gen, r, 8, 7);
        WittElement g = random_witt(gen, r, 8, 7);
        CHECK(witt_eq(witt_lambda(0, f), WittElement::one(r, 8)));
        CHECK(witt_eq(witt_lambda(1, f), f));
        for (std::uint32_t n = 1; n <= 3; ++n) {
            WittElement lhs = witt_lambda(n, witt_add(f, g));
            WittElement rhs = WittElement::zero(r, 8);
            for (std::uint32_t i = 0; i <= n; ++i)
                rhs = witt_add(rhs, witt_mul(witt_lambda(i, f), witt_lambda(n - i, g)));
            CHECK(witt_eq(lhs, rhs));
        }
    }
}

TEST_CASE("Witt multiplication distributes over addition") {
    checks::Gen gen(29);
    Ring r = Ring::poly({"L"});
    for (int trial = 0; trial < 8; ++trial) {
        WittElement f = random_witt(gen, r, 6, 5);
        WittElement g = random_witt(gen, r, 6, 5);
        WittElement h = random_witt(gen, r, 6, 5);
        CHECK(witt_eq(witt_mul(f, witt_add(g, h)), witt_add(witt_mul(f, g), witt_mul(f, h))));
        CHECK(witt_eq(witt_mul(f, g), witt_mul(g, f)));
    }
}

TEST_CASE("Adams operations") {
    Ring r = Ring::poly({"x", "l2", "a"});
    LambdaElement x(r, {r.one(), E("x"), E("l2")});
    CHECK(r.eq(adams(1, x), E("x")));
    CHECK(r.eq(adams(2, x), E("x^2 - 2*l2")));
    LambdaElement line = LambdaElement::line(r, E("a"), 6);
    for (std::uint32_t n = 1; n <= 6; ++n)
        CHECK(r.eq(adams(n, line), r.pow(E("a"), n)));
    CHECK_THROWS_AS(adams(3, x), PrecisionError);
}

TEST_CASE("Adams operations are additive on Witt sums") {
    checks::Gen gen(31);
    Ring r = Ring::poly({"L"});
    for (int trial = 0; trial < 10; ++trial) {
        WittElement f = random_witt(gen, r, 7, 6);
        WittElement g = random_witt(gen, r, 7, 6);
        auto lf = LambdaElement::from_series(f.series());
        auto lg = LambdaElement::from_series(g.series());
        auto ls = LambdaElement::from_series(witt_add(f, g).series());
        for (std::uint32_t n = 1; n <= 6; ++n)
            CHECK(r.eq(adams(n, ls), r.add(adams(n, lf), adams(n, lg))));
    }
}

TEST_CASE("opposite structure on the integers") {
    Ring z = Ring::integers();
    auto binomial_data = [&](long rank, std::size_t order) {
        return LambdaElement::from_series(TruncSeries::generate(
            z, order + 1, [&](std::size_t i) { return z.from_int(binomial(BigInt(rank), i)); }));
    };
    for (long rank = -3; rank <= 6; ++rank) {
        LambdaElement sigma = opposite_sigma(binomial_data(rank, 8), 8);
        for (std::size_t n = 0; n <= 8; ++n)
            CHECK(sigma.lambda(n).num.constant_term() == binomial(BigInt(rank + static_cast<long>(n) - 1), n));
        LambdaElement back = opposite_sigma(sigma, 8);
        CHECK(series_eq(back.lambda_series(), binomial_data(rank, 8).lambda_series()));
    }
    CHECK(opposite_sigma(binomial_data(2, 3), 3).lambda(3).num == MultiPoly(4L));
    LambdaElement one = opposite_sigma(binomial_data(1, 6), 6);
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(one.lambda(n).num.is_one());
}

TEST_CASE("special identities in Z with the binomial structure") {
    BinomialIntegers model;
    for (long x = -3; x <= 3; ++x) {
        for (long y = -3; y <= 3; ++y) {
            SpecialReport rep = check_special(model, BigInt(x), BigInt(y), {4, 6, 6});
            CHECK(rep.all_hold());
        }
    }
}

TEST_CASE("the opposite structure on Z is not special") {
    SigmaIntegers model;
    SpecialReport rep = check_special(model, BigInt(2), BigInt(2), {2, 1, 2});
    const IdentityCheck& c = rep.checks[1];
    CHECK(c.identity == "lambda^2(xy) = P_2");
    CHECK(c.status == IdentityStatus::Fails);
    CHECK(c.lhs == "10");
    CHECK(c.rhs == "6");
}

TEST_CASE("line elements satisfy the special identities") {
    Ring r = Ring::poly({"a", "b"});
    BigWittModel model{r, 7};
    SpecialReport rep = check_special(model, witt(r, {"a"}, 7), witt(r, {"b"}, 7), {3, 3, 6});
    for (const auto& c : rep.checks)
        CHECK(c.status != IdentityStatus::Fails);
    CHECK(rep.checks.front().status == IdentityStatus::Holds);
}

TEST_CASE("the big Witt ring is special on random elements") {
    checks::Gen gen(37);
    Ring r = Ring::poly({"L"});
    for (int trial = 0; trial < 4; ++trial) {
        BigWittModel model{r, 5};
        SpecialReport rep = check_special(model, random_witt(gen, r, 5, 4), random_witt(gen, r, 5, 4),
                                          {3, 2, 4});
        for (const auto& c : rep.checks) {
            CAPTURE(c.identity);
            CHECK(c.status != IdentityStatus::Fails);
        }
        CHECK(rep.checks[0].status == IdentityStatus::Holds);
    }
}

TEST_CASE("graded lambda examples") {
    for (long g = 0; g <= 4; ++g) {
        for (std::uint32_t m = 0; m <= 6; ++m) {
            std::vector<BigInt> expected;
            for (std::uint32_t j = 0; j <= m; ++j)
                expected.push_back(binomial(BigInt(g), j));
            CHECK(graded_lambda(m, G({1, g})) == GradedSpace(expected));
        }
    }
    for (std::uint32_t m = 0; m <= 6; ++m) {
        std::vector<long> d(2 * m + 1, 0);
        for (std::uint32_t j = 0; j <= m; ++j)
            d[2 * j] = 1;
        CHECK(graded_lambda(m, G({1, 0, 1})) == G(d));
    }
    CHECK(graded_lambda(0, G({3, -2, 5})) == GradedSpace::one());
}

TEST_CASE("graded lambda agrees with the multiset oracle") {
    std::vector<GradedSpace> spaces{G({1, 2, 1}), G({1, 0, 2}), G({2, 1}), G({1, 3, 2, 1}), G({0, 1, 1})};
    for (const auto& v : spaces) {
        for (std::uint32_t m = 0; m <= 6; ++m)
            CHECK(graded_lambda(m, v) == checks::multiset_graded_lambda(m, v));
    }
}

TEST_CASE("graded lambda is additive") {
    checks::Gen gen(41);
    for (int trial = 0; trial < 20; ++trial) {
        GradedSpace u = G({gen.integer(-2, 3), gen.integer(-2, 3), gen.integer(-2, 3)});
        GradedSpace v = G({gen.integer(-2, 3), gen.integer(-2, 3)});
        for (std::uint32_t m = 0; m <= 5; ++m) {
            GradedSpace rhs;
            for (std::uint32_t i = 0; i <= m; ++i)
                rhs = rhs + graded_lambda(i, u) * graded_lambda(m - i, v);
            CHECK(graded_lambda(m, u + v) == rhs);
        }
    }
}

TEST_CASE("virtual graded pieces follow the difference conventions") {
    // Lambda^k(V - W) = sum (-1)^j Lambda^i V Sym^j W in an odd degree.
    for (long v = 0; v <= 3; ++v) {
        for (long w = 0; w <= 3; ++w) {
            for (std::uint32_t k = 0; k <= 4; ++k) {
                BigInt expected = 0;
                for (std::uint32_t j = 0; j <= k; ++j) {
                    BigInt t = binomial(BigInt(v), k - j) * binomial(BigInt(w + j - 1), j);
                    expected += (j % 2 == 0) ? t : BigInt(-t);
                }
                CHECK(graded_lambda(k, G({0, v - w})).dim(k) == expected);
            }
        }
    }
}

TEST_CASE("the graded structure is not special") {
    GradedModel model;
    SpecialReport rep = check_special(model, G({0, 1}), G({0, 1}), {2, 1, 2});
    CHECK(rep.any_fails());
}
