// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include "lz/checks/oracles.hpp"
#include "lz/checks/random.hpp"
#include "lz/error.hpp"
#include "lz/rationality/determinant.hpp"
#include "lz/rationality/rationality.hpp"

using namespace lz;
using namespace lz::rational;

namespace {

Elem E(const char* text) { return Elem(parse_poly(text)); }

RingPoly poly(const Ring& r, std::vector<const char*> c) {
    std::vector<Elem> out;
    for (auto* s : c)
        out.push_back(r.from_poly(parse_poly(s)));
    return RingPoly(r, out);
}

TruncSeries fibonacci(const Ring& r, std::size_t n) {
    std::vector<Elem> c;
    BigInt a = 1, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        c.push_back(r.from_int(a));
        BigInt next = a + b;
        a = b;
        b = next;
    }
    return TruncSeries(r, c);
}

// 1 + L + ... + L^n summed directly.
TruncSeries zeta_p1(const Ring& r, std::size_t n) {
    return TruncSeries::generate(r, n, [&](std::size_t i) {
        MultiPoly s;
        for (std::size_t k = 0; k <= i; ++k)
            s += MultiPoly::variable("L").pow(static_cast<unsigned>(k));
        return Elem(s);
    });
}

TruncSeries theta(const Ring& r, std::size_t n) {
    return TruncSeries::generate(r, n, [](std::size_t i) {
        std::size_t k = 0;
        while (k * k < i)
            ++k;
        return Elem(k * k == i ? 1L : 0L);
    });
}

GroupSeries powers_of_L(std::size_t n, const std::function<unsigned(std::size_t)>& exponent) {
    Ring r = Ring::poly({"L"});
    return GroupSeries::from_series(TruncSeries::generate(r, n, [&](std::size_t i) {
        return Elem(MultiPoly::variable("L").pow(exponent(i)));
    }));
}

std::vector<BigRational> rational_coeffs(const RingPoly& p) {
    std::vector<BigRational> out;
    for (const auto& c : p.coeffs)
        out.push_back(p.ring.evaluate(c, {}));
    return out;
}

} // namespace

TEST_CASE("determinant routes agree") {
    Ring r = Ring::poly({"L", "M"});
    checks::Gen gen(7);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            Matrix m(n, std::vector<Elem>(n));
            for (auto& row : m)
                for (auto& e : row)
                    e = gen.elem(r, 2, 1, 3);
            CHECK(r.eq(determinant_cofactor(r, m), determinant_bareiss(r, m)));
        }
    }
    Ring z = Ring::integers();
    Matrix vander{{1L, 1L, 1L}, {1L, 2L, 4L}, {1L, 3L, 9L}};
    CHECK(z.eq(determinant(z, vander), Elem(2L)));
    Matrix singular{{1L, 2L}, {2L, 4L}};
    CHECK(z.is_zero(determinant_bareiss(z, singular)));
    Matrix pivot{{0L, 1L}, {1L, 0L}};
    CHECK(z.eq(determinant_bareiss(z, pivot), Elem(-1L)));
    CHECK(z.eq(determinant(z, {}), Elem(1L)));
    Ring sz = Ring::square_zero({"x", "y"});
    CHECK_THROWS_AS(determinant_bareiss(sz, {{E("x")}}), DomainError);
    Matrix nil{{E("x"), E("y")}, {E("y"), E("x")}};
    CHECK(sz.is_zero(determinant(sz, nil)));
    Matrix mixed{{E("x"), E("y")}, {E("1"), E("x + y")}};
    CHECK(sz.eq(determinant(sz, mixed), sz.from_poly(parse_poly("x*y - y"))));
}

TEST_CASE("hankel test examples") {
    Ring z = Ring::integers();
    TruncSeries geo = TruncSeries::geometric(z, E("2"), 12);
    HankelReport rep = hankel_test(geo, 2, 4);
    REQUIRE(rep.window);
    CHECK(*rep.window == std::pair<std::size_t, std::size_t>{1, 0});
    for (const auto& c : rep.cells[1])
        CHECK(z.is_zero(c.det));
    CHECK(z.eq(rep.cells[0][3].det, E("8")));

    Ring sz = Ring::square_zero({"x"});
    TruncSeries xg = TruncSeries::generate(sz, 10, [](std::size_t) { return E("x"); });
    HankelReport rx = hankel_test(xg, 2, 3);
    REQUIRE(rx.window);
    CHECK(rx.window->first == 1);
    for (const auto& c : rx.cells[1])
        CHECK(sz.is_zero(c.det));

    Ring inf = Ring::square_zero({}, {"x"});
    TruncSeries sx = TruncSeries::generate(inf, 20, [&](std::size_t i) {
        return i == 0 ? inf.zero() : inf.var("x" + std::to_string(i));
    });
    HankelReport rs = hankel_test(sx, 3, 8);
    CHECK_FALSE(rs.window);
    for (std::size_t m = 1; m <= 3; ++m) {
        for (const auto& c : rs.cells[m]) {
            if (c.i == 0)
                continue;
            CHECK_FALSE(inf.is_zero(c.det));
            CHECK(abs(c.diagonal_coefficient) == 1);
            CHECK(c.diagonal_monomial.total_degree() == m + 1);
            CHECK(c.diagonal_monomial.exponent("x" + std::to_string(c.i + 2 * m)) == 1);
        }
    }
    CHECK_THROWS_AS(hankel_test(geo, 4, 4), PrecisionError);
}

TEST_CASE("hankel test is deterministic") {
    Ring r = Ring::poly({"L"});
    TruncSeries f = zeta_p1(r, 12);
    Json a = to_json(hankel_test(f, 3, 4));
    Json b = to_json(hankel_test(f, 3, 4));
    CHECK(a.dump() == b.dump());
    CHECK(a["window"]["m"] == 2);
}

TEST_CASE("verify_global examples") {
    Ring z = Ring::integers();
    TruncSeries ones = TruncSeries::geometric(z, z.one(), 10);
    GlobalReport g1 = verify_global(ones, poly(z, {"1", "-1"}), poly(z, {"1"}));
    CHECK(g1.holds());
    CHECK(g1.uniqueness == Uniqueness::Certified);
    CHECK(verify_global(fibonacci(z, 15), poly(z, {"1", "-1", "-1"}), poly(z, {"1"})).holds());
    CHECK_FALSE(verify_global(fibonacci(z, 15), poly(z, {"1", "-1"}), poly(z, {"1"})).holds());

    Ring r = Ring::poly({"L"});
    GlobalReport p1 =
        verify_global(zeta_p1(r, 20), poly(r, {"1", "-1 - L", "L"}), poly(r, {"1"}));
    CHECK(p1.holds());

    CHECK_THROWS_AS(verify_global(ones.truncated(2), poly(z, {"1", "-1", "1"}), poly(z, {"1"})),
                    PrecisionError);
    CHECK_THROWS_AS(verify_global(ones, poly(r, {"1"}), poly(r, {"1"})), RingMismatch);
}

TEST_CASE("verify_global uniqueness over square-zero rings") {
    Ring sz = Ring::square_zero({"x", "y"});
    TruncSeries ones = TruncSeries::geometric(sz, sz.one(), 8);
    GlobalReport bad = verify_global(ones, poly(sz, {"x", "-x"}), poly(sz, {"x"}));
    CHECK(bad.equation_holds);
    CHECK(bad.uniqueness == Uniqueness::Fails);
    REQUIRE(bad.annihilator);
    CHECK(sz.eq(*bad.annihilator, E("x")));
    CHECK_FALSE(bad.holds());

    GlobalReport mixed = verify_global(ones, poly(sz, {"x + y", "-x-y"}), poly(sz, {"x + y"}));
    REQUIRE(mixed.annihilator);
    CHECK(sz.eq(*mixed.annihilator, E("x*y")));
    CHECK(sz.is_zero(sz.mul(*mixed.annihilator, E("x + y"))));

    GlobalReport good = verify_global(ones, poly(sz, {"1 + x", "-1 - x"}), poly(sz, {"1 + x"}));
    CHECK(good.holds());
}

TEST_CASE("pade reconstruction examples") {
    Ring z = Ring::integers();
    PadeResult fib = pade_reconstruct(fibonacci(z, 12), 2);
    REQUIRE(fib.found);
    CHECK(fib.den.degree() == 2);
    CHECK(rational_coeffs(fib.den) == std::vector<BigRational>{1, -1, -1});
    CHECK(rational_coeffs(fib.num) == std::vector<BigRational>{1});

    PadeResult geo = pade_reconstruct(TruncSeries::geometric(z, z.one(), 8), 1);
    REQUIRE(geo.found);
    CHECK(rational_coeffs(geo.den) == std::vector<BigRational>{1, -1});

    for (std::size_t d = 0; d <= 4; ++d)
        CHECK_FALSE(pade_reconstruct(theta(z, 30), d).found);

    CHECK_THROWS_AS(pade_reconstruct(fibonacci(z, 5), 2), PrecisionError);
    Ring sz = Ring::square_zero({"x"});
    CHECK_THROWS_AS(pade_reconstruct(TruncSeries::one(sz, 8), 1), DomainError);

    Ring r = Ring::poly({"L"});
    PadeResult sym = pade_reconstruct(zeta_p1(r, 12), 2);
    REQUIRE(sym.found);
    CHECK(sym.den.degree() == 2);
    Ring frac = Ring::fraction(r);
    CHECK(frac.eq(sym.den.at(1), frac.from_poly(parse_poly("-1 - L"))));
}

TEST_CASE("pade recovers random rational functions") {
    checks::Gen gen(11);
    Ring q = Ring::fraction(Ring::integers());
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t dg = static_cast<std::size_t>(gen.integer(0, 3));
        std::size_t dh = static_cast<std::size_t>(gen.integer(0, 4));
        std::vector<BigRational> g{1}, h;
        for (std::size_t i = 1; i <= dg; ++i)
            g.emplace_back(gen.integer(-3, 3));
        for (std::size_t i = 0; i <= dh; ++i)
            h.emplace_back(gen.integer(-3, 3));
        auto to_elems = [&](const std::vector<BigRational>& v) {
            std::vector<Elem> out;
            for (const auto& c : v)
                out.emplace_back(MultiPoly(BigInt(c.get_num())), MultiPoly(BigInt(c.get_den())));
            return out;
        };
        TruncSeries gs = TruncSeries::from_poly(q, to_elems(g), 30);
        TruncSeries f = series_mul(TruncSeries::from_poly(q, to_elems(h), 30), series_inverse(gs));
        std::vector<BigRational> gtrim = g, htrim = h;
        while (!gtrim.empty() && gtrim.back() == 0)
            gtrim.pop_back();
        while (!htrim.empty() && htrim.back() == 0)
            htrim.pop_back();
        long predicted = 0;
        if (!htrim.empty()) {
            auto common = checks::univariate_gcd(gtrim, htrim);
            predicted = static_cast<long>(gtrim.size()) - static_cast<long>(common.size());
        }
        PadeResult p = pade_reconstruct(f, 3);
        REQUIRE(p.found);
        CHECK(p.den.degree() == predicted);
        TruncSeries check = series_mul(f, p.den.as_series(30));
        CHECK(series_eq(check, p.num.as_series(30)));
        HankelReport hr = hankel_test(f, 3, 10);
        REQUIRE(hr.window);
        CHECK(hr.window->first <= static_cast<std::size_t>(std::max(p.den.degree(), 0L)));
        if (p.den.degree() > 0)
            CHECK(hr.window->first == static_cast<std::size_t>(p.den.degree()));
    }
}

TEST_CASE("pointwise test examples") {
    Ring r = Ring::poly({"L"});
    PointwiseReport p1 = pointwise_test(zeta_p1(r, 12), {Measure{"L=4", {{"L", 4}}, {}}}, 2);
    REQUIRE(p1.all_rational);
    CHECK(rational_coeffs(p1.verdicts[0].pade.den) == std::vector<BigRational>{1, -5, 4});

    Ring inf = Ring::square_zero({}, {"x"});
    TruncSeries sx = TruncSeries::generate(inf, 12, [&](std::size_t i) {
        return i == 0 ? inf.zero() : inf.var("x" + std::to_string(i));
    });
    PointwiseReport aug = pointwise_test(sx, {Measure{"augmentation", {}, BigRational(0)}}, 2);
    REQUIRE(aug.all_rational);
    CHECK(aug.verdicts[0].pade.num.is_zero());
    CHECK_THROWS_AS(pointwise_test(sx, {Measure{"bad", {{"x3", 1}}, BigRational(0)}}, 2),
                    DomainError);
    CHECK_THROWS_AS(pointwise_test(sx, {Measure{"bad", {}, BigRational(2)}}, 2), DomainError);
    CHECK_THROWS_AS(pointwise_test(sx, {Measure{"partial", {}, {}}}, 2), DomainError);

    TruncSeries gm = series_mul(TruncSeries::from_poly(r, {E("1"), E("-1")}, 12),
                                series_inverse(TruncSeries::from_poly(r, {E("1"), E("-L")}, 12)));
    PointwiseReport euler = pointwise_test(gm, {Measure{"L=1", {{"L", 1}}, {}}}, 2);
    REQUIRE(euler.all_rational);
    CHECK(euler.verdicts[0].pade.den.degree() == 0);
    CHECK(rational_coeffs(euler.verdicts[0].pade.num) == std::vector<BigRational>{1});

    Ring fr = Ring::fraction(r);
    TruncSeries pole(fr, std::vector<Elem>(4, Elem(MultiPoly(1L), parse_poly("L - 2"))));
    CHECK_THROWS_AS(apply_measure(pole, Measure{"L=2", {{"L", 2}}, {}}), DomainError);
}

TEST_CASE("global rationality implies pointwise rationality") {
    Ring r = Ring::poly({"L"});
    struct Case {
        TruncSeries f;
        RingPoly g;
        RingPoly h;
    };
    std::vector<Case> cases{
        {zeta_p1(r, 16), poly(r, {"1", "-1 - L", "L"}), poly(r, {"1"})},
        {TruncSeries::geometric(r, E("L^2"), 16), poly(r, {"1", "-L^2"}), poly(r, {"1"})},
        {series_mul(TruncSeries::from_poly(r, {E("1"), E("L")}, 16),
                    series_inverse(TruncSeries::from_poly(r, {E("1"), E("-L"), E("L")}, 16))),
         poly(r, {"1", "-L", "L"}), poly(r, {"1", "L"})},
    };
    for (const auto& c : cases) {
        REQUIRE(verify_global(c.f, c.g, c.h).holds());
        std::vector<Measure> ms;
        for (int q = 0; q <= 4; ++q)
            ms.push_back(Measure{"L=" + std::to_string(q), {{"L", q}}, {}});
        CHECK(pointwise_test(c.f, ms, 2).all_rational);
    }
}

TEST_CASE("group series validation") {
    Ring r = Ring::poly({"L"});
    Ring fr = Ring::fraction(r);
    CHECK(is_group_element(fr, Elem(parse_poly("L^2*(1 + L)"), parse_poly("1 - L"))));
    CHECK(is_group_element(fr, fr.normalized(Elem(parse_poly("L"), parse_poly("1 - L")))));
    CHECK_FALSE(is_group_element(fr, Elem(parse_poly("2*L"))));
    CHECK_FALSE(is_group_element(fr, Elem(parse_poly("-1"))));
    CHECK_THROWS_AS(GroupSeries(r, {Elem(parse_poly("2 + L"))}), DomainError);
    GroupSeries gs(r, {Elem(1L), std::nullopt, Elem(parse_poly("L"))});
    GroupSeries back = groupseries_from_json(groupseries_to_json(gs));
    CHECK(back.size() == 3);
    CHECK_FALSE(back[1]);
    CHECK(series_eq(back.as_series(), gs.as_series()));
}

TEST_CASE("periodic ratio test examples") {
    GroupSeries lin = powers_of_L(30, [](std::size_t i) { return static_cast<unsigned>(i); });
    PeriodicResult a = periodic_ratio_test(lin, 4, 8);
    REQUIRE(a.found);
    CHECK(a.n == 1);
    CHECK(a.i0 == 0);
    CHECK(lin.ring().eq(a.h[0], E("L")));
    CHECK(series_eq(periodic_closed_form(lin, a, 30), lin.as_series()));

    GroupSeries half = powers_of_L(30, [](std::size_t i) { return static_cast<unsigned>(i / 2); });
    PeriodicResult b = periodic_ratio_test(half, 4, 8);
    REQUIRE(b.found);
    CHECK(b.n == 2);
    CHECK(b.i0 == 0);
    CHECK(half.ring().eq(b.h[0], E("L")));
    CHECK(half.ring().eq(b.h[1], E("L")));
    CHECK(series_eq(periodic_closed_form(half, b, 30), half.as_series()));

    GroupSeries sq = powers_of_L(30, [](std::size_t i) { return static_cast<unsigned>(i * i); });
    PeriodicResult c = periodic_ratio_test(sq, 4, 8);
    CHECK_FALSE(c.found);
    CHECK(c.n_max == 4);
    CHECK(c.i0_max == 8);
    // The exponent of g_{i+n}/g_i is 2in + n^2, which is never constant in i.
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(2 * 9 * n + n * n != 2 * 10 * n + n * n);

    CHECK_THROWS_AS(periodic_ratio_test(powers_of_L(20, [](std::size_t i) {
                                            return static_cast<unsigned>(i);
                                        }),
                                        4, 8),
                    PrecisionError);
}

TEST_CASE("periodic ratio test with zero markers and offsets") {
    Ring r = Ring::poly({"L"});
    std::vector<std::optional<Elem>> c;
    for (std::size_t i = 0; i < 30; ++i) {
        if (i % 2 == 1)
            c.emplace_back(std::nullopt);
        else
            c.emplace_back(Elem(MultiPoly::variable("L").pow(static_cast<unsigned>(i))));
    }
    GroupSeries alt(r, c);
    PeriodicResult p = periodic_ratio_test(alt, 3, 4);
    REQUIRE(p.found);
    CHECK(p.n == 2);
    CHECK(alt.ring().is_one(p.h[0]));
    CHECK(alt.ring().eq(p.h[1], E("L^2")));
    CHECK(series_eq(periodic_closed_form(alt, p, 30), alt.as_series()));

    std::vector<std::optional<Elem>> d;
    for (std::size_t i = 0; i < 30; ++i) {
        unsigned e = i < 3 ? static_cast<unsigned>(5 * i * i) : static_cast<unsigned>(3 * i);
        d.emplace_back(Elem(MultiPoly::variable("L").pow(e)));
    }
    GroupSeries late(r, d);
    PeriodicResult q = periodic_ratio_test(late, 2, 4);
    REQUIRE(q.found);
    CHECK(q.n == 1);
    CHECK(q.i0 == 2);
    CHECK(series_eq(periodic_closed_form(late, q, 30), late.as_series()));

    std::vector<std::optional<Elem>> broken = c;
    broken[20] = std::nullopt;
    PeriodicResult none = periodic_ratio_test(GroupSeries(r, broken), 1, 2);
    CHECK_FALSE(none.found);
}
