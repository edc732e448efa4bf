// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/checks/battery.hpp"

#include "lz/checks/oracles.hpp"
#include "lz/checks/random.hpp"
#include "lz/error.hpp"
#include "lz/lambda/lambda.hpp"
#include "lz/lambda/special.hpp"
#include "lz/lambda/witt.hpp"
#include "lz/measures/measures.hpp"
#include "lz/motivic/motivic.hpp"
#include "lz/rationality/rationality.hpp"
#include "lz/symfunc/symfunc.hpp"

#include <chrono>

namespace lz::checks {

using lambda::GradedSpace;
using lambda::WittElement;

void Expect::operator()(bool ok, const std::string& what) {
    ++assertions_;
    if (!ok)
        failures_.push_back(what);
}

CheckResult run_check(const NamedCheck& check) {
    CheckResult out;
    out.name = check.name;
    Expect expect;
    auto start = std::chrono::steady_clock::now();
    try {
        check.run(expect);
    } catch (const Error& e) {
        expect(false, "raised " + e.kind() + ": " + e.what());
    } catch (const std::exception& e) {
        expect(false, std::string("raised: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.time_limit && out.seconds > *check.time_limit)
        expect(false, "exceeded the time limit of " + std::to_string(*check.time_limit) + " s");
    out.assertions = expect.assertions();
    out.failures = expect.failures();
    out.notes = expect.notes();
    out.passed = out.failures.empty() && out.assertions > 0;
    if (out.assertions == 0)
        out.failures.push_back("no assertions ran");
    return out;
}

Json to_json(const CheckResult& r) {
    Json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["assertions"] = r.assertions;
    j["failures"] = r.failures;
    j["notes"] = r.notes;
    return j;
}

namespace {

Elem E(const char* text) { return Elem(parse_poly(text)); }
MultiPoly P(const char* text) { return parse_poly(text); }
MultiPoly L_pow(std::size_t k) { return MultiPoly::variable("L").pow(static_cast<unsigned>(k)); }

TruncSeries poly_series(const Ring& r, const std::vector<const char*>& c, std::size_t n) {
    std::vector<Elem> out;
    for (auto* s : c)
        out.push_back(r.from_poly(parse_poly(s)));
    return TruncSeries::from_poly(r, out, n);
}

WittElement witt(const Ring& r, const std::vector<const char*>& tail, std::size_t precision) {
    std::vector<Elem> c;
    for (auto* s : tail)
        c.push_back(r.from_poly(parse_poly(s)));
    return WittElement::from_coeffs(r, c, precision);
}

WittElement random_witt(Gen& gen, const Ring& r, std::size_t precision, std::size_t degree) {
    std::vector<Elem> tail;
    for (std::size_t i = 1; i < precision && i <= degree; ++i)
        tail.push_back(gen.elem(r, 2, 1, 2));
    return WittElement::from_coeffs(r, tail, precision);
}

// sum_{k <= i} L^k summed directly.
TruncSeries partial_sums_of_L(const Ring& r, std::size_t n) {
    return TruncSeries::generate(r, n, [&](std::size_t i) {
        MultiPoly s;
        for (std::size_t k = 0; k <= i; ++k)
            s += L_pow(k);
        return Elem(s);
    });
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

TruncSeries theta(const Ring& r, std::size_t n) {
    return TruncSeries::generate(r, n, [](std::size_t i) {
        std::size_t k = 0;
        while (k * k < i)
            ++k;
        return Elem(k * k == i ? 1L : 0L);
    });
}

TruncSeries square_zero_tail(const Ring& inf, std::size_t n) {
    return TruncSeries::generate(inf, n, [&](std::size_t i) {
        return i == 0 ? inf.zero() : inf.var("x" + std::to_string(i));
    });
}

rational::GroupSeries powers_of_L(std::size_t n, const std::function<std::size_t(std::size_t)>& e) {
    Ring r = Ring::poly({"L"});
    return rational::GroupSeries::from_series(
        TruncSeries::generate(r, n, [&](std::size_t i) { return Elem(L_pow(e(i))); }));
}

std::vector<BigRational> rational_coeffs(const RingPoly& p, const std::map<std::string, BigRational>& at = {}) {
    std::vector<BigRational> out;
    for (const auto& c : p.coeffs)
        out.push_back(p.ring.evaluate(c, at));
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

bool same_series(const TruncSeries& f, const TruncSeries& g) {
    return f.precision() == g.precision() && series_eq(f, g);
}

BigRational eval_at_binomials(const MultiPoly& p, long r) {
    std::map<std::string, BigRational> at;
    for (const auto& v : p.variables())
        at[v] = BigRational(binomial(BigInt(r), std::stoul(v.substr(1))));
    return p.evaluate(at);
}

measures::SurfaceData surface(long q, long pg, std::vector<long> p = {}, std::vector<long> h1 = {}) {
    measures::SurfaceData s;
    s.q = q;
    s.pg = pg;
    for (long v : p)
        s.plurigenera.push_back(v);
    if (s.plurigenera.empty())
        s.plurigenera.push_back(pg);
    unsigned n = 2;
    for (long v : h1)
        s.h1n[n++] = v;
    return s;
}

GradedSpace G(std::vector<long> d) {
    std::vector<BigInt> b;
    for (long x : d)
        b.emplace_back(x);
    return GradedSpace(b);
}

using motivic::ExprPtr;

ExprPtr random_cellular_expr(Gen& gen, int depth) {
    auto small = [&] { return static_cast<unsigned long>(gen.integer(0, 2)); };
    switch (gen.integer(0, depth > 0 ? 7 : 3)) {
    case 0:
        return motivic::point();
    case 1:
        return motivic::affine(small());
    case 2:
        return motivic::proj(small());
    case 3:
        return motivic::torus(small());
    case 4:
        return motivic::disjoint(random_cellular_expr(gen, depth - 1), random_cellular_expr(gen, depth - 1));
    case 5:
        return motivic::prod(random_cellular_expr(gen, depth - 1), motivic::proj(small()));
    case 6:
        return motivic::vector_bundle(random_cellular_expr(gen, depth - 1), small());
    default:
        return motivic::proj_bundle(random_cellular_expr(gen, depth - 1), small());
    }
}

void add(std::vector<NamedCheck>& out, std::string name, std::function<void(Expect&)> run) {
    out.push_back(NamedCheck{std::move(name), std::move(run), std::nullopt});
}

void ring_examples(std::vector<NamedCheck>& out) {
    add(out, "ring: x * x = 0 in Z[x]/(x^2)", [](Expect& ok) {
        Ring r = Ring::square_zero({"x"});
        ok(r.is_zero(r.mul(E("x"), E("x"))), "x*x");
    });
    add(out, "ring: 0 + a = a in Z", [](Expect& ok) {
        Ring z = Ring::integers();
        for (long a = -5; a <= 5; ++a)
            ok(z.eq(z.add(z.zero(), Elem(a)), Elem(a)), "0 + " + std::to_string(a));
    });
    add(out, "ring: square-zero reduction in Z[x1,x3]/(squares)", [](Expect& ok) {
        Ring r = Ring::square_zero({"x1", "x3"});
        ok(r.is_zero(r.mul(E("x1*x3"), E("x1"))), "(x1 x3)(x1) = 0");
        ok(r.eq(r.mul(E("x1"), E("x3")), E("x1*x3")), "(x1)(x3) = x1 x3");
    });
    add(out, "ring: (L^2 - L)/(L - 1) = L in Frac Z[L]", [](Expect& ok) {
        Ring f = Ring::fraction(Ring::poly({"L"}));
        ok(f.eq(Elem(P("L^2 - L"), P("L - 1")), E("L")), "cancellation");
    });
    add(out, "ring: x^2 = 0 in Z[x]/(x^2)", [](Expect& ok) {
        Ring r = Ring::square_zero({"x"});
        ok(r.eq(r.pow(E("x"), 2), r.zero()), "x^2");
    });
    add(out, "ring: (1 + s)(1 + 2s) = 1 + 3s + 2s^2 in Z[s]", [](Expect& ok) {
        Ring r = Ring::poly({"s"});
        ok(r.eq(r.mul(E("1 + s"), E("1 + 2*s")), E("1 + 3*s + 2*s^2")), "product");
    });
}

void series_examples(std::vector<NamedCheck>& out) {
    add(out, "series: (1 - t)^-1 (1 - t) = 1 to precision 10", [](Expect& ok) {
        Ring z = Ring::integers();
        TruncSeries geo = TruncSeries::geometric(z, z.one(), 10);
        ok(same_series(series_mul(geo, poly_series(z, {"1", "-1"}, 10)), TruncSeries::one(z, 10)), "product");
    });
    add(out, "series: point zeta squared has coefficients n + 1", [](Expect& ok) {
        Ring z = Ring::integers();
        TruncSeries geo = TruncSeries::geometric(z, z.one(), 12);
        TruncSeries sq = series_mul(geo, geo);
        for (std::size_t n = 0; n < 12; ++n)
            ok(z.eq(sq[n], Elem(static_cast<long>(n + 1))), "coefficient " + std::to_string(n));
    });
    add(out, "series: (1 + xt)^2 = 1 + 2xt in Z[x]/(x^2)", [](Expect& ok) {
        Ring r = Ring::square_zero({"x"});
        TruncSeries f = poly_series(r, {"1", "x"}, 6);
        ok(same_series(series_mul(f, f), poly_series(r, {"1", "2*x"}, 6)), "square");
    });
    add(out, "series: inverse of 1 - t is the geometric series", [](Expect& ok) {
        Ring z = Ring::integers();
        ok(same_series(series_inverse(poly_series(z, {"1", "-1"}, 10)), TruncSeries::geometric(z, z.one(), 10)),
           "inverse");
    });
    add(out, "series: inverse of 1 - (x + 1)t in Z[x]/(x^2) has coefficients 1 + ix", [](Expect& ok) {
        Ring r = Ring::square_zero({"x"});
        TruncSeries inv = series_inverse(poly_series(r, {"1", "-x - 1"}, 10));
        for (std::size_t i = 0; i < 10; ++i)
            ok(r.eq(inv[i], Elem(MultiPoly(1L) + MultiPoly::variable("x") * BigInt(i))),
               "coefficient " + std::to_string(i));
    });
    add(out, "series: inverse of (1 - t)(1 - Lt) has coefficients 1 + L + ... + L^n", [](Expect& ok) {
        Ring r = Ring::poly({"L"});
        TruncSeries den = series_mul(poly_series(r, {"1", "-1"}, 12), poly_series(r, {"1", "-L"}, 12));
        ok(same_series(series_inverse(den), partial_sums_of_L(r, 12)), "inverse");
    });
    add(out, "series: scaling the geometric series by L gives sum L^i t^i", [](Expect& ok) {
        Ring r = Ring::poly({"L"});
        TruncSeries geo = TruncSeries::geometric(r, r.one(), 10);
        ok(same_series(series_scale_arg(geo, E("L")), TruncSeries::geometric(r, E("L"), 10)), "c = L");
        ok(same_series(series_scale_arg(geo, r.one()), geo), "c = 1");
        Elem m1 = r.neg(r.one());
        ok(same_series(series_scale_arg(series_scale_arg(geo, m1), m1), geo), "c = -1 twice");
    });
    add(out, "series: opposite of 1 + t is the geometric series", [](Expect& ok) {
        Ring z = Ring::integers();
        TruncSeries f = poly_series(z, {"1", "1"}, 9);
        ok(same_series(series_opposite(f), TruncSeries::geometric(z, z.one(), 9)), "opposite");
    });
    add(out, "series: opposite is an involution", [](Expect& ok) {
        Gen gen(5);
        Ring r = Ring::poly({"L"});
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Elem> c{r.one()};
            for (int i = 1; i < 8; ++i)
                c.push_back(gen.elem(r));
            TruncSeries f(r, c);
            ok(same_series(series_opposite(series_opposite(f)), f), "trial " + std::to_string(trial));
        }
    });
    add(out, "series: opposite of (1 + t)(1 + Lt) is the zeta function of P^1", [](Expect& ok) {
        Ring r = Ring::poly({"L"});
        TruncSeries lam = series_mul(poly_series(r, {"1", "1"}, 12), poly_series(r, {"1", "L"}, 12));
        ok(same_series(series_opposite(lam), partial_sums_of_L(r, 12)), "opposite");
    });
}

void symfunc_examples(std::vector<NamedCheck>& out) {
    using namespace symfunc;
    add(out, "symfunc: a1^2 + a2^2 rewrites to e1^2 - 2e2", [](Expect& ok) {
        ok(rewrite_in_elementaries(P("a1^2 + a2^2"), {2}) == P("e1^2 - 2*e2"), "rewrite");
    });
    add(out, "symfunc: a1 + a2 rewrites to e1", [](Expect& ok) {
        ok(rewrite_in_elementaries(P("a1 + a2"), {2}) == P("e1"), "rewrite");
    });
    add(out, "symfunc: a1^2 a2 + a1 a2^2 rewrites to e1 e2", [](Expect& ok) {
        ok(rewrite_in_elementaries(P("a1^2*a2 + a1*a2^2"), {2}) == P("e1*e2"), "rewrite");
    });
    add(out, "symfunc: P_1 = e1 f1", [](Expect& ok) { ok(universal_P(1) == P("e1*f1"), "P_1"); });
    add(out, "symfunc: P_2 = e1^2 f2 + e2 f1^2 - 2 e2 f2", [](Expect& ok) {
        ok(universal_P(2) == P("e1^2*f2 + e2*f1^2 - 2*e2*f2"), "P_2");
    });
    add(out, "symfunc: P_2 at x = y = 2 gives lambda^2(4) = 6", [](Expect& ok) {
        std::map<std::string, BigRational> at{{"e1", 2}, {"e2", 1}, {"f1", 2}, {"f2", 1}};
        ok(universal_P(2).evaluate(at) == BigRational(binomial(BigInt(4), 2)), "value");
    });
    add(out, "symfunc: Q_{1,n} = e_n", [](Expect& ok) {
        for (std::uint32_t n = 1; n <= 5; ++n)
            ok(universal_Q(1, n) == MultiPoly::variable("e" + std::to_string(n)), "n = " + std::to_string(n));
    });
    add(out, "symfunc: Q_{2,2} = e1 e3 - e4", [](Expect& ok) { ok(universal_Q(2, 2) == P("e1*e3 - e4"), "Q_2,2"); });
    add(out, "symfunc: Q_{m,n} at binomials gives C(C(r,n),m) for r <= 6, m,n <= 3", [](Expect& ok) {
        for (std::uint32_t m = 1; m <= 3; ++m) {
            for (std::uint32_t n = 1; n <= 3; ++n) {
                MultiPoly q = universal_Q(m, n);
                for (long r = 0; r <= 6; ++r)
                    ok(eval_at_binomials(q, r) == BigRational(binomial(binomial(BigInt(r), n), m)),
                       "m=" + std::to_string(m) + " n=" + std::to_string(n) + " r=" + std::to_string(r));
            }
        }
    });
    add(out, "symfunc: Newton polynomials p1, p2, p3", [](Expect& ok) {
        ok(newton_polynomial(1) == P("e1"), "p1");
        ok(newton_polynomial(2) == P("e1^2 - 2*e2"), "p2");
        ok(newton_polynomial(3) == P("e1^3 - 3*e1*e2 + 3*e3"), "p3");
    });
    add(out, "symfunc: Witt product coefficients p = 1, 2", [](Expect& ok) {
        ok(witt_product_coeff(1) == P("x1*y1"), "p = 1");
        ok(witt_product_coeff(2) == P("x1^2*y2 + x2*y1^2 - 2*x2*y2"), "p = 2");
    });
    add(out, "symfunc: Witt product coefficient p = 3 vanishes on linear factors", [](Expect& ok) {
        std::map<std::string, MultiPoly> linear;
        for (int i = 2; i <= 3; ++i) {
            linear["x" + std::to_string(i)] = MultiPoly();
            linear["y" + std::to_string(i)] = MultiPoly();
        }
        ok(witt_product_coeff(3).substitute(linear).is_zero(), "p = 3");
    });
}

void lambda_examples(std::vector<NamedCheck>& out) {
    using namespace lambda;
    add(out, "witt: (1 + t) + (1 + t) = (1 + t)^2", [](Expect& ok) {
        Ring z = Ring::integers();
        WittElement f = witt(z, {"1"}, 6);
        ok(witt_eq(witt_add(f, f), witt(z, {"2", "1"}, 6)), "sum");
    });
    add(out, "witt: f + 1 = f", [](Expect& ok) {
        Gen gen(7);
        Ring r = Ring::poly({"L"});
        for (int trial = 0; trial < 5; ++trial) {
            WittElement f = random_witt(gen, r, 7, 6);
            ok(witt_eq(witt_add(f, WittElement::zero(r, 7)), f), "trial " + std::to_string(trial));
        }
    });
    add(out, "witt: zeta of a disjoint union is the Witt sum", [](Expect& ok) {
        const auto y = motivic::proj(1);
        const auto u = motivic::affine(2);
        TruncSeries zx = motivic::zeta_series(motivic::disjoint(y, u), 10);
        WittElement sum = witt_add(WittElement(motivic::zeta_series(y, 10)), WittElement(motivic::zeta_series(u, 10)));
        ok(same_series(sum.series(), zx), "P(1) + A(2)");
    });
    add(out, "witt: (1 + at)(1 + bt) = 1 + abt", [](Expect& ok) {
        Ring r = Ring::poly({"a", "b"});
        ok(witt_eq(witt_mul(witt(r, {"a"}, 6), witt(r, {"b"}, 6)), witt(r, {"a*b"}, 6)), "product");
    });
    add(out, "witt: (1 + t)^2 (1 + t) = (1 + t)^2", [](Expect& ok) {
        Ring z = Ring::integers();
        ok(witt_eq(witt_mul(witt(z, {"2", "1"}, 8), witt(z, {"1"}, 8)), witt(z, {"2", "1"}, 8)), "product");
    });
    add(out, "witt: polynomials of degrees m, n multiply to degree <= mn", [](Expect& ok) {
        Gen gen(9);
        Ring r = Ring::poly({"L"});
        for (int trial = 0; trial < 6; ++trial) {
            std::size_t m = static_cast<std::size_t>(gen.integer(1, 3));
            std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
            WittElement f = random_witt(gen, r, 14, m);
            WittElement g = random_witt(gen, r, 14, n);
            WittElement h = witt_mul(f, g);
            ok(witt_eq(h, ghost_witt_product(f, g)), "ghost oracle");
            for (std::size_t p = m * n + 1; p < 14; ++p)
                ok(r.is_zero(h.coeff(p)), "coefficient " + std::to_string(p));
        }
    });
    add(out, "witt: Lambda^1 f = f and Lambda^0 f = 1 + t", [](Expect& ok) {
        Gen gen(11);
        Ring r = Ring::poly({"L"});
        for (int trial = 0; trial < 5; ++trial) {
            WittElement f = random_witt(gen, r, 7, 6);
            ok(witt_eq(witt_lambda(1, f), f), "Lambda^1");
            ok(witt_eq(witt_lambda(0, f), WittElement::one(r, 7)), "Lambda^0");
        }
    });
    add(out, "witt: Lambda^2 (1 + t)^3 = (1 + t)^3", [](Expect& ok) {
        Ring z = Ring::integers();
        WittElement cube = witt(z, {"3", "3", "1"}, 10);
        ok(witt_eq(witt_lambda(2, cube), cube), "Lambda^2");
    });
    add(out, "adams: Psi^1 x = x and Psi^2 x = x^2 - 2 lambda^2 x", [](Expect& ok) {
        Ring r = Ring::poly({"x", "l2"});
        LambdaElement x(r, {r.one(), E("x"), E("l2")});
        ok(r.eq(adams(1, x), E("x")), "Psi^1");
        ok(r.eq(adams(2, x), E("x^2 - 2*l2")), "Psi^2");
    });
    add(out, "adams: a line element has Psi^n = a^n", [](Expect& ok) {
        Ring r = Ring::poly({"a"});
        LambdaElement line = LambdaElement::line(r, E("a"), 8);
        for (std::uint32_t n = 1; n <= 8; ++n)
            ok(r.eq(adams(n, line), r.pow(E("a"), n)), "n = " + std::to_string(n));
    });
    auto binomial_data = [](long rank, std::size_t order) {
        Ring z = Ring::integers();
        return LambdaElement::from_series(TruncSeries::generate(
            z, order + 1, [&](std::size_t i) { return z.from_int(binomial(BigInt(rank), i)); }));
    };
    add(out, "sigma: sigma^n(r) = C(r + n - 1, n); sigma^3(2) = 4", [binomial_data](Expect& ok) {
        for (long rank = -3; rank <= 6; ++rank) {
            LambdaElement s = opposite_sigma(binomial_data(rank, 8), 8);
            for (std::size_t n = 0; n <= 8; ++n)
                ok(s.lambda(n).num.constant_term() == binomial(BigInt(rank + static_cast<long>(n) - 1), n),
                   "r=" + std::to_string(rank) + " n=" + std::to_string(n));
        }
        ok(opposite_sigma(binomial_data(2, 3), 3).lambda(3).num == MultiPoly(4L), "sigma^3(2)");
    });
    add(out, "sigma: sigma of sigma is the identity", [binomial_data](Expect& ok) {
        for (long rank = -3; rank <= 6; ++rank) {
            LambdaElement back = opposite_sigma(opposite_sigma(binomial_data(rank, 8), 8), 8);
            ok(series_eq(back.lambda_series(), binomial_data(rank, 8).lambda_series()), "r=" + std::to_string(rank));
        }
    });
    add(out, "sigma: sigma^n(1) = 1", [binomial_data](Expect& ok) {
        LambdaElement one = opposite_sigma(binomial_data(1, 8), 8);
        for (std::size_t n = 0; n <= 8; ++n)
            ok(one.lambda(n).num.is_one(), "n = " + std::to_string(n));
    });
    add(out, "special: Z with the binomial structure, x, y in [-3, 3], n <= 4, mn <= 6", [](Expect& ok) {
        BinomialIntegers model;
        for (long x = -3; x <= 3; ++x) {
            for (long y = -3; y <= 3; ++y)
                ok(check_special(model, BigInt(x), BigInt(y), {4, 6, 6}).all_hold(),
                   "x=" + std::to_string(x) + " y=" + std::to_string(y));
        }
    });
    add(out, "special: Z with the opposite structure fails sigma^2(xy) at x = y = 2", [](Expect& ok) {
        SpecialReport rep = check_special(SigmaIntegers{}, BigInt(2), BigInt(2), {2, 1, 2});
        const IdentityCheck& c = rep.checks.at(1);
        ok(c.status == IdentityStatus::Fails, "fails");
        ok(c.lhs == "10" && c.rhs == "6", "10 vs 6");
    });
    add(out, "special: line elements satisfy the identities", [](Expect& ok) {
        Ring r = Ring::poly({"a", "b"});
        SpecialReport rep = check_special(BigWittModel{r, 7}, witt(r, {"a"}, 7), witt(r, {"b"}, 7), {3, 3, 6});
        for (const auto& c : rep.checks)
            ok(c.status != IdentityStatus::Fails, c.identity);
        ok(rep.checks.front().status == IdentityStatus::Holds, "product identity n = 1");
    });
    add(out, "graded: lambda^m(1 + gs) has coefficients C(g, j), j <= m", [](Expect& ok) {
        for (long g = 0; g <= 4; ++g) {
            for (std::uint32_t m = 0; m <= 6; ++m) {
                std::vector<BigInt> expected;
                for (std::uint32_t j = 0; j <= m; ++j)
                    expected.push_back(binomial(BigInt(g), j));
                ok(graded_lambda(m, G({1, g})) == GradedSpace(expected),
                   "g=" + std::to_string(g) + " m=" + std::to_string(m));
            }
        }
    });
    add(out, "graded: lambda^m(1 + s^2) = 1 + s^2 + ... + s^2m", [](Expect& ok) {
        for (std::uint32_t m = 0; m <= 6; ++m) {
            std::vector<long> d(2 * m + 1, 0);
            for (std::uint32_t j = 0; j <= m; ++j)
                d[2 * j] = 1;
            ok(graded_lambda(m, G({1, 0, 1})) == G(d), "m = " + std::to_string(m));
        }
    });
    add(out, "graded: lambda^0 v = 1", [](Expect& ok) {
        ok(graded_lambda(0, G({3, -2, 5})) == GradedSpace::one(), "virtual");
        ok(graded_lambda(0, G({1, 2, 1})) == GradedSpace::one(), "abelian");
    });
}

void rationality_examples(std::vector<NamedCheck>& out) {
    using namespace rational;
    add(out, "hankel: sum 2^i t^i has vanishing m = 1 determinants", [](Expect& ok) {
        Ring z = Ring::integers();
        HankelReport rep = hankel_test(TruncSeries::geometric(z, E("2"), 12), 2, 4);
        ok(rep.window && rep.window->first == 1, "window at m = 1");
        for (const auto& c : rep.cells[1])
            ok(z.is_zero(c.det), "D_1," + std::to_string(c.i));
    });
    add(out, "hankel: x sum t^i over Z[x]/(x^2) has vanishing m = 1 determinants", [](Expect& ok) {
        Ring sz = Ring::square_zero({"x"});
        TruncSeries f = TruncSeries::generate(sz, 12, [](std::size_t) { return E("x"); });
        HankelReport rep = hankel_test(f, 2, 4);
        ok(rep.window && rep.window->first == 1, "window at m = 1");
        for (const auto& c : rep.cells[1])
            ok(sz.is_zero(c.det), "D_1," + std::to_string(c.i));
    });
    add(out, "hankel: sum x_i t^i over the square-zero ring has no window", [](Expect& ok) {
        Ring inf = Ring::square_zero({}, {"x"});
        HankelReport rep = hankel_test(square_zero_tail(inf, 20), 3, 8);
        ok(!rep.window, "no window");
        for (std::size_t m = 1; m <= 3; ++m) {
            for (const auto& c : rep.cells[m]) {
                if (c.i == 0)
                    continue;
                bool diagonal = c.diagonal_monomial.total_degree() == m + 1 && abs(c.diagonal_coefficient) == 1;
                for (std::size_t k = 0; k <= m; ++k)
                    diagonal = diagonal && c.diagonal_monomial.exponent("x" + std::to_string(c.i + 2 * k)) == 1;
                ok(diagonal, "m=" + std::to_string(m) + " i=" + std::to_string(c.i));
            }
        }
    });
    add(out, "global: sum t^i solves (1 - t) f = 1", [](Expect& ok) {
        Ring z = Ring::integers();
        GlobalReport g = verify_global(TruncSeries::geometric(z, z.one(), 20), RingPoly(z, {E("1"), E("-1")}),
                                       RingPoly(z, {E("1")}));
        ok(g.holds(), "holds");
    });
    add(out, "global: Fibonacci solves (1 - t - t^2) f = 1", [](Expect& ok) {
        Ring z = Ring::integers();
        GlobalReport g = verify_global(fibonacci(z, 20), RingPoly(z, {E("1"), E("-1"), E("-1")}),
                                       RingPoly(z, {E("1")}));
        ok(g.holds(), "holds");
    });
    add(out, "global: zeta of P^1 solves (1 - t)(1 - Lt) f = 1", [](Expect& ok) {
        Ring r = Ring::poly({"L"});
        GlobalReport g = verify_global(partial_sums_of_L(r, 16), RingPoly(r, {E("1"), E("-1 - L"), E("L")}),
                                       RingPoly(r, {E("1")}));
        ok(g.holds(), "holds");
    });
    add(out, "pade: Fibonacci over Q with d = 2 has denominator 1 - t - t^2", [](Expect& ok) {
        Ring q = Ring::fraction(Ring::integers());
        PadeResult p = pade_reconstruct(fibonacci(q, 12), 2);
        ok(p.found, "found");
        if (p.found)
            ok(rational_coeffs(p.den) == std::vector<BigRational>{1, -1, -1}, "denominator");
    });
    add(out, "pade: sum t^i with d = 1 has denominator 1 - t", [](Expect& ok) {
        Ring q = Ring::fraction(Ring::integers());
        PadeResult p = pade_reconstruct(TruncSeries::geometric(q, q.one(), 10), 1);
        ok(p.found, "found");
        if (p.found)
            ok(rational_coeffs(p.den) == std::vector<BigRational>{1, -1}, "denominator");
    });
    add(out, "pade: sum t^(i^2) fails for every d <= 4 at precision 30", [](Expect& ok) {
        Ring q = Ring::fraction(Ring::integers());
        for (std::size_t d = 0; d <= 4; ++d)
            ok(!pade_reconstruct(theta(q, 30), d).found, "d = " + std::to_string(d));
    });
    add(out, "pointwise: zeta of P^1 at L = 4 has denominator (1 - t)(1 - 4t)", [](Expect& ok) {
        Ring r = Ring::poly({"L"});
        PointwiseReport rep = pointwise_test(partial_sums_of_L(r, 12), {Measure{"L=4", {{"L", 4}}, {}}}, 2);
        ok(rep.all_rational, "rational");
        if (rep.all_rational)
            ok(rational_coeffs(rep.verdicts[0].pade.den) == std::vector<BigRational>{1, -5, 4}, "denominator");
    });
    add(out, "pointwise: augmentation of sum x_i t^i is rational", [](Expect& ok) {
        Ring inf = Ring::square_zero({}, {"x"});
        PointwiseReport rep = pointwise_test(square_zero_tail(inf, 12), {Measure{"augmentation", {}, BigRational(0)}}, 2);
        ok(rep.all_rational, "rational");
        if (rep.all_rational)
            ok(rep.verdicts[0].pade.num.is_zero(), "zero series");
    });
    add(out, "pointwise: L = 1 on zeta of Gm is the constant 1", [](Expect& ok) {
        TruncSeries gm = motivic::zeta_series(motivic::torus(1), 12);
        PointwiseReport rep = pointwise_test(gm, {Measure{"L=1", {{"L", 1}}, {}}}, 2);
        ok(rep.all_rational, "rational");
        if (rep.all_rational) {
            ok(rep.verdicts[0].pade.den.degree() == 0, "denominator degree 0");
            ok(rational_coeffs(rep.verdicts[0].pade.num) == std::vector<BigRational>{1}, "numerator 1");
        }
    });
    add(out, "periodic: g_i = L^i has period 1 with ratio L", [](Expect& ok) {
        GroupSeries f = powers_of_L(30, [](std::size_t i) { return i; });
        PeriodicResult r = periodic_ratio_test(f, 4, 8);
        ok(r.found && r.n == 1 && r.i0 == 0, "period (1, 0)");
        if (r.found)
            ok(f.ring().eq(r.h[0], E("L")), "h = L");
    });
    add(out, "periodic: g_i = L^floor(i/2) has period 2 with ratios L, L", [](Expect& ok) {
        GroupSeries f = powers_of_L(30, [](std::size_t i) { return i / 2; });
        PeriodicResult r = periodic_ratio_test(f, 4, 8);
        ok(r.found && r.n == 2 && r.i0 == 0, "period (2, 0)");
        if (r.found)
            ok(f.ring().eq(r.h[0], E("L")) && f.ring().eq(r.h[1], E("L")), "h = L, L");
    });
    add(out, "periodic: g_i = L^(i^2) has no witness up to (4, 8)", [](Expect& ok) {
        PeriodicResult r = periodic_ratio_test(powers_of_L(30, [](std::size_t i) { return i * i; }), 4, 8);
        ok(!r.found && r.n_max == 4 && r.i0_max == 8, "NoWitnessUpTo(4, 8)");
    });
}

void motivic_examples(std::vector<NamedCheck>& out) {
    using namespace motivic;
    add(out, "parse: P(2) is projective space of dimension 2", [](Expect& ok) {
        ExprPtr e = parse_variety("P(2)");
        ok(e->kind == VarietyKind::Proj && e->param == 2, "Proj(2)");
    });
    add(out, "parse: PB(Curve(1),1) is a projective bundle over a curve", [](Expect& ok) {
        ExprPtr e = parse_variety("PB(Curve(1),1)");
        ok(e->kind == VarietyKind::ProjBundle && e->param == 1, "ProjBundle");
        ok(e->left && e->left->kind == VarietyKind::Curve && e->left->param == 1, "base Curve(1)");
    });
    add(out, "parse: Prod(A(1) is a syntax error at offset 10", [](Expect& ok) {
        std::size_t offset = 0;
        try {
            parse_variety("Prod(A(1)");
        } catch (const ParseError& e) {
            offset = e.offset();
        }
        ok(offset == 10, "offset " + std::to_string(offset));
    });
    add(out, "zeta: point gives sum t^n", [](Expect& ok) {
        TruncSeries z = zeta_series(point(), 10);
        ok(same_series(z, TruncSeries::geometric(z.ring(), z.ring().one(), 10)), "geometric");
    });
    add(out, "zeta: P(1) gives 1, 1 + L, 1 + L + L^2, ...", [](Expect& ok) {
        TruncSeries z = zeta_series(proj(1), 12);
        ok(same_series(z, partial_sums_of_L(z.ring(), 12)), "partial sums");
    });
    add(out, "zeta: Gm(1) gives 1, L - 1, L^2 - L, ...", [](Expect& ok) {
        TruncSeries z = zeta_series(torus(1), 10);
        const Ring& r = z.ring();
        ok(r.is_one(z[0]), "constant term");
        for (std::size_t n = 1; n < 10; ++n)
            ok(r.eq(z[n], Elem(L_pow(n) - L_pow(n - 1))), "coefficient " + std::to_string(n));
    });
    add(out, "zeta: A(n) is 1/(1 - L^n t)", [](Expect& ok) {
        for (unsigned long n = 0; n <= 3; ++n) {
            TruncSeries z = zeta_series(affine(n), 10);
            ok(same_series(z, TruncSeries::geometric(z.ring(), Elem(L_pow(n)), 10)), "n = " + std::to_string(n));
        }
    });
    add(out, "zeta: P(n) is 1/prod_{k <= n} (1 - L^k t)", [](Expect& ok) {
        for (unsigned long n = 0; n <= 3; ++n) {
            TruncSeries z = zeta_series(proj(n), 10);
            const Ring& r = z.ring();
            TruncSeries den = TruncSeries::one(r, 10);
            for (std::size_t k = 0; k <= n; ++k)
                den = series_mul(den, TruncSeries::from_poly(r, {r.one(), Elem(-L_pow(k))}, 10));
            ok(same_series(series_mul(z, den), TruncSeries::one(r, 10)), "n = " + std::to_string(n));
        }
    });
    add(out, "zeta: Curve(2) has numerator degree <= 4 over Z[L, J, c1, c2, c3]", [](Expect& ok) {
        RationalZeta c = zeta_rational(curve(2));
        ok(c.found, "found");
        ok(c.num.degree() <= 4, "numerator degree");
        ok(c.ring.vars() == std::vector<std::string>{"J", "L", "c1", "c2", "c3"}, "ring");
    });
    add(out, "finiteness: P(1) has lambda_t = (1 + t)(1 + Lt) of degree 2", [](Expect& ok) {
        FinitenessReport r = virtual_finiteness_check(proj(1), 10);
        ok(r.lambda_polynomial && r.lambda_degree == 2, "degree 2");
        ok(r.y_lambda.at(1).num == P("1 + L") && r.y_lambda.at(2).num == P("L"), "coefficients");
    });
    add(out, "finiteness: Curve(g) is a difference of finite elements", [](Expect& ok) {
        for (unsigned long g = 1; g <= 3; ++g) {
            FinitenessReport r = virtual_finiteness_check(curve(g), 14);
            ok(r.witness_found && r.y_name == "P(1)", "witness for g = " + std::to_string(g));
            ok(r.z_lambda.degree() <= static_cast<long>(2 * g), "degree <= 2g for g = " + std::to_string(g));
        }
    });
    add(out, "finiteness: point has lambda_t = 1 + t", [](Expect& ok) {
        FinitenessReport r = virtual_finiteness_check(point(), 10);
        ok(r.lambda_polynomial && r.lambda_degree == 1, "degree 1");
    });
    add(out, "specialize: zeta of P^1 at L = 3 gives (3^(n+1) - 1)/2", [](Expect& ok) {
        TruncSeries s = specialize(zeta_series(proj(1), 10), {{"L", 3}});
        BigInt pow3 = 1;
        for (std::size_t n = 0; n < 10; ++n) {
            pow3 *= 3;
            ok(s.ring().evaluate(s[n], {}) == BigRational((pow3 - 1) / 2), "coefficient " + std::to_string(n));
        }
    });
    add(out, "specialize: L = 1 on zeta of Gm gives 1", [](Expect& ok) {
        TruncSeries s = specialize(zeta_series(torus(1), 8), {{"L", 1}});
        ok(s.ring().is_one(s[0]), "constant term");
        for (std::size_t n = 1; n < 8; ++n)
            ok(s.ring().is_zero(s[n]), "coefficient " + std::to_string(n));
    });
    add(out, "specialize: L = 0 on zeta of A^1 gives 1", [](Expect& ok) {
        TruncSeries s = specialize(zeta_series(affine(1), 8), {{"L", 0}});
        ok(s.ring().is_one(s[0]), "constant term");
        for (std::size_t n = 1; n < 8; ++n)
            ok(s.ring().is_zero(s[n]), "coefficient " + std::to_string(n));
    });
}

void measure_examples(std::vector<NamedCheck>& out) {
    using namespace measures;
    add(out, "mu: K3-type data gives 1 + s^2", [](Expect& ok) { ok(mu(surface(0, 1), 1) == G({1, 0, 1}), "mu"); });
    add(out, "mu: abelian-type data gives 1 + 2s + s^2", [](Expect& ok) {
        ok(mu(surface(2, 1), 1) == G({1, 2, 1}), "mu");
    });
    add(out, "mu: plane-type data gives mu_n = 1", [](Expect& ok) {
        SurfaceData s = surface(0, 0, {0, 0, 0}, {0, 0});
        for (unsigned n = 1; n <= 3; ++n)
            ok(mu(s, n) == GradedSpace::one(), "n = " + std::to_string(n));
    });
    add(out, "sym: curve grading 1 + gs gives C(g, j)", [](Expect& ok) {
        for (long g = 0; g <= 3; ++g) {
            auto seq = lambda::graded_lambda_series(G({1, g}), 7);
            for (std::uint32_t m = 0; m < 7; ++m) {
                for (std::uint32_t j = 0; j <= m; ++j)
                    ok(seq[m].dim(j) == binomial(BigInt(g), j),
                       "g=" + std::to_string(g) + " m=" + std::to_string(m) + " j=" + std::to_string(j));
            }
        }
    });
    add(out, "sym: K3-type entry m is 1 + s^2 + ... + s^2m", [](Expect& ok) {
        MeasureSequence seq = mu_sym_sequence(surface(0, 1), 8);
        for (std::size_t m = 0; m <= 8; ++m) {
            std::vector<long> d(2 * m + 1, 0);
            for (std::size_t j = 0; j <= m; ++j)
                d[2 * j] = 1;
            ok(seq.entries[m] == G(d), "m = " + std::to_string(m));
        }
    });
    add(out, "sym: abelian-type entry 2 has s^1 coefficient 2 and s^4 coefficient 1", [](Expect& ok) {
        MeasureSequence seq = mu_sym_sequence(surface(2, 1), 2);
        ok(seq.entries[2] == graded_lambda(2, G({1, 2, 1})), "lambda^2");
        ok(seq.entries[2].dim(1) == 2 && seq.entries[2].dim(4) == 1 && seq.entries[2].degree() == 4,
           "coefficients");
    });
    add(out, "hilb: leading terms for P_n = 1, 2, 0", [](Expect& ok) {
        SurfaceData s = surface(0, 1, {1, 2, 0});
        for (std::size_t m = 0; m <= 6; ++m)
            ok(hilb_leading_term(s, 1, m) == 1, "P = 1, m = " + std::to_string(m));
        ok(hilb_leading_term(s, 2, 3) == 4, "P = 2, m = 3");
        for (std::size_t m = 1; m <= 6; ++m)
            ok(hilb_leading_term(s, 3, m) == 0, "P = 0, m = " + std::to_string(m));
    });
    add(out, "bounded: abelian-type s^1 track is 2 for m >= 1", [](Expect& ok) {
        BoundednessReport r = boundedness_check(mu_sym_sequence(surface(2, 1), 10), 1);
        ok(r.s1_constant && r.s1_value == 2, "constant 2");
    });
    add(out, "bounded: K3-type s^1 track is 0", [](Expect& ok) {
        BoundednessReport r = boundedness_check(mu_sym_sequence(surface(0, 1), 10), 1);
        for (const auto& v : r.track)
            ok(v == 0, "zero");
    });
    add(out, "bounded: pg = 2 leading track is m + 1", [](Expect& ok) {
        BoundednessReport r = boundedness_check(mu_sym_sequence(surface(0, 2), 10), 2);
        ok(r.leading_coefficient_strict, "strictly increasing");
        for (std::size_t m = 0; m <= 10; ++m)
            ok(r.leading[m] == BigInt(m + 1) && r.leading_degrees[m] == static_cast<long>(2 * m),
               "m = " + std::to_string(m));
    });
    add(out, "harness: pg = 2, n = 1, M = 10 gives NoWitnessUpTo(4, 6) with a certificate", [](Expect& ok) {
        HarnessReport r = irrationality_harness(surface(0, 2), 1, 10, 4, 6);
        ok(r.verdict == HarnessVerdict::NoWitness, "verdict");
        ok(r.periodic && r.periodic->n_max == 4 && r.periodic->i0_max == 6, "window (4, 6)");
        ok(r.certificate.established, "certificate");
    });
    add(out, "harness: plane-type data is inapplicable and rational 1/(1 - t)", [](Expect& ok) {
        HarnessReport r = irrationality_harness(surface(0, 0, {0, 0, 0}), 1, 10, 4, 6);
        ok(r.verdict == HarnessVerdict::Inapplicable, "verdict");
        ok(r.rational && r.rational->found, "rational");
        if (r.rational && r.rational->found) {
            ok(rational_coeffs(r.rational->den, {{"s", 0}}) == std::vector<BigRational>{1, -1}, "denominator");
            ok(rational_coeffs(r.rational->num, {{"s", 0}}) == std::vector<BigRational>{1}, "numerator");
        }
    });
    add(out, "harness: K3-type, n = 1, M = 10 gives NoWitnessUpTo", [](Expect& ok) {
        MeasureSequence seq = mu_sym_sequence(surface(0, 1), 10);
        for (std::size_t m = 1; m <= 10; ++m)
            ok(seq.entries[m] != seq.entries[m - 1], "distinct entries at m = " + std::to_string(m));
        HarnessReport r = irrationality_harness(surface(0, 1), 1, 10, 4, 6);
        ok(r.verdict == HarnessVerdict::NoWitness, "verdict");
    });
}

// Criterion helpers.

void criterion_lambda_axioms(Expect& ok, std::uint64_t seed) {
    Gen gen(seed);
    Ring r = Ring::poly({"L"});
    const std::size_t prec = 6;
    std::size_t holds = 0;
    std::size_t insufficient = 0;
    for (int pair = 0; pair < 25; ++pair) {
        WittElement f = random_witt(gen, r, prec, prec - 1);
        WittElement g = random_witt(gen, r, prec, prec - 1);
        std::string tag = "pair " + std::to_string(pair);
        for (const WittElement* x : {&f, &g}) {
            ok(witt_eq(lambda::witt_lambda(0, *x), WittElement::one(r, prec)), tag + ": lambda^0");
            ok(witt_eq(lambda::witt_lambda(1, *x), *x), tag + ": lambda^1");
        }
        for (std::uint32_t n = 1; n <= 3; ++n) {
            WittElement lhs = lambda::witt_lambda(n, lambda::witt_add(f, g));
            WittElement rhs = WittElement::zero(r, prec);
            for (std::uint32_t i = 0; i <= n; ++i)
                rhs = lambda::witt_add(
                    rhs, lambda::witt_mul(lambda::witt_lambda(i, f), lambda::witt_lambda(n - i, g)));
            ok(witt_eq(lhs, rhs), tag + ": addition n = " + std::to_string(n));
        }
        lambda::SpecialReport rep = lambda::check_special(lambda::BigWittModel{r, prec}, f, g, {3, 3, 3});
        for (const auto& c : rep.checks) {
            ok(c.status != lambda::IdentityStatus::Fails, tag + ": " + c.identity);
            if (c.status == lambda::IdentityStatus::Holds)
                ++holds;
            else
                ++insufficient;
        }
    }
    ok(holds > 0, "some identity was checked");
    ok.note("50 elements; " + std::to_string(holds) + " product/composition identities hold, " +
            std::to_string(insufficient) + " beyond the available precision");
}

void criterion_universal(Expect& ok) {
    using namespace symfunc;
    for (std::uint32_t n = 1; n <= 4; ++n) {
        MultiPoly expanded = expanded_P(n, n);
        ok(rewrite_in_elementaries(expanded, {n, n}) == universal_P(n), "P_" + std::to_string(n) + " rewrite");
        ok(back_substitute(universal_P(n), {n, n}) == expanded, "P_" + std::to_string(n) + " back-substitution");
    }
    for (std::uint32_t m = 1; m <= 8; ++m) {
        for (std::uint32_t n = 1; m * n <= 8; ++n) {
            std::string tag = "Q_" + std::to_string(m) + "," + std::to_string(n);
            MultiPoly q = universal_Q(m, n);
            ok(back_substitute(q, {m * n}) == expanded_Q(m, n, m * n), tag + " back-substitution");
            for (long r = 0; r <= 6; ++r)
                ok(eval_at_binomials(q, r) == BigRational(binomial(binomial(BigInt(r), n), m)),
                   tag + " at r = " + std::to_string(r));
        }
    }
    for (std::uint32_t n = 1; n <= 8; ++n) {
        MultiPoly p = newton_polynomial(n);
        ok(back_substitute(p, {n}) == expanded_power_sum(n, n), "p_" + std::to_string(n) + " back-substitution");
        for (long r = 0; r <= 6; ++r)
            ok(eval_at_binomials(p, r) == BigRational(r), "p_" + std::to_string(n) + " at r = " + std::to_string(r));
    }
    ok.note("P_n for n <= 4, Q_{m,n} for mn <= 8, p_n for n <= 8");
}

void criterion_opposite(Expect& ok) {
    lambda::SpecialReport rep = lambda::check_special(lambda::SigmaIntegers{}, BigInt(2), BigInt(2), {2, 1, 2});
    const lambda::IdentityCheck* c = nullptr;
    for (const auto& x : rep.checks) {
        if (x.identity == "lambda^2(xy) = P_2")
            c = &x;
    }
    ok(c != nullptr, "sigma^2 identity checked");
    if (c) {
        ok(c->status == lambda::IdentityStatus::Fails, "identity fails");
        ok(c->lhs == "10", "sigma^2(4) = " + c->lhs);
        ok(c->rhs == "6", "P_2 = " + c->rhs);
        ok.note("sigma^2(4) = " + c->lhs + ", P_2(sigma) = " + c->rhs);
    }
}

void criterion_witt_closure(Expect& ok, std::uint64_t seed) {
    Gen gen(seed + 4);
    Ring r = Ring::poly({"L"});
    const std::size_t prec = 25;
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t m = static_cast<std::size_t>(gen.integer(1, 4));
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
        auto make = [&](std::size_t deg) {
            std::vector<Elem> tail;
            for (std::size_t i = 1; i < deg; ++i)
                tail.push_back(gen.elem(r, 2, 1, 2));
            tail.push_back(gen.nonzero_elem(r, 2, 1, 2));
            return WittElement::from_coeffs(r, tail, prec);
        };
        WittElement f = make(m);
        WittElement g = make(n);
        WittElement h = lambda::witt_mul(f, g);
        WittElement ghost = ghost_witt_product(f, g);
        std::string tag = "trial " + std::to_string(trial) + " (" + std::to_string(m) + "," + std::to_string(n) + ")";
        ok(witt_eq(h, ghost), tag + ": ghost oracle");
        for (std::size_t p = m * n + 1; p < prec; ++p) {
            ok(r.is_zero(h.coeff(p)), tag + ": coefficient " + std::to_string(p));
            ok(r.is_zero(ghost.coeff(p)), tag + ": ghost coefficient " + std::to_string(p));
        }
    }
    ok.note("30 pairs at precision 25");
}

void criterion_curves(Expect& ok) {
    using namespace motivic;
    const std::size_t prec = 25;
    for (CurveIncrement inc : {CurveIncrement::Jacobian, CurveIncrement::Curve}) {
        std::string iname = inc == CurveIncrement::Jacobian ? "J" : "X";
        for (unsigned long g = 0; g <= 3; ++g) {
            TruncSeries z = zeta_series(curve(g), prec, {inc});
            const Ring& r = z.ring();
            TruncSeries num = series_mul(z, TruncSeries::from_poly(r, {r.one(), E("-1 - L"), E("L")}, prec));
            for (std::size_t d = 2 * g + 1; d < prec; ++d)
                ok(r.is_zero(num[d]), "g=" + std::to_string(g) + " " + iname + " degree " + std::to_string(d));
        }
    }
    TruncSeries p1 = zeta_series(proj(1), 24);
    const Ring& r = p1.ring();
    TruncSeries inv = series_inverse(TruncSeries::from_poly(r, {r.one(), E("-1 - L"), E("L")}, 24));
    ok(same_series(p1, inv), "zeta of P^1 to 24 terms");
    ok(same_series(p1, partial_sums_of_L(r, 24)), "zeta of P^1 against partial sums");
    ok.note("g = 0..3 under both increments, degrees 2g+1..24");
}

void criterion_gallery(Expect& ok) {
    using namespace rational;
    Ring sz = Ring::square_zero({"x"});
    TruncSeries a = TruncSeries::generate(sz, 12, [](std::size_t) { return E("x"); });
    HankelReport ra = hankel_test(a, 2, 4);
    ok(ra.window && ra.window->first == 1, "(a) vanishing window at m = 1");

    Ring inf = Ring::square_zero({}, {"x"});
    TruncSeries b = square_zero_tail(inf, 17);
    HankelReport rb = hankel_test(b, 3, 10);
    ok(!rb.window, "(b) no vanishing window for m <= 3, offsets <= 10");
    std::string shown;
    for (std::size_t m = 1; m <= 3; ++m) {
        for (const auto& c : rb.cells[m]) {
            if (c.i == 0)
                continue;
            bool diagonal = !inf.is_zero(c.det) && abs(c.diagonal_coefficient) == 1 &&
                            c.diagonal_monomial.total_degree() == m + 1;
            for (std::size_t k = 0; k <= m; ++k)
                diagonal = diagonal && c.diagonal_monomial.exponent("x" + std::to_string(c.i + 2 * k)) == 1;
            ok(diagonal, "(b) surviving monomial at m=" + std::to_string(m) + " i=" + std::to_string(c.i));
            if (m == 3 && c.i == 1)
                shown = c.diagonal_monomial.to_string();
        }
    }
    PointwiseReport rc = pointwise_test(b, {Measure{"augmentation", {}, BigRational(0)}}, 2);
    ok(rc.all_rational, "(c) augmentation is rational");
    ok.note("(b) m = 3, i = 1 keeps " + shown);
}

void criterion_periodic(Expect& ok) {
    using namespace rational;
    const std::size_t prec = 30;
    auto closed = [&](const std::function<std::size_t(std::size_t)>& e, std::size_t n, const std::string& tag) {
        GroupSeries f = powers_of_L(prec, e);
        PeriodicResult r = periodic_ratio_test(f, 4, 8);
        ok(r.found && r.n == n && r.i0 == 0, tag + ": PeriodFound(" + std::to_string(n) + ", 0)");
        if (!r.found)
            return;
        for (const auto& h : r.h)
            ok(f.ring().eq(h, E("L")), tag + ": ratio L");
        TruncSeries c = periodic_closed_form(f, r, prec);
        TruncSeries direct = TruncSeries::generate(Ring::poly({"L"}), prec, [&](std::size_t i) { return Elem(L_pow(e(i))); });
        ok(c.precision() == prec, tag + ": closed form precision");
        for (std::size_t i = 0; i < prec; ++i)
            ok(c.ring().eq(c[i], direct[i]), tag + ": closed form coefficient " + std::to_string(i));
    };
    closed([](std::size_t i) { return i; }, 1, "L^i");
    closed([](std::size_t i) { return i / 2; }, 2, "L^floor(i/2)");
    PeriodicResult sq = periodic_ratio_test(powers_of_L(prec, [](std::size_t i) { return i * i; }), 4, 8);
    ok(!sq.found && sq.n_max == 4 && sq.i0_max == 8, "L^(i^2): NoWitnessUpTo(4, 8)");
}

void criterion_measures(Expect& ok) {
    using namespace measures;
    SurfaceData abelian = surface(2, 1);
    MeasureSequence seq = mu_sym_sequence(abelian, 6);
    for (std::uint32_t m = 0; m <= 6; ++m)
        ok(seq.entries[m] == multiset_graded_lambda(m, mu(abelian, 1)), "abelian m = " + std::to_string(m));
    BoundednessReport b = boundedness_check(seq, 1);
    ok(b.s1_constant && b.s1_value == 2, "s^1 track constant at 2");

    SurfaceData pg2 = surface(0, 2);
    MeasureSequence lead = mu_sym_sequence(pg2, 6);
    for (std::size_t m = 0; m <= 6; ++m) {
        ok(lead.entries[m].degree() == static_cast<long>(2 * m) &&
               lead.entries[m].dims().back() == hilb_leading_term(pg2, 1, m) &&
               hilb_leading_term(pg2, 1, m) == BigInt(m + 1),
           "pg = 2 leading term m = " + std::to_string(m));
    }

    struct Supplied {
        std::string name;
        SurfaceData data;
        unsigned n;
    };
    std::vector<Supplied> surfaces{
        {"K3 q=0,pg=1", surface(0, 1), 1},
        {"abelian q=2,pg=1", surface(2, 1), 1},
        {"q=0,pg=2", surface(0, 2), 1},
        {"q=1,pg=2", surface(1, 2), 1},
        {"q=0,pg=3", surface(0, 3), 1},
        {"Godeaux-type q=0,pg=0,P2=2 at n=2", surface(0, 0, {0, 2, 4}, {1, 0}), 2},
    };
    for (const auto& s : surfaces) {
        HarnessReport r = irrationality_harness(s.data, s.n, 6, 4, 6);
        ok(r.verdict == HarnessVerdict::NoWitness, s.name + ": NoWitnessUpTo(4, 6)");
        ok(r.certificate.established, s.name + ": growth certificate");
        if (r.periodic)
            ok(r.periodic->n_max == 4 && r.periodic->i0_max == 6, s.name + ": window");
    }
    HarnessReport zero = irrationality_harness(surface(0, 0, {0, 0, 0}, {0, 0}), 1, 6, 4, 6);
    ok(zero.verdict == HarnessVerdict::Inapplicable, "P = 0: inapplicable");
    ok(zero.rational && zero.rational->found, "P = 0: rational");
    if (zero.rational && zero.rational->found) {
        ok(rational_coeffs(zero.rational->den, {{"s", 0}}) == std::vector<BigRational>{1, -1}, "P = 0: 1 - t");
        ok(rational_coeffs(zero.rational->num, {{"s", 0}}) == std::vector<BigRational>{1}, "P = 0: numerator 1");
    }
    ok.note(std::to_string(surfaces.size()) + " surfaces with some P_n >= 1 certified");
}

void criterion_cross(Expect& ok, std::uint64_t seed) {
    using namespace motivic;
    Gen gen(seed + 9);
    std::vector<ExprPtr> exprs{point(), affine(2), proj(3), torus(2), curve(1), curve(2),
                               proj_bundle(curve(1), 1), disjoint(proj(1), torus(1))};
    for (int i = 0; i < 16; ++i)
        exprs.push_back(random_cellular_expr(gen, 2));
    std::size_t specialized = 0;
    for (const auto& e : exprs) {
        std::string tag = e->to_string();
        RationalZeta z = zeta_rational(e);
        ok(z.found, tag + ": closed form");
        if (!z.found)
            continue;
        std::size_t d = static_cast<std::size_t>(std::max(z.den.degree(), 0L));
        std::size_t en = static_cast<std::size_t>(std::max(z.num.degree(), 0L));
        std::size_t prec = 2 * (d + en) + 6;
        TruncSeries f = zeta_series(e, prec);
        ok(rational::verify_global(f, z.den, z.num).holds(), tag + ": verify_global");
        rational::HankelReport h = rational::hankel_test(f, d, en + 2);
        ok(h.window && h.window->first <= d, tag + ": hankel window");
        if (z.ring.vars() != std::vector<std::string>{"L"})
            continue;
        for (long q = 0; q <= 4; ++q) {
            std::map<std::string, BigRational> at{{"L", BigRational(q)}};
            std::vector<BigRational> nq = rational_coeffs(z.num, at);
            std::vector<BigRational> dq = rational_coeffs(z.den, at);
            long predicted = 0;
            if (!nq.empty())
                predicted = static_cast<long>(dq.size()) - static_cast<long>(univariate_gcd(dq, nq).size());
            rational::PointwiseReport p =
                rational::pointwise_test(f, {rational::Measure{"L=" + std::to_string(q), at, {}}}, d);
            ok(p.all_rational, tag + ": rational at L = " + std::to_string(q));
            if (p.all_rational)
                ok(p.verdicts[0].pade.den.degree() == predicted,
                   tag + ": denominator degree at L = " + std::to_string(q));
            ++specialized;
        }
    }
    ok.note(std::to_string(exprs.size()) + " expressions, " + std::to_string(specialized) + " specializations");
}

} // namespace

std::vector<NamedCheck> example_checks() {
    std::vector<NamedCheck> out;
    ring_examples(out);
    series_examples(out);
    symfunc_examples(out);
    lambda_examples(out);
    rationality_examples(out);
    motivic_examples(out);
    measure_examples(out);
    return out;
}

std::vector<NamedCheck> acceptance_checks(std::uint64_t seed) {
    std::vector<NamedCheck> out;
    out.push_back({"1 lambda axioms and the special big ring",
                   [seed](Expect& ok) { criterion_lambda_axioms(ok, seed); }, 60.0});
    out.push_back({"2 universal polynomials", criterion_universal, std::nullopt});
    out.push_back({"3 opposite structure on Z is not special", criterion_opposite, std::nullopt});
    out.push_back({"4 Witt polynomial closure", [seed](Expect& ok) { criterion_witt_closure(ok, seed); },
                   std::nullopt});
    out.push_back({"5 curve zeta numerators", criterion_curves, std::nullopt});
    out.push_back({"6 counterexample gallery", criterion_gallery, 30.0});
    out.push_back({"7 periodic ratio criterion", criterion_periodic, std::nullopt});
    out.push_back({"8 measure pipeline", criterion_measures, std::nullopt});
    out.push_back({"9 cross-module implications", [seed](Expect& ok) { criterion_cross(ok, seed); },
                   std::nullopt});
    return out;
}

} // namespace lz::checks
