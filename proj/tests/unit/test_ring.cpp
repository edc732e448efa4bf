// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include "lz/checks/random.hpp"
#include "lz/error.hpp"
#include "lz/ring/json.hpp"
#include "lz/ring/ring.hpp"

using namespace lz;

namespace {

MultiPoly P(const char* text) { return parse_poly(text); }

std::vector<Ring> all_kinds() {
    return {Ring::integers(), Ring::poly({"L", "s"}), Ring::square_zero({"x1", "x2", "x3"}),
            Ring::fraction(Ring::integers()), Ring::fraction(Ring::poly({"L", "s"}))};
}

} // namespace

TEST_CASE("variable names order digit runs numerically") {
    CHECK(compare_var_names("x2", "x10") < 0);
    CHECK(compare_var_names("x10", "x2") > 0);
    CHECK(compare_var_names("e1", "f1") < 0);
    CHECK(compare_var_names("c1_2", "c1_10") < 0);
    CHECK(compare_var_names("L", "L") == 0);
}

TEST_CASE("polynomial printing is lex descending") {
    CHECK(P("-2*e2 + e1^2").to_string() == "e1^2 - 2*e2");
    CHECK(P("e2*f1^2 - 2*e2*f2 + e1^2*f2").to_string() == "e1^2*f2 + e2*f1^2 - 2*e2*f2");
    CHECK(P("3*e3 - 3*e1*e2 + e1^3").to_string() == "e1^3 - 3*e1*e2 + 3*e3");
    CHECK(P("0").to_string() == "0");
    CHECK(P("-1 + x").to_string() == "x - 1");
}

TEST_CASE("square-zero products") {
    Ring a = Ring::square_zero({"x"});
    Elem x = a.var("x");
    CHECK(a.is_zero(ring_mul(x, x, a)));
    CHECK(ring_eq(a.mul(x, x), a.zero(), a));

    Ring b = Ring::square_zero({"x1", "x3"});
    Elem x1 = b.var("x1");
    Elem x3 = b.var("x3");
    CHECK(b.is_zero(b.mul(b.mul(x1, x3), x1)));
    CHECK(b.mul(x1, x3).num == P("x1*x3"));
}

TEST_CASE("integer identity and polynomial identities") {
    Ring z = Ring::integers();
    Elem a = z.from_int(BigInt(17));
    CHECK(ring_eq(ring_add(z.zero(), a, z), a, z));

    Ring s = Ring::poly({"s"});
    CHECK(ring_eq(s.mul(Elem(P("1+s")), Elem(P("1+2*s"))), Elem(P("1+3*s+2*s^2")), s));
}

TEST_CASE("fraction equality by cross-multiplication") {
    Ring f = Ring::fraction(Ring::poly({"L"}));
    Elem q(P("L^2 - L"), P("L - 1"));
    CHECK(ring_eq(q, f.var("L"), f));
    CHECK(f.to_string(q) == "L");
    Elem r(P("1"), P("1 - L"));
    CHECK(f.to_string(r) == "-1/(L - 1)");
}

TEST_CASE("mixed ring operands are rejected") {
    Ring a = Ring::poly({"L"});
    Ring b = Ring::poly({"x"});
    CHECK_THROWS_AS(ring_add(a.var("L"), b.var("x"), a), RingMismatch);
    Ring z = Ring::integers();
    CHECK_THROWS_AS(ring_mul(z.one(), a.var("L"), z), RingMismatch);
    Ring sz = Ring::square_zero({"x"});
    CHECK_THROWS_AS(sz.validate(Elem(P("x^2"))), RingMismatch);
}

TEST_CASE("lazy variable families") {
    Ring r = Ring::square_zero({}, {"x"});
    CHECK(r.has_var("x1"));
    CHECK(r.has_var("x1000"));
    CHECK_FALSE(r.has_var("x"));
    CHECK_FALSE(r.has_var("x01"));
    CHECK_FALSE(r.has_var("y1"));
    CHECK(r.is_zero(r.mul(r.var("x7"), r.var("x7"))));
}

TEST_CASE("invalid ring specs") {
    CHECK_THROWS(Ring::poly({"L", "L"}));
    CHECK_THROWS(Ring::poly({""}));
    CHECK_THROWS(Ring::poly({"1a"}));
    CHECK_THROWS(Ring::fraction(Ring::square_zero({"x"})));
}

TEST_CASE("unit inversion") {
    Ring sz = Ring::square_zero({"x1", "x2"});
    Elem u(P("1 + x1 + 2*x2"));
    auto inv = sz.inverse(u);
    REQUIRE(inv);
    CHECK(sz.is_one(sz.mul(u, *inv)));
    CHECK_FALSE(sz.inverse(Elem(P("2 + x1"))));
    Ring p = Ring::poly({"L"});
    CHECK_FALSE(p.inverse(p.var("L")));
    CHECK(p.inverse(Elem(-1L))->num == MultiPoly(-1L));
}

TEST_CASE("exact polynomial division") {
    MultiPoly a = P("(L^2 + 3*L*J - 2)*(L - J + 1)");
    auto q = a.divide_exact(P("L - J + 1"));
    REQUIRE(q);
    CHECK(*q == P("L^2 + 3*L*J - 2"));
    CHECK_FALSE(P("L^2 + 1").divide_exact(P("L + 1")));
    CHECK_FALSE(P("L + 1").divide_exact(P("2")));
}

TEST_CASE("ring axioms on random instances") {
    checks::Gen gen(7);
    for (const Ring& r : all_kinds()) {
        for (int trial = 0; trial < 40; ++trial) {
            Elem a = gen.elem(r);
            Elem b = gen.elem(r);
            Elem c = gen.elem(r);
            CAPTURE(r.describe());
            CHECK(r.eq(r.add(a, b), r.add(b, a)));
            CHECK(r.eq(r.mul(a, b), r.mul(b, a)));
            CHECK(r.eq(r.add(r.add(a, b), c), r.add(a, r.add(b, c))));
            CHECK(r.eq(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))));
            CHECK(r.eq(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))));
            CHECK(r.eq(r.mul(a, r.one()), a));
            CHECK(r.eq(r.add(a, r.zero()), a));
            CHECK(r.is_zero(r.add(a, r.neg(a))));
            CHECK(r.contains(r.mul(a, b)));
        }
    }
}

TEST_CASE("square-zero: products sharing a variable vanish") {
    checks::Gen gen(11);
    Ring r = Ring::square_zero({"x1", "x2", "x3", "x4"});
    for (int trial = 0; trial < 50; ++trial) {
        std::string v = "x" + std::to_string(gen.integer(1, 4));
        Elem a = r.mul(r.var(v), gen.elem(r));
        Elem b = r.mul(r.var(v), gen.elem(r));
        CHECK(r.is_zero(r.mul(a, b)));
    }
}

TEST_CASE("fraction equality is an equivalence relation") {
    checks::Gen gen(13);
    Ring f = Ring::fraction(Ring::poly({"L"}));
    for (int trial = 0; trial < 40; ++trial) {
        Elem a = gen.elem(f);
        MultiPoly k = gen.nonzero_elem(Ring::poly({"L"})).num;
        MultiPoly k2 = gen.nonzero_elem(Ring::poly({"L"})).num;
        Elem b(a.num * k, a.den * k);
        Elem c(a.num * k2, a.den * k2);
        CHECK(f.eq(a, a));
        CHECK(f.eq(a, b) == f.eq(b, a));
        CHECK(f.eq(a, b));
        CHECK(f.eq(b, c));
        CHECK(f.eq(a, c));
    }
}

TEST_CASE("json round trip is bit exact") {
    checks::Gen gen(17);
    for (const Ring& r : all_kinds()) {
        Json rj = ring_to_json(r);
        CHECK(ring_from_json(rj) == r);
        CHECK(ring_to_json(ring_from_json(rj)).dump() == rj.dump());
        for (int trial = 0; trial < 20; ++trial) {
            Elem a = gen.elem(r);
            Json j = elem_to_json(r, a);
            Elem back = elem_from_json(r, j);
            CHECK(elem_to_json(r, back).dump() == j.dump());
            CHECK(r.eq(a, back));
        }
    }
    MultiPoly big = P("123456789012345678901234567890*x^3 - 1");
    CHECK(poly_from_json(poly_to_json(big)) == big);
    CHECK(poly_to_json(P("2*L^2 - 1")).dump() ==
          R"({"terms":[{"c":"-1","e":{}},{"c":"2","e":{"L":2}}]})");
}

TEST_CASE("polynomial parser errors carry offsets") {
    try {
        parse_poly("x + * 2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_poly("(x + 1"), ParseError);
}

TEST_CASE("evaluation") {
    std::map<std::string, BigRational> at{{"L", BigRational(3)}};
    CHECK(P("L^2 + L + 1").evaluate(at) == 13);
    CHECK_THROWS_AS(P("L + J").evaluate(at), DomainError);
    Ring f = Ring::fraction(Ring::poly({"L"}));
    CHECK(f.evaluate(Elem(P("1"), P("L - 1")), at) == BigRational(1, 2));
}
