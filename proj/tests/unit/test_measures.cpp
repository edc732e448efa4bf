// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include "lz/checks/oracles.hpp"
#include "lz/error.hpp"
#include "lz/measures/measures.hpp"

using namespace lz;
using namespace lz::measures;

namespace {

SurfaceData surface(long q, long pg, std::vector<long> p = {}, std::vector<long> h1 = {}) {
    SurfaceData s;
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

} // namespace

TEST_CASE("surface data parsing and validation") {
    SurfaceData s = parse_surface("q=2,pg=1,P=1,1,1,1,h1=0,0");
    CHECK(s.q == 2);
    CHECK(s.pg == 1);
    CHECK(s.plurigenera.size() == 4);
    CHECK(s.h1n.at(2) == 0);
    CHECK(s.h1n.at(3) == 0);
    CHECK(s.to_string() == "q=2,pg=1,P=1,1,1,1,h1=0,0");
    CHECK(parse_surface("q=0, pg=3").plurigenera == std::vector<BigInt>{3});
    CHECK_THROWS_AS(parse_surface("q=0"), ParseError);
    CHECK_THROWS_AS(parse_surface("q=0,pg=x"), ParseError);
    CHECK_THROWS_AS(parse_surface("q=0,pg=1,r=2"), ParseError);
    CHECK_THROWS_AS(parse_surface("q=0,pg=1,P=2"), DomainError);
    CHECK_THROWS_AS(parse_surface("q=-1,pg=1"), DomainError);
    try {
        parse_surface("q=0,pg=1,zz=2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 10);
    }
    SurfaceData back = surface_from_json(surface_to_json(s));
    CHECK(back.to_string() == s.to_string());
}

TEST_CASE("mu of a surface and missing data") {
    SurfaceData s = surface(2, 1, {1, 3}, {4});
    CHECK(mu(s, 1) == GradedSpace({1, 2, 1}));
    CHECK(mu(s, 2) == GradedSpace({1, 4, 3}));
    CHECK_THROWS_AS(mu(s, 3), DomainError);
    CHECK_THROWS_AS(mu(surface(0, 1, {1, 2}), 2), DomainError);
}

TEST_CASE("symmetric power sequence against the multiset oracle") {
    for (long q = 0; q <= 3; ++q) {
        for (long pg = 0; pg <= 3; ++pg) {
            SurfaceData s = surface(q, pg);
            MeasureSequence seq = mu_sym_sequence(s, 6);
            REQUIRE(seq.entries.size() == 7);
            for (std::uint32_t m = 0; m <= 6; ++m)
                CHECK(seq.entries[m] == checks::multiset_graded_lambda(m, mu(s, 1)));
        }
    }
}

TEST_CASE("curve and K3 sanity sequences") {
    // A curve contributes 1 + g s; Sym^j has s^k coefficient C(g, k) for k <= j.
    for (long g = 0; g <= 4; ++g) {
        auto seq = lambda::graded_lambda_series(GradedSpace({1, g}), 7);
        for (std::size_t j = 0; j < 7; ++j) {
            std::vector<BigInt> row;
            for (long k = 0; k <= std::min<long>(j, g); ++k)
                row.push_back(binomial(BigInt(g), static_cast<unsigned long>(k)));
            CHECK(seq[j] == GradedSpace(row));
        }
    }
    MeasureSequence k3 = mu_sym_sequence(surface(0, 1), 8);
    for (std::size_t m = 0; m <= 8; ++m) {
        std::vector<BigInt> dims(2 * m + 1, 0);
        for (std::size_t k = 0; k <= 2 * m; k += 2)
            dims[k] = 1;
        CHECK(k3.entries[m] == GradedSpace(dims));
    }
}

TEST_CASE("product of curves matches its surface data") {
    for (long g1 = 0; g1 <= 3; ++g1) {
        for (long g2 = 0; g2 <= 3; ++g2) {
            GradedSpace c = GradedSpace({1, g1}) * GradedSpace({1, g2});
            SurfaceData s = surface(g1 + g2, g1 * g2);
            CHECK(mu(s, 1) == GradedSpace({1, g1 + g2, g1 * g2}));
            for (std::uint32_t m = 0; m <= 5; ++m)
                CHECK(mu_sym_sequence(s, 5).entries[m] == checks::multiset_graded_lambda(m, c));
        }
    }
}

TEST_CASE("Hilbert scheme leading terms") {
    SurfaceData s = surface(0, 1, {1, 2, 0});
    for (std::size_t m = 0; m <= 6; ++m)
        CHECK(hilb_leading_term(s, 1, m) == 1);
    CHECK(hilb_leading_term(s, 2, 3) == 4);
    CHECK(hilb_leading_term(s, 3, 2) == 0);
    CHECK(hilb_leading_term(s, 3, 0) == 1);
    for (std::size_t m = 0; m <= 6; ++m)
        CHECK(hilb_leading_term(s, 2, m) == BigInt(m + 1));
    CHECK_THROWS_AS(hilb_leading_term(s, 4, 1), DomainError);
}

TEST_CASE("boundedness of the s^1 track and leading growth") {
    SurfaceData s = surface(2, 1);
    BoundednessReport r = boundedness_check(mu_sym_sequence(s, 6), 1);
    CHECK(r.s1_constant);
    CHECK(r.s1_value == 2);
    CHECK(r.max == 2);
    CHECK(r.leading_growing);
    for (std::size_t m = 0; m <= 6; ++m) {
        CHECK(r.leading_degrees[m] == static_cast<long>(2 * m));
        CHECK(r.leading[m] == 1);
    }
    CHECK_FALSE(r.leading_coefficient_strict);
    BoundednessReport r2 = boundedness_check(mu_sym_sequence(surface(1, 2), 6), 2);
    CHECK(r2.leading_coefficient_strict);
    for (std::size_t m = 0; m <= 6; ++m)
        CHECK(r2.leading[m] == BigInt(m + 1));
}

TEST_CASE("irrationality harness on surfaces with pg >= 1") {
    HarnessReport r = irrationality_harness(surface(1, 2), 1, 6, 4, 4);
    CHECK(r.verdict == HarnessVerdict::NoWitness);
    REQUIRE(r.periodic);
    CHECK_FALSE(r.periodic->found);
    CHECK(r.range >= 6);
    CHECK(r.certificate.established);
    CHECK(r.certificate.unrefuted.empty());
    CHECK(r.certificate.refutations.size() == 4 * 5);
    CHECK(r.certificate.constant_terms_one);
    CHECK(r.certificate.track_bounded);
    CHECK(r.certificate.leading_growing);

    HarnessReport k3 = irrationality_harness(surface(0, 1), 1, 6, 4, 6);
    CHECK(k3.verdict == HarnessVerdict::NoWitness);
    CHECK(k3.certificate.established);

    Json j = to_json(r);
    CHECK(j["verdict"] == "NoWitnessUpTo");
    CHECK(j["certificate"]["established"] == true);
}

TEST_CASE("harness on data with vanishing plurigenera") {
    HarnessReport r = irrationality_harness(surface(0, 0, {0, 0, 0}), 1, 6, 4, 6);
    CHECK(r.verdict == HarnessVerdict::Inapplicable);
    REQUIRE(r.rational);
    CHECK(r.rational->found);
    // Sym^m of the plane has mu = 1, so the series is 1 / (1 - t).
    const Ring& zs = r.rational->den.ring;
    CHECK(r.rational->den.degree() == 1);
    CHECK(r.rational->num.degree() == 0);
    CHECK(zs.eq(r.rational->den.at(1), zs.neg(r.rational->den.at(0))));
    CHECK(zs.eq(r.rational->num.at(0), r.rational->den.at(0)));
    CHECK(to_json(r)["verdict"] == "inapplicable");
}

TEST_CASE("harness with pg = 0 and q > 0 at n = 1 finds a period") {
    // 1 + 2s: lambda powers stabilise at 1 + 2s + s^2 from m = 2.
    HarnessReport r = irrationality_harness(surface(2, 0, {0, 1}, {2}), 1, 6, 4, 4);
    CHECK(r.verdict == HarnessVerdict::PeriodFound);
    CHECK_FALSE(r.certificate.established);
}

TEST_CASE("partial model for higher n") {
    SurfaceData godeaux = surface(0, 0, {0, 2, 4}, {1, 0});
    HarnessReport r = irrationality_harness(godeaux, 2, 6, 4, 4);
    CHECK_FALSE(r.full_model);
    CHECK(r.verdict == HarnessVerdict::NoWitness);
    CHECK(r.certificate.established);
    for (const auto& f : r.certificate.refutations)
        CHECK(f.reason.find("leading") == 0);

    HarnessReport one = irrationality_harness(surface(0, 0, {0, 1}, {0}), 2, 6, 3, 3);
    CHECK(one.verdict == HarnessVerdict::Inconclusive);
    CHECK_FALSE(one.certificate.unrefuted.empty());

    HarnessReport zero = irrationality_harness(surface(0, 0, {0, 0, 3}, {0, 0}), 2, 6, 3, 3);
    CHECK(zero.verdict == HarnessVerdict::Inconclusive);
    CHECK_FALSE(zero.certificate.established);

    CHECK_THROWS_AS(irrationality_harness(godeaux, 5, 6, 3, 3), DomainError);
}
