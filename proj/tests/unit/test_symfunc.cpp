// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include "lz/error.hpp"
#include "lz/symfunc/symfunc.hpp"

#include <set>

using namespace lz;
using namespace lz::symfunc;

namespace {

MultiPoly P(const char* text) { return parse_poly(text); }

std::vector<std::string> roots(std::size_t block, std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= k; ++i)
        out.push_back(root_name(block, i));
    return out;
}

// Coefficient of t^n in an explicit product of (1 + m t) factors.
MultiPoly t_coefficient(const std::vector<MultiPoly>& factors, std::size_t n) {
    std::vector<MultiPoly> c(n + 1);
    c[0] = MultiPoly(1L);
    for (const auto& f : factors) {
        for (std::size_t k = n; k >= 1; --k)
            c[k] += c[k - 1] * f;
    }
    return c[n];
}

MultiPoly explicit_P(std::uint32_t n, std::uint32_t k) {
    std::vector<MultiPoly> factors;
    for (const auto& a : roots(0, k)) {
        for (const auto& b : roots(1, k))
            factors.push_back(MultiPoly::variable(a) * MultiPoly::variable(b));
    }
    return t_coefficient(factors, n);
}

MultiPoly explicit_Q(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
    std::vector<MultiPoly> factors;
    auto rs = roots(0, k);
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != n)
            continue;
        MultiPoly prod(1L);
        for (std::uint32_t j = 0; j < k; ++j) {
            if (mask & (1U << j))
                prod *= MultiPoly::variable(rs[j]);
        }
        factors.push_back(prod);
    }
    return t_coefficient(factors, m);
}

BigRational eval_at_binomials(const MultiPoly& p, long r) {
    std::map<std::string, BigRational> at;
    for (const auto& v : p.variables())
        at[v] = BigRational(binomial(BigInt(r), std::stoul(v.substr(1))));
    return p.evaluate(at);
}

} // namespace

TEST_CASE("partitions and conjugates") {
    CHECK(partitions(4, 4, 4).size() == 5);
    CHECK(partitions(4, 2, 4).size() == 3);
    CHECK(partitions(6, 3, 2).size() == 1);
    CHECK(partitions(6, 3, 3).size() == 3);
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(conjugate({4, 2, 2, 1})) == Partition{4, 2, 2, 1});
}

TEST_CASE("0-1 matrix counts match brute force") {
    // Brute force over all 3x3 0-1 matrices.
    std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>, long> brute;
    for (std::uint32_t bits = 0; bits < 512; ++bits) {
        std::vector<std::uint32_t> r(3, 0);
        std::vector<std::uint32_t> c(3, 0);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (bits & (1U << (3 * i + j))) {
                    ++r[i];
                    ++c[j];
                }
            }
        }
        ++brute[{r, c}];
    }
    for (const auto& [rc, n] : brute)
        CHECK(count_01_matrices(rc.first, rc.second) == n);
}

TEST_CASE("rewrite examples") {
    CHECK(rewrite_in_elementaries(P("a1^2 + a2^2"), {2}) == P("e1^2 - 2*e2"));
    CHECK(rewrite_in_elementaries(P("a1 + a2"), {2}) == P("e1"));
    CHECK(rewrite_in_elementaries(P("a1^2*a2 + a1*a2^2"), {2}) == P("e1*e2"));
    CHECK(rewrite_in_elementaries(P("7"), {3}) == P("7"));
    CHECK(rewrite_in_elementaries(P("a1*b1 + a2*b1"), {2, 1}) == P("e1*f1"));
}

TEST_CASE("non-symmetric input is rejected") {
    CHECK_THROWS_AS(rewrite_in_elementaries(P("a1^2 + a2"), {2}), DomainError);
    CHECK_THROWS_AS(rewrite_in_elementaries(P("a1 + 2*a2"), {2}), DomainError);
    CHECK_THROWS_AS(rewrite_in_elementaries(P("a1*b1"), {2, 2}), DomainError);
    CHECK_THROWS_AS(rewrite_in_elementaries(P("a1 + a2 + z"), {2}), DomainError);
    CHECK_THROWS_AS(rewrite_in_elementaries(P("a1 + a2 + a3"), {2}), DomainError);
}

TEST_CASE("rewrite round trips on power sums and products") {
    for (std::uint32_t k = 1; k <= 4; ++k) {
        for (std::uint32_t e = 1; e <= 4; ++e) {
            MultiPoly ps;
            for (const auto& v : roots(0, k))
                ps += MultiPoly::variable(v).pow(e);
            MultiPoly rw = rewrite_in_elementaries(ps, {k});
            CHECK(back_substitute(rw, {k}) == ps);
        }
    }
    MultiPoly mixed = (P("a1 + a2 + a3") * P("b1*b2")).pow(2) + P("a1*a2*a3");
    CHECK(back_substitute(rewrite_in_elementaries(mixed, {3, 2}), {3, 2}) == mixed);
}

TEST_CASE("universal P examples") {
    CHECK(universal_P(1) == P("e1*f1"));
    CHECK(universal_P(2) == P("e1^2*f2 + e2*f1^2 - 2*e2*f2"));
    CHECK(universal_P(2).to_string() == "e1^2*f2 + e2*f1^2 - 2*e2*f2");
    std::map<std::string, BigRational> at{{"e1", 2}, {"e2", 1}, {"f1", 2}, {"f2", 1}};
    CHECK(universal_P(2).evaluate(at) == 6);
}

TEST_CASE("universal P matches explicit expansion with extra roots") {
    for (std::uint32_t n = 1; n <= 3; ++n) {
        for (std::uint32_t k = n; k <= n + 1; ++k) {
            MultiPoly expanded = explicit_P(n, k);
            CHECK(rewrite_in_elementaries(expanded, {k, k}) == universal_P(n));
            CHECK(back_substitute(universal_P(n), {k, k}) == expanded);
        }
    }
}

TEST_CASE("restricted P is the specialization of P") {
    for (std::uint32_t p = 1; p <= 5; ++p) {
        for (std::uint32_t m = 1; m <= 3; ++m) {
            for (std::uint32_t k = 1; k <= 3; ++k) {
                std::map<std::string, MultiPoly> zero;
                for (std::uint32_t i = m + 1; i <= p; ++i)
                    zero["e" + std::to_string(i)] = MultiPoly();
                for (std::uint32_t j = k + 1; j <= p; ++j)
                    zero["f" + std::to_string(j)] = MultiPoly();
                CHECK(universal_P(p).substitute(zero) == universal_P_restricted(p, m, k));
            }
        }
    }
}

TEST_CASE("universal Q examples") {
    for (std::uint32_t n = 1; n <= 4; ++n)
        CHECK(universal_Q(1, n) == MultiPoly::variable("e" + std::to_string(n)));
    CHECK(universal_Q(2, 2) == P("e1*e3 - e4"));
    std::map<std::string, BigRational> at;
    for (int i = 1; i <= 4; ++i)
        at["e" + std::to_string(i)] = BigRational(binomial(BigInt(4), i));
    CHECK(universal_Q(2, 2).evaluate(at) == 15);
}

TEST_CASE("universal Q matches explicit expansion with an extra root") {
    for (std::uint32_t m = 1; m <= 3; ++m) {
        for (std::uint32_t n = 1; m * n <= 4; ++n) {
            std::uint32_t k = m * n + 1;
            MultiPoly expanded = explicit_Q(m, n, k);
            CHECK(rewrite_in_elementaries(expanded, {k}) == universal_Q(m, n));
            CHECK(universal_Q_restricted(m, n, k) == universal_Q(m, n));
        }
    }
}

TEST_CASE("universal Q binomial consistency") {
    for (std::uint32_t m = 1; m <= 3; ++m) {
        for (std::uint32_t n = 1; n <= 3; ++n) {
            MultiPoly q = universal_Q(m, n);
            for (long r = 0; r <= 6; ++r) {
                BigInt expected = binomial(binomial(BigInt(r), n), m);
                CHECK(eval_at_binomials(q, r) == BigRational(expected));
            }
        }
    }
}

TEST_CASE("Newton polynomials") {
    CHECK(newton_polynomial(1) == P("e1"));
    CHECK(newton_polynomial(2) == P("e1^2 - 2*e2"));
    CHECK(newton_polynomial(2).to_string() == "e1^2 - 2*e2");
    CHECK(newton_polynomial(3) == P("e1^3 - 3*e1*e2 + 3*e3"));
    for (std::uint32_t n = 1; n <= 6; ++n) {
        MultiPoly ps;
        for (const auto& v : roots(0, n))
            ps += MultiPoly::variable(v).pow(n);
        CHECK(back_substitute(newton_polynomial(n), {n}) == ps);
        // Recursion identity: p_n - sum (-1)^{i-1} e_i p_{n-i} = (-1)^{n-1} n e_n.
        MultiPoly lhs = newton_polynomial(n);
        for (std::uint32_t i = 1; i < n; ++i) {
            MultiPoly t = MultiPoly::variable("e" + std::to_string(i)) * newton_polynomial(n - i);
            lhs -= (i % 2 == 1) ? t : -t;
        }
        MultiPoly last = MultiPoly::variable("e" + std::to_string(n)) * BigInt(n);
        CHECK(lhs == ((n % 2 == 1) ? last : -last));
    }
}

TEST_CASE("Witt product coefficients") {
    CHECK(witt_product_coeff(1) == P("x1*y1"));
    CHECK(witt_product_coeff(2) == P("x1^2*y2 + x2*y1^2 - 2*x2*y2"));
    std::map<std::string, MultiPoly> only_linear;
    for (int i = 2; i <= 3; ++i) {
        only_linear["x" + std::to_string(i)] = MultiPoly();
        only_linear["y" + std::to_string(i)] = MultiPoly();
    }
    CHECK(witt_product_coeff(3).substitute(only_linear).is_zero());
}
