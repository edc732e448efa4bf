// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/bigint.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lz {

/// Total order on variable names: digit runs compare numerically, so
/// x2 < x10. Returns <0, 0, >0.
int compare_var_names(std::string_view a, std::string_view b);

struct VarNameLess {
    bool operator()(const std::string& a, const std::string& b) const {
        return compare_var_names(a, b) < 0;
    }
};

/// A power product of named variables, stored sparsely and sorted by name.
class Monomial {
public:
    using Factor = std::pair<std::string, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);

    static Monomial var(std::string name, std::uint32_t exponent = 1);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    std::uint32_t exponent(std::string_view name) const;
    std::uint32_t total_degree() const;

    Monomial operator*(const Monomial& other) const;
    std::optional<Monomial> divide(const Monomial& divisor) const;
    /// Componentwise minimum of exponents.
    Monomial gcd(const Monomial& other) const;

    /// Lexicographic comparison; the variable that sorts first by name is
    /// the most significant one.
    int compare(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    std::vector<Factor> factors_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.compare(b) < 0; }
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. No stored coefficient is zero.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigInt, MonomialLess>;

    MultiPoly() = default;
    MultiPoly(long constant); // NOLINT: integers convert implicitly
    explicit MultiPoly(const BigInt& constant);

    static MultiPoly variable(std::string name);
    static MultiPoly term(Monomial monomial, BigInt coefficient);

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    BigInt constant_term() const;
    BigInt coefficient(const Monomial& m) const;

    /// Lex-greatest monomial; requires a nonzero polynomial.
    const Monomial& leading_monomial() const;
    const BigInt& leading_coefficient() const;

    std::set<std::string, VarNameLess> variables() const;
    std::uint32_t degree_in(std::string_view var) const;
    std::uint32_t total_degree() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const BigInt& scalar);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const BigInt& s) { return a *= s; }
    friend MultiPoly operator*(const BigInt& s, MultiPoly a) { return a *= s; }

    bool operator==(const MultiPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }

    /// Product that drops every term for which `keep(monomial)` is false;
    /// used for eager square-zero reduction.
    template <class Keep>
    MultiPoly multiply_if(const MultiPoly& other, Keep keep) const {
        MultiPoly out;
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : other.terms_) {
                Monomial m = ma * mb;
                if (!keep(m))
                    continue;
                out.add_term(std::move(m), ca * cb);
            }
        }
        return out;
    }

    /// Adds c*m in place.
    void add_term(Monomial m, const BigInt& c);

    MultiPoly pow(unsigned exponent) const;

    /// Exact quotient when `divisor` divides this polynomial in Z[vars].
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    /// Gcd of the integer coefficients (nonnegative; 0 for zero).
    BigInt content() const;
    /// Gcd of all monomials (1 for zero).
    Monomial monomial_content() const;
    MultiPoly divide_by_monomial(const Monomial& m) const;
    MultiPoly divide_by_integer(const BigInt& d) const;

    /// Substitutes polynomials for variables; unmapped variables stay.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;
    /// Evaluates at rationals; throws DomainError naming a missing variable.
    BigRational evaluate(const std::map<std::string, BigRational>& values) const;

    /// Human-readable form, lex-descending, e.g. "e1^2 - 2*e2".
    std::string to_string() const;

private:
    TermMap terms_;
};

/// Parses polynomial text such as "x1*x3^2 - 2*(L + 1)". Accepts integers,
/// identifiers, + - * ^ and parentheses; throws ParseError with offset.
MultiPoly parse_poly(std::string_view text);

} // namespace lz
