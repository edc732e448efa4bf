// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/bigint.hpp"
#include "lz/ring/multipoly.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lz {

enum class RingKind { Integers, Poly, SquareZero, Fraction };

/// A ring element. Outside fraction fields `den` is always 1.
struct Elem {
    MultiPoly num;
    MultiPoly den{1L};

    Elem() = default;
    Elem(long c) : num(c) {} // NOLINT: integers convert implicitly
    Elem(MultiPoly n) : num(std::move(n)) {} // NOLINT
    Elem(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {}
};

/// Coefficient ring: Z, Z[vars], Z[vars]/(v^2 for every v), or the fraction
/// field of Z or Z[vars]. Besides the explicit `vars`, a ring may declare
/// variable families: a prefix p admits every variable p1, p2, ... so that
/// rings in countably many variables are realized lazily.
///
/// Ring values are cheap to copy and immutable.
class Ring {
public:
    Ring();

    static Ring integers();
    static Ring poly(std::vector<std::string> vars, std::vector<std::string> families = {});
    static Ring square_zero(std::vector<std::string> vars, std::vector<std::string> families = {});
    static Ring fraction(const Ring& base);

    RingKind kind() const;
    const std::vector<std::string>& vars() const;
    const std::vector<std::string>& families() const;
    /// The ring a fraction field is formed over.
    const Ring& base() const;

    bool is_field() const { return kind() == RingKind::Fraction; }
    bool is_domain() const { return kind() != RingKind::SquareZero; }
    bool has_var(std::string_view name) const;

    bool operator==(const Ring& other) const;
    bool operator!=(const Ring& other) const { return !(*this == other); }

    Elem zero() const { return Elem(); }
    Elem one() const { return Elem(1L); }
    Elem from_int(const BigInt& c) const { return Elem(MultiPoly(c)); }
    /// The variable `name`; throws RingMismatch if it is not in the ring.
    Elem var(const std::string& name) const;
    /// Wraps a polynomial, reducing it in a square-zero ring.
    Elem from_poly(const MultiPoly& p) const;

    /// True if `a` is a valid element of this ring.
    bool contains(const Elem& a) const;
    /// Throws RingMismatch unless contains(a).
    void validate(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_int(const Elem& a, const BigInt& c) const;
    Elem pow(const Elem& a, unsigned exponent) const;
    bool eq(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& a) const { return a.num.is_zero(); }
    bool is_one(const Elem& a) const;

    /// Multiplicative inverse when the ring provides one: +-1 in Z and Z[vars],
    /// +-1 plus a nilpotent in a square-zero ring, any nonzero fraction.
    std::optional<Elem> inverse(const Elem& a) const;
    /// Exact quotient a/b when it exists in the ring.
    std::optional<Elem> divide(const Elem& a, const Elem& b) const;

    /// Display normalization: cancels common integer and monomial factors,
    /// makes the denominator's leading coefficient positive and collapses
    /// the fraction when the denominator divides the numerator.
    Elem normalized(const Elem& a) const;

    /// Evaluates a polynomial with integer coefficients at ring elements;
    /// `value` is called once per distinct variable.
    Elem evaluate_poly(const MultiPoly& p,
                       const std::function<Elem(const std::string&)>& value) const;

    /// Evaluates numerator and denominator at rationals.
    BigRational evaluate(const Elem& a, const std::map<std::string, BigRational>& values) const;

    std::string to_string(const Elem& a) const;
    /// Short description such as "Z[L]" or "Z[x1,x2,...]/(squares)".
    std::string describe() const;

private:
    struct Impl;
    explicit Ring(std::shared_ptr<const Impl> impl);
    Elem make_frac(MultiPoly num, MultiPoly den) const;

    std::shared_ptr<const Impl> impl_;
};

/// Validated arithmetic: each operand must belong to `ring`.
Elem ring_add(const Elem& a, const Elem& b, const Ring& ring);
Elem ring_mul(const Elem& a, const Elem& b, const Ring& ring);
Elem ring_neg(const Elem& a, const Ring& ring);
bool ring_eq(const Elem& a, const Elem& b, const Ring& ring);

} // namespace lz
