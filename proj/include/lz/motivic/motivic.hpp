// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/rationality/rationality.hpp"
#include "lz/ring/ring.hpp"
#include "lz/series/series.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lz::motivic {

enum class VarietyKind { Point, Affine, Proj, Torus, Curve, Prod, Disjoint, VectorBundle, ProjBundle };

/// Immutable variety expression. `param` is n, d, g or the bundle rank.
struct VarietyExpr {
    VarietyKind kind = VarietyKind::Point;
    unsigned long param = 0;
    std::shared_ptr<const VarietyExpr> left;
    std::shared_ptr<const VarietyExpr> right;

    /// Canonical text, e.g. "PB(Curve(1),1)".
    std::string to_string() const;
};

using ExprPtr = std::shared_ptr<const VarietyExpr>;

/// Grammar:
///   expr := point | A(n) | P(n) | Gm(d) | Curve(g)
///         | Prod(expr,expr) | Disj(expr,expr) | VB(expr,r) | PB(expr,r)
/// Whitespace between tokens is ignored. Throws ParseError with a 1-based
/// offset on unknown constructors, arity mismatches and negative parameters.
ExprPtr parse_variety(std::string_view text);

ExprPtr point();
ExprPtr affine(unsigned long n);
ExprPtr proj(unsigned long n);
ExprPtr torus(unsigned long d);
ExprPtr curve(unsigned long g);
ExprPtr prod(ExprPtr a, ExprPtr b);
ExprPtr disjoint(ExprPtr a, ExprPtr b);
ExprPtr vector_bundle(ExprPtr base, unsigned long rank);
ExprPtr proj_bundle(ExprPtr base, unsigned long rank);

/// Stable-range increment of a curve: [Sym^n X] - [Sym^{n-1} X] = inc L^{n-g}
/// for n >= 2g, with inc the Jacobian class J or the curve class [X] = c1.
enum class CurveIncrement { Jacobian, Curve };

struct ZetaOptions {
    CurveIncrement increment = CurveIncrement::Jacobian;
};

/// Symbols of one curve occurrence: J and c_1..c_{2g-1}, the classes of
/// Sym^n X below the stable range.
struct CurveSymbols {
    unsigned long genus = 0;
    std::string jacobian;
    std::vector<std::string> sym; // sym[n-1] names c_n
};

/// Coefficient ring Z[L, J, c1, ...] for an expression. Each curve of
/// positive genus gets its own symbols; with several such curves they are
/// numbered in reading order (J1, c1_1, ...; J2, c2_1, ...).
class MotivicContext {
public:
    explicit MotivicContext(const ExprPtr& e, ZetaOptions options = {});

    const Ring& ring() const noexcept { return ring_; }
    const ZetaOptions& options() const noexcept { return options_; }
    const CurveSymbols& symbols(const VarietyExpr* curve) const;

private:
    Ring ring_;
    ZetaOptions options_;
    std::map<const VarietyExpr*, CurveSymbols> curves_;
};

/// Class in Z[L] when the expression contains no curve (lowest degree
/// first); nullopt otherwise.
std::optional<std::vector<BigInt>> cellular_class(const VarietyExpr& e);

/// First N coefficients [Sym^n X] of the zeta function. Throws DomainError
/// "no_closed_form" for a product of two non-cellular factors beyond
/// precision 2.
TruncSeries zeta_series(const ExprPtr& e, std::size_t n, ZetaOptions options = {});

/// [X], the degree-one coefficient of the zeta function.
Elem motivic_class(const ExprPtr& e, ZetaOptions options = {});

struct RationalZeta {
    bool found = false;
    Ring ring;
    RingPoly num;
    RingPoly den;
    std::string reason;
    std::size_t checked_to = 0;
};

/// Closed form num/den of the zeta function, certified by verify_global at
/// precision >= deg num + deg den + 2.
RationalZeta zeta_rational(const ExprPtr& e, ZetaOptions options = {});

struct FinitenessReport {
    Ring ring;
    /// lambda_t([X]) = zeta_X(-t)^{-1} in the opposite structure.
    TruncSeries lambda;
    bool lambda_polynomial = false;
    long lambda_degree = -1;
    bool witness_found = false;
    std::string y_name;
    std::string z_name;
    RingPoly y_lambda;
    RingPoly z_lambda;
};

/// For Point, P(1) and Curve(g): checks finiteness of [X] to precision n,
/// either directly or as [P^1] - [P^1 - X]. A series counts as polynomial
/// when at least two trailing coefficients vanish.
FinitenessReport virtual_finiteness_check(const ExprPtr& e, std::size_t n, ZetaOptions options = {});

/// Substitutes rationals for every variable; throws DomainError
/// "missing_variable" when the assignment is incomplete.
BigRational specialize(const Ring& ring, const Elem& c,
                       const std::map<std::string, BigRational>& assignment);
TruncSeries specialize(const TruncSeries& f, const std::map<std::string, BigRational>& assignment);

} // namespace lz::motivic
