// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/ring/json.hpp"
#include "lz/ring/ring.hpp"
#include "lz/series/series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lz::rational {

/// One Hankel determinant D_{m,i} = det(a_{i+j+k})_{0<=j,k<=m}.
struct HankelCell {
    std::size_t i = 0;
    Elem det;
    /// Coefficient of the product of the leading monomials of the diagonal
    /// entries a_i a_{i+2} ... a_{i+2m}; a nonzero value certifies det != 0.
    BigInt diagonal_coefficient;
    Monomial diagonal_monomial;
};

/// Determinants D_{m,i} for m = 0..m_max and every i the precision allows.
/// A window (m, n) means D_{m,i} = 0 for every computed i > n, with at
/// least one such i; the summary is the first window by (m, n).
struct HankelReport {
    Ring ring;
    std::size_t precision = 0;
    std::size_t m_max = 0;
    std::size_t offset_max = 0;
    std::vector<std::vector<HankelCell>> cells; // cells[m]
    std::optional<std::pair<std::size_t, std::size_t>> window;

    bool vanishing() const { return window.has_value(); }
};

/// pre: precision >= offset_max + 2 m_max + 1, else PrecisionError.
HankelReport hankel_test(const TruncSeries& f, std::size_t m_max, std::size_t offset_max);

enum class Uniqueness { Certified, Fails, NotCertified };
std::string to_string(Uniqueness u);

/// Outcome of checking that f is the unique solution of g x = h.
struct GlobalReport {
    bool equation_holds = false;
    std::size_t checked_to = 0;
    Uniqueness uniqueness = Uniqueness::NotCertified;
    /// For Fails: a nonzero element annihilating every coefficient of g.
    std::optional<Elem> annihilator;
    std::string reason;

    bool holds() const { return equation_holds && uniqueness == Uniqueness::Certified; }
};

/// pre: deg g, deg h < precision, else PrecisionError.
GlobalReport verify_global(const TruncSeries& f, const RingPoly& g, const RingPoly& h);

struct PadeResult {
    bool found = false;
    std::size_t requested_degree = 0;
    std::size_t numerator_bound = 0;
    RingPoly num;
    RingPoly den;
};

/// Smallest-degree g (deg g <= d, g(0) = 1) and h with
/// deg h <= (precision - 2) / 2 - d and g f = h mod t^precision; at least
/// d + 1 more equations than unknowns remain as a consistency check. Series
/// over Z or Z[vars] are lifted to the fraction field.
/// pre: precision >= 2d + 2, else PrecisionError.
PadeResult pade_reconstruct(const TruncSeries& f, std::size_t d);

/// A homomorphism to Q given by values of variables. Variables absent from
/// `values` map to `default_value` when it is set.
struct Measure {
    std::string name;
    std::map<std::string, BigRational> values;
    std::optional<BigRational> default_value;
};

struct PointwiseVerdict {
    std::string measure;
    TruncSeries image;
    PadeResult pade;
};

struct PointwiseReport {
    std::vector<PointwiseVerdict> verdicts;
    bool all_rational = false;
};

/// Image of f under a measure, over Frac(Z). Throws DomainError
/// "not_a_homomorphism" when a square-zero variable has a nonzero image or
/// a denominator vanishes, "missing_variable" when a value is missing.
TruncSeries apply_measure(const TruncSeries& f, const Measure& measure);

PointwiseReport pointwise_test(const TruncSeries& f, const std::vector<Measure>& measures,
                               std::size_t d_max);

/// True if `a` is a quotient of two polynomials, each a coefficient-1
/// monomial times a polynomial with constant term 1.
bool is_group_element(const Ring& ring, const Elem& a);

/// Power series whose coefficients are group elements or zero. The stored
/// ring is the fraction field of a polynomial ring.
class GroupSeries {
public:
    GroupSeries() = default;
    /// Validates every nonzero coefficient; nullopt is the zero marker.
    GroupSeries(const Ring& ring, std::vector<std::optional<Elem>> coeffs);
    /// Zero coefficients become zero markers.
    static GroupSeries from_series(const TruncSeries& f);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const std::vector<std::optional<Elem>>& coeffs() const noexcept { return coeffs_; }
    const std::optional<Elem>& operator[](std::size_t i) const { return coeffs_.at(i); }
    TruncSeries as_series() const;

private:
    Ring ring_;
    std::vector<std::optional<Elem>> coeffs_;
};

/// Either PeriodFound(n, i0, h_1..h_n) or NoWitnessUpTo(n_max, i0_max).
/// h[r-1] is the ratio g_{i+n} / g_i for i = i0 + r mod n, i > i0.
struct PeriodicResult {
    bool found = false;
    std::size_t n = 0;
    std::size_t i0 = 0;
    std::vector<Elem> h;
    std::size_t n_max = 0;
    std::size_t i0_max = 0;
};

/// Minimal number of coefficients for periodic_ratio_test: every residue
/// class of the largest candidate gets two ratio observations.
std::size_t periodic_required_length(std::size_t n_max, std::size_t i0_max);

/// Searches n = 1..n_max, then i0 = 0..i0_max, over all available
/// coefficients. pre: size >= periodic_required_length, else PrecisionError.
PeriodicResult periodic_ratio_test(const GroupSeries& f, std::size_t n_max, std::size_t i0_max);

/// sum_{i<=i0} g_i t^i + sum_{r=1}^{n} g_{i0+r} t^{i0+r} / (1 - h_r t^n),
/// expanded to the given precision.
TruncSeries periodic_closed_form(const GroupSeries& f, const PeriodicResult& found,
                                 std::size_t precision);

Json to_json(const HankelReport& r);
Json to_json(const GlobalReport& r, const Ring& ring);
Json to_json(const PadeResult& r);
Json to_json(const PointwiseReport& r);
Json to_json(const PeriodicResult& r, const Ring& ring);
Json groupseries_to_json(const GroupSeries& f);
/// Accepts {"ring", "coeffs"} with null for zero markers, or a series JSON.
GroupSeries groupseries_from_json(const Json& j);

} // namespace lz::rational
