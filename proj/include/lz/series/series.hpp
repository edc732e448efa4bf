// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/ring/json.hpp"
#include "lz/ring/ring.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lz {

/// a_0 + a_1 t + ... + a_{N-1} t^{N-1} + O(t^N) over a ring. The precision N
/// is the number of known coefficients.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(Ring ring, std::vector<Elem> coeffs);

    static TruncSeries zero(const Ring& ring, std::size_t precision);
    static TruncSeries one(const Ring& ring, std::size_t precision);
    /// Polynomial a_0 + ... + a_d t^d viewed to the given precision.
    static TruncSeries from_poly(const Ring& ring, const std::vector<Elem>& poly,
                                 std::size_t precision);
    /// Series from a coefficient formula.
    static TruncSeries generate(const Ring& ring, std::size_t precision,
                                const std::function<Elem(std::size_t)>& coeff);
    /// Geometric series sum (c t)^i.
    static TruncSeries geometric(const Ring& ring, const Elem& c, std::size_t precision);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    const Elem& operator[](std::size_t i) const { return coeffs_.at(i); }

    /// Copy with precision min(n, precision()); never extends.
    TruncSeries truncated(std::size_t n) const;

    /// Every coefficient validated against the ring.
    void validate() const;

    std::string to_string(const std::string& var = "t") const;

private:
    Ring ring_;
    std::vector<Elem> coeffs_;
};

TruncSeries series_add(const TruncSeries& f, const TruncSeries& g);
TruncSeries series_sub(const TruncSeries& f, const TruncSeries& g);
TruncSeries series_neg(const TruncSeries& f);
TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g);
TruncSeries series_scalar(const TruncSeries& f, const Elem& c);
/// Multiplicative inverse; the constant term must be a unit of the ring.
TruncSeries series_inverse(const TruncSeries& f);
/// f(c t).
TruncSeries series_scale_arg(const TruncSeries& f, const Elem& c);
/// f(-t)^{-1}; the constant term must be 1.
TruncSeries series_opposite(const TruncSeries& f);
/// f^k for any integer k; negative powers go through series_inverse.
TruncSeries series_pow(const TruncSeries& f, long k);
/// Coefficientwise equality to the shared precision.
bool series_eq(const TruncSeries& f, const TruncSeries& g);
/// Applies `map` to every coefficient, landing in `target`.
TruncSeries series_map(const TruncSeries& f, const Ring& target,
                       const std::function<Elem(const Elem&)>& map);

/// Univariate polynomial with ring coefficients, lowest degree first and
/// trailing zeros stripped.
struct RingPoly {
    Ring ring;
    std::vector<Elem> coeffs;

    RingPoly() = default;
    RingPoly(Ring r, std::vector<Elem> c);

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Elem at(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : ring.zero(); }
    TruncSeries as_series(std::size_t precision) const;
    RingPoly operator*(const RingPoly& other) const;
    std::string to_string(const std::string& var = "t") const;
};

Json series_to_json(const TruncSeries& f);
TruncSeries series_from_json(const Json& j);
Json ringpoly_to_json(const RingPoly& p);
RingPoly ringpoly_from_json(const Ring& ring, const Json& j);

} // namespace lz
