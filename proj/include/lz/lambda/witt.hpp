// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/series/series.hpp"

namespace lz::lambda {

/// Element of the big lambda-ring 1 + tA[[t]], known to a finite precision.
/// Ring addition is series multiplication.
class WittElement {
public:
    /// Throws DomainError("bad_constant_term") unless the constant term is 1.
    explicit WittElement(TruncSeries series);

    /// Additive identity, the series 1.
    static WittElement zero(const Ring& ring, std::size_t precision);
    /// Multiplicative identity 1 + t.
    static WittElement one(const Ring& ring, std::size_t precision);
    /// The integer c, i.e. (1 + t)^c.
    static WittElement from_integer(const Ring& ring, const BigInt& c, std::size_t precision);
    /// The Witt element with the given coefficients x_1, x_2, ... after the leading 1.
    static WittElement from_coeffs(const Ring& ring, const std::vector<Elem>& tail,
                                   std::size_t precision);

    const TruncSeries& series() const noexcept { return series_; }
    const Ring& ring() const noexcept { return series_.ring(); }
    std::size_t precision() const noexcept { return series_.precision(); }
    const Elem& coeff(std::size_t i) const { return series_[i]; }

    WittElement truncated(std::size_t n) const { return WittElement(series_.truncated(n)); }
    std::string to_string() const { return series_.to_string(); }

private:
    TruncSeries series_;
};

WittElement witt_add(const WittElement& f, const WittElement& g);
WittElement witt_neg(const WittElement& f);
WittElement witt_sub(const WittElement& f, const WittElement& g);
/// Coefficient p of the product is the universal Witt product polynomial,
/// evaluated with only the roots the factors actually have: if x_i = 0 for
/// m < i <= p the restricted polynomial with m roots is used.
WittElement witt_mul(const WittElement& f, const WittElement& g);
/// Lambda^k f; Lambda^0 f is the ring's 1, the series 1 + t. Coefficient p needs x_1..x_{pk}, so the result has precision
/// floor((N - 1) / k) + 1 for input precision N (k >= 2).
WittElement witt_lambda(std::uint32_t k, const WittElement& f);
/// Equality to the shared precision.
bool witt_eq(const WittElement& f, const WittElement& g);

} // namespace lz::lambda
