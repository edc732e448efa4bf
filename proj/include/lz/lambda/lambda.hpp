// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/lambda/witt.hpp"
#include "lz/series/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lz::lambda {

/// An element x of a lambda-ring recorded by lambda^0 x = 1, lambda^1 x = x,
/// lambda^2 x, ... up to a stated order.
class LambdaElement {
public:
    /// `lambdas` lists lambda^0..lambda^N; lambda^0 must be 1 and N >= 1.
    LambdaElement(Ring ring, std::vector<Elem> lambdas);

    /// Lambda data read off a lambda_t series: lambda^i x = coefficient i.
    static LambdaElement from_series(const TruncSeries& lambda_t);
    /// A "line element" with lambda_t = 1 + a t, to the given order.
    static LambdaElement line(const Ring& ring, const Elem& a, std::size_t order);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept { return lambdas_.size() - 1; }
    const std::vector<Elem>& lambdas() const noexcept { return lambdas_; }
    /// lambda^i x; throws PrecisionError beyond the stored order.
    const Elem& lambda(std::size_t i) const;
    const Elem& value() const { return lambdas_[1]; }

    /// lambda_t(x) = sum lambda^i x t^i, precision order + 1.
    TruncSeries lambda_series() const;

    /// True if lambda^i x = 0 for threshold < i <= order ("polynomial to
    /// precision order + 1").
    bool polynomial_to_order(std::size_t threshold) const;
    /// Largest i <= order with lambda^i x != 0.
    std::size_t apparent_degree() const;

private:
    Ring ring_;
    std::vector<Elem> lambdas_;
};

/// Adams operation: the Newton polynomial p_n evaluated at e_i = lambda^i x.
Elem adams(std::uint32_t n, const LambdaElement& x);

/// The opposite structure sigma_t(x) = lambda_{-t}(x)^{-1}, to `order`.
LambdaElement opposite_sigma(const LambdaElement& x, std::size_t order);

/// A virtual graded vector space: dims[i] is the dimension in degree i, i.e.
/// an element of Z[s]. Trailing zero dimensions are stripped.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<BigInt> dims);
    static GradedSpace one() { return GradedSpace({BigInt(1)}); }
    static GradedSpace from_poly(const MultiPoly& p, const std::string& var = "s");

    const std::vector<BigInt>& dims() const noexcept { return dims_; }
    BigInt dim(std::size_t degree) const { return degree < dims_.size() ? dims_[degree] : BigInt(0); }
    /// Degree in s; -1 for the zero space.
    long degree() const { return static_cast<long>(dims_.size()) - 1; }
    /// Element of the monoid of constant-term-1 polynomials with nonnegative
    /// coefficients.
    bool in_monoid() const;

    GradedSpace operator+(const GradedSpace& other) const;
    GradedSpace operator-(const GradedSpace& other) const;
    GradedSpace operator*(const GradedSpace& other) const;
    bool operator==(const GradedSpace& other) const { return dims_ == other.dims_; }
    bool operator!=(const GradedSpace& other) const { return !(*this == other); }

    MultiPoly to_poly(const std::string& var = "s") const;
    std::string to_string(const std::string& var = "s") const;

private:
    std::vector<BigInt> dims_;
};

/// lambda_t of a graded space to t^order: the product over degrees i of
/// (1 + s^i t)^{d_i} for odd i and (1 - s^i t)^{-d_i} for even i, negative
/// dimensions handled by series inversion. Entry m is lambda^m(v).
std::vector<GradedSpace> graded_lambda_series(const GradedSpace& v, std::uint32_t order);
GradedSpace graded_lambda(std::uint32_t m, const GradedSpace& v);

} // namespace lz::lambda
