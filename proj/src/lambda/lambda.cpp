// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/lambda/lambda.hpp"

#include "lz/error.hpp"
#include "lz/symfunc/symfunc.hpp"

#include <algorithm>

namespace lz::lambda {

LambdaElement::LambdaElement(Ring ring, std::vector<Elem> lambdas)
    : ring_(std::move(ring)), lambdas_(std::move(lambdas)) {
    if (lambdas_.size() < 2)
        throw DomainError("insufficient_precision", "lambda data needs order at least 1");
    if (!ring_.is_one(lambdas_[0]))
        throw DomainError("bad_constant_term", "lambda^0 must be 1");
}

LambdaElement LambdaElement::from_series(const TruncSeries& lambda_t) {
    return LambdaElement(lambda_t.ring(), lambda_t.coeffs());
}

LambdaElement LambdaElement::line(const Ring& ring, const Elem& a, std::size_t order) {
    std::vector<Elem> l(order + 1, ring.zero());
    l[0] = ring.one();
    if (order >= 1)
        l[1] = a;
    return LambdaElement(ring, std::move(l));
}

const Elem& LambdaElement::lambda(std::size_t i) const {
    if (i >= lambdas_.size())
        throw PrecisionError("lambda^" + std::to_string(i) + " requested but data is known to order " +
                             std::to_string(order()));
    return lambdas_[i];
}

TruncSeries LambdaElement::lambda_series() const { return TruncSeries(ring_, lambdas_); }

bool LambdaElement::polynomial_to_order(std::size_t threshold) const {
    for (std::size_t i = threshold + 1; i < lambdas_.size(); ++i) {
        if (!ring_.is_zero(lambdas_[i]))
            return false;
    }
    return true;
}

std::size_t LambdaElement::apparent_degree() const {
    for (std::size_t i = lambdas_.size() - 1; i >= 1; --i) {
        if (!ring_.is_zero(lambdas_[i]))
            return i;
    }
    return 0;
}

Elem adams(std::uint32_t n, const LambdaElement& x) {
    if (n > x.order())
        throw PrecisionError("Adams operation " + std::to_string(n) + " needs lambda data to order " +
                             std::to_string(n) + ", have " + std::to_string(x.order()));
    MultiPoly p = symfunc::newton_polynomial(n);
    return x.ring().evaluate_poly(p, [&](const std::string& v) {
        return x.lambda(std::stoul(v.substr(1)));
    });
}

LambdaElement opposite_sigma(const LambdaElement& x, std::size_t order) {
    if (order > x.order())
        throw PrecisionError("opposite structure to order " + std::to_string(order) +
                             " needs lambda data to that order, have " + std::to_string(x.order()));
    TruncSeries s = series_opposite(x.lambda_series().truncated(order + 1));
    return LambdaElement::from_series(s);
}

// ------------------------------------------------------------ GradedSpace

GradedSpace::GradedSpace(std::vector<BigInt> dims) : dims_(std::move(dims)) {
    while (!dims_.empty() && dims_.back() == 0)
        dims_.pop_back();
}

GradedSpace GradedSpace::from_poly(const MultiPoly& p, const std::string& var) {
    std::vector<BigInt> dims;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& f : m.factors()) {
            if (f.first != var)
                throw DomainError("invalid_argument", "graded space may only involve " + var);
        }
        std::size_t d = m.exponent(var);
        if (dims.size() <= d)
            dims.resize(d + 1, BigInt(0));
        dims[d] += c;
    }
    return GradedSpace(std::move(dims));
}

bool GradedSpace::in_monoid() const {
    if (dims_.empty() || dims_[0] != 1)
        return false;
    return std::all_of(dims_.begin(), dims_.end(), [](const BigInt& d) { return d >= 0; });
}

GradedSpace GradedSpace::operator+(const GradedSpace& other) const {
    std::vector<BigInt> d(std::max(dims_.size(), other.dims_.size()), BigInt(0));
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = dim(i) + other.dim(i);
    return GradedSpace(std::move(d));
}

GradedSpace GradedSpace::operator-(const GradedSpace& other) const {
    std::vector<BigInt> d(std::max(dims_.size(), other.dims_.size()), BigInt(0));
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = dim(i) - other.dim(i);
    return GradedSpace(std::move(d));
}

GradedSpace GradedSpace::operator*(const GradedSpace& other) const {
    if (dims_.empty() || other.dims_.empty())
        return GradedSpace();
    std::vector<BigInt> d(dims_.size() + other.dims_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] == 0)
            continue;
        for (std::size_t j = 0; j < other.dims_.size(); ++j)
            d[i + j] += dims_[i] * other.dims_[j];
    }
    return GradedSpace(std::move(d));
}

MultiPoly GradedSpace::to_poly(const std::string& var) const {
    MultiPoly p;
    for (std::size_t i = 0; i < dims_.size(); ++i)
        p.add_term(Monomial::var(var, static_cast<std::uint32_t>(i)), dims_[i]);
    return p;
}

std::string GradedSpace::to_string(const std::string& var) const {
    std::string out;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] == 0)
            continue;
        BigInt c = dims_[i];
        bool negative = c < 0;
        if (negative)
            c = -c;
        std::string term;
        if (i == 0)
            term = c.get_str();
        else
            term = (c == 1 ? "" : c.get_str() + "*") + var + (i > 1 ? "^" + std::to_string(i) : "");
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

namespace {

using GradedStream = std::vector<GradedSpace>;

GradedStream stream_mul(const GradedStream& a, const GradedStream& b) {
    GradedStream out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].dims().empty())
            continue;
        for (std::size_t j = 0; i + j < a.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

GradedStream stream_inverse(const GradedStream& a) {
    GradedStream b(a.size());
    b[0] = GradedSpace::one();
    for (std::size_t k = 1; k < a.size(); ++k) {
        GradedSpace s;
        for (std::size_t i = 1; i <= k; ++i)
            s = s + a[i] * b[k - i];
        b[k] = GradedSpace() - s;
    }
    return b;
}

GradedSpace monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> d(degree + 1, BigInt(0));
    d[degree] = c;
    return GradedSpace(std::move(d));
}

} // namespace

std::vector<GradedSpace> graded_lambda_series(const GradedSpace& v, std::uint32_t order) {
    GradedStream total(order + 1);
    total[0] = GradedSpace::one();
    for (std::size_t i = 0; i < v.dims().size(); ++i) {
        const BigInt& d = v.dims()[i];
        if (d == 0)
            continue;
        BigInt size = d < 0 ? BigInt(-d) : d;
        GradedStream factor(order + 1);
        for (std::uint32_t j = 0; j <= order; ++j) {
            // Even degrees contribute symmetric powers, odd degrees exterior powers.
            BigInt dim = (i % 2 == 0) ? binomial(size + j - 1, j) : binomial(size, j);
            factor[j] = monomial(dim, i * j);
        }
        if (d < 0)
            factor = stream_inverse(factor);
        total = stream_mul(total, factor);
    }
    return total;
}

GradedSpace graded_lambda(std::uint32_t m, const GradedSpace& v) {
    return graded_lambda_series(v, m)[m];
}

} // namespace lz::lambda
