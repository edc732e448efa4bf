// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/series/series.hpp"

#include "lz/error.hpp"

#include <algorithm>

namespace lz {

namespace {

void require_same_ring(const TruncSeries& f, const TruncSeries& g) {
    if (f.ring() != g.ring())
        throw RingMismatch("series over " + f.ring().describe() + " and " + g.ring().describe());
}

std::string wrap_term(const std::string& c, bool compound) {
    return compound ? "(" + c + ")" : c;
}

} // namespace

TruncSeries::TruncSeries(Ring ring, std::vector<Elem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

TruncSeries TruncSeries::zero(const Ring& ring, std::size_t precision) {
    return TruncSeries(ring, std::vector<Elem>(precision, ring.zero()));
}

TruncSeries TruncSeries::one(const Ring& ring, std::size_t precision) {
    TruncSeries s = zero(ring, precision);
    if (precision > 0)
        s.coeffs_[0] = ring.one();
    return s;
}

TruncSeries TruncSeries::from_poly(const Ring& ring, const std::vector<Elem>& poly,
                                   std::size_t precision) {
    TruncSeries s = zero(ring, precision);
    for (std::size_t i = 0; i < poly.size() && i < precision; ++i)
        s.coeffs_[i] = poly[i];
    return s;
}

TruncSeries TruncSeries::generate(const Ring& ring, std::size_t precision,
                                  const std::function<Elem(std::size_t)>& coeff) {
    std::vector<Elem> c;
    c.reserve(precision);
    for (std::size_t i = 0; i < precision; ++i)
        c.push_back(coeff(i));
    return TruncSeries(ring, std::move(c));
}

TruncSeries TruncSeries::geometric(const Ring& ring, const Elem& c, std::size_t precision) {
    std::vector<Elem> out;
    out.reserve(precision);
    Elem p = ring.one();
    for (std::size_t i = 0; i < precision; ++i) {
        out.push_back(p);
        p = ring.mul(p, c);
    }
    return TruncSeries(ring, std::move(out));
}

TruncSeries TruncSeries::truncated(std::size_t n) const {
    if (n >= coeffs_.size())
        return *this;
    return TruncSeries(ring_, std::vector<Elem>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

void TruncSeries::validate() const {
    for (const auto& c : coeffs_)
        ring_.validate(c);
}

std::string TruncSeries::to_string(const std::string& var) const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (ring_.is_zero(coeffs_[i]))
            continue;
        std::string c = ring_.to_string(coeffs_[i]);
        bool compound = c.find_first_of("+-/", 1) != std::string::npos;
        std::string term;
        if (i == 0)
            term = c;
        else if (c == "1")
            term = var;
        else if (c == "-1")
            term = "-" + var;
        else
            term = wrap_term(c, compound) + "*" + var;
        if (i > 1)
            term += "^" + std::to_string(i);
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    if (!out.empty())
        out += " + ";
    out += "O(" + var + "^" + std::to_string(coeffs_.size()) + ")";
    return out;
}

TruncSeries series_add(const TruncSeries& f, const TruncSeries& g) {
    require_same_ring(f, g);
    const Ring& r = f.ring();
    std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Elem> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        c.push_back(r.add(f[i], g[i]));
    return TruncSeries(r, std::move(c));
}

TruncSeries series_neg(const TruncSeries& f) {
    std::vector<Elem> c;
    c.reserve(f.precision());
    for (const auto& a : f.coeffs())
        c.push_back(f.ring().neg(a));
    return TruncSeries(f.ring(), std::move(c));
}

TruncSeries series_sub(const TruncSeries& f, const TruncSeries& g) {
    return series_add(f, series_neg(g));
}

TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g) {
    require_same_ring(f, g);
    const Ring& r = f.ring();
    std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Elem> c(n, r.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (r.is_zero(f[i]))
            continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (r.is_zero(g[j]))
                continue;
            c[i + j] = r.add(c[i + j], r.mul(f[i], g[j]));
        }
    }
    return TruncSeries(r, std::move(c));
}

TruncSeries series_scalar(const TruncSeries& f, const Elem& s) {
    std::vector<Elem> c;
    c.reserve(f.precision());
    for (const auto& a : f.coeffs())
        c.push_back(f.ring().mul(a, s));
    return TruncSeries(f.ring(), std::move(c));
}

TruncSeries series_inverse(const TruncSeries& f) {
    const Ring& r = f.ring();
    std::size_t n = f.precision();
    if (n == 0)
        return f;
    auto b0 = r.inverse(f[0]);
    if (!b0)
        throw DomainError("non_invertible", "constant term " + r.to_string(f[0]) +
                                                " is not a unit in " + r.describe());
    std::vector<Elem> b;
    b.reserve(n);
    b.push_back(*b0);
    Elem neg_b0 = r.neg(*b0);
    for (std::size_t k = 1; k < n; ++k) {
        Elem s = r.zero();
        for (std::size_t i = 1; i <= k; ++i) {
            if (r.is_zero(f[i]) || r.is_zero(b[k - i]))
                continue;
            s = r.add(s, r.mul(f[i], b[k - i]));
        }
        b.push_back(r.mul(neg_b0, s));
    }
    return TruncSeries(r, std::move(b));
}

TruncSeries series_scale_arg(const TruncSeries& f, const Elem& c) {
    const Ring& r = f.ring();
    std::vector<Elem> out;
    out.reserve(f.precision());
    Elem p = r.one();
    for (std::size_t i = 0; i < f.precision(); ++i) {
        out.push_back(r.mul(p, f[i]));
        p = r.mul(p, c);
    }
    return TruncSeries(r, std::move(out));
}

TruncSeries series_opposite(const TruncSeries& f) {
    if (f.precision() > 0 && !f.ring().is_one(f[0]))
        throw DomainError("bad_constant_term", "opposite needs constant term 1, got " +
                                                   f.ring().to_string(f[0]));
    return series_inverse(series_scale_arg(f, f.ring().from_int(BigInt(-1))));
}

TruncSeries series_pow(const TruncSeries& f, long k) {
    TruncSeries base = k < 0 ? series_inverse(f) : f;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    TruncSeries result = TruncSeries::one(f.ring(), f.precision());
    while (e > 0) {
        if (e & 1UL)
            result = series_mul(result, base);
        e >>= 1UL;
        if (e > 0)
            base = series_mul(base, base);
    }
    return result;
}

bool series_eq(const TruncSeries& f, const TruncSeries& g) {
    require_same_ring(f, g);
    std::size_t n = std::min(f.precision(), g.precision());
    for (std::size_t i = 0; i < n; ++i) {
        if (!f.ring().eq(f[i], g[i]))
            return false;
    }
    return true;
}

TruncSeries series_map(const TruncSeries& f, const Ring& target,
                       const std::function<Elem(const Elem&)>& map) {
    std::vector<Elem> c;
    c.reserve(f.precision());
    for (const auto& a : f.coeffs())
        c.push_back(map(a));
    return TruncSeries(target, std::move(c));
}

RingPoly::RingPoly(Ring r, std::vector<Elem> c) : ring(std::move(r)), coeffs(std::move(c)) {
    while (!coeffs.empty() && ring.is_zero(coeffs.back()))
        coeffs.pop_back();
}

TruncSeries RingPoly::as_series(std::size_t precision) const {
    return TruncSeries::from_poly(ring, coeffs, precision);
}

RingPoly RingPoly::operator*(const RingPoly& other) const {
    if (is_zero() || other.is_zero())
        return RingPoly(ring, {});
    std::vector<Elem> c(coeffs.size() + other.coeffs.size() - 1, ring.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs.size(); ++j)
            c[i + j] = ring.add(c[i + j], ring.mul(coeffs[i], other.coeffs[j]));
    }
    return RingPoly(ring, std::move(c));
}

std::string RingPoly::to_string(const std::string& var) const {
    std::string s = as_series(coeffs.size()).to_string(var);
    s.erase(s.rfind("O("));
    if (s.size() >= 3)
        s.erase(s.size() - 3);
    return s.empty() ? "0" : s;
}

Json series_to_json(const TruncSeries& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs())
        coeffs.push_back(elem_to_json(f.ring(), c));
    return Json{{"ring", ring_to_json(f.ring())},
                {"precision", f.precision()},
                {"coeffs", std::move(coeffs)}};
}

TruncSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw DomainError("invalid_json", "series needs \"ring\" and \"coeffs\"");
    Ring r = ring_from_json(j["ring"]);
    std::vector<Elem> c;
    for (const auto& e : j["coeffs"])
        c.push_back(elem_from_json(r, e));
    if (j.contains("precision") && j["precision"].get<std::size_t>() != c.size())
        throw DomainError("invalid_json", "precision does not match the number of coefficients");
    return TruncSeries(r, std::move(c));
}

Json ringpoly_to_json(const RingPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs)
        coeffs.push_back(elem_to_json(p.ring, c));
    return coeffs;
}

RingPoly ringpoly_from_json(const Ring& ring, const Json& j) {
    if (!j.is_array())
        throw DomainError("invalid_json", "polynomial in t must be a coefficient array");
    std::vector<Elem> c;
    for (const auto& e : j)
        c.push_back(elem_from_json(ring, e));
    return RingPoly(ring, std::move(c));
}

} // namespace lz
