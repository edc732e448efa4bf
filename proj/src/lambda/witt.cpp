// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/lambda/witt.hpp"

#include "lz/error.hpp"
#include "lz/symfunc/symfunc.hpp"

#include <algorithm>

namespace lz::lambda {

namespace {

// Largest i <= bound with a nonzero coefficient x_i (0 if none).
std::uint32_t effective_degree(const WittElement& f, std::size_t bound) {
    std::size_t top = std::min(bound, f.precision() - 1);
    for (std::size_t i = top; i >= 1; --i) {
        if (!f.ring().is_zero(f.coeff(i)))
            return static_cast<std::uint32_t>(i);
    }
    return 0;
}

void require_same_ring(const WittElement& f, const WittElement& g) {
    if (f.ring() != g.ring())
        throw RingMismatch("Witt elements over " + f.ring().describe() + " and " +
                           g.ring().describe());
}

} // namespace

WittElement::WittElement(TruncSeries series) : series_(std::move(series)) {
    if (series_.precision() == 0)
        throw DomainError("insufficient_precision", "Witt element needs precision at least 1");
    if (!series_.ring().is_one(series_[0]))
        throw DomainError("bad_constant_term", "Witt element must have constant term 1, got " +
                                                   series_.ring().to_string(series_[0]));
}

WittElement WittElement::zero(const Ring& ring, std::size_t precision) {
    return WittElement(TruncSeries::one(ring, precision));
}

WittElement WittElement::one(const Ring& ring, std::size_t precision) {
    return from_integer(ring, BigInt(1), precision);
}

WittElement WittElement::from_integer(const Ring& ring, const BigInt& c, std::size_t precision) {
    return WittElement(TruncSeries::generate(ring, precision, [&](std::size_t i) {
        return ring.from_int(binomial(c, i));
    }));
}

WittElement WittElement::from_coeffs(const Ring& ring, const std::vector<Elem>& tail,
                                     std::size_t precision) {
    std::vector<Elem> c{ring.one()};
    c.insert(c.end(), tail.begin(), tail.end());
    return WittElement(TruncSeries::from_poly(ring, c, precision));
}

WittElement witt_add(const WittElement& f, const WittElement& g) {
    require_same_ring(f, g);
    return WittElement(series_mul(f.series(), g.series()));
}

WittElement witt_neg(const WittElement& f) { return WittElement(series_inverse(f.series())); }

WittElement witt_sub(const WittElement& f, const WittElement& g) { return witt_add(f, witt_neg(g)); }

WittElement witt_mul(const WittElement& f, const WittElement& g) {
    require_same_ring(f, g);
    const Ring& r = f.ring();
    std::size_t n = std::min(f.precision(), g.precision());
    std::vector<Elem> c{r.one()};
    for (std::size_t p = 1; p < n; ++p) {
        std::uint32_t m = effective_degree(f, p);
        std::uint32_t k = effective_degree(g, p);
        if (m == 0 || k == 0) {
            c.push_back(r.zero());
            continue;
        }
        MultiPoly u = symfunc::universal_P_restricted(static_cast<std::uint32_t>(p), m, k);
        c.push_back(r.evaluate_poly(u, [&](const std::string& v) {
            std::size_t i = std::stoul(v.substr(1));
            return v[0] == 'e' ? f.coeff(i) : g.coeff(i);
        }));
    }
    return WittElement(TruncSeries(r, std::move(c)));
}

WittElement witt_lambda(std::uint32_t k, const WittElement& f) {
    if (k == 0)
        return WittElement::one(f.ring(), f.precision());
    if (k == 1)
        return f;
    const Ring& r = f.ring();
    std::size_t n = (f.precision() - 1) / k + 1;
    std::vector<Elem> c{r.one()};
    for (std::size_t p = 1; p < n; ++p) {
        std::uint32_t m = effective_degree(f, p * k);
        if (m < k) {
            c.push_back(r.zero());
            continue;
        }
        MultiPoly u = symfunc::universal_Q_restricted(static_cast<std::uint32_t>(p), k, m);
        c.push_back(r.evaluate_poly(u, [&](const std::string& v) {
            return f.coeff(std::stoul(v.substr(1)));
        }));
    }
    return WittElement(TruncSeries(r, std::move(c)));
}

bool witt_eq(const WittElement& f, const WittElement& g) { return series_eq(f.series(), g.series()); }

} // namespace lz::lambda
