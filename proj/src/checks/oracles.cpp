// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/checks/oracles.hpp"

#include "lz/error.hpp"
#include "lz/symfunc/symfunc.hpp"

namespace lz::checks {

std::vector<Elem> ghost_components(const TruncSeries& f) {
    const Ring& r = f.ring();
    std::vector<Elem> p(f.precision(), r.zero());
    for (std::size_t k = 1; k < f.precision(); ++k) {
        Elem acc = r.zero();
        for (std::size_t i = 1; i < k; ++i) {
            Elem t = r.mul(f[i], p[k - i]);
            acc = (i % 2 == 1) ? r.add(acc, t) : r.sub(acc, t);
        }
        Elem last = r.mul_int(f[k], BigInt(static_cast<unsigned long>(k)));
        acc = (k % 2 == 1) ? r.add(acc, last) : r.sub(acc, last);
        p[k] = acc;
    }
    return p;
}

TruncSeries from_ghost_components(const Ring& ring, const std::vector<Elem>& p) {
    std::vector<Elem> e(p.size(), ring.zero());
    if (!e.empty())
        e[0] = ring.one();
    for (std::size_t k = 1; k < p.size(); ++k) {
        Elem acc = ring.zero();
        for (std::size_t i = 1; i <= k; ++i) {
            Elem t = ring.mul(e[k - i], p[i]);
            acc = (i % 2 == 1) ? ring.add(acc, t) : ring.sub(acc, t);
        }
        auto q = ring.divide(acc, ring.from_int(BigInt(static_cast<unsigned long>(k))));
        if (!q)
            throw DomainError("inexact_division", "ghost components are not integral");
        e[k] = *q;
    }
    return TruncSeries(ring, std::move(e));
}

lambda::WittElement ghost_witt_product(const lambda::WittElement& f, const lambda::WittElement& g) {
    std::size_t n = std::min(f.precision(), g.precision());
    auto pf = ghost_components(f.series().truncated(n));
    auto pg = ghost_components(g.series().truncated(n));
    std::vector<Elem> p(n, f.ring().zero());
    for (std::size_t k = 1; k < n; ++k)
        p[k] = f.ring().mul(pf[k], pg[k]);
    return lambda::WittElement(from_ghost_components(f.ring(), p));
}

TruncSeries explicit_root_product(const Ring& ring, const std::vector<Elem>& a,
                                  const std::vector<Elem>& b, std::size_t precision) {
    TruncSeries out = TruncSeries::one(ring, precision);
    for (const auto& x : a) {
        for (const auto& y : b)
            out = series_mul(out, TruncSeries::from_poly(ring, {ring.one(), ring.mul(x, y)}, precision));
    }
    return out;
}

namespace {

void split(std::uint32_t left, std::size_t degree, const lambda::GradedSpace& v,
           const lambda::GradedSpace& acc, lambda::GradedSpace& total) {
    if (degree == v.dims().size()) {
        if (left == 0)
            total = total + acc;
        return;
    }
    const BigInt& d = v.dims()[degree];
    if (d < 0)
        throw DomainError("invalid_argument", "multiset oracle needs nonnegative dimensions");
    for (std::uint32_t n = 0; n <= left; ++n) {
        BigInt dim = (degree % 2 == 0) ? binomial(d + n - 1, n) : binomial(d, n);
        if (n == 0)
            dim = 1;
        if (dim == 0)
            continue;
        std::vector<BigInt> piece(degree * n + 1, BigInt(0));
        piece[degree * n] = dim;
        split(left - n, degree + 1, v, acc * lambda::GradedSpace(piece), total);
    }
}

} // namespace

lambda::GradedSpace multiset_graded_lambda(std::uint32_t m, const lambda::GradedSpace& v) {
    lambda::GradedSpace total;
    split(m, 0, v, lambda::GradedSpace::one(), total);
    return total;
}

namespace {

MultiPoly t_coefficient(const std::vector<MultiPoly>& factors, std::size_t n) {
    std::vector<MultiPoly> c(n + 1);
    c[0] = MultiPoly(1L);
    for (const auto& f : factors) {
        for (std::size_t k = n; k >= 1; --k)
            c[k] += c[k - 1] * f;
    }
    return c[n];
}

} // namespace

MultiPoly expanded_P(std::uint32_t n, std::uint32_t roots) {
    std::vector<MultiPoly> factors;
    for (std::uint32_t i = 1; i <= roots; ++i) {
        for (std::uint32_t j = 1; j <= roots; ++j)
            factors.push_back(MultiPoly::variable(symfunc::root_name(0, i)) *
                              MultiPoly::variable(symfunc::root_name(1, j)));
    }
    return t_coefficient(factors, n);
}

MultiPoly expanded_Q(std::uint32_t m, std::uint32_t n, std::uint32_t roots) {
    if (roots >= 32)
        throw DomainError("too_large", "expanded_Q supports fewer than 32 roots");
    std::vector<MultiPoly> factors;
    for (std::uint32_t mask = 0; mask < (1U << roots); ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != n)
            continue;
        MultiPoly prod(1L);
        for (std::uint32_t j = 0; j < roots; ++j) {
            if (mask & (1U << j))
                prod *= MultiPoly::variable(symfunc::root_name(0, j + 1));
        }
        factors.push_back(prod);
    }
    return t_coefficient(factors, m);
}

MultiPoly expanded_power_sum(std::uint32_t n, std::uint32_t roots) {
    MultiPoly out;
    for (std::uint32_t i = 1; i <= roots; ++i)
        out += MultiPoly::variable(symfunc::root_name(0, i)).pow(n);
    return out;
}

std::vector<BigRational> univariate_gcd(std::vector<BigRational> a, std::vector<BigRational> b) {
    auto trim = [](std::vector<BigRational>& p) {
        while (!p.empty() && p.back() == 0)
            p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            BigRational q = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] -= q * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    if (a.empty())
        return a;
    BigRational lead = a[0] != 0 ? a[0] : a.back();
    for (auto& c : a)
        c /= lead;
    return a;
}

} // namespace lz::checks
