// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/lambda/lambda.hpp"
#include "lz/lambda/witt.hpp"
#include "lz/series/series.hpp"

#include <cstdint>
#include <vector>

namespace lz::checks {

/// Power sums p_1..p_{N-1} of the roots of a constant-term-1 series
/// (Newton's identities on its coefficients).
std::vector<Elem> ghost_components(const TruncSeries& f);
/// Inverse of ghost_components; divisions by k must be exact.
TruncSeries from_ghost_components(const Ring& ring, const std::vector<Elem>& p);

/// Witt product through ghost coordinates: p_k(f g) = p_k(f) p_k(g).
lambda::WittElement ghost_witt_product(const lambda::WittElement& f, const lambda::WittElement& g);

/// Witt product of two polynomials given by explicit roots: prod (1 + a_i b_j t).
TruncSeries explicit_root_product(const Ring& ring, const std::vector<Elem>& a,
                                  const std::vector<Elem>& b, std::size_t precision);

/// lambda^m of a graded space with nonnegative dimensions by enumerating how
/// m splits over the degrees: sum over (n_i) with sum n_i = m of the tensor
/// product of Sym^{n_i} (even degree) or Lambda^{n_i} (odd degree).
lambda::GradedSpace multiset_graded_lambda(std::uint32_t m, const lambda::GradedSpace& v);

/// Polynomial gcd over Q of two univariate rational polynomials (lowest
/// degree first), normalized to constant term 1 when nonzero there, monic
/// otherwise.
/// t^n coefficient of prod_{i,j <= roots} (1 + a_i b_j t) in the roots.
MultiPoly expanded_P(std::uint32_t n, std::uint32_t roots);
/// t^m coefficient of prod_{|S| = n} (1 + t prod_{j in S} a_j) over `roots` roots.
MultiPoly expanded_Q(std::uint32_t m, std::uint32_t n, std::uint32_t roots);
/// Power sum a_1^n + ... + a_roots^n.
MultiPoly expanded_power_sum(std::uint32_t n, std::uint32_t roots);

std::vector<BigRational> univariate_gcd(std::vector<BigRational> a, std::vector<BigRational> b);

} // namespace lz::checks
