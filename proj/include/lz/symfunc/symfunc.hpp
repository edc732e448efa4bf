// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/ring/multipoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lz::symfunc {

/// A partition as a weakly decreasing list of positive parts.
using Partition = std::vector<std::uint32_t>;

/// Partitions of `weight` with at most `max_parts` parts, each at most
/// `max_part`, in decreasing lexicographic order.
std::vector<Partition> partitions(std::uint32_t weight, std::uint32_t max_parts,
                                  std::uint32_t max_part);
Partition conjugate(const Partition& p);

/// Number of 0-1 matrices with the given row and column sums.
BigInt count_01_matrices(const std::vector<std::uint32_t>& rows,
                         const std::vector<std::uint32_t>& cols);

/// Root variables of block b are a1..ak, b1..bl, c1..; elementary symbols
/// of block b are e, f, g, ... (so e_i(a) is "e<i>" and f_j(b) is "f<j>").
std::string root_name(std::size_t block, std::size_t index);
std::string elementary_symbol(std::size_t block, std::size_t index);

/// i-th elementary symmetric polynomial in the given variables.
MultiPoly elementary(std::uint32_t i, const std::vector<std::string>& vars);

/// Symmetric polynomial in the root blocks given by `blocks` (sizes),
/// recorded by its coefficients on monomials with weakly decreasing
/// exponents inside every block (one partition per block).
using DominantForm = std::map<std::vector<Partition>, BigInt>;

/// Splits `p` into its dominant form, rejecting input that is not
/// symmetric in every block or uses foreign variables.
DominantForm dominant_form(const MultiPoly& p, const std::vector<std::uint32_t>& blocks);

/// Leading-term elimination in lexicographic order on dominant forms.
MultiPoly rewrite_dominant(DominantForm form, const std::vector<std::uint32_t>& blocks);

/// Rewrites a polynomial symmetric in each root block in the elementary
/// symbols of the blocks. Throws DomainError("not_symmetric") otherwise.
MultiPoly rewrite_in_elementaries(const MultiPoly& p, const std::vector<std::uint32_t>& blocks);

/// Substitutes e_i -> elementary polynomial of the roots of each block.
MultiPoly back_substitute(const MultiPoly& expr, const std::vector<std::uint32_t>& blocks);

/// t^n coefficient of prod_{i<=n, j<=n} (1 + a_i b_j t) in e_i, f_j.
MultiPoly universal_P(std::uint32_t n);
/// The same coefficient computed with only m a-roots and k b-roots, i.e.
/// universal_P(p) with e_i = 0 for i > m and f_j = 0 for j > k.
MultiPoly universal_P_restricted(std::uint32_t p, std::uint32_t m, std::uint32_t k);

/// t^m coefficient of prod_{|S|=n} (1 + t prod_{j in S} a_j) over mn roots,
/// in e_1..e_mn.
MultiPoly universal_Q(std::uint32_t m, std::uint32_t n);
/// The same coefficient over `roots` roots (roots < mn gives the
/// specialization e_i = 0 for i > roots).
MultiPoly universal_Q_restricted(std::uint32_t m, std::uint32_t n, std::uint32_t roots);

/// Power sum p_n in e_1..e_n.
MultiPoly newton_polynomial(std::uint32_t n);

/// t^p coefficient of the big Witt product in the coefficients x_i, y_j of
/// the two factors.
MultiPoly witt_product_coeff(std::uint32_t p);

/// Renames variables with the given prefix map, e.g. {"e","x"}: e3 -> x3.
MultiPoly rename_prefix(const MultiPoly& p, const std::map<std::string, std::string>& prefixes);

/// Largest total size (n for P, mn for Q) computed without an override.
constexpr std::uint32_t kDefaultMaxP = 8;
constexpr std::uint32_t kDefaultMaxQ = 10;

} // namespace lz::symfunc
