// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/ring/ring.hpp"

#include <vector>

namespace lz::rational {

using Matrix = std::vector<std::vector<Elem>>;

/// Signed sum over permutations, organized as a dynamic program over column
/// subsets (2^n n ring products). Valid in every commutative ring.
Elem determinant_cofactor(const Ring& ring, const Matrix& m);

/// Fraction-free (Bareiss) elimination; needs an integral domain so that
/// the intermediate divisions are exact.
Elem determinant_bareiss(const Ring& ring, const Matrix& m);

/// Cofactor expansion for matrices up to 5x5 and in rings with zero
/// divisors, Bareiss elimination otherwise.
Elem determinant(const Ring& ring, const Matrix& m);

} // namespace lz::rational
