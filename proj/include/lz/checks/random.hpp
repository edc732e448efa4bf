// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/ring/ring.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lz::checks {

/// Deterministic generator of random ring data for property checks.
class Gen {
public:
    explicit Gen(std::uint64_t seed = 20260101) : rng_(seed) {}

    long integer(long lo, long hi);
    bool coin() { return integer(0, 1) == 1; }

    /// Random polynomial in `vars` with at most `max_terms` terms, exponents
    /// up to `max_exp` and coefficients in [-max_coeff, max_coeff].
    MultiPoly poly(const std::vector<std::string>& vars, int max_terms, unsigned max_exp,
                   long max_coeff);

    /// Random element of `ring` drawn from its explicit variables.
    Elem elem(const Ring& ring, int max_terms = 3, unsigned max_exp = 2, long max_coeff = 4);
    /// Random nonzero element.
    Elem nonzero_elem(const Ring& ring, int max_terms = 3, unsigned max_exp = 2,
                      long max_coeff = 4);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace lz::checks
