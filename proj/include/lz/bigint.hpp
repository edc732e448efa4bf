// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lz {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses an optionally signed decimal integer. Throws lz::ParseError.
BigInt parse_bigint(std::string_view text);

/// Parses "a" or "a/b".
BigRational parse_bigrational(std::string_view text);

std::string to_string(const BigInt& value);
std::string to_string(const BigRational& value);

/// Generalized binomial coefficient C(top, k) = top(top-1)...(top-k+1)/k!,
/// valid for negative `top`.
BigInt binomial(const BigInt& top, unsigned long k);

} // namespace lz
