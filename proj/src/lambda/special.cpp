// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/lambda/special.hpp"

#include <algorithm>

namespace lz::lambda {

std::string to_string(IdentityStatus s) {
    switch (s) {
    case IdentityStatus::Holds:
        return "holds";
    case IdentityStatus::Fails:
        return "fails";
    case IdentityStatus::Insufficient:
        return "insufficient";
    }
    return "?";
}

bool SpecialReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.status == IdentityStatus::Holds; });
}

bool SpecialReport::any_fails() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.status == IdentityStatus::Fails; });
}

std::optional<BigInt> SigmaIntegers::lambda(std::uint32_t k, const BigInt& x) const {
    Ring z = Ring::integers();
    auto lam = LambdaElement::from_series(
        TruncSeries::generate(z, k + 1, [&](std::size_t i) { return z.from_int(binomial(x, i)); }));
    LambdaElement sigma = opposite_sigma(lam, k);
    return sigma.lambda(k).num.constant_term();
}

std::optional<WittElement> BigWittModel::lambda(std::uint32_t k, const WittElement& x) const {
    WittElement out = witt_lambda(k, x);
    if (out.precision() <= 1)
        return std::nullopt;
    return out;
}

} // namespace lz::lambda
