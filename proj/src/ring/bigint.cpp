// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/bigint.hpp"

#include "lz/error.hpp"

#include <cctype>

namespace lz {

BigInt parse_bigint(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        ++pos;
    if (pos == text.size())
        throw ParseError(pos + 1, "expected a decimal integer");
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(i + 1, "invalid digit in integer");
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

BigRational parse_bigrational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return BigRational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0)
        throw ParseError(slash + 2, "zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const BigRational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str(10);
    return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

BigInt binomial(const BigInt& top, unsigned long k) {
    if (top >= 0 && top.fits_ulong_p()) {
        BigInt out;
        mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
        return out;
    }
    // mpz_bin_ui handles negative tops as well, but keep the general
    // falling-factorial route for tops that do not fit.
    BigInt num = 1;
    BigInt fact = 1;
    for (unsigned long i = 0; i < k; ++i) {
        num *= top - BigInt(i);
        fact *= BigInt(i + 1);
    }
    return num / fact;
}

} // namespace lz
