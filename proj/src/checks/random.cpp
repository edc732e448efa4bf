// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/checks/random.hpp"

namespace lz::checks {

long Gen::integer(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng_);
}

MultiPoly Gen::poly(const std::vector<std::string>& vars, int max_terms, unsigned max_exp,
                    long max_coeff) {
    MultiPoly p;
    int terms = static_cast<int>(integer(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        std::vector<Monomial::Factor> factors;
        for (const auto& v : vars) {
            auto e = static_cast<std::uint32_t>(integer(0, max_exp));
            if (e > 0)
                factors.emplace_back(v, e);
        }
        p.add_term(Monomial(std::move(factors)), BigInt(integer(-max_coeff, max_coeff)));
    }
    return p;
}

Elem Gen::elem(const Ring& ring, int max_terms, unsigned max_exp, long max_coeff) {
    switch (ring.kind()) {
    case RingKind::Integers:
        return ring.from_int(BigInt(integer(-max_coeff, max_coeff)));
    case RingKind::Poly:
        return ring.from_poly(poly(ring.vars(), max_terms, max_exp, max_coeff));
    case RingKind::SquareZero:
        return ring.from_poly(poly(ring.vars(), max_terms, 1, max_coeff));
    case RingKind::Fraction: {
        Elem num = elem(ring.base(), max_terms, max_exp, max_coeff);
        Elem den = nonzero_elem(ring.base(), max_terms, max_exp, max_coeff);
        return ring.divide(Elem(num.num), Elem(den.num)).value();
    }
    }
    return ring.zero();
}

Elem Gen::nonzero_elem(const Ring& ring, int max_terms, unsigned max_exp, long max_coeff) {
    for (;;) {
        Elem e = elem(ring, max_terms, max_exp, max_coeff);
        if (!ring.is_zero(e))
            return e;
    }
}

} // namespace lz::checks
