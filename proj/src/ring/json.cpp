// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/ring/json.hpp"

#include "lz/error.hpp"

namespace lz {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError("invalid_json", what); }

BigInt coefficient_from_json(const Json& c) {
    if (c.is_string())
        return parse_bigint(c.get<std::string>());
    if (c.is_number_integer())
        return BigInt(std::to_string(c.get<long long>()), 10);
    bad("coefficient must be a decimal string or an integer");
}

} // namespace

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json e = Json::object();
        for (const auto& [v, k] : m.factors())
            e[v] = k;
        terms.push_back(Json{{"c", to_string(c)}, {"e", std::move(e)}});
    }
    return Json{{"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string())
        return MultiPoly(coefficient_from_json(j));
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        bad("polynomial must be an object with a \"terms\" array");
    MultiPoly p;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("c"))
            bad("term must be an object with a \"c\" field");
        std::vector<Monomial::Factor> factors;
        if (t.contains("e")) {
            if (!t["e"].is_object())
                bad("term exponents must be an object");
            for (const auto& [v, k] : t["e"].items()) {
                if (!k.is_number_unsigned() && !(k.is_number_integer() && k.get<long long>() >= 0))
                    bad("exponent of " + v + " must be a nonnegative integer");
                factors.emplace_back(v, k.get<std::uint32_t>());
            }
        }
        p.add_term(Monomial(std::move(factors)), coefficient_from_json(t["c"]));
    }
    return p;
}

Json ring_to_json(const Ring& r) {
    Json j = Json::object();
    switch (r.kind()) {
    case RingKind::Integers:
        j["kind"] = "integers";
        return j;
    case RingKind::Fraction:
        j["kind"] = "fraction";
        j["of"] = ring_to_json(r.base());
        return j;
    case RingKind::Poly:
        j["kind"] = "poly";
        break;
    case RingKind::SquareZero:
        j["kind"] = "square_zero";
        break;
    }
    j["vars"] = r.vars();
    if (!r.families().empty())
        j["families"] = r.families();
    return j;
}

Ring ring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        bad("ring must be an object with a string \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "integers")
        return Ring::integers();
    if (kind == "fraction") {
        if (!j.contains("of"))
            bad("fraction ring needs \"of\"");
        return Ring::fraction(ring_from_json(j["of"]));
    }
    std::vector<std::string> vars;
    std::vector<std::string> families;
    if (j.contains("vars"))
        vars = j["vars"].get<std::vector<std::string>>();
    if (j.contains("families"))
        families = j["families"].get<std::vector<std::string>>();
    if (kind == "poly")
        return Ring::poly(std::move(vars), std::move(families));
    if (kind == "square_zero")
        return Ring::square_zero(std::move(vars), std::move(families));
    bad("unknown ring kind '" + kind + "'");
}

Json elem_to_json(const Ring& r, const Elem& a) {
    if (r.kind() != RingKind::Fraction)
        return poly_to_json(a.num);
    return Json{{"num", poly_to_json(a.num)}, {"den", poly_to_json(a.den)}};
}

Elem elem_from_json(const Ring& r, const Json& j) {
    Elem a;
    if (r.kind() == RingKind::Fraction && j.is_object() && j.contains("num")) {
        a.num = poly_from_json(j["num"]);
        a.den = j.contains("den") ? poly_from_json(j["den"]) : MultiPoly(1L);
        if (a.den.is_zero())
            throw DomainError("division_by_zero", "fraction with zero denominator");
    } else {
        a.num = poly_from_json(j);
    }
    r.validate(a);
    return a;
}

} // namespace lz
