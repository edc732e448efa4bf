// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/lambda/lambda.hpp"
#include "lz/lambda/witt.hpp"
#include "lz/symfunc/symfunc.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lz::lambda {

enum class IdentityStatus { Holds, Fails, Insufficient };

std::string to_string(IdentityStatus s);

struct IdentityCheck {
    std::string identity;  // e.g. "lambda^2(xy) = P_2"
    std::uint32_t m = 0;   // 0 for the product identity
    std::uint32_t n = 0;
    IdentityStatus status = IdentityStatus::Insufficient;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct SpecialReport {
    std::vector<IdentityCheck> checks;
    bool all_hold() const;
    bool any_fails() const;
};

struct SpecialBounds {
    std::uint32_t n_max = 3;   // product identities lambda^n(xy), n <= n_max
    std::uint32_t m_max = 3;   // composition identities lambda^m lambda^n x
    std::uint32_t mn_max = 6;  // ... with m * n <= mn_max
};

/// Z with lambda^i(r) = C(r, i).
struct BinomialIntegers {
    using Value = BigInt;
    Value zero() const { return 0; }
    Value from_int(const BigInt& c) const { return c; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    bool eq(const Value& a, const Value& b) const { return a == b; }
    std::optional<Value> lambda(std::uint32_t k, const Value& x) const { return binomial(x, k); }
    std::string show(const Value& a) const { return a.get_str(); }
};

/// Z with the opposite structure sigma_t(r) = lambda_{-t}(r)^{-1}, computed
/// by series inversion.
struct SigmaIntegers {
    using Value = BigInt;
    Value zero() const { return 0; }
    Value from_int(const BigInt& c) const { return c; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    bool eq(const Value& a, const Value& b) const { return a == b; }
    std::optional<Value> lambda(std::uint32_t k, const Value& x) const;
    std::string show(const Value& a) const { return a.get_str(); }
};

/// The big lambda-ring 1 + tA[[t]] at a fixed precision. Values whose
/// precision has dropped to 1 carry no information and are reported as
/// insufficient.
struct BigWittModel {
    using Value = WittElement;
    Ring ring;
    std::size_t precision;

    Value zero() const { return WittElement::zero(ring, precision); }
    Value from_int(const BigInt& c) const { return WittElement::from_integer(ring, c, precision); }
    Value add(const Value& a, const Value& b) const { return witt_add(a, b); }
    Value mul(const Value& a, const Value& b) const { return witt_mul(a, b); }
    bool eq(const Value& a, const Value& b) const { return witt_eq(a, b); }
    std::optional<Value> lambda(std::uint32_t k, const Value& x) const;
    std::string show(const Value& a) const { return a.to_string(); }
};

/// Z[s] with the graded structure: Sym in even degrees, Lambda in odd ones.
struct GradedModel {
    using Value = GradedSpace;
    Value zero() const { return GradedSpace(); }
    Value from_int(const BigInt& c) const { return GradedSpace({c}); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    bool eq(const Value& a, const Value& b) const { return a == b; }
    std::optional<Value> lambda(std::uint32_t k, const Value& x) const { return graded_lambda(k, x); }
    std::string show(const Value& a) const { return a.to_string(); }
};

namespace detail {

template <class Model>
typename Model::Value eval_in_model(const Model& model, const MultiPoly& p,
                                    const std::map<std::string, typename Model::Value>& values) {
    auto acc = model.zero();
    for (const auto& [mono, c] : p.terms()) {
        auto t = model.from_int(c);
        for (const auto& [v, e] : mono.factors()) {
            const auto& x = values.at(v);
            for (std::uint32_t i = 0; i < e; ++i)
                t = model.mul(t, x);
        }
        acc = model.add(acc, t);
    }
    return acc;
}

template <class Model>
std::optional<std::map<std::string, typename Model::Value>> lambda_values(
    const Model& model, const typename Model::Value& x, std::uint32_t upto, const std::string& prefix) {
    std::map<std::string, typename Model::Value> out;
    for (std::uint32_t i = 1; i <= upto; ++i) {
        auto li = model.lambda(i, x);
        if (!li)
            return std::nullopt;
        out.emplace(prefix + std::to_string(i), std::move(*li));
    }
    return out;
}

} // namespace detail

/// Checks lambda^n(xy) = P_n(lambda^i x, lambda^j y) and
/// lambda^m(lambda^n x) = Q_{m,n}(lambda^i x) in `model` within `bounds`.
template <class Model>
SpecialReport check_special(const Model& model, const typename Model::Value& x,
                            const typename Model::Value& y, const SpecialBounds& bounds) {
    SpecialReport report;
    auto finish = [&](IdentityCheck& c, const std::optional<typename Model::Value>& lhs,
                      const std::optional<typename Model::Value>& rhs) {
        if (!lhs || !rhs) {
            c.status = IdentityStatus::Insufficient;
            c.note = "lambda data too short for this identity";
        } else {
            c.lhs = model.show(*lhs);
            c.rhs = model.show(*rhs);
            c.status = model.eq(*lhs, *rhs) ? IdentityStatus::Holds : IdentityStatus::Fails;
        }
        report.checks.push_back(std::move(c));
    };
    for (std::uint32_t n = 1; n <= bounds.n_max; ++n) {
        IdentityCheck c;
        c.identity = "lambda^" + std::to_string(n) + "(xy) = P_" + std::to_string(n);
        c.n = n;
        auto lhs = model.lambda(n, model.mul(x, y));
        std::optional<typename Model::Value> rhs;
        auto lx = detail::lambda_values(model, x, n, "e");
        auto ly = detail::lambda_values(model, y, n, "f");
        if (lx && ly) {
            lx->insert(ly->begin(), ly->end());
            rhs = detail::eval_in_model(model, symfunc::universal_P(n), *lx);
        }
        finish(c, lhs, rhs);
    }
    for (std::uint32_t m = 1; m <= bounds.m_max; ++m) {
        for (std::uint32_t n = 1; n <= bounds.n_max && m * n <= bounds.mn_max; ++n) {
            IdentityCheck c;
            c.identity = "lambda^" + std::to_string(m) + "(lambda^" + std::to_string(n) +
                         " x) = Q_" + std::to_string(m) + "," + std::to_string(n);
            c.m = m;
            c.n = n;
            std::optional<typename Model::Value> lhs;
            if (auto ln = model.lambda(n, x))
                lhs = model.lambda(m, *ln);
            std::optional<typename Model::Value> rhs;
            if (auto lx = detail::lambda_values(model, x, m * n, "e"))
                rhs = detail::eval_in_model(model, symfunc::universal_Q(m, n), *lx);
            finish(c, lhs, rhs);
        }
    }
    return report;
}

} // namespace lz::lambda
