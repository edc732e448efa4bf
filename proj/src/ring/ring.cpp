// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/ring/ring.hpp"

#include "lz/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lz {

struct Ring::Impl {
    RingKind kind = RingKind::Integers;
    std::vector<std::string> vars;
    std::vector<std::string> families;
    std::optional<Ring> base;
};

namespace {

bool valid_identifier(const std::string& name) {
    if (name.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
        return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

void check_names(const std::vector<std::string>& vars, const std::vector<std::string>& families) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (!valid_identifier(v))
            throw DomainError("invalid_ring", "invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw DomainError("invalid_ring", "duplicate variable name '" + v + "'");
    }
    for (const auto& f : families) {
        if (!valid_identifier(f))
            throw DomainError("invalid_ring", "invalid variable family '" + f + "'");
    }
}

bool square_free_monomial(const Monomial& m) {
    for (const auto& f : m.factors()) {
        if (f.second > 1)
            return false;
    }
    return true;
}

MultiPoly reduce_square_free(const MultiPoly& p) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (square_free_monomial(m))
            out.add_term(m, c);
    }
    return out;
}

} // namespace

Ring::Ring() : impl_(std::make_shared<Impl>()) {}

Ring::Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Ring Ring::integers() { return Ring(); }

Ring Ring::poly(std::vector<std::string> vars, std::vector<std::string> families) {
    check_names(vars, families);
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::Poly;
    impl->vars = std::move(vars);
    impl->families = std::move(families);
    return Ring(impl);
}

Ring Ring::square_zero(std::vector<std::string> vars, std::vector<std::string> families) {
    check_names(vars, families);
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::SquareZero;
    impl->vars = std::move(vars);
    impl->families = std::move(families);
    return Ring(impl);
}

Ring Ring::fraction(const Ring& base) {
    if (base.kind() != RingKind::Integers && base.kind() != RingKind::Poly)
        throw DomainError("invalid_ring", "fraction field requires Z or a polynomial ring");
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::Fraction;
    impl->base = base;
    return Ring(impl);
}

RingKind Ring::kind() const { return impl_->kind; }

const std::vector<std::string>& Ring::vars() const {
    return impl_->base ? impl_->base->vars() : impl_->vars;
}

const std::vector<std::string>& Ring::families() const {
    return impl_->base ? impl_->base->families() : impl_->families;
}

const Ring& Ring::base() const {
    if (!impl_->base)
        throw DomainError("invalid_ring", "ring is not a fraction field");
    return *impl_->base;
}

bool Ring::has_var(std::string_view name) const {
    const auto& vs = vars();
    if (std::find(vs.begin(), vs.end(), name) != vs.end())
        return true;
    for (const auto& f : families()) {
        if (name.size() > f.size() && name.substr(0, f.size()) == f) {
            auto rest = name.substr(f.size());
            if (rest[0] != '0' && std::all_of(rest.begin(), rest.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                return true;
        }
    }
    return false;
}

bool Ring::operator==(const Ring& other) const {
    if (impl_ == other.impl_)
        return true;
    if (impl_->kind != other.impl_->kind)
        return false;
    if (impl_->kind == RingKind::Fraction)
        return *impl_->base == *other.impl_->base;
    return impl_->vars == other.impl_->vars && impl_->families == other.impl_->families;
}

Elem Ring::var(const std::string& name) const {
    if (!has_var(name))
        throw RingMismatch("variable '" + name + "' is not in " + describe());
    return Elem(MultiPoly::variable(name));
}

Elem Ring::from_poly(const MultiPoly& p) const {
    if (kind() == RingKind::SquareZero)
        return Elem(reduce_square_free(p));
    return Elem(p);
}

bool Ring::contains(const Elem& a) const {
    auto poly_ok = [&](const MultiPoly& p) {
        for (const auto& [m, c] : p.terms()) {
            for (const auto& [v, e] : m.factors()) {
                if (!has_var(v))
                    return false;
                if (kind() == RingKind::SquareZero && e > 1)
                    return false;
            }
        }
        return true;
    };
    if (kind() != RingKind::Fraction && !a.den.is_one())
        return false;
    if (kind() == RingKind::Fraction && a.den.is_zero())
        return false;
    return poly_ok(a.num) && poly_ok(a.den);
}

void Ring::validate(const Elem& a) const {
    if (!contains(a))
        throw RingMismatch("element " + to_string(a) + " is not in " + describe());
}

Elem Ring::make_frac(MultiPoly num, MultiPoly den) const {
    if (num.is_zero())
        return Elem();
    if (den.is_one())
        return Elem(std::move(num));
    // Cheap cancellation keeps entries from growing without a polynomial gcd.
    BigInt g = num.content();
    BigInt h = den.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    if (den.leading_coefficient() < 0)
        g = -g;
    if (g != 1) {
        num = num.divide_by_integer(g);
        den = den.divide_by_integer(g);
    }
    Monomial mg = num.monomial_content().gcd(den.monomial_content());
    if (!mg.is_one()) {
        num = num.divide_by_monomial(mg);
        den = den.divide_by_monomial(mg);
    }
    if (den.is_one())
        return Elem(std::move(num));
    return Elem(std::move(num), std::move(den));
}

Elem Ring::add(const Elem& a, const Elem& b) const {
    if (kind() != RingKind::Fraction)
        return Elem(a.num + b.num);
    if (a.den == b.den)
        return make_frac(a.num + b.num, a.den);
    return make_frac(a.num * b.den + b.num * a.den, a.den * b.den);
}

Elem Ring::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Ring::neg(const Elem& a) const { return Elem(-a.num, a.den); }

Elem Ring::mul(const Elem& a, const Elem& b) const {
    switch (kind()) {
    case RingKind::SquareZero:
        return Elem(a.num.multiply_if(b.num, square_free_monomial));
    case RingKind::Fraction:
        return make_frac(a.num * b.num, a.den * b.den);
    default:
        return Elem(a.num * b.num);
    }
}

Elem Ring::mul_int(const Elem& a, const BigInt& c) const {
    if (kind() == RingKind::Fraction)
        return make_frac(a.num * c, a.den);
    return Elem(a.num * c);
}

Elem Ring::pow(const Elem& a, unsigned exponent) const {
    Elem result = one();
    Elem base_val = a;
    while (exponent > 0) {
        if (exponent & 1U)
            result = mul(result, base_val);
        exponent >>= 1U;
        if (exponent > 0)
            base_val = mul(base_val, base_val);
    }
    return result;
}

bool Ring::eq(const Elem& a, const Elem& b) const {
    if (kind() != RingKind::Fraction)
        return a.num == b.num;
    if (a.den == b.den)
        return a.num == b.num;
    return a.num * b.den == b.num * a.den;
}

bool Ring::is_one(const Elem& a) const {
    if (kind() != RingKind::Fraction)
        return a.num.is_one();
    return a.num == a.den;
}

std::optional<Elem> Ring::inverse(const Elem& a) const {
    switch (kind()) {
    case RingKind::Fraction:
        if (a.num.is_zero())
            return std::nullopt;
        return make_frac(a.den, a.num);
    case RingKind::Integers:
    case RingKind::Poly:
        if (a.num.is_one() || (-a.num).is_one())
            return a;
        return std::nullopt;
    case RingKind::SquareZero: {
        BigInt u = a.num.constant_term();
        if (u != 1 && u != -1)
            return std::nullopt;
        // a = u + n with n nilpotent: a^{-1} = u * sum_j (-u n)^j, and n^{k+1} = 0
        // once n involves only k distinct variables.
        MultiPoly n = a.num - MultiPoly(u);
        Elem step = Elem(n * BigInt(-u));
        Elem term = one();
        Elem sum = one();
        std::size_t bound = n.variables().size();
        for (std::size_t j = 0; j < bound; ++j) {
            term = mul(term, step);
            if (term.num.is_zero())
                break;
            sum = add(sum, term);
        }
        return Elem(sum.num * u);
    }
    }
    return std::nullopt;
}

std::optional<Elem> Ring::divide(const Elem& a, const Elem& b) const {
    if (b.num.is_zero())
        return std::nullopt;
    if (kind() == RingKind::Fraction)
        return make_frac(a.num * b.den, a.den * b.num);
    if (kind() == RingKind::SquareZero) {
        auto inv = inverse(b);
        if (inv)
            return mul(a, *inv);
        return std::nullopt;
    }
    auto q = a.num.divide_exact(b.num);
    if (!q)
        return std::nullopt;
    return Elem(std::move(*q));
}

Elem Ring::normalized(const Elem& a) const {
    if (kind() != RingKind::Fraction)
        return a;
    Elem e = make_frac(a.num, a.den);
    if (e.den.is_one())
        return e;
    if (auto q = e.num.divide_exact(e.den))
        return Elem(std::move(*q));
    return e;
}

Elem Ring::evaluate_poly(const MultiPoly& p,
                         const std::function<Elem(const std::string&)>& value) const {
    std::map<std::string, std::vector<Elem>> powers;
    auto power = [&](const std::string& v, std::uint32_t e) -> const Elem& {
        auto it = powers.find(v);
        if (it == powers.end())
            it = powers.emplace(v, std::vector<Elem>{one(), value(v)}).first;
        auto& list = it->second;
        while (list.size() <= e)
            list.push_back(mul(list.back(), list[1]));
        return list[e];
    };
    Elem sum = zero();
    for (const auto& [m, c] : p.terms()) {
        Elem t = from_int(c);
        for (const auto& [v, e] : m.factors()) {
            t = mul(t, power(v, e));
            if (is_zero(t))
                break;
        }
        sum = add(sum, t);
    }
    return sum;
}

BigRational Ring::evaluate(const Elem& a, const std::map<std::string, BigRational>& values) const {
    BigRational n = a.num.evaluate(values);
    if (a.den.is_one())
        return n;
    BigRational d = a.den.evaluate(values);
    if (d == 0)
        throw DomainError("not_a_homomorphism", "denominator " + a.den.to_string() +
                                                    " vanishes under the substitution");
    return n / d;
}

std::string Ring::to_string(const Elem& a) const {
    if (a.den.is_one())
        return a.num.to_string();
    Elem e = normalized(a);
    if (e.den.is_one())
        return e.num.to_string();
    auto wrap = [](const MultiPoly& p) {
        std::string s = p.to_string();
        return p.size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(e.num) + "/" + wrap(e.den);
}

std::string Ring::describe() const {
    auto var_list = [&] {
        std::string out;
        for (const auto& v : vars()) {
            if (!out.empty())
                out += ',';
            out += v;
        }
        for (const auto& f : families()) {
            if (!out.empty())
                out += ',';
            out += f + "1," + f + "2,...";
        }
        return out;
    };
    switch (kind()) {
    case RingKind::Integers:
        return "Z";
    case RingKind::Poly:
        return "Z[" + var_list() + "]";
    case RingKind::SquareZero:
        return "Z[" + var_list() + "]/(squares)";
    case RingKind::Fraction:
        return "Frac(" + base().describe() + ")";
    }
    return "?";
}

Elem ring_add(const Elem& a, const Elem& b, const Ring& ring) {
    ring.validate(a);
    ring.validate(b);
    return ring.add(a, b);
}

Elem ring_mul(const Elem& a, const Elem& b, const Ring& ring) {
    ring.validate(a);
    ring.validate(b);
    return ring.mul(a, b);
}

Elem ring_neg(const Elem& a, const Ring& ring) {
    ring.validate(a);
    return ring.neg(a);
}

bool ring_eq(const Elem& a, const Elem& b, const Ring& ring) {
    ring.validate(a);
    ring.validate(b);
    return ring.eq(a, b);
}

} // namespace lz
