// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/ring/multipoly.hpp"

#include "lz/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lz {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

} // namespace

int compare_var_names(std::string_view a, std::string_view b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (is_digit(a[i]) && is_digit(b[j])) {
            std::size_t ie = i;
            std::size_t je = j;
            while (ie < a.size() && is_digit(a[ie]))
                ++ie;
            while (je < b.size() && is_digit(b[je]))
                ++je;
            std::size_t iz = i;
            std::size_t jz = j;
            while (iz + 1 < ie && a[iz] == '0')
                ++iz;
            while (jz + 1 < je && b[jz] == '0')
                ++jz;
            std::size_t la = ie - iz;
            std::size_t lb = je - jz;
            if (la != lb)
                return la < lb ? -1 : 1;
            int c = a.substr(iz, la).compare(b.substr(jz, lb));
            if (c != 0)
                return c < 0 ? -1 : 1;
            if (ie - i != je - j)
                return (ie - i) < (je - j) ? -1 : 1;
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j])
            return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
        ++i;
        ++j;
    }
    if (i == a.size() && j == b.size())
        return 0;
    return i == a.size() ? -1 : 1;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& x, const Factor& y) {
        return compare_var_names(x.first, y.first) < 0;
    });
    for (auto& f : factors) {
        if (f.second == 0)
            continue;
        if (!factors_.empty() && factors_.back().first == f.first)
            factors_.back().second += f.second;
        else
            factors_.push_back(std::move(f));
    }
}

Monomial Monomial::var(std::string name, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0)
        m.factors_.emplace_back(std::move(name), exponent);
    return m;
}

std::uint32_t Monomial::exponent(std::string_view name) const {
    for (const auto& [v, e] : factors_) {
        if (v == name)
            return e;
    }
    return 0;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_)
        d += f.second;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < factors_.size() || j < other.factors_.size()) {
        if (j == other.factors_.size()) {
            out.factors_.push_back(factors_[i++]);
        } else if (i == factors_.size()) {
            out.factors_.push_back(other.factors_[j++]);
        } else {
            int c = compare_var_names(factors_[i].first, other.factors_[j].first);
            if (c < 0) {
                out.factors_.push_back(factors_[i++]);
            } else if (c > 0) {
                out.factors_.push_back(other.factors_[j++]);
            } else {
                out.factors_.emplace_back(factors_[i].first,
                                          factors_[i].second + other.factors_[j].second);
                ++i;
                ++j;
            }
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
    Monomial out;
    std::size_t i = 0;
    for (const auto& [v, e] : divisor.factors_) {
        while (i < factors_.size() && compare_var_names(factors_[i].first, v) < 0)
            out.factors_.push_back(factors_[i++]);
        if (i == factors_.size() || factors_[i].first != v || factors_[i].second < e)
            return std::nullopt;
        if (factors_[i].second > e)
            out.factors_.emplace_back(v, factors_[i].second - e);
        ++i;
    }
    while (i < factors_.size())
        out.factors_.push_back(factors_[i++]);
    return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
    Monomial out;
    std::size_t j = 0;
    for (const auto& [v, e] : factors_) {
        while (j < other.factors_.size() && compare_var_names(other.factors_[j].first, v) < 0)
            ++j;
        if (j < other.factors_.size() && other.factors_[j].first == v)
            out.factors_.emplace_back(v, std::min(e, other.factors_[j].second));
    }
    return out;
}

int Monomial::compare(const Monomial& other) const {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < factors_.size() && j < other.factors_.size()) {
        int c = compare_var_names(factors_[i].first, other.factors_[j].first);
        if (c < 0)
            return 1;
        if (c > 0)
            return -1;
        if (factors_[i].second != other.factors_[j].second)
            return factors_[i].second < other.factors_[j].second ? -1 : 1;
        ++i;
        ++j;
    }
    if (i == factors_.size() && j == other.factors_.size())
        return 0;
    return i == factors_.size() ? -1 : 1;
}

std::string Monomial::to_string() const {
    if (factors_.empty())
        return "1";
    std::string out;
    for (const auto& [v, e] : factors_) {
        if (!out.empty())
            out += '*';
        out += v;
        if (e != 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(long constant) {
    if (constant != 0)
        terms_.emplace(Monomial(), BigInt(constant));
}

MultiPoly::MultiPoly(const BigInt& constant) {
    if (constant != 0)
        terms_.emplace(Monomial(), constant);
}

MultiPoly MultiPoly::variable(std::string name) {
    return term(Monomial::var(std::move(name)), BigInt(1));
}

MultiPoly MultiPoly::term(Monomial monomial, BigInt coefficient) {
    MultiPoly p;
    if (coefficient != 0)
        p.terms_.emplace(std::move(monomial), std::move(coefficient));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

BigInt MultiPoly::constant_term() const { return coefficient(Monomial()); }

BigInt MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty())
        throw DomainError("zero_polynomial", "leading term of the zero polynomial");
    return terms_.rbegin()->first;
}

const BigInt& MultiPoly::leading_coefficient() const {
    if (terms_.empty())
        throw DomainError("zero_polynomial", "leading term of the zero polynomial");
    return terms_.rbegin()->second;
}

std::set<std::string, VarNameLess> MultiPoly::variables() const {
    std::set<std::string, VarNameLess> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& f : m.factors())
            out.insert(f.first);
    }
    return out;
}

std::uint32_t MultiPoly::degree_in(std::string_view var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.exponent(var));
    return d;
}

std::uint32_t MultiPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.total_degree());
    return d;
}

void MultiPoly::add_term(Monomial m, const BigInt& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    return a.multiply_if(b, [](const Monomial&) { return true; });
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result(1L);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U)
            result *= base;
        exponent >>= 1U;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero())
        throw DomainError("division_by_zero", "polynomial division by zero");
    MultiPoly quotient;
    MultiPoly rem = *this;
    const Monomial& lm = divisor.leading_monomial();
    const BigInt& lc = divisor.leading_coefficient();
    while (!rem.is_zero()) {
        auto m = rem.leading_monomial().divide(lm);
        if (!m)
            return std::nullopt;
        const BigInt& rc = rem.leading_coefficient();
        if (!mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t()))
            return std::nullopt;
        BigInt c = rc / lc;
        MultiPoly step = term(*m, c);
        rem -= step * divisor;
        quotient += step;
    }
    return quotient;
}

BigInt MultiPoly::content() const {
    BigInt g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Monomial MultiPoly::monomial_content() const {
    if (terms_.empty())
        return Monomial();
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        g = g.gcd(m);
        if (g.is_one())
            break;
    }
    return g;
}

MultiPoly MultiPoly::divide_by_monomial(const Monomial& m) const {
    MultiPoly out;
    for (const auto& [mon, c] : terms_) {
        auto q = mon.divide(m);
        if (!q)
            throw DomainError("inexact_division", "monomial does not divide polynomial");
        out.terms_.emplace(std::move(*q), c);
    }
    return out;
}

MultiPoly MultiPoly::divide_by_integer(const BigInt& d) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw DomainError("inexact_division", "integer does not divide polynomial");
        out.terms_.emplace(m, c / d);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
    std::map<std::pair<std::string, std::uint32_t>, MultiPoly> powers;
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        MultiPoly acc = term(Monomial(), c);
        std::vector<Monomial::Factor> kept;
        for (const auto& [v, e] : m.factors()) {
            auto it = values.find(v);
            if (it == values.end()) {
                kept.emplace_back(v, e);
                continue;
            }
            auto key = std::make_pair(v, e);
            auto pit = powers.find(key);
            if (pit == powers.end())
                pit = powers.emplace(key, it->second.pow(e)).first;
            acc *= pit->second;
        }
        if (!kept.empty())
            acc *= term(Monomial(std::move(kept)), BigInt(1));
        out += acc;
    }
    return out;
}

BigRational MultiPoly::evaluate(const std::map<std::string, BigRational>& values) const {
    BigRational sum = 0;
    for (const auto& [m, c] : terms_) {
        BigRational t(c);
        for (const auto& [v, e] : m.factors()) {
            auto it = values.find(v);
            if (it == values.end())
                throw DomainError("missing_variable", "no value assigned to variable " + v);
            BigRational p = 1;
            for (std::uint32_t k = 0; k < e; ++k)
                p *= it->second;
            t *= p;
        }
        sum += t;
    }
    return sum;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        BigInt c = it->second;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (first) {
            if (negative)
                out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            out << c.get_str();
        } else {
            if (c != 1)
                out << c.get_str() << '*';
            out << m.to_string();
        }
    }
    return out.str();
}

} // namespace lz
