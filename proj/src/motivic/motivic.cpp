// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/motivic/motivic.hpp"

#include "lz/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace lz::motivic {

namespace {

constexpr unsigned long kMaxParam = 100000;

ExprPtr make(VarietyKind kind, unsigned long param, ExprPtr left = nullptr, ExprPtr right = nullptr) {
    auto e = std::make_shared<VarietyExpr>();
    e->kind = kind;
    e->param = param;
    e->left = std::move(left);
    e->right = std::move(right);
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ + 1, msg); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    unsigned long integer() {
        skip();
        if (pos_ < text_.size() && text_[pos_] == '-')
            fail("negative parameter");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a nonnegative integer");
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6 || std::stoul(digits) > kMaxParam) {
            pos_ = start;
            fail("parameter too large");
        }
        return std::stoul(digits);
    }

    // Closing the argument list; a comma here means too many arguments.
    void close(const std::string& name, int arity) {
        if (peek(','))
            fail(name + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s"));
        expect(')');
    }

    ExprPtr expr() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name.empty())
            fail("expected a variety constructor");
        if (name == "point")
            return point();
        static const std::map<std::string, VarietyKind> unary{
            {"A", VarietyKind::Affine}, {"P", VarietyKind::Proj}, {"Gm", VarietyKind::Torus},
            {"Curve", VarietyKind::Curve}};
        static const std::map<std::string, VarietyKind> binary{
            {"Prod", VarietyKind::Prod}, {"Disj", VarietyKind::Disjoint}};
        static const std::map<std::string, VarietyKind> bundles{
            {"VB", VarietyKind::VectorBundle}, {"PB", VarietyKind::ProjBundle}};
        if (auto it = unary.find(name); it != unary.end()) {
            expect('(');
            unsigned long n = integer();
            close(name, 1);
            return make(it->second, n);
        }
        if (auto it = binary.find(name); it != binary.end()) {
            expect('(');
            ExprPtr a = expr();
            expect(',');
            ExprPtr b = expr();
            close(name, 2);
            return make(it->second, 0, a, b);
        }
        if (auto it = bundles.find(name); it != bundles.end()) {
            expect('(');
            ExprPtr a = expr();
            expect(',');
            unsigned long r = integer();
            close(name, 2);
            return make(it->second, r, a);
        }
        pos_ = start;
        fail("unknown constructor '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Polynomials in L as coefficient vectors, lowest degree first.
using LPoly = std::vector<BigInt>;

LPoly lpoly_trim(LPoly p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

LPoly lpoly_add(const LPoly& a, const LPoly& b) {
    LPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return lpoly_trim(out);
}

LPoly lpoly_mul(const LPoly& a, const LPoly& b) {
    if (a.empty() || b.empty())
        return {};
    LPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return lpoly_trim(out);
}

LPoly lpoly_power_of_L(unsigned long k) {
    LPoly out(k + 1);
    out[k] = 1;
    return out;
}

LPoly lpoly_proj(unsigned long n) { return LPoly(n + 1, BigInt(1)); }

Elem L_pow(unsigned long k) {
    return Elem(MultiPoly::variable("L").pow(static_cast<unsigned>(k)));
}

// zeta of a class sum a_k L^k: prod (1 - L^k t)^{-a_k}.
TruncSeries zeta_of_cellular(const Ring& ring, const LPoly& cls, std::size_t n) {
    TruncSeries out = TruncSeries::one(ring, n);
    for (std::size_t k = 0; k < cls.size(); ++k) {
        if (cls[k] == 0)
            continue;
        TruncSeries factor = TruncSeries::geometric(ring, L_pow(k), n);
        out = series_mul(out, series_pow(factor, cls[k].get_si()));
    }
    return out;
}

// prod_k f(L^k t)^{a_k}.
TruncSeries twisted_product(const TruncSeries& f, const LPoly& cls) {
    TruncSeries out = TruncSeries::one(f.ring(), f.precision());
    for (std::size_t k = 0; k < cls.size(); ++k) {
        if (cls[k] == 0)
            continue;
        TruncSeries scaled = k == 0 ? f : series_scale_arg(f, L_pow(k));
        out = series_mul(out, series_pow(scaled, cls[k].get_si()));
    }
    return out;
}

class Evaluator {
public:
    Evaluator(const MotivicContext& ctx, std::size_t n) : ctx_(ctx), n_(n) {}

    TruncSeries zeta(const VarietyExpr& e) {
        auto it = memo_.find(&e);
        if (it != memo_.end())
            return it->second;
        TruncSeries out = compute(e);
        memo_.emplace(&e, out);
        return out;
    }

private:
    TruncSeries compute(const VarietyExpr& e) {
        const Ring& ring = ctx_.ring();
        switch (e.kind) {
        case VarietyKind::Point:
        case VarietyKind::Affine:
        case VarietyKind::Proj:
            return zeta_of_cellular(ring, *cellular_class(e), n_);
        case VarietyKind::Torus: {
            // Gm^{d+1} = Gm^d x A^1 minus Gm^d.
            TruncSeries z = TruncSeries::geometric(ring, ring.one(), n_);
            for (unsigned long d = 0; d < e.param; ++d)
                z = series_mul(series_scale_arg(z, L_pow(1)), series_inverse(z));
            return z;
        }
        case VarietyKind::Curve:
            return curve_zeta(e);
        case VarietyKind::Disjoint:
            return series_mul(zeta(*e.left), zeta(*e.right));
        case VarietyKind::VectorBundle:
            return series_scale_arg(zeta(*e.left), L_pow(e.param));
        case VarietyKind::ProjBundle:
            return twisted_product(zeta(*e.left), lpoly_proj(e.param));
        case VarietyKind::Prod: {
            if (auto cls = cellular_class(*e.right))
                return twisted_product(zeta(*e.left), *cls);
            if (auto cls = cellular_class(*e.left))
                return twisted_product(zeta(*e.right), *cls);
            if (n_ > 2) {
                throw DomainError("no_closed_form",
                                  "no closed form for the zeta function of " + e.to_string() +
                                      " beyond precision 2");
            }
            std::vector<Elem> c{ring.one()};
            if (n_ > 1) {
                TruncSeries a = Evaluator(ctx_, 2).zeta(*e.left);
                TruncSeries b = Evaluator(ctx_, 2).zeta(*e.right);
                c.push_back(ring.mul(a[1], b[1]));
            }
            return TruncSeries(ring, c);
        }
        }
        throw DomainError("invalid_argument", "unknown variety kind");
    }

    TruncSeries curve_zeta(const VarietyExpr& e) {
        const Ring& ring = ctx_.ring();
        unsigned long g = e.param;
        std::vector<Elem> c;
        c.reserve(n_);
        Elem inc = ring.one();
        std::vector<std::string> sym;
        if (g > 0) {
            const CurveSymbols& s = ctx_.symbols(&e);
            sym = s.sym;
            inc = ctx_.options().increment == CurveIncrement::Jacobian ? ring.var(s.jacobian)
                                                                        : ring.var(s.sym[0]);
        }
        for (std::size_t k = 0; k < n_; ++k) {
            if (k == 0)
                c.push_back(ring.one());
            else if (k < 2 * g)
                c.push_back(ring.var(sym[k - 1]));
            else
                c.push_back(ring.add(c[k - 1], ring.mul(inc, L_pow(k - g))));
        }
        return TruncSeries(ring, std::move(c));
    }

    const MotivicContext& ctx_;
    std::size_t n_;
    std::map<const VarietyExpr*, TruncSeries> memo_;
};

// Rational functions num/den in t with ring coefficients.
struct RatFn {
    RingPoly num;
    RingPoly den;
};

RingPoly scale_poly(const RingPoly& p, unsigned long k) {
    if (k == 0)
        return p;
    std::vector<Elem> c;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        c.push_back(p.ring.mul(p.coeffs[i], L_pow(k * i)));
    return RingPoly(p.ring, c);
}

RatFn rat_mul(const RatFn& a, const RatFn& b) { return {a.num * b.num, a.den * b.den}; }

RatFn rat_pow(const RatFn& a, long k) {
    RatFn base = k < 0 ? RatFn{a.den, a.num} : a;
    RatFn out{RingPoly(a.num.ring, {a.num.ring.one()}), RingPoly(a.num.ring, {a.num.ring.one()})};
    for (long i = 0; i < std::abs(k); ++i)
        out = rat_mul(out, base);
    return out;
}

RatFn rat_twisted(const RatFn& f, const LPoly& cls) {
    const Ring& ring = f.num.ring;
    RatFn out{RingPoly(ring, {ring.one()}), RingPoly(ring, {ring.one()})};
    for (std::size_t k = 0; k < cls.size(); ++k) {
        if (cls[k] == 0)
            continue;
        RatFn scaled{scale_poly(f.num, k), scale_poly(f.den, k)};
        out = rat_mul(out, rat_pow(scaled, cls[k].get_si()));
    }
    return out;
}

std::optional<RatFn> rational_form(const MotivicContext& ctx, const VarietyExpr& e) {
    const Ring& ring = ctx.ring();
    if (auto cls = cellular_class(e)) {
        RatFn point{RingPoly(ring, {ring.one()}), RingPoly(ring, {ring.one(), ring.neg(ring.one())})};
        return rat_twisted(point, *cls);
    }
    switch (e.kind) {
    case VarietyKind::Curve: {
        unsigned long g = e.param;
        TruncSeries z = Evaluator(ctx, 2 * g + 1).zeta(e);
        RingPoly den(ring, {ring.one(), ring.neg(ring.add(ring.one(), L_pow(1))), L_pow(1)});
        TruncSeries num = series_mul(z, den.as_series(2 * g + 1));
        return RatFn{RingPoly(ring, num.coeffs()), den};
    }
    case VarietyKind::Disjoint: {
        auto a = rational_form(ctx, *e.left);
        auto b = rational_form(ctx, *e.right);
        if (!a || !b)
            return std::nullopt;
        return rat_mul(*a, *b);
    }
    case VarietyKind::VectorBundle: {
        auto a = rational_form(ctx, *e.left);
        if (!a)
            return std::nullopt;
        return RatFn{scale_poly(a->num, e.param), scale_poly(a->den, e.param)};
    }
    case VarietyKind::ProjBundle: {
        auto a = rational_form(ctx, *e.left);
        if (!a)
            return std::nullopt;
        return rat_twisted(*a, lpoly_proj(e.param));
    }
    case VarietyKind::Prod: {
        const VarietyExpr* other = nullptr;
        std::optional<LPoly> cls = cellular_class(*e.right);
        if (cls) {
            other = e.left.get();
        } else if ((cls = cellular_class(*e.left))) {
            other = e.right.get();
        } else {
            return std::nullopt;
        }
        auto a = rational_form(ctx, *other);
        if (!a)
            return std::nullopt;
        return rat_twisted(*a, *cls);
    }
    default:
        break;
    }
    return std::nullopt;
}

void collect_curves(const ExprPtr& e, std::vector<const VarietyExpr*>& out) {
    if (!e)
        return;
    if (e->kind == VarietyKind::Curve && e->param > 0 &&
        std::find(out.begin(), out.end(), e.get()) == out.end())
        out.push_back(e.get());
    collect_curves(e->left, out);
    collect_curves(e->right, out);
}

// Polynomial to precision: at least two trailing coefficients vanish.
std::optional<RingPoly> as_polynomial(const TruncSeries& f) {
    long last = -1;
    for (std::size_t i = 0; i < f.precision(); ++i) {
        if (!f.ring().is_zero(f[i]))
            last = static_cast<long>(i);
    }
    if (last + 2 >= static_cast<long>(f.precision()))
        return std::nullopt;
    return RingPoly(f.ring(), f.coeffs());
}

TruncSeries opposite_lambda(const TruncSeries& zeta) {
    return series_inverse(series_scale_arg(zeta, zeta.ring().neg(zeta.ring().one())));
}

} // namespace

std::string VarietyExpr::to_string() const {
    auto n = std::to_string(param);
    switch (kind) {
    case VarietyKind::Point:
        return "point";
    case VarietyKind::Affine:
        return "A(" + n + ")";
    case VarietyKind::Proj:
        return "P(" + n + ")";
    case VarietyKind::Torus:
        return "Gm(" + n + ")";
    case VarietyKind::Curve:
        return "Curve(" + n + ")";
    case VarietyKind::Prod:
        return "Prod(" + left->to_string() + "," + right->to_string() + ")";
    case VarietyKind::Disjoint:
        return "Disj(" + left->to_string() + "," + right->to_string() + ")";
    case VarietyKind::VectorBundle:
        return "VB(" + left->to_string() + "," + n + ")";
    case VarietyKind::ProjBundle:
        return "PB(" + left->to_string() + "," + n + ")";
    }
    return "?";
}

ExprPtr parse_variety(std::string_view text) { return Parser(text).parse(); }

ExprPtr point() { return make(VarietyKind::Point, 0); }
ExprPtr affine(unsigned long n) { return make(VarietyKind::Affine, n); }
ExprPtr proj(unsigned long n) { return make(VarietyKind::Proj, n); }
ExprPtr torus(unsigned long d) { return make(VarietyKind::Torus, d); }
ExprPtr curve(unsigned long g) { return make(VarietyKind::Curve, g); }
ExprPtr prod(ExprPtr a, ExprPtr b) { return make(VarietyKind::Prod, 0, std::move(a), std::move(b)); }
ExprPtr disjoint(ExprPtr a, ExprPtr b) {
    return make(VarietyKind::Disjoint, 0, std::move(a), std::move(b));
}
ExprPtr vector_bundle(ExprPtr base, unsigned long rank) {
    return make(VarietyKind::VectorBundle, rank, std::move(base));
}
ExprPtr proj_bundle(ExprPtr base, unsigned long rank) {
    return make(VarietyKind::ProjBundle, rank, std::move(base));
}

MotivicContext::MotivicContext(const ExprPtr& e, ZetaOptions options) : options_(options) {
    std::vector<const VarietyExpr*> curves;
    collect_curves(e, curves);
    std::vector<std::string> vars{"L"};
    for (std::size_t i = 0; i < curves.size(); ++i) {
        CurveSymbols s;
        s.genus = curves[i]->param;
        std::string tag = curves.size() == 1 ? "" : std::to_string(i + 1);
        s.jacobian = "J" + tag;
        for (unsigned long n = 1; n < 2 * s.genus; ++n)
            s.sym.push_back(curves.size() == 1 ? "c" + std::to_string(n)
                                               : "c" + tag + "_" + std::to_string(n));
        vars.push_back(s.jacobian);
        vars.insert(vars.end(), s.sym.begin(), s.sym.end());
        curves_.emplace(curves[i], std::move(s));
    }
    std::sort(vars.begin(), vars.end(), VarNameLess());
    ring_ = Ring::poly(vars);
}

const CurveSymbols& MotivicContext::symbols(const VarietyExpr* curve) const {
    auto it = curves_.find(curve);
    if (it == curves_.end())
        throw DomainError("invalid_argument", "curve not part of this expression");
    return it->second;
}

std::optional<std::vector<BigInt>> cellular_class(const VarietyExpr& e) {
    switch (e.kind) {
    case VarietyKind::Point:
        return LPoly{1};
    case VarietyKind::Affine:
        return lpoly_power_of_L(e.param);
    case VarietyKind::Proj:
        return lpoly_proj(e.param);
    case VarietyKind::Torus: {
        LPoly out{1};
        for (unsigned long i = 0; i < e.param; ++i)
            out = lpoly_mul(out, LPoly{-1, 1});
        return out;
    }
    case VarietyKind::Curve:
        if (e.param == 0)
            return lpoly_proj(1);
        return std::nullopt;
    case VarietyKind::Prod:
    case VarietyKind::Disjoint: {
        auto a = cellular_class(*e.left);
        auto b = cellular_class(*e.right);
        if (!a || !b)
            return std::nullopt;
        return e.kind == VarietyKind::Prod ? lpoly_mul(*a, *b) : lpoly_add(*a, *b);
    }
    case VarietyKind::VectorBundle:
    case VarietyKind::ProjBundle: {
        auto a = cellular_class(*e.left);
        if (!a)
            return std::nullopt;
        LPoly fiber = e.kind == VarietyKind::VectorBundle ? lpoly_power_of_L(e.param)
                                                          : lpoly_proj(e.param);
        return lpoly_mul(*a, fiber);
    }
    }
    return std::nullopt;
}

TruncSeries zeta_series(const ExprPtr& e, std::size_t n, ZetaOptions options) {
    if (n == 0)
        throw DomainError("invalid_argument", "zeta_series needs at least one term");
    MotivicContext ctx(e, options);
    return Evaluator(ctx, n).zeta(*e);
}

Elem motivic_class(const ExprPtr& e, ZetaOptions options) { return zeta_series(e, 2, options)[1]; }

RationalZeta zeta_rational(const ExprPtr& e, ZetaOptions options) {
    MotivicContext ctx(e, options);
    RationalZeta out;
    out.ring = ctx.ring();
    auto form = rational_form(ctx, *e);
    if (!form) {
        out.reason = "no closed form for " + e->to_string();
        return out;
    }
    std::size_t need = static_cast<std::size_t>(std::max(form->num.degree(), 0L) +
                                                 std::max(form->den.degree(), 0L) + 2);
    std::size_t precision = std::max<std::size_t>(need, 8);
    TruncSeries z = Evaluator(ctx, precision).zeta(*e);
    rational::GlobalReport check = rational::verify_global(z, form->den, form->num);
    if (!check.holds()) {
        throw Error("verification_failed",
                    "closed form for " + e->to_string() + " failed verification at precision " +
                        std::to_string(precision));
    }
    out.found = true;
    out.num = form->num;
    out.den = form->den;
    out.checked_to = precision;
    out.reason = "g zeta = h verified to precision " + std::to_string(precision);
    return out;
}

FinitenessReport virtual_finiteness_check(const ExprPtr& e, std::size_t n, ZetaOptions options) {
    bool supported = e->kind == VarietyKind::Point || e->kind == VarietyKind::Curve ||
                     (e->kind == VarietyKind::Proj && e->param == 1);
    if (!supported)
        throw DomainError("unsupported_constructor",
                          "virtual finiteness is checked for point, P(1) and Curve(g), not " +
                              e->to_string());
    if (n < 3)
        throw PrecisionError("virtual finiteness check needs precision at least 3");
    MotivicContext ctx(e, options);
    const Ring& ring = ctx.ring();
    TruncSeries z = Evaluator(ctx, n).zeta(*e);
    FinitenessReport report;
    report.ring = ring;
    report.lambda = opposite_lambda(z);
    if (auto p = as_polynomial(report.lambda)) {
        report.lambda_polynomial = true;
        report.lambda_degree = p->degree();
        report.witness_found = true;
        report.y_name = e->to_string();
        report.z_name = "0";
        report.y_lambda = *p;
        report.z_lambda = RingPoly(ring, {ring.one()});
        return report;
    }
    TruncSeries p1 = Evaluator(ctx, n).zeta(*proj(1));
    TruncSeries lambda_y = opposite_lambda(p1);
    TruncSeries lambda_z = series_mul(lambda_y, series_inverse(report.lambda));
    auto y = as_polynomial(lambda_y);
    auto zpoly = as_polynomial(lambda_z);
    if (y && zpoly) {
        report.witness_found = true;
        report.y_name = "P(1)";
        report.z_name = "P(1) - " + e->to_string();
        report.y_lambda = *y;
        report.z_lambda = *zpoly;
    }
    return report;
}

BigRational specialize(const Ring& ring, const Elem& c,
                       const std::map<std::string, BigRational>& assignment) {
    for (const auto& p : {c.num, c.den}) {
        for (const auto& v : p.variables()) {
            if (!assignment.count(v))
                throw DomainError("missing_variable", "no value assigned to " + v);
        }
    }
    return ring.evaluate(c, assignment);
}

TruncSeries specialize(const TruncSeries& f, const std::map<std::string, BigRational>& assignment) {
    return rational::apply_measure(f, rational::Measure{"specialization", assignment, {}});
}

} // namespace lz::motivic
