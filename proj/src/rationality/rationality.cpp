// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/rationality/rationality.hpp"

#include "lz/error.hpp"
#include "lz/rationality/determinant.hpp"

#include <algorithm>

namespace lz::rational {

namespace {

Ring rationals() { return Ring::fraction(Ring::integers()); }

Ring field_of(const Ring& ring) {
    switch (ring.kind()) {
    case RingKind::Fraction:
        return ring;
    case RingKind::Integers:
    case RingKind::Poly:
        return Ring::fraction(ring);
    case RingKind::SquareZero:
        break;
    }
    throw DomainError("not_a_field", "no fraction field for " + ring.describe());
}

TruncSeries lift(const TruncSeries& f, const Ring& field) {
    if (f.ring() == field)
        return f;
    return TruncSeries(field, f.coeffs());
}

// Solves A x = b over a field; nullopt when inconsistent. Free unknowns are
// set to zero.
std::optional<std::vector<Elem>> solve_linear(const Ring& field, std::vector<std::vector<Elem>> a,
                                              std::vector<Elem> b, std::size_t unknowns) {
    std::size_t rows = a.size();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && field.is_zero(a[p][c]))
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Elem inv = *field.inverse(a[r][c]);
        for (std::size_t j = c; j < unknowns; ++j)
            a[r][j] = field.normalized(field.mul(a[r][j], inv));
        b[r] = field.normalized(field.mul(b[r], inv));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || field.is_zero(a[i][c]))
                continue;
            Elem factor = a[i][c];
            for (std::size_t j = c; j < unknowns; ++j)
                a[i][j] = field.normalized(field.sub(a[i][j], field.mul(factor, a[r][j])));
            b[i] = field.normalized(field.sub(b[i], field.mul(factor, b[r])));
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (!field.is_zero(b[i]))
            return std::nullopt;
    }
    std::vector<Elem> x(unknowns, field.zero());
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_cols[i]] = b[i];
    return x;
}

std::vector<Elem> normalized_all(const Ring& ring, std::vector<Elem> v) {
    for (auto& e : v)
        e = ring.normalized(e);
    return v;
}

bool group_parts_ok(const MultiPoly& num, const MultiPoly& den) {
    auto ok = [](const MultiPoly& p) {
        if (p.is_zero())
            return false;
        return p.divide_by_monomial(p.monomial_content()).constant_term() == 1;
    };
    return ok(num) && ok(den);
}

} // namespace

HankelReport hankel_test(const TruncSeries& f, std::size_t m_max, std::size_t offset_max) {
    std::size_t p = f.precision();
    if (p < offset_max + 2 * m_max + 1) {
        throw PrecisionError("hankel test with m_max " + std::to_string(m_max) + " and offset_max " +
                             std::to_string(offset_max) + " needs precision " +
                             std::to_string(offset_max + 2 * m_max + 1) + ", have " +
                             std::to_string(p));
    }
    const Ring& ring = f.ring();
    HankelReport report;
    report.ring = ring;
    report.precision = p;
    report.m_max = m_max;
    report.offset_max = offset_max;
    report.cells.resize(m_max + 1);
    for (std::size_t m = 0; m <= m_max; ++m) {
        for (std::size_t i = 0; i + 2 * m < p; ++i) {
            Matrix mat(m + 1, std::vector<Elem>(m + 1));
            for (std::size_t j = 0; j <= m; ++j) {
                for (std::size_t k = 0; k <= m; ++k)
                    mat[j][k] = f[i + j + k];
            }
            HankelCell cell;
            cell.i = i;
            cell.det = ring.normalized(determinant(ring, mat));
            bool diagonal_nonzero = true;
            Monomial diag;
            for (std::size_t j = 0; j <= m; ++j) {
                const Elem& a = f[i + 2 * j];
                if (a.num.is_zero()) {
                    diagonal_nonzero = false;
                    break;
                }
                diag = diag * a.num.leading_monomial();
            }
            if (diagonal_nonzero && cell.det.den.is_one()) {
                cell.diagonal_monomial = diag;
                cell.diagonal_coefficient = cell.det.num.coefficient(diag);
            }
            report.cells[m].push_back(std::move(cell));
        }
    }
    for (std::size_t m = 0; m <= m_max && !report.window; ++m) {
        const auto& row = report.cells[m];
        std::size_t n = 0;
        for (const auto& cell : row) {
            if (!ring.is_zero(cell.det))
                n = cell.i;
        }
        std::size_t last = row.empty() ? 0 : row.back().i;
        if (n <= offset_max && n < last)
            report.window = {m, n};
    }
    return report;
}

std::string to_string(Uniqueness u) {
    switch (u) {
    case Uniqueness::Certified:
        return "certified";
    case Uniqueness::Fails:
        return "fails";
    case Uniqueness::NotCertified:
        return "not_certified";
    }
    return "not_certified";
}

GlobalReport verify_global(const TruncSeries& f, const RingPoly& g, const RingPoly& h) {
    const Ring& ring = f.ring();
    if (g.ring != ring || h.ring != ring)
        throw RingMismatch("polynomials and series live over different rings");
    long p = static_cast<long>(f.precision());
    if (g.degree() >= p || h.degree() >= p) {
        throw PrecisionError("verify_global needs precision above deg g and deg h, have " +
                             std::to_string(p));
    }
    GlobalReport report;
    report.checked_to = f.precision();
    TruncSeries lhs = series_mul(f, g.as_series(f.precision()));
    report.equation_holds = series_eq(lhs, h.as_series(f.precision()));
    if (g.is_zero()) {
        report.uniqueness = Uniqueness::Fails;
        report.annihilator = ring.one();
        report.reason = "g is zero";
        return report;
    }
    switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::Poly:
    case RingKind::Fraction:
        report.uniqueness = Uniqueness::Certified;
        report.reason = "nonzero coefficient of g in an integral domain";
        break;
    case RingKind::SquareZero: {
        bool unit_part = std::any_of(g.coeffs.begin(), g.coeffs.end(), [](const Elem& b) {
            return b.num.constant_term() != 0;
        });
        if (unit_part) {
            report.uniqueness = Uniqueness::Certified;
            report.reason = "a coefficient of g has nonzero constant term";
            break;
        }
        std::set<std::string, VarNameLess> vars;
        for (const auto& b : g.coeffs) {
            auto v = b.num.variables();
            vars.insert(v.begin(), v.end());
        }
        MultiPoly witness(1L);
        for (const auto& v : vars)
            witness *= MultiPoly::variable(v);
        report.uniqueness = Uniqueness::Fails;
        report.annihilator = ring.from_poly(witness);
        report.reason = "every coefficient of g lies in the augmentation ideal";
        break;
    }
    }
    return report;
}

PadeResult pade_reconstruct(const TruncSeries& input, std::size_t d) {
    Ring field = field_of(input.ring());
    TruncSeries f = lift(input, field);
    std::size_t p = f.precision();
    if (p < 2 * d + 2) {
        throw PrecisionError("underdetermined window: denominator degree " + std::to_string(d) +
                             " needs precision " + std::to_string(2 * d + 2) + ", have " +
                             std::to_string(p));
    }
    PadeResult result;
    result.requested_degree = d;
    result.numerator_bound = (p - 2) / 2 - d;
    std::size_t nh = result.numerator_bound;
    for (std::size_t dd = 0; dd <= d; ++dd) {
        std::vector<std::vector<Elem>> a;
        std::vector<Elem> b;
        for (std::size_t k = nh + 1; k < p; ++k) {
            std::vector<Elem> row;
            for (std::size_t j = 1; j <= dd; ++j)
                row.push_back(k >= j ? f[k - j] : field.zero());
            a.push_back(std::move(row));
            b.push_back(field.neg(f[k]));
        }
        auto x = solve_linear(field, std::move(a), std::move(b), dd);
        if (!x)
            continue;
        std::vector<Elem> g{field.one()};
        g.insert(g.end(), x->begin(), x->end());
        TruncSeries prod = series_mul(f, TruncSeries::from_poly(field, g, p));
        std::vector<Elem> h(prod.coeffs().begin(), prod.coeffs().begin() + static_cast<long>(nh + 1));
        result.found = true;
        result.den = RingPoly(field, normalized_all(field, std::move(g)));
        result.num = RingPoly(field, normalized_all(field, std::move(h)));
        return result;
    }
    return result;
}

TruncSeries apply_measure(const TruncSeries& f, const Measure& measure) {
    const Ring& ring = f.ring();
    if (ring.kind() == RingKind::SquareZero) {
        for (const auto& [var, value] : measure.values) {
            if (value != 0 && ring.has_var(var))
                throw DomainError("not_a_homomorphism", "square-zero variable " + var +
                                                            " must map to 0 in a field");
        }
        if (measure.default_value && *measure.default_value != 0)
            throw DomainError("not_a_homomorphism",
                              "square-zero variables must map to 0 in a field");
    }
    Ring q = rationals();
    std::vector<Elem> out;
    out.reserve(f.precision());
    for (const auto& a : f.coeffs()) {
        std::map<std::string, BigRational> values;
        auto collect = [&](const MultiPoly& p) {
            for (const auto& v : p.variables()) {
                auto it = measure.values.find(v);
                if (it != measure.values.end())
                    values[v] = it->second;
                else if (measure.default_value)
                    values[v] = *measure.default_value;
                else
                    throw DomainError("missing_variable",
                                      "measure " + measure.name + " has no value for " + v);
            }
        };
        collect(a.num);
        collect(a.den);
        BigRational v = ring.evaluate(a, values);
        out.emplace_back(MultiPoly(BigInt(v.get_num())), MultiPoly(BigInt(v.get_den())));
    }
    return TruncSeries(q, std::move(out));
}

PointwiseReport pointwise_test(const TruncSeries& f, const std::vector<Measure>& measures,
                               std::size_t d_max) {
    PointwiseReport report;
    report.all_rational = true;
    for (const auto& m : measures) {
        PointwiseVerdict v;
        v.measure = m.name;
        v.image = apply_measure(f, m);
        v.pade = pade_reconstruct(v.image, d_max);
        report.all_rational = report.all_rational && v.pade.found;
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

bool is_group_element(const Ring& ring, const Elem& a) {
    if (a.num.is_zero())
        return false;
    if (group_parts_ok(a.num, a.den))
        return true;
    return ring.kind() == RingKind::Fraction && group_parts_ok(-a.num, -a.den);
}

GroupSeries::GroupSeries(const Ring& ring, std::vector<std::optional<Elem>> coeffs)
    : ring_(field_of(ring)), coeffs_(std::move(coeffs)) {
    if (ring.kind() == RingKind::Fraction && ring.base().kind() == RingKind::SquareZero)
        throw DomainError("invalid_ring", "group series need a polynomial ring");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        auto& c = coeffs_[i];
        if (!c)
            continue;
        ring_.validate(*c);
        if (ring_.is_zero(*c)) {
            c.reset();
            continue;
        }
        if (!is_group_element(ring_, ring_.normalized(*c))) {
            throw DomainError("not_a_group_element",
                              "coefficient " + std::to_string(i) + " (" + ring_.to_string(*c) +
                                  ") is not a monomial times a ratio of constant-term-1 "
                                  "polynomials");
        }
        c = ring_.normalized(*c);
    }
}

GroupSeries GroupSeries::from_series(const TruncSeries& f) {
    std::vector<std::optional<Elem>> coeffs;
    for (const auto& a : f.coeffs()) {
        if (a.num.is_zero())
            coeffs.emplace_back(std::nullopt);
        else
            coeffs.emplace_back(a);
    }
    return GroupSeries(f.ring(), std::move(coeffs));
}

TruncSeries GroupSeries::as_series() const {
    std::vector<Elem> out;
    for (const auto& c : coeffs_)
        out.push_back(c ? *c : ring_.zero());
    return TruncSeries(ring_, std::move(out));
}

std::size_t periodic_required_length(std::size_t n_max, std::size_t i0_max) {
    return i0_max + 3 * n_max + 1;
}

PeriodicResult periodic_ratio_test(const GroupSeries& f, std::size_t n_max, std::size_t i0_max) {
    if (n_max == 0)
        throw DomainError("invalid_argument", "n_max must be at least 1");
    std::size_t need = periodic_required_length(n_max, i0_max);
    if (f.size() < need) {
        throw PrecisionError("periodic ratio test needs " + std::to_string(need) +
                             " coefficients, have " + std::to_string(f.size()));
    }
    const Ring& ring = f.ring();
    PeriodicResult result;
    result.n_max = n_max;
    result.i0_max = i0_max;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t i0 = 0; i0 <= i0_max; ++i0) {
            std::vector<Elem> h;
            bool ok = true;
            for (std::size_t r = 1; r <= n && ok; ++r) {
                std::optional<Elem> ratio;
                for (std::size_t i = i0 + r; i + n < f.size() && ok; i += n) {
                    const auto& a = f[i];
                    const auto& b = f[i + n];
                    if (!a && !b)
                        continue;
                    if (!a || !b) {
                        ok = false;
                        break;
                    }
                    Elem q = ring.normalized(*ring.divide(*b, *a));
                    if (!ratio)
                        ratio = q;
                    else if (!ring.eq(*ratio, q))
                        ok = false;
                }
                h.push_back(ratio ? *ratio : ring.one());
            }
            if (ok) {
                result.found = true;
                result.n = n;
                result.i0 = i0;
                result.h = std::move(h);
                return result;
            }
        }
    }
    return result;
}

TruncSeries periodic_closed_form(const GroupSeries& f, const PeriodicResult& found,
                                 std::size_t precision) {
    if (!found.found)
        throw DomainError("invalid_argument", "closed form needs a period");
    const Ring& ring = f.ring();
    std::vector<Elem> out(precision, ring.zero());
    auto coeff = [&](std::size_t i) { return f[i] ? *f[i] : ring.zero(); };
    for (std::size_t i = 0; i <= found.i0 && i < precision; ++i)
        out[i] = coeff(i);
    for (std::size_t r = 1; r <= found.n; ++r) {
        std::size_t start = found.i0 + r;
        if (start >= f.size())
            break;
        Elem term = coeff(start);
        for (std::size_t i = start; i < precision; i += found.n) {
            out[i] = ring.normalized(ring.add(out[i], term));
            term = ring.mul(term, found.h[r - 1]);
        }
    }
    return TruncSeries(ring, std::move(out));
}

Json to_json(const HankelReport& r) {
    Json j;
    j["ring"] = ring_to_json(r.ring);
    j["precision"] = r.precision;
    j["m_max"] = r.m_max;
    j["offset_max"] = r.offset_max;
    Json dets = Json::array();
    for (std::size_t m = 0; m < r.cells.size(); ++m) {
        Json row;
        row["m"] = m;
        Json values = Json::array();
        Json text = Json::array();
        Json diagonal = Json::array();
        for (const auto& c : r.cells[m]) {
            values.push_back(elem_to_json(r.ring, c.det));
            text.push_back(r.ring.to_string(c.det));
            diagonal.push_back(lz::to_string(c.diagonal_coefficient));
        }
        row["values"] = std::move(values);
        row["text"] = std::move(text);
        row["diagonal_coefficients"] = std::move(diagonal);
        dets.push_back(std::move(row));
    }
    j["determinants"] = std::move(dets);
    j["verdict"] = r.window ? "vanishing window found" : "no window within bounds";
    if (r.window)
        j["window"] = Json{{"m", r.window->first}, {"n", r.window->second}};
    else
        j["window"] = nullptr;
    return j;
}

Json to_json(const GlobalReport& r, const Ring& ring) {
    Json j;
    j["holds"] = r.holds();
    j["equation_holds"] = r.equation_holds;
    j["checked_to"] = r.checked_to;
    j["uniqueness"] = to_string(r.uniqueness);
    j["reason"] = r.reason;
    if (r.annihilator)
        j["annihilator"] = ring.to_string(*r.annihilator);
    return j;
}

Json to_json(const PadeResult& r) {
    Json j;
    j["found"] = r.found;
    j["requested_degree"] = r.requested_degree;
    j["numerator_bound"] = r.numerator_bound;
    if (r.found) {
        j["den_degree"] = r.den.degree();
        j["num"] = ringpoly_to_json(r.num);
        j["den"] = ringpoly_to_json(r.den);
        j["num_text"] = r.num.to_string();
        j["den_text"] = r.den.to_string();
    }
    return j;
}

Json to_json(const PointwiseReport& r) {
    Json j;
    j["all_rational"] = r.all_rational;
    Json list = Json::array();
    for (const auto& v : r.verdicts) {
        Json e;
        e["measure"] = v.measure;
        e["image"] = v.image.to_string();
        e["pade"] = to_json(v.pade);
        list.push_back(std::move(e));
    }
    j["verdicts"] = std::move(list);
    return j;
}

Json to_json(const PeriodicResult& r, const Ring& ring) {
    Json j;
    if (r.found) {
        j["verdict"] = "PeriodFound";
        j["n"] = r.n;
        j["i0"] = r.i0;
        Json h = Json::array();
        Json text = Json::array();
        for (const auto& e : r.h) {
            h.push_back(elem_to_json(ring, e));
            text.push_back(ring.to_string(e));
        }
        j["h"] = std::move(h);
        j["h_text"] = std::move(text);
    } else {
        j["verdict"] = "NoWitnessUpTo";
        j["n_max"] = r.n_max;
        j["i0_max"] = r.i0_max;
    }
    return j;
}

Json groupseries_to_json(const GroupSeries& f) {
    Json j;
    j["ring"] = ring_to_json(f.ring());
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) {
        if (c)
            coeffs.push_back(elem_to_json(f.ring(), *c));
        else
            coeffs.push_back(nullptr);
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

GroupSeries groupseries_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("coeffs"))
        throw DomainError("invalid_json", "group series needs \"ring\" and \"coeffs\"");
    if (j.contains("precision"))
        return GroupSeries::from_series(series_from_json(j));
    Ring ring = ring_from_json(j.at("ring"));
    std::vector<std::optional<Elem>> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_null())
            coeffs.emplace_back(std::nullopt);
        else
            coeffs.emplace_back(elem_from_json(ring, c));
    }
    return GroupSeries(ring, std::move(coeffs));
}

} // namespace lz::rational
