// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/measures/measures.hpp"

#include "lz/error.hpp"

#include <algorithm>

namespace lz::measures {

namespace {

BigInt json_int(const Json& j, const std::string& what) {
    if (j.is_number_integer())
        return BigInt(std::to_string(j.get<long long>()), 10);
    if (j.is_string())
        return parse_bigint(j.get<std::string>());
    throw DomainError("invalid_json", what + " must be an integer");
}

std::vector<BigInt> json_list(const Json& j, const std::string& what) {
    if (!j.is_array())
        throw DomainError("invalid_json", what + " must be a list");
    std::vector<BigInt> out;
    for (const auto& e : j)
        out.push_back(json_int(e, what));
    return out;
}

Json int_json(const BigInt& v) {
    if (v.fits_slong_p())
        return Json(v.get_si());
    return Json(lz::to_string(v));
}

std::string join(const std::vector<BigInt>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + lz::to_string(v[i]);
    return out;
}

// Known coefficient data of one sequence entry.
struct Entry {
    std::optional<MultiPoly> exact;
    std::optional<BigInt> s1;
    BigInt leading;
    long degree = 0;
};

std::vector<Entry> full_entries(const MeasureSequence& seq) {
    std::vector<Entry> out;
    for (const auto& g : seq.entries) {
        Entry e;
        e.exact = g.to_poly();
        e.s1 = g.dim(1);
        e.degree = g.degree();
        e.leading = e.degree >= 0 ? g.dims().back() : BigInt(0);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Entry> partial_entries(const SurfaceData& s, unsigned n, std::size_t range) {
    BigInt pn = s.plurigenus(n);
    auto h1 = s.h1n.find(n);
    std::vector<Entry> out;
    for (std::size_t m = 0; m <= range; ++m) {
        Entry e;
        if (m == 0) {
            e.exact = MultiPoly(1L);
            e.s1 = 0;
            e.leading = 1;
            e.degree = 0;
        } else {
            if (h1 != s.h1n.end())
                e.s1 = h1->second;
            e.leading = hilb_leading_term(s, n, m);
            e.degree = static_cast<long>(2 * m);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<std::string> refute_at(const std::vector<Entry>& g, std::size_t i, std::size_t n) {
    const Entry& a = g[i];
    const Entry& b = g[i + n];
    const Entry& c = g[i + 2 * n];
    if (a.leading != 0 && b.leading != 0 && c.leading != 0) {
        if (b.degree - a.degree != c.degree - b.degree)
            return "leading degree ratio changes";
        if (b.leading * b.leading != a.leading * c.leading)
            return "leading coefficient ratio changes";
    }
    if (a.exact && b.exact && c.exact && (*b.exact) * (*b.exact) != (*a.exact) * (*c.exact))
        return "exact ratio changes";
    return std::nullopt;
}

GrowthCertificate certify(const std::vector<Entry>& g, std::size_t n_max, std::size_t i0_max,
                          std::size_t bounded_degree) {
    GrowthCertificate cert;
    cert.range = g.size() - 1;
    cert.bounded_degree = bounded_degree;
    cert.constant_terms_one = true;
    for (const auto& e : g) {
        if (e.exact && e.exact->constant_term() != 1)
            cert.constant_terms_one = false;
        cert.leading.push_back(e.leading);
        cert.leading_degrees.push_back(e.degree);
        if (bounded_degree == 0)
            cert.bounded_track.emplace_back(BigInt(1));
        else
            cert.bounded_track.push_back(e.s1);
    }
    cert.track_bounded = true;
    for (std::size_t m = 2; m < g.size(); ++m) {
        if (!cert.bounded_track[m] || !cert.bounded_track[1] ||
            *cert.bounded_track[m] != *cert.bounded_track[1])
            cert.track_bounded = false;
    }
    cert.leading_growing = true;
    for (std::size_t m = 1; m < g.size(); ++m) {
        if (g[m].leading == 0 || g[m].degree <= g[m - 1].degree || g[m].leading < g[m - 1].leading)
            cert.leading_growing = false;
    }
    std::size_t last = g.size() - 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t i0 = 0; i0 <= i0_max; ++i0) {
            std::optional<Refutation> found;
            for (std::size_t r = 1; r <= n && !found; ++r) {
                for (std::size_t i = i0 + r; i + 2 * n <= last && !found; i += n) {
                    if (auto why = refute_at(g, i, n))
                        found = Refutation{n, i0, r, i, *why};
                }
            }
            if (found)
                cert.refutations.push_back(*found);
            else
                cert.unrefuted.emplace_back(n, i0);
        }
    }
    cert.established = cert.constant_terms_one && cert.track_bounded && cert.leading_growing &&
                       cert.unrefuted.empty();
    if (cert.established) {
        cert.statement = "constant terms 1, s^" + std::to_string(bounded_degree) +
                         " track bounded, leading track growing: no periodic ratio with n <= " +
                         std::to_string(n_max) + ", i0 <= " + std::to_string(i0_max) +
                         " is consistent with m <= " + std::to_string(cert.range);
    } else {
        cert.statement = "certificate not established on m <= " + std::to_string(cert.range);
    }
    return cert;
}

} // namespace

void SurfaceData::validate() const {
    if (q < 0 || pg < 0)
        throw DomainError("invalid_surface", "q and pg must be nonnegative");
    for (std::size_t i = 0; i < plurigenera.size(); ++i) {
        if (plurigenera[i] < 0)
            throw DomainError("invalid_surface", "plurigenus P_" + std::to_string(i + 1) +
                                                     " must be nonnegative");
    }
    if (!plurigenera.empty() && plurigenera[0] != pg)
        throw DomainError("invalid_surface", "P_1 must equal pg");
    for (const auto& [n, v] : h1n) {
        if (n < 2)
            throw DomainError("invalid_surface", "h1n is indexed from n = 2");
    }
}

BigInt SurfaceData::plurigenus(unsigned n) const {
    if (n == 1)
        return pg;
    if (n == 0 || n > plurigenera.size())
        throw DomainError("missing_data", "plurigenus P_" + std::to_string(n) + " not supplied");
    return plurigenera[n - 1];
}

std::string SurfaceData::to_string() const {
    std::string out = "q=" + lz::to_string(q) + ",pg=" + lz::to_string(pg);
    if (!plurigenera.empty())
        out += ",P=" + join(plurigenera);
    if (!h1n.empty()) {
        std::vector<BigInt> v;
        for (unsigned n = 2; h1n.count(n); ++n)
            v.push_back(h1n.at(n));
        out += ",h1=" + join(v);
    }
    return out;
}

SurfaceData parse_surface(std::string_view text) {
    SurfaceData s;
    bool have_q = false;
    bool have_pg = false;
    std::string key;
    unsigned next_h1 = 2;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        std::size_t tok_start = pos;
        while (!tok.empty() && tok.front() == ' ') {
            tok.remove_prefix(1);
            ++tok_start;
        }
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        std::string_view value = tok;
        std::size_t value_start = tok_start;
        auto eq = tok.find('=');
        if (eq != std::string_view::npos) {
            key = std::string(tok.substr(0, eq));
            value = tok.substr(eq + 1);
            value_start = tok_start + eq + 1;
            if (key != "q" && key != "pg" && key != "P" && key != "h1")
                throw ParseError(tok_start + 1, "unknown surface field '" + key + "'");
        } else if (key != "P" && key != "h1") {
            throw ParseError(tok_start + 1, "expected field=value");
        }
        BigInt v;
        try {
            v = parse_bigint(value);
        } catch (const ParseError& e) {
            throw ParseError(value_start + e.offset(), e.bare_message());
        }
        if (key == "q") {
            s.q = v;
            have_q = true;
        } else if (key == "pg") {
            s.pg = v;
            have_pg = true;
        } else if (key == "P") {
            s.plurigenera.push_back(v);
        } else {
            s.h1n[next_h1++] = v;
        }
        pos = end + 1;
    }
    if (!have_q || !have_pg)
        throw ParseError(text.size() + 1, "surface data needs q and pg");
    if (s.plurigenera.empty())
        s.plurigenera.push_back(s.pg);
    s.validate();
    return s;
}

SurfaceData surface_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("pg"))
        throw DomainError("invalid_json", "surface data needs \"q\" and \"pg\"");
    SurfaceData s;
    s.q = json_int(j.at("q"), "q");
    s.pg = json_int(j.at("pg"), "pg");
    if (j.contains("P"))
        s.plurigenera = json_list(j.at("P"), "P");
    if (s.plurigenera.empty())
        s.plurigenera.push_back(s.pg);
    if (j.contains("h1")) {
        unsigned n = 2;
        for (const auto& v : json_list(j.at("h1"), "h1"))
            s.h1n[n++] = v;
    }
    s.validate();
    return s;
}

Json surface_to_json(const SurfaceData& s) {
    Json j;
    j["q"] = int_json(s.q);
    j["pg"] = int_json(s.pg);
    Json p = Json::array();
    for (const auto& v : s.plurigenera)
        p.push_back(int_json(v));
    j["P"] = std::move(p);
    Json h = Json::array();
    for (unsigned n = 2; s.h1n.count(n); ++n)
        h.push_back(int_json(s.h1n.at(n)));
    j["h1"] = std::move(h);
    return j;
}

GradedSpace mu(const SurfaceData& s, unsigned n) {
    if (n == 0)
        throw DomainError("invalid_argument", "measure index starts at 1");
    if (n == 1)
        return GradedSpace({BigInt(1), s.q, s.pg});
    BigInt pn = s.plurigenus(n);
    auto it = s.h1n.find(n);
    if (it == s.h1n.end())
        throw DomainError("missing_data", "h1n for n = " + std::to_string(n) + " not supplied");
    return GradedSpace({BigInt(1), it->second, pn});
}

MeasureSequence mu_sym_sequence(const SurfaceData& s, std::size_t max_m) {
    MeasureSequence seq;
    seq.entries = lambda::graded_lambda_series(mu(s, 1), static_cast<std::uint32_t>(max_m + 1));
    seq.entries.resize(max_m + 1);
    return seq;
}

BigInt hilb_leading_term(const SurfaceData& s, unsigned n, std::size_t m) {
    BigInt pn = s.plurigenus(n);
    return binomial(pn + BigInt(m) - 1, m);
}

BoundednessReport boundedness_check(const MeasureSequence& seq, std::size_t degree) {
    if (seq.entries.empty())
        throw DomainError("invalid_argument", "empty measure sequence");
    BoundednessReport r;
    r.degree = degree;
    for (const auto& g : seq.entries) {
        r.track.push_back(g.dim(degree));
        r.leading.push_back(g.degree() >= 0 ? g.dims().back() : BigInt(0));
        r.leading_degrees.push_back(g.degree());
    }
    r.max = *std::max_element(r.track.begin(), r.track.end());
    if (seq.entries.size() > 1) {
        r.s1_value = seq.entries[1].dim(1);
        r.s1_constant = std::all_of(seq.entries.begin() + 1, seq.entries.end(),
                                    [&](const GradedSpace& g) { return g.dim(1) == r.s1_value; });
    }
    r.leading_growing = true;
    r.leading_coefficient_strict = true;
    for (std::size_t m = 1; m < seq.entries.size(); ++m) {
        if (r.leading_degrees[m] <= r.leading_degrees[m - 1] || r.leading[m] < r.leading[m - 1])
            r.leading_growing = false;
        if (r.leading[m] <= r.leading[m - 1])
            r.leading_coefficient_strict = false;
    }
    return r;
}

std::string to_string(HarnessVerdict v) {
    switch (v) {
    case HarnessVerdict::NoWitness:
        return "NoWitnessUpTo";
    case HarnessVerdict::PeriodFound:
        return "PeriodFound";
    case HarnessVerdict::Inapplicable:
        return "inapplicable";
    case HarnessVerdict::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

HarnessReport irrationality_harness(const SurfaceData& s, unsigned n, std::size_t max_m,
                                    std::size_t n_max, std::size_t i0_max) {
    s.validate();
    if (n == 0 || n_max == 0)
        throw DomainError("invalid_argument", "measure index and n_max start at 1");
    HarnessReport report;
    report.n = n;
    report.requested_m = max_m;
    report.range = std::max(max_m, rational::periodic_required_length(n_max, i0_max) - 1);
    if (report.range > max_m) {
        report.notes.push_back("range extended from m <= " + std::to_string(max_m) + " to m <= " +
                               std::to_string(report.range) + " to cover every candidate period");
    }
    bool all_zero = s.pg == 0 && std::all_of(s.plurigenera.begin(), s.plurigenera.end(),
                                             [](const BigInt& p) { return p == 0; });
    if (all_zero) {
        report.verdict = HarnessVerdict::Inapplicable;
        report.full_model = true;
        report.notes.push_back("every supplied plurigenus vanishes");
        MeasureSequence seq = mu_sym_sequence(s, report.range);
        Ring zs = Ring::poly({"s"});
        TruncSeries f = TruncSeries::generate(zs, seq.entries.size(), [&](std::size_t m) {
            return Elem(seq.entries[m].to_poly());
        });
        std::size_t d = std::min<std::size_t>(2, (f.precision() - 2) / 2);
        report.rational = rational::pade_reconstruct(f, d);
        return report;
    }
    std::vector<Entry> entries;
    std::size_t bounded_degree = 1;
    if (n == 1) {
        report.full_model = true;
        MeasureSequence seq = mu_sym_sequence(s, report.range);
        entries = full_entries(seq);
        Ring zs = Ring::poly({"s"});
        TruncSeries f = TruncSeries::generate(zs, seq.entries.size(), [&](std::size_t m) {
            return Elem(seq.entries[m].to_poly());
        });
        report.periodic = rational::periodic_ratio_test(rational::GroupSeries::from_series(f),
                                                        n_max, i0_max);
    } else {
        report.notes.push_back("partial model: only the constant, s^1 and leading tracks of "
                               "mu_n(Sym^m X) are known for n >= 2");
        if (s.plurigenus(n) == 0)
            report.notes.push_back("P_" + std::to_string(n) + " = 0: no leading track");
        if (!s.h1n.count(n)) {
            bounded_degree = 0;
            report.notes.push_back("h1n not supplied: s^1 track unknown");
        }
        entries = partial_entries(s, n, report.range);
    }
    report.certificate = certify(entries, n_max, i0_max, bounded_degree);
    if (report.periodic) {
        report.verdict =
            report.periodic->found ? HarnessVerdict::PeriodFound : HarnessVerdict::NoWitness;
    } else {
        report.verdict = report.certificate.unrefuted.empty() ? HarnessVerdict::NoWitness
                                                              : HarnessVerdict::Inconclusive;
    }
    return report;
}

Json to_json(const MeasureSequence& seq) {
    Json j = Json::array();
    for (std::size_t m = 0; m < seq.entries.size(); ++m) {
        Json dims = Json::array();
        for (const auto& d : seq.entries[m].dims())
            dims.push_back(int_json(d));
        j.push_back(Json{{"m", m}, {"dims", dims}, {"text", seq.entries[m].to_string()}});
    }
    return j;
}

Json to_json(const BoundednessReport& r) {
    Json j;
    j["degree"] = r.degree;
    Json track = Json::array();
    for (const auto& v : r.track)
        track.push_back(int_json(v));
    j["track"] = std::move(track);
    j["max"] = int_json(r.max);
    j["s1_constant"] = r.s1_constant;
    j["s1_value"] = int_json(r.s1_value);
    Json lead = Json::array();
    for (std::size_t m = 0; m < r.leading.size(); ++m)
        lead.push_back(Json{{"coefficient", int_json(r.leading[m])}, {"degree", r.leading_degrees[m]}});
    j["leading"] = std::move(lead);
    j["leading_growing"] = r.leading_growing;
    j["leading_coefficient_strict"] = r.leading_coefficient_strict;
    return j;
}

Json to_json(const HarnessReport& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["n"] = r.n;
    j["requested_m"] = r.requested_m;
    j["range"] = r.range;
    j["model"] = r.full_model ? "full" : "partial";
    if (r.periodic) {
        Ring fr = Ring::fraction(Ring::poly({"s"}));
        j["periodic"] = rational::to_json(*r.periodic, fr);
    }
    if (r.verdict != HarnessVerdict::Inapplicable) {
        const auto& c = r.certificate;
        Json cert;
        cert["established"] = c.established;
        cert["statement"] = c.statement;
        cert["constant_terms_one"] = c.constant_terms_one;
        cert["bounded_degree"] = c.bounded_degree;
        cert["track_bounded"] = c.track_bounded;
        cert["leading_growing"] = c.leading_growing;
        Json lead = Json::array();
        for (std::size_t m = 0; m < c.leading.size(); ++m)
            lead.push_back(Json{{"coefficient", int_json(c.leading[m])}, {"degree", c.leading_degrees[m]}});
        cert["leading"] = std::move(lead);
        Json refs = Json::array();
        for (const auto& f : c.refutations)
            refs.push_back(Json{{"n", f.n}, {"i0", f.i0}, {"class", f.r}, {"i", f.i}, {"reason", f.reason}});
        cert["refutations"] = std::move(refs);
        Json open = Json::array();
        for (const auto& [n, i0] : c.unrefuted)
            open.push_back(Json{{"n", n}, {"i0", i0}});
        cert["unrefuted"] = std::move(open);
        j["certificate"] = std::move(cert);
    }
    if (r.rational)
        j["rational"] = rational::to_json(*r.rational);
    j["notes"] = r.notes;
    return j;
}

} // namespace lz::measures
