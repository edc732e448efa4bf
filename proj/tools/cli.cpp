// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "cli.hpp"

#include "lz/error.hpp"
#include "lz/lambda/lambda.hpp"
#include "lz/lambda/witt.hpp"
#include "lz/measures/measures.hpp"
#include "lz/motivic/motivic.hpp"
#include "lz/rationality/rationality.hpp"
#include "lz/symfunc/cache.hpp"
#include "lz/symfunc/symfunc.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace lz::cli {

namespace {

constexpr const char* kGrammar =
    "Variety expressions:\n"
    "  expr := point | A(n) | P(n) | Gm(d) | Curve(g)\n"
    "        | Prod(expr,expr) | Disj(expr,expr) | VB(expr,r) | PB(expr,r)\n";

struct Options {
    std::string format = "json";
    std::uint64_t seed = 20260101;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--seed", o.seed, "Seed for randomized checks");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("io_error", "cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DomainError("invalid_json", path + ": " + e.what());
    }
}

Json int_json(const BigInt& v) {
    if (v.fits_slong_p())
        return Json(v.get_si());
    return Json(lz::to_string(v));
}

Json elem_texts(const Ring& r, const std::vector<Elem>& v) {
    Json out = Json::array();
    for (const auto& c : v)
        out.push_back(r.to_string(r.normalized(c)));
    return out;
}

TruncSeries truncate_to(const TruncSeries& f, std::optional<std::size_t> terms) {
    if (!terms)
        return f;
    if (*terms > f.precision())
        throw PrecisionError("--terms " + std::to_string(*terms) + " exceeds the " +
                             std::to_string(f.precision()) + " known coefficients");
    return f.truncated(*terms);
}

// Poly objects {"terms": [...]} and fractions {"num", "den"} print as text.
std::optional<std::string> inline_text(const Json& j) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return std::string("null");
    if (j.is_primitive())
        return j.dump();
    if (j.is_object() && j.size() == 1 && j.contains("terms")) {
        try {
            return poly_from_json(j).to_string();
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den")) {
        auto n = inline_text(j["num"]);
        auto d = inline_text(j["den"]);
        if (n && d)
            return *d == "1" ? *n : "(" + *n + ")/(" + *d + ")";
    }
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            auto t = inline_text(j[i]);
            if (!t || j[i].is_array())
                return std::nullopt;
            s += (i ? ", " : "") + *t;
        }
        s += "]";
        if (s.size() <= 100)
            return s;
    }
    return std::nullopt;
}

void render_text(const Json& j, std::ostream& out, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (auto t = inline_text(v)) {
                out << pad << k << ": " << *t << '\n';
            } else {
                out << pad << k << ":\n";
                render_text(v, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (auto t = inline_text(v)) {
                out << pad << "- " << *t << '\n';
            } else {
                out << pad << "-\n";
                render_text(v, out, indent + 2);
            }
        }
    } else {
        out << pad << *inline_text(j) << '\n';
    }
}

void emit(const Json& report, const Options& o, std::ostream& out) {
    if (o.format == "json")
        out << report.dump(2) << '\n';
    else
        render_text(report, out, 0);
}

std::map<std::string, BigRational> parse_assignment(const std::string& text) {
    std::map<std::string, BigRational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError("--specialize", "expected var=value, got '" + item + "'");
        BigRational v;
        if (v.set_str(item.substr(eq + 1), 10) != 0 || v.get_den() == 0)
            throw CLI::ValidationError("--specialize", "bad rational '" + item.substr(eq + 1) + "'");
        v.canonicalize();
        out[item.substr(0, eq)] = v;
    }
    return out;
}

// zeta

struct ZetaArgs {
    std::string expr;
    std::size_t terms = 0;
    bool rational = false;
    std::string specialize;
    std::string increment = "J";
};

Json run_zeta(const ZetaArgs& a) {
    motivic::ExprPtr e = motivic::parse_variety(a.expr);
    motivic::ZetaOptions opt;
    opt.increment = a.increment == "X" ? motivic::CurveIncrement::Curve : motivic::CurveIncrement::Jacobian;
    TruncSeries z = motivic::zeta_series(e, a.terms, opt);
    Json j;
    j["command"] = "zeta";
    j["expr"] = e->to_string();
    j["terms"] = a.terms;
    j["curve_increment"] = a.increment;
    j["ring"] = z.ring().describe();
    j["coefficients"] = elem_texts(z.ring(), z.coeffs());
    j["series"] = series_to_json(z);
    if (a.rational) {
        motivic::RationalZeta r = motivic::zeta_rational(e, opt);
        Json rj;
        rj["found"] = r.found;
        if (r.found) {
            rj["numerator"] = elem_texts(r.ring, r.num.coeffs);
            rj["denominator"] = elem_texts(r.ring, r.den.coeffs);
            rj["numerator_json"] = ringpoly_to_json(r.num);
            rj["denominator_json"] = ringpoly_to_json(r.den);
            rj["checked_to"] = r.checked_to;
        } else {
            rj["reason"] = r.reason;
        }
        j["rational"] = std::move(rj);
    }
    if (!a.specialize.empty()) {
        auto assignment = parse_assignment(a.specialize);
        TruncSeries s = motivic::specialize(z, assignment);
        Json values = Json::object();
        for (const auto& [v, q] : assignment)
            values[v] = q.get_str();
        Json coeffs = Json::array();
        for (const auto& c : s.coeffs())
            coeffs.push_back(s.ring().evaluate(c, {}).get_str());
        j["specialized"] = Json{{"assignment", values}, {"coefficients", coeffs}};
    }
    return j;
}

// hankel, pade, witness

struct SeriesArgs {
    std::string path;
    std::optional<std::size_t> terms;
    std::size_t a = 0;
    std::size_t b = 0;
};

Json run_hankel(const SeriesArgs& a) {
    TruncSeries f = truncate_to(series_from_json(read_json_file(a.path)), a.terms);
    Json j;
    j["command"] = "hankel";
    j["report"] = rational::to_json(rational::hankel_test(f, a.a, a.b));
    return j;
}

Json run_pade(const SeriesArgs& a) {
    TruncSeries f = truncate_to(series_from_json(read_json_file(a.path)), a.terms);
    rational::PadeResult p = rational::pade_reconstruct(f, a.a);
    Json j;
    j["command"] = "pade";
    j["precision"] = f.precision();
    j["report"] = rational::to_json(p);
    if (p.found) {
        j["numerator"] = elem_texts(p.num.ring, p.num.coeffs);
        j["denominator"] = elem_texts(p.den.ring, p.den.coeffs);
    }
    return j;
}

Json run_witness(const SeriesArgs& a) {
    rational::GroupSeries f = rational::groupseries_from_json(read_json_file(a.path));
    if (a.terms) {
        if (*a.terms > f.size())
            throw PrecisionError("--terms exceeds the known coefficients");
        std::vector<std::optional<Elem>> c(f.coeffs().begin(), f.coeffs().begin() + static_cast<long>(*a.terms));
        f = rational::GroupSeries(f.ring(), std::move(c));
    }
    rational::PeriodicResult r = rational::periodic_ratio_test(f, a.a, a.b);
    Json j;
    j["command"] = "witness";
    j["size"] = f.size();
    j["verdict"] = r.found ? "PeriodFound" : "NoWitnessUpTo";
    j["report"] = rational::to_json(r, f.ring());
    if (r.found) {
        TruncSeries c = rational::periodic_closed_form(f, r, f.size());
        j["closed_form"] = elem_texts(c.ring(), c.coeffs());
    }
    return j;
}

// lambda-op

struct LambdaArgs {
    std::string op;
    std::uint32_t k = 1;
    std::string path;
    std::string with;
    std::optional<std::size_t> terms;
};

Json run_lambda_op(const LambdaArgs& a) {
    TruncSeries f = truncate_to(series_from_json(read_json_file(a.path)), a.terms);
    Json j;
    j["command"] = "lambda-op";
    j["op"] = a.op;
    j["k"] = a.k;
    const Ring& r = f.ring();
    if (a.op == "lambda" || a.op == "sigma" || a.op == "psi") {
        lambda::LambdaElement x = lambda::LambdaElement::from_series(f);
        Elem value;
        if (a.op == "lambda") {
            value = x.lambda(a.k);
        } else if (a.op == "sigma") {
            if (a.k > x.order())
                throw PrecisionError("sigma^" + std::to_string(a.k) + " needs lambda data to order " +
                                     std::to_string(a.k));
            lambda::LambdaElement s = lambda::opposite_sigma(x, x.order());
            value = s.lambda(a.k);
            j["sigma_series"] = series_to_json(s.lambda_series());
        } else {
            value = lambda::adams(a.k, x);
        }
        j["value"] = r.to_string(r.normalized(value));
        j["value_json"] = elem_to_json(r, value);
        return j;
    }
    lambda::WittElement x(f);
    lambda::WittElement result = x;
    if (a.op == "witt-lambda") {
        result = lambda::witt_lambda(a.k, x);
    } else {
        if (a.with.empty())
            throw CLI::ValidationError("--with", "witt-mul needs a second series");
        lambda::WittElement y(series_from_json(read_json_file(a.with)));
        result = lambda::witt_mul(x, y);
    }
    j["coefficients"] = elem_texts(r, result.series().coeffs());
    j["series"] = series_to_json(result.series());
    return j;
}

// universal

struct UniversalArgs {
    std::string which;
    std::uint32_t n = 1;
    std::uint32_t m = 1;
    bool allow_large = false;
    std::string cache_dir;
};

Json run_universal(const UniversalArgs& a) {
    if (!a.cache_dir.empty())
        symfunc::set_cache_dir(a.cache_dir);
    bool large = a.which == "Q" ? static_cast<unsigned long>(a.m) * a.n > 10 : a.n > 8;
    if (large && !a.allow_large)
        throw DomainError("too_large", "degree cutoff exceeded (n > 8 or mn > 10); pass --allow-large");
    MultiPoly p;
    if (a.which == "P")
        p = symfunc::universal_P(a.n);
    else if (a.which == "Q")
        p = symfunc::universal_Q(a.m, a.n);
    else if (a.which == "newton")
        p = symfunc::newton_polynomial(a.n);
    else
        p = symfunc::witt_product_coeff(a.n);
    Json j;
    j["command"] = "universal";
    j["which"] = a.which;
    j["n"] = a.n;
    if (a.which == "Q")
        j["m"] = a.m;
    j["text"] = p.to_string();
    j["terms"] = p.size();
    j["polynomial"] = poly_to_json(p);
    return j;
}

// measure

struct MeasureArgs {
    std::string surface;
    std::string surface_file;
    unsigned n = 1;
    std::size_t sym_max = 0;
    bool witness = false;
    std::size_t max_period = 4;
    std::size_t max_offset = 6;
};

Json run_measure(const MeasureArgs& a) {
    if (a.surface.empty() == a.surface_file.empty())
        throw CLI::ValidationError("--surface", "give exactly one of --surface and --surface-file");
    measures::SurfaceData s = a.surface.empty() ? measures::surface_from_json(read_json_file(a.surface_file))
                                                : measures::parse_surface(a.surface);
    Json j;
    j["command"] = "measure";
    j["surface"] = measures::surface_to_json(s);
    j["n"] = a.n;
    j["sym_max"] = a.sym_max;
    if (a.n == 1) {
        measures::MeasureSequence seq = measures::mu_sym_sequence(s, a.sym_max);
        j["mu"] = measures::mu(s, 1).to_string();
        j["sequence"] = measures::to_json(seq);
        j["s1_track"] = measures::to_json(measures::boundedness_check(seq, 1));
    } else {
        Json lead = Json::array();
        for (std::size_t m = 0; m <= a.sym_max; ++m)
            lead.push_back(int_json(measures::hilb_leading_term(s, a.n, m)));
        j["plurigenus"] = int_json(s.plurigenus(a.n));
        j["leading_coefficients"] = std::move(lead);
        if (s.h1n.count(a.n))
            j["mu"] = measures::mu(s, a.n).to_string();
    }
    if (a.witness)
        j["harness"] = measures::to_json(measures::irrationality_harness(s, a.n, a.sym_max, a.max_period, a.max_offset));
    return j;
}

// suite

Json run_suite(const Options& o, int& exit_code) {
    std::vector<checks::NamedCheck> all = checks::example_checks();
    for (auto& c : cli_checks())
        all.push_back(std::move(c));
    std::size_t examples = all.size();
    for (auto& c : checks::acceptance_checks(o.seed))
        all.push_back(std::move(c));
    Json cases = Json::array();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        checks::CheckResult r = checks::run_check(all[i]);
        Json cj = checks::to_json(r);
        cj["group"] = i < examples ? "example" : "acceptance";
        cases.push_back(std::move(cj));
        if (r.passed)
            ++passed;
    }
    exit_code = passed == all.size() ? kOk : kDomainError;
    Json j;
    j["command"] = "suite";
    j["seed"] = o.seed;
    j["total"] = all.size();
    j["passed"] = passed;
    j["failed"] = all.size() - passed;
    j["cases"] = std::move(cases);
    return j;
}

void emit_suite_text(const Json& j, std::ostream& out) {
    for (const auto& c : j["cases"]) {
        out << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>() << '\n';
        for (const auto& f : c["failures"])
            out << "      failed: " << f.get<std::string>() << '\n';
    }
    out << j["passed"].get<std::size_t>() << " of " << j["total"].get<std::size_t>() << " checks passed\n";
}

Json error_json(const std::string& kind, const std::string& message, std::optional<std::size_t> offset) {
    Json e;
    e["kind"] = kind;
    e["message"] = message;
    if (offset)
        e["offset"] = *offset;
    return Json{{"error", e}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact lambda-ring, motivic zeta and rationality computations", "lz"};
    app.require_subcommand(1);
    Options opt;

    ZetaArgs za;
    auto* zeta = app.add_subcommand("zeta", "Zeta function of a variety expression");
    zeta->footer(kGrammar);
    zeta->add_option("expr", za.expr, "Variety expression")->required();
    zeta->add_option("--terms,--precision", za.terms, "Number of coefficients")->required()->check(CLI::PositiveNumber);
    zeta->add_flag("--rational", za.rational, "Closed form num/den");
    zeta->add_option("--specialize", za.specialize, "Assignment such as L=3,J=1");
    zeta->add_option("--curve-increment", za.increment, "Stable-range increment")->check(CLI::IsMember({"J", "X"}));
    add_common(zeta, opt);

    SeriesArgs ha;
    auto* hankel = app.add_subcommand("hankel", "Hankel determinant windows of a series");
    hankel->add_option("series", ha.path, "Series JSON file")->required();
    hankel->add_option("--m-max", ha.a, "Largest window size m")->required();
    hankel->add_option("--offset-max", ha.b, "Largest offset")->required();
    hankel->add_option("--terms,--precision", ha.terms, "Use the first N coefficients");
    add_common(hankel, opt);

    SeriesArgs pa;
    auto* pade = app.add_subcommand("pade", "Pade reconstruction over a field");
    pade->add_option("series", pa.path, "Series JSON file")->required();
    pade->add_option("--den-deg", pa.a, "Largest denominator degree")->required();
    pade->add_option("--terms,--precision", pa.terms, "Use the first N coefficients");
    add_common(pade, opt);

    SeriesArgs wa;
    auto* witness = app.add_subcommand("witness", "Periodic ratio test on a group series");
    witness->add_option("groupseries", wa.path, "Group series JSON file")->required();
    witness->add_option("--max-period", wa.a, "Largest period n")->required()->check(CLI::PositiveNumber);
    witness->add_option("--max-offset", wa.b, "Largest offset i0")->required();
    witness->add_option("--terms,--precision", wa.terms, "Use the first N coefficients");
    add_common(witness, opt);

    LambdaArgs la;
    auto* lop = app.add_subcommand("lambda-op", "Lambda operations on lambda_t series and Witt elements");
    lop->add_option("series", la.path, "Series JSON file: lambda_t(x) or a Witt element")->required();
    lop->add_option("--op", la.op, "Operation")
        ->required()
        ->check(CLI::IsMember({"lambda", "sigma", "psi", "witt-mul", "witt-lambda"}));
    lop->add_option("--k", la.k, "Operation index");
    lop->add_option("--with", la.with, "Second series for witt-mul");
    lop->add_option("--terms,--precision", la.terms, "Use the first N coefficients");
    add_common(lop, opt);

    UniversalArgs ua;
    auto* uni = app.add_subcommand("universal", "Universal lambda-ring polynomials");
    uni->add_option("--which", ua.which, "Family")->required()->check(CLI::IsMember({"P", "Q", "newton", "witt"}));
    uni->add_option("--n", ua.n, "Index n")->required()->check(CLI::PositiveNumber);
    uni->add_option("--m", ua.m, "Index m for Q")->check(CLI::PositiveNumber);
    uni->add_flag("--allow-large", ua.allow_large, "Lift the degree cutoff");
    uni->add_option("--cache-dir", ua.cache_dir, "Table cache directory (default $LZ_CACHE_DIR)");
    add_common(uni, opt);

    MeasureArgs ma;
    auto* meas = app.add_subcommand("measure", "Hodge measures of symmetric powers of a surface");
    meas->add_option("--surface", ma.surface, "Surface data such as q=2,pg=1,P=1,1,1,1,h1=0,0");
    meas->add_option("--surface-file", ma.surface_file, "Surface data JSON file");
    meas->add_option("--n", ma.n, "Measure index")->check(CLI::PositiveNumber);
    meas->add_option("--sym-max,--terms,--precision", ma.sym_max, "Largest symmetric power")->required();
    meas->add_flag("--witness", ma.witness, "Run the irrationality harness");
    meas->add_option("--max-period", ma.max_period, "Largest period n")->check(CLI::PositiveNumber);
    meas->add_option("--max-offset", ma.max_offset, "Largest offset i0");
    add_common(meas, opt);

    bool paper_checks = false;
    auto* suite = app.add_subcommand("suite", "Reproducibility battery");
    suite->add_flag("--paper-checks", paper_checks, "Run every named example and acceptance check")->required();
    add_common(suite, opt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        for (auto* sub : app.get_subcommands())
            err << sub->help();
        return kUsageError;
    }

    try {
        Json report;
        if (zeta->parsed()) {
            report = run_zeta(za);
        } else if (hankel->parsed()) {
            report = run_hankel(ha);
        } else if (pade->parsed()) {
            report = run_pade(pa);
        } else if (witness->parsed()) {
            report = run_witness(wa);
        } else if (lop->parsed()) {
            report = run_lambda_op(la);
        } else if (uni->parsed()) {
            report = run_universal(ua);
        } else if (meas->parsed()) {
            report = run_measure(ma);
        } else {
            (void)paper_checks;
            int code = kOk;
            report = run_suite(opt, code);
            if (opt.format == "json")
                out << report.dump(2) << '\n';
            else
                emit_suite_text(report, out);
            return code;
        }
        emit(report, opt, out);
        return kOk;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        if (opt.format == "json")
            out << error_json(e.kind(), e.bare_message(), e.offset()).dump(2) << '\n';
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const Error& e) {
        if (opt.format == "json")
            out << error_json(e.kind(), e.what(), std::nullopt).dump(2) << '\n';
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

std::vector<checks::NamedCheck> cli_checks() {
    using checks::Expect;
    auto invoke = [](const std::vector<std::string>& args, std::string& text) {
        std::ostringstream out, err;
        int code = run(args, out, err);
        text = out.str();
        return code;
    };
    std::vector<checks::NamedCheck> out;
    out.push_back({"cli: zeta \"P(1)\" --terms 3 --format json", [invoke](Expect& ok) {
                       std::string text;
                       ok(invoke({"zeta", "P(1)", "--terms", "3", "--format", "json"}, text) == kOk, "exit 0");
                       Json j = Json::parse(text);
                       TruncSeries z = series_from_json(j["series"]);
                       ok(z.precision() == 3, "three coefficients");
                       const char* expected[] = {"1", "1 + L", "1 + L + L^2"};
                       for (std::size_t i = 0; i < 3 && i < z.precision(); ++i)
                           ok(z.ring().eq(z[i], Elem(parse_poly(expected[i]))), expected[i]);
                   },
                   std::nullopt});
    out.push_back({"cli: universal --which newton --n 2", [invoke](Expect& ok) {
                       std::string text;
                       ok(invoke({"universal", "--which", "newton", "--n", "2"}, text) == kOk, "exit 0");
                       ok(Json::parse(text)["text"] == "e1^2 - 2*e2", "e1^2 - 2*e2");
                   },
                   std::nullopt});
    out.push_back({"cli: exit codes and error JSON", [invoke](Expect& ok) {
                       std::string text;
                       ok(invoke({"zeta", "Prod(A(1)", "--terms", "3"}, text) == kDomainError, "domain error exits 1");
                       Json j = Json::parse(text);
                       ok(j["error"]["kind"] == "syntax_error" && j["error"]["offset"] == 10, "error JSON");
                       ok(invoke({"zeta", "P(1)"}, text) == kUsageError, "missing --terms exits 2");
                       ok(invoke({"zeta", "P(1)", "--terms", "3", "--bogus"}, text) == kUsageError,
                          "unknown flag exits 2");
                       ok(invoke({"universal", "--which", "newton", "--n", "9"}, text) == kDomainError,
                          "cutoff refuses n > 8");
                   },
                   std::nullopt});
    out.push_back({"cli: identical invocations give identical output", [invoke](Expect& ok) {
                       std::string a, b;
                       invoke({"zeta", "PB(Curve(1),1)", "--terms", "6", "--rational"}, a);
                       invoke({"zeta", "PB(Curve(1),1)", "--terms", "6", "--rational"}, b);
                       ok(!a.empty() && a == b, "byte-identical");
                   },
                   std::nullopt});
    return out;
}

} // namespace lz::cli
