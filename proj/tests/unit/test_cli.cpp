// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <doctest.h>

#include "cli.hpp"
#include "lz/ring/multipoly.hpp"
#include "lz/series/series.hpp"
#include "lz/symfunc/cache.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lz;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const Json& j) {
    std::string path = "lz_cli_test_" + name + ".json";
    std::ofstream(path) << j.dump();
    return path;
}

} // namespace

TEST_CASE("zeta of P(1) lists 1, 1+L, 1+L+L^2") {
    Result r = invoke({"zeta", "P(1)", "--terms", "3", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    TruncSeries z = series_from_json(j["series"]);
    REQUIRE(z.precision() == 3);
    CHECK(z.ring().eq(z[0], Elem(parse_poly("1"))));
    CHECK(z.ring().eq(z[1], Elem(parse_poly("1 + L"))));
    CHECK(z.ring().eq(z[2], Elem(parse_poly("L^2 + L + 1"))));
    CHECK(j["coefficients"].size() == 3);
}

TEST_CASE("zeta rational form and specialization") {
    Result r = invoke({"zeta", "P(2)", "--terms", "5", "--rational", "--specialize", "L=2"});
    REQUIRE(r.code == cli::kOk);
    Json j = Json::parse(r.out);
    CHECK(j["rational"]["found"] == true);
    CHECK(j["rational"]["denominator"].size() == 4);
    // 1/((1-t)(1-2t)(1-4t)) has coefficients 1, 7, 35, 155, 651.
    std::vector<std::string> expected = {"1", "7", "35", "155", "651"};
    CHECK(j["specialized"]["coefficients"].get<std::vector<std::string>>() == expected);
}

TEST_CASE("universal newton n=2") {
    Result r = invoke({"universal", "--which", "newton", "--n", "2"});
    REQUIRE(r.code == cli::kOk);
    CHECK(Json::parse(r.out)["text"] == "e1^2 - 2*e2");
    Result cut = invoke({"universal", "--which", "Q", "--m", "3", "--n", "4"});
    CHECK(cut.code == cli::kDomainError);
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == cli::kUsageError);
    CHECK(invoke({"zeta", "P(1)"}).code == cli::kUsageError);
    CHECK(invoke({"zeta", "P(1)", "--terms", "3", "--no-such-flag"}).code == cli::kUsageError);
    CHECK(invoke({"zeta", "P(1)", "--terms", "3", "--format", "yaml"}).code == cli::kUsageError);
    CHECK(invoke({"zeta", "--help"}).code == cli::kOk);
    Result bad = invoke({"zeta", "Curve(x)", "--terms", "3"});
    CHECK(bad.code == cli::kDomainError);
    Json e = Json::parse(bad.out)["error"];
    CHECK(e["kind"] == "syntax_error");
    CHECK(e.contains("offset"));
    Result text = invoke({"zeta", "Curve(x)", "--terms", "3", "--format", "text"});
    CHECK(text.code == cli::kDomainError);
    CHECK(text.out.empty());
    CHECK(!text.err.empty());
}

TEST_CASE("text format renders the same report") {
    Result r = invoke({"zeta", "A(1)", "--terms", "3", "--format", "text"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find("expr: A(1)") != std::string::npos);
    CHECK(r.out.find("L^2") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args = {"measure", "--surface", "q=1,pg=2", "--sym-max", "6", "--witness"};
    Result a = invoke(args);
    Result b = invoke(args);
    REQUIRE(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["harness"]["verdict"] == "NoWitnessUpTo");
}

TEST_CASE("series file commands") {
    Result z = invoke({"zeta", "P(1)", "--terms", "10"});
    REQUIRE(z.code == cli::kOk);
    std::string path = write_temp("p1", Json::parse(z.out)["series"]);

    Result h = invoke({"hankel", path, "--m-max", "3", "--offset-max", "2"});
    REQUIRE(h.code == cli::kOk);
    Result p = invoke({"pade", path, "--den-deg", "2"});
    REQUIRE(p.code == cli::kOk);
    CHECK(Json::parse(p.out)["denominator"].size() == 3);
    CHECK(invoke({"pade", path, "--den-deg", "2", "--terms", "40"}).code == cli::kDomainError);
    CHECK(invoke({"hankel", "/nonexistent.json", "--m-max", "1", "--offset-max", "0"}).code == cli::kDomainError);

    Result lam = invoke({"lambda-op", path, "--op", "lambda", "--k", "2"});
    REQUIRE(lam.code == cli::kOk);
    CHECK(Json::parse(lam.out)["value"] == "L^2 + L + 1");
    Result psi = invoke({"lambda-op", path, "--op", "psi", "--k", "2"});
    REQUIRE(psi.code == cli::kOk);
    Result wl = invoke({"lambda-op", path, "--op", "witt-lambda", "--k", "1"});
    REQUIRE(wl.code == cli::kOk);
    Result wm = invoke({"lambda-op", path, "--op", "witt-mul", "--with", path});
    REQUIRE(wm.code == cli::kOk);
    std::remove(path.c_str());
}

TEST_CASE("witness on a group series") {
    Result z = invoke({"zeta", "A(1)", "--terms", "12"});
    REQUIRE(z.code == cli::kOk);
    std::string path = write_temp("a1", Json::parse(z.out)["series"]);
    Result w = invoke({"witness", path, "--max-period", "2", "--max-offset", "2"});
    REQUIRE(w.code == cli::kOk);
    CHECK(Json::parse(w.out)["verdict"] == "PeriodFound");
    std::remove(path.c_str());
}

TEST_CASE("in-process command checks") {
    for (const auto& c : cli::cli_checks()) {
        checks::CheckResult r = checks::run_check(c);
        INFO(c.name);
        CHECK(r.passed);
    }
}

TEST_CASE("installed binary") {
    const char* bin = std::getenv("LZ_CLI");
    if (bin == nullptr)
        return;
    std::string cmd = std::string(bin) + " universal --which newton --n 2";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    std::array<char, 256> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr)
        text += buf.data();
    CHECK(pclose(pipe) == 0);
    CHECK(Json::parse(text)["text"] == "e1^2 - 2*e2");
    CHECK(std::system((std::string(bin) + " zeta P\\(1\\) --bogus 2>/dev/null >/dev/null").c_str()) != 0);
}

TEST_CASE("universal tables are written to the cache directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "lz_cli_cache_test";
    fs::remove_all(dir);
    Result a = invoke({"universal", "--which", "P", "--n", "3", "--cache-dir", dir.string()});
    REQUIRE(a.code == cli::kOk);
    CHECK(!fs::is_empty(dir));
    Result b = invoke({"universal", "--which", "P", "--n", "3", "--cache-dir", dir.string()});
    CHECK(a.out == b.out);
    symfunc::set_cache_dir(std::nullopt);
    fs::remove_all(dir);
}

TEST_CASE("precision is an alias of terms") {
    CHECK(invoke({"zeta", "P(1)", "--precision", "3"}).out == invoke({"zeta", "P(1)", "--terms", "3"}).out);
}
