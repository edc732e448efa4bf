// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include "lz/ring/json.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lz::checks {

/// Collects the outcome of the assertions of one named check.
class Expect {
public:
    void operator()(bool ok, const std::string& what);
    void note(const std::string& text) { notes_.push_back(text); }

    std::size_t assertions() const noexcept { return assertions_; }
    const std::vector<std::string>& failures() const noexcept { return failures_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

private:
    std::size_t assertions_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

struct NamedCheck {
    std::string name;
    std::function<void(Expect&)> run;
    /// Wall-clock budget in seconds; exceeding it fails the check.
    std::optional<double> time_limit;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::size_t assertions = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double seconds = 0;
};

/// Runs a check, turning exceptions and an exceeded time limit into failures.
CheckResult run_check(const NamedCheck& check);

/// One check per worked example of the library modules.
std::vector<NamedCheck> example_checks();

/// Acceptance criteria 1..9, in order. Randomized criteria draw from `seed`.
std::vector<NamedCheck> acceptance_checks(std::uint64_t seed = 20260101);

/// Seconds are left out so identical runs give identical JSON.
Json to_json(const CheckResult& r);

} // namespace lz::checks
