// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "lz/checks/battery.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    std::uint64_t seed = 20260101;
    if (argc > 1)
        seed = std::strtoull(argv[1], nullptr, 10);
    int failed = 0;
    for (const auto& check : lz::checks::acceptance_checks(seed)) {
        lz::checks::CheckResult r = lz::checks::run_check(check);
        std::printf("%s  criterion %-45s %6zu assertions  %7.2f s\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.assertions, r.seconds);
        for (const auto& note : r.notes)
            std::printf("      %s\n", note.c_str());
        std::size_t shown = 0;
        for (const auto& f : r.failures) {
            if (++shown > 10) {
                std::printf("      ... %zu more failures\n", r.failures.size() - 10);
                break;
            }
            std::printf("      failed: %s\n", f.c_str());
        }
        if (!r.passed)
            ++failed;
    }
    std::printf("%d of 9 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
