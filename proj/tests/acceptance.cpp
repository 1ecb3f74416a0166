// Acceptance gate: runs the ten golden verification suites and prints one
// pass/fail line per criterion.  Exits nonzero if any suite fails.

#include <cstdio>

#include "etamod/verify.hpp"

int main() {
    bool all_pass = true;
    int index = 0;
    for (const etamod::SuiteResult& r : etamod::run_suites("all")) {
        ++index;
        all_pass = all_pass && r.pass;
        std::printf("[%s] criterion %2d: %s\n", r.pass ? "PASS" : "FAIL", index,
                    r.name.c_str());
        if (!r.pass)
            for (const auto& line : r.lines) std::printf("        %s\n", line.c_str());
        for (const auto& w : r.warnings) std::printf("        warning: %s\n", w.c_str());
    }
    if (index != 10) {
        std::printf("[FAIL] expected 10 criteria, ran %d\n", index);
        return 1;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                                 : "acceptance: FAILURES above");
    return all_pass ? 0 : 1;
}
