// Named self-contained consistency checks behind `chowbso verify`: each one
// reruns a piece of the library against an independent route to the same
// value (or against a defining identity) at a given rank n, with fixed seeds
// so output is byte-stable run to run.
#pragma once

#include <string>
#include <vector>

namespace chowbso::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // deterministic one-line evidence, also on failure
};

struct VerifyReport {
    int n = 0;
    std::vector<CheckResult> checks;
};

inline constexpr int kMinRank = 2;
inline constexpr int kMaxRank = 10;

// All checks whose declared rank range contains n, in registry order.
VerifyReport run_checks(int n);

// Names in registry order (for documentation and --help text).
std::vector<std::string> check_names();

} // namespace chowbso::verify
