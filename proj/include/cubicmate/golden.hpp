#pragma once

#include <string>
#include <vector>

namespace cubicmate {

struct GoldenCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Reference values for the worked examples of the theory; backs the CLI
/// selftest.
std::vector<GoldenCheck> run_golden_suite();

}  // namespace cubicmate
