#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace geocurve::verify {

/// One named acceptance check run against independently constructed inputs.
/// `details` is deterministic for a fixed seed; timing lives in `seconds`
/// only so reports can stay byte-identical across runs.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    double tol_residual = 1e-5;
    double tol_origin = 1e-6;
    int n = 2000;
};

std::vector<CheckResult> run_all_checks(const VerifyOptions& options = {});

}  // namespace geocurve::verify
