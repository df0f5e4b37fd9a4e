#pragma once

#include <string>
#include <vector>

namespace u3 {

// One self-check: a named verification with a pass/fail outcome, a short
// report (counts, worst deviations) and its wall-clock cost.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelftestOptions {
    // Bound on the total quanta of the factor irreps used for the coupling
    // and recoupling sweeps.
    int max_quanta = 6;
    // Bound on dim(g1) * dim(g2) for full coupling-table sweeps.
    long max_product_dim = 400;
    double tol = 1e-10;
    // Directory for the cache timing check; empty uses a temp directory.
    std::string cache_dir;
};

// The full battery, in a fixed order.  Each check is independent; a check
// that throws is reported as failed with the exception text.
std::vector<CheckResult> run_selftest(const SelftestOptions& opts);

// Individual checks (exposed for the test suite).
CheckResult check_dimensions_and_enumeration();
CheckResult check_generator_algebra();
CheckResult check_multiplicities(const SelftestOptions& opts);
CheckResult check_cgc_tables(const SelftestOptions& opts);
CheckResult check_recoupling(const SelftestOptions& opts);
CheckResult check_so3_content();
CheckResult check_so3_transforms();
CheckResult check_wigner_orthogonality();
CheckResult check_wigner_oracle();
CheckResult check_performance(const SelftestOptions& opts);
CheckResult check_determinism();

} // namespace u3
