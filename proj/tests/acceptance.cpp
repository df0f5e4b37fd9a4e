// Acceptance battery: one line per criterion, nonzero exit when any fails.
//
// Each criterion is one of the library's built-in verification checks, run
// at the tolerances and sweep sizes fixed in the library (coupling sweeps
// over all irrep pairs with at most 6 total quanta per factor and product
// dimension at most 400; recoupling over all irreps with at most 4 total
// quanta).

#include <cstdio>

#include "u3/selftest.hpp"

int main() {
    u3::SelftestOptions opts; // pinned defaults: quanta <= 6, dim product <= 400
    const auto results = u3::run_selftest(opts);
    int failed = 0;
    int index = 0;
    for (const auto& r : results) {
        ++index;
        if (!r.passed) ++failed;
        std::printf("[%s] criterion %2d: %-24s (%.2f s) %s\n", r.passed ? "PASS" : "FAIL", index,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
