#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "u3/recoupling.hpp"

using namespace u3;

namespace {

// Expansion of the coupled chain ((g1 g2) g12, g3) -> g over the flattened
// triple product basis i1 * d2 * d3 + i2 * d3 + i3, for coupled state s.
Eigen::VectorXd chain12(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& g12, int rho12,
                        const U3Irrep& g3, const U3Irrep& g, int rho12_3, int s,
                        TableCache& cache) {
    const auto t12 = cache.table(g1, g2, g12);
    const auto t12_3 = cache.table(g12, g3, g);
    const long d2 = dimension(g2), d3 = dimension(g3);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dimension(g1) * d2 * d3);
    for (const CGTerm& outer : t12_3->terms(s, rho12_3))
        for (const CGTerm& inner : t12->terms(outer.i1, rho12))
            v(inner.i1 * d2 * d3 + inner.i2 * d3 + outer.i2) += outer.value * inner.value;
    return v;
}

// Expansion of the chain (g1, (g2 g3) g23) -> g over the same basis.
Eigen::VectorXd chain23(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& g3,
                        const U3Irrep& g23, int rho23, const U3Irrep& g, int rho1_23, int s,
                        TableCache& cache) {
    const auto t23 = cache.table(g2, g3, g23);
    const auto t1_23 = cache.table(g1, g23, g);
    const long d2 = dimension(g2), d3 = dimension(g3);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dimension(g1) * d2 * d3);
    for (const CGTerm& outer : t1_23->terms(s, rho1_23))
        for (const CGTerm& inner : t23->terms(outer.i2, rho23))
            v(outer.i1 * d2 * d3 + inner.i1 * d3 + inner.i2) += outer.value * inner.value;
    return v;
}

// Expansion of the chain ((g1 g3) g13, g2) -> g, same basis and flattening.
Eigen::VectorXd chain13(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& g3,
                        const U3Irrep& g13, int rho13, const U3Irrep& g, int rho13_2, int s,
                        TableCache& cache) {
    const auto t13 = cache.table(g1, g3, g13);
    const auto t13_2 = cache.table(g13, g2, g);
    const long d2 = dimension(g2), d3 = dimension(g3);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dimension(g1) * d2 * d3);
    for (const CGTerm& outer : t13_2->terms(s, rho13_2))
        for (const CGTerm& inner : t13->terms(outer.i1, rho13))
            v(inner.i1 * d2 * d3 + outer.i2 * d3 + inner.i2) += outer.value * inner.value;
    return v;
}

// Verifies the defining relation of the U tensor on every coupled state:
// the 12-ordered chain equals the U-weighted sum of 23-ordered chains.
void check_u_defining(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& g3, const U3Irrep& g,
                      TableCache& cache, double tol) {
    for (const auto& d12 : decompose(g1, g2)) {
        const U3Irrep& g12 = d12.coupled;
        const int r12_3 = outer_multiplicity(g12, g3, g);
        if (r12_3 == 0) continue;
        for (int s = 0; s < dimension(g); ++s) {
            for (int rho12 = 1; rho12 <= d12.rho_max; ++rho12) {
                for (int rho12_3 = 1; rho12_3 <= r12_3; ++rho12_3) {
                    Eigen::VectorXd lhs =
                        chain12(g1, g2, g12, rho12 - 1, g3, g, rho12_3 - 1, s, cache);
                    for (const auto& d23 : decompose(g2, g3)) {
                        const U3Irrep& g23 = d23.coupled;
                        const int r1_23 = outer_multiplicity(g1, g23, g);
                        if (r1_23 == 0) continue;
                        const UTensor u = u_coefficients(g1, g2, g, g3, g12, g23, cache);
                        REQUIRE(!u.empty());
                        for (int rho23 = 1; rho23 <= d23.rho_max; ++rho23)
                            for (int rho1_23 = 1; rho1_23 <= r1_23; ++rho1_23)
                                lhs -= u(rho12, rho12_3, rho23, rho1_23) *
                                       chain23(g1, g2, g3, g23, rho23 - 1, g, rho1_23 - 1, s,
                                               cache);
                    }
                    CHECK(lhs.cwiseAbs().maxCoeff() <= tol);
                }
            }
        }
    }
}

// Same for the Z tensor: the 12-ordered chain equals the Z-weighted sum of
// 13-ordered chains.
void check_z_defining(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& g3, const U3Irrep& g,
                      TableCache& cache, double tol) {
    for (const auto& d12 : decompose(g1, g2)) {
        const U3Irrep& g12 = d12.coupled;
        const int r12_3 = outer_multiplicity(g12, g3, g);
        if (r12_3 == 0) continue;
        for (int s = 0; s < dimension(g); ++s) {
            for (int rho12 = 1; rho12 <= d12.rho_max; ++rho12) {
                for (int rho12_3 = 1; rho12_3 <= r12_3; ++rho12_3) {
                    Eigen::VectorXd lhs =
                        chain12(g1, g2, g12, rho12 - 1, g3, g, rho12_3 - 1, s, cache);
                    for (const auto& d13 : decompose(g1, g3)) {
                        const U3Irrep& g13 = d13.coupled;
                        const int r13_2 = outer_multiplicity(g13, g2, g);
                        if (r13_2 == 0) continue;
                        const ZTensor z = z_coefficients(g2, g1, g, g3, g12, g13, cache);
                        REQUIRE(!z.empty());
                        for (int rho13 = 1; rho13 <= d13.rho_max; ++rho13)
                            for (int rho13_2 = 1; rho13_2 <= r13_2; ++rho13_2)
                                lhs -= z(rho12, rho12_3, rho13, rho13_2) *
                                       chain13(g1, g2, g3, g13, rho13 - 1, g, rho13_2 - 1, s,
                                               cache);
                    }
                    CHECK(lhs.cwiseAbs().maxCoeff() <= tol);
                }
            }
        }
    }
}

} // namespace

TEST_CASE("tensor layouts") {
    TableCache cache;
    const UTensor u =
        u_coefficients({1, 0, 0}, {1, 0, 0}, {2, 1, 0}, {1, 0, 0}, {2, 0, 0}, {1, 1, 0}, cache);
    REQUIRE(!u.empty());
    CHECK(u.rho12_max == 1);
    CHECK(u.rho12_3_max == 1);
    CHECK(u.rho23_max == 1);
    CHECK(u.rho1_23_max == 1);
    CHECK(u.values.size() == 1);
    CHECK(std::abs(u(1, 1, 1, 1)) > 0.1);

    // Labels that do not couple give an empty tensor.
    const UTensor none =
        u_coefficients({1, 0, 0}, {1, 0, 0}, {3, 0, 0}, {1, 0, 0}, {2, 0, 0}, {1, 1, 0}, cache);
    CHECK(none.empty());
}

TEST_CASE("trivial third factor collapses to the identity") {
    TableCache cache;
    for (const auto& d12 : decompose(U3Irrep{2, 1, 0}, U3Irrep{1, 1, 0})) {
        const UTensor u = u_coefficients({2, 1, 0}, {1, 1, 0}, d12.coupled, {0, 0, 0},
                                         d12.coupled, {1, 1, 0}, cache);
        REQUIRE(!u.empty());
        for (int a = 1; a <= u.rho12_max; ++a)
            for (int b = 1; b <= u.rho1_23_max; ++b)
                CHECK(u(a, 1, 1, b) == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-10));
    }
}

TEST_CASE("trivial middle factor collapses to the identity") {
    TableCache cache;
    const UTensor u =
        u_coefficients({2, 1, 0}, {0, 0, 0}, {3, 1, 0}, {1, 0, 0}, {2, 1, 0}, {1, 0, 0}, cache);
    REQUIRE(!u.empty());
    CHECK(u(1, 1, 1, 1) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("defining relation, multiplicity free") {
    TableCache cache;
    check_u_defining({1, 0, 0}, {1, 0, 0}, {1, 0, 0}, {2, 1, 0}, cache, 1e-9);
    check_u_defining({1, 0, 0}, {1, 0, 0}, {1, 0, 0}, {3, 0, 0}, cache, 1e-9);
    check_z_defining({1, 0, 0}, {1, 0, 0}, {1, 0, 0}, {2, 1, 0}, cache, 1e-9);
    check_z_defining({2, 0, 0}, {1, 0, 0}, {1, 1, 0}, {3, 2, 0}, cache, 1e-9);
}

TEST_CASE("defining relation with outer multiplicity") {
    TableCache cache;
    // (g1 g2) g3 -> g with a doubled route: [2,1,0] x [1,1,0] x [1,0,0]
    // reaches [3,2,1] through several intermediates.
    check_u_defining({2, 1, 0}, {1, 1, 0}, {1, 0, 0}, {3, 2, 1}, cache, 1e-9);
    check_z_defining({2, 1, 0}, {1, 1, 0}, {1, 0, 0}, {3, 2, 1}, cache, 1e-9);
}

TEST_CASE("unitarity of one recoupling block") {
    TableCache cache;
    const U3Irrep g1{1, 0, 0}, g2{1, 0, 0}, g3{1, 0, 0}, g{2, 1, 0};
    // Two 12-routes ([2,0,0] and [1,1,0]) and two 23-routes: a 2 x 2
    // orthogonal matrix.
    Eigen::MatrixXd m(2, 2);
    int row = 0;
    for (const U3Irrep& g12 : {U3Irrep{2, 0, 0}, U3Irrep{1, 1, 0}}) {
        int col = 0;
        for (const U3Irrep& g23 : {U3Irrep{2, 0, 0}, U3Irrep{1, 1, 0}}) {
            const UTensor u = u_coefficients(g1, g2, g, g3, g12, g23, cache);
            REQUIRE(!u.empty());
            m(row, col++) = u(1, 1, 1, 1);
        }
        ++row;
    }
    CHECK((m * m.transpose() - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("four-factor tensor with trivial last factor matches the exchange tensor") {
    TableCache cache;
    const U3Irrep g1{2, 1, 0}, g2{1, 1, 0}, g3{1, 0, 0}, trivial{0, 0, 0};
    for (const auto& d12 : decompose(g1, g2)) {
        for (const auto& d : decompose(d12.coupled, g3)) {
            for (const auto& d13 : decompose(g1, g3)) {
                if (outer_multiplicity(d13.coupled, g2, d.coupled) == 0) continue;
                const NineU3 nine = nine_u3(g1, g2, d12.coupled, g3, trivial, g3, d13.coupled,
                                            g2, d.coupled, cache);
                const ZTensor z =
                    z_coefficients(g2, g1, d.coupled, g3, d12.coupled, d13.coupled, cache);
                REQUIRE(!nine.empty());
                REQUIRE(!z.empty());
                CHECK(nine.rho12_34_max == z.rho12_3_max);
                CHECK(nine.rho13_24_max == z.rho13_2_max);
                for (int r12 = 1; r12 <= z.rho12_max; ++r12)
                    for (int ra = 1; ra <= z.rho12_3_max; ++ra)
                        for (int r13 = 1; r13 <= z.rho13_max; ++r13)
                            for (int rb = 1; rb <= z.rho13_2_max; ++rb)
                                CHECK(std::abs(nine(r12, 1, r13, 1, ra, rb) -
                                               z(r12, ra, r13, rb)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("rank-deficient labels are rejected early") {
    TableCache cache;
    // Coupling labels with zero multiplicity anywhere give empty tensors,
    // never exceptions.
    const ZTensor z =
        z_coefficients({1, 0, 0}, {1, 0, 0}, {2, 1, 0}, {1, 0, 0}, {3, 0, 0}, {2, 0, 0}, cache);
    CHECK(z.empty());
}
