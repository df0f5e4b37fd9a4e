#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "u3/errors.hpp"
#include "u3/linalg.hpp"

using namespace u3;

TEST_CASE("null space of a rank-one map") {
    Eigen::MatrixXd a(2, 3);
    a << 1, 1, 1, 2, 2, 2;
    const Eigen::MatrixXd n = null_space<double>(a);
    REQUIRE(n.rows() == 3);
    REQUIRE(n.cols() == 2);
    CHECK((a * n).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((n.transpose() * n - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("null space of an injective map is empty") {
    Eigen::MatrixXd a(3, 2);
    a << 1, 0, 0, 1, 1, 1;
    const Eigen::MatrixXd n = null_space<double>(a);
    CHECK(n.rows() == 2);
    CHECK(n.cols() == 0);
}

TEST_CASE("null space of no constraints is everything") {
    const Eigen::MatrixXd n = null_space<double>(Eigen::MatrixXd::Zero(0, 4));
    CHECK(n.rows() == 4);
    CHECK(n.cols() == 4);
    const Eigen::MatrixXd z = null_space<double>(Eigen::MatrixXd::Zero(3, 2));
    CHECK(z.cols() == 2);
}

TEST_CASE("relative singular value threshold") {
    // The cutoff scales with the largest singular value: directions above
    // tol * sigma_max survive, directions below it count as null.
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 0, 0, 1e-8;
    CHECK(null_space<double>(a).cols() == 0);
    CHECK(numerical_rank<double>(a, 1e-10) == 2);
    a(1, 1) = 1e-12;
    CHECK(numerical_rank<double>(a, 1e-10) == 1);
    CHECK(null_space<double>(a).cols() == 1);
    // The same matrix scaled up keeps the same rank decision.
    CHECK(numerical_rank<double>(Eigen::MatrixXd(1e8 * a), 1e-10) == 1);
}

TEST_CASE("gram schmidt") {
    Eigen::MatrixXd v(3, 3);
    v.col(0) << 1, 1, 0;
    v.col(1) << 1, 1, 1e-13; // nearly dependent on col 0
    v.col(2) << 0, 1, 1;
    const Eigen::MatrixXd q = gram_schmidt<double>(v);
    REQUIRE(q.cols() == 2);
    CHECK((q.transpose() * q - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("phase fixing") {
    Eigen::MatrixXd v(3, 2);
    v.col(0) << 1e-14, -0.6, 0.8; // leading entry below threshold is skipped
    v.col(1) << 0.3, -0.4, 0.5;   // already positive: untouched
    const Eigen::MatrixXd w = fix_phase<double>(v);
    CHECK(w(1, 0) == doctest::Approx(0.6));
    CHECK(w(2, 0) == doctest::Approx(-0.8));
    CHECK(w(0, 1) == doctest::Approx(0.3));
    CHECK(w(1, 1) == doctest::Approx(-0.4));
    const Eigen::MatrixXd u = fix_phase<double>(w);
    CHECK((u - w).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("consistent solve") {
    Eigen::MatrixXd a(3, 2);
    a << 1, 0, 0, 1, 1, 1;
    Eigen::MatrixXd x(2, 2);
    x << 2, -1, 3, 4;
    const Eigen::MatrixXd b = a * x;
    const Eigen::MatrixXd y = solve_consistent<double>(a, b, 1e-10, "test");
    CHECK((y - x).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("inconsistent solve is rejected") {
    Eigen::MatrixXd a(3, 1);
    a << 1, 1, 1;
    Eigen::MatrixXd b(3, 1);
    b << 1, 1, 2;
    CHECK_THROWS_AS(solve_consistent<double>(a, b, 1e-10, "test"), ResidualTooLarge);
    CHECK_THROWS_AS(solve_consistent<double>(a, b, 1e-10, "test"), NumericalDiagnostic);
}

TEST_CASE("float instantiation") {
    Eigen::MatrixXf a(1, 2);
    a << 1.0f, -1.0f;
    const Eigen::MatrixXf n = null_space<float>(a, 1e-5f);
    REQUIRE(n.cols() == 1);
    CHECK(std::abs(std::abs(n(0, 0)) - std::sqrt(0.5f)) <= 1e-6f);
}
