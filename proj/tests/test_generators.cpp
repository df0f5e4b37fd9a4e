#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "u3/generators.hpp"

using namespace u3;

namespace {

double entry(const LinearCombo& combo, const GelfandPattern& p) {
    const auto it = combo.find(p);
    return it == combo.end() ? 0.0 : it->second;
}

} // namespace

TEST_CASE("fundamental ladder actions") {
    // Lowering within the first two entries.
    const auto down = apply_generator(2, 1, GelfandPattern{1, 0, 0, 1, 0, 1});
    REQUIRE(down.size() == 1);
    CHECK(entry(down, GelfandPattern{1, 0, 0, 1, 0, 0}) == doctest::Approx(1.0).epsilon(1e-14));

    // Raising from the third entry.
    const auto up = apply_generator(2, 3, GelfandPattern{1, 0, 0, 0, 0, 0});
    REQUIRE(up.size() == 1);
    CHECK(entry(up, GelfandPattern{1, 0, 0, 1, 0, 0}) == doctest::Approx(1.0).epsilon(1e-14));

    const auto back = apply_generator(1, 2, GelfandPattern{1, 0, 0, 1, 0, 0});
    REQUIRE(back.size() == 1);
    CHECK(entry(back, GelfandPattern{1, 0, 0, 1, 0, 1}) == doctest::Approx(1.0).epsilon(1e-14));

    // The highest weight is annihilated by every raising operator.
    const GelfandPattern hw{1, 0, 0, 1, 0, 1};
    CHECK(apply_generator(1, 2, hw).empty());
    CHECK(apply_generator(2, 3, hw).empty());
    CHECK(apply_generator(1, 3, hw).empty());
}

TEST_CASE("diagonal actions read the weight") {
    const GelfandPattern p{3, 2, 0, 3, 1, 2};
    const auto w1 = apply_generator(1, 1, p);
    REQUIRE(w1.size() == 1);
    CHECK(entry(w1, p) == doctest::Approx(2.0));
    const auto w2 = apply_generator(2, 2, p);
    CHECK(entry(w2, p) == doctest::Approx(2.0));
    const auto w3 = apply_generator(3, 3, p);
    CHECK(entry(w3, p) == doctest::Approx(1.0));
    // A zero weight yields an empty combination.
    CHECK(apply_generator(1, 1, GelfandPattern{1, 0, 0, 0, 0, 0}).empty());
}

TEST_CASE("two-step raising amplitude") {
    // E13 on the lowest state of [2,0,0] reaches (1,0;1) with amplitude
    // sqrt(2), by direct evaluation of the closed form.
    const auto r = apply_generator(1, 3, GelfandPattern{2, 0, 0, 0, 0, 0});
    REQUIRE(r.size() == 1);
    CHECK(entry(r, GelfandPattern{2, 0, 0, 1, 0, 1}) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("weight shifts of ladder images") {
    const IrrepBasis basis(U3Irrep{3, 1, 0});
    const std::pair<std::pair<int, int>, std::pair<int, int>> moves[] = {
        {{1, 2}, {0, 1}},  // z1 + 1
        {{2, 1}, {0, -1}}, // z1 - 1
        {{2, 3}, {1, 0}},  // z2 + 1
        {{3, 2}, {-1, 0}}, // z2 - 1
        {{1, 3}, {1, 1}},  // both + 1
        {{3, 1}, {-1, -1}} // both - 1
    };
    for (const auto& [ij, dz] : moves) {
        for (const GelfandPattern& p : basis.states()) {
            for (const auto& [target, value] : apply_generator(ij.first, ij.second, p)) {
                CHECK(value != 0.0);
                CHECK(zrow2(target) == zrow2(p) + dz.first);
                CHECK(zrow1(target) == zrow1(p) + dz.second);
            }
        }
    }
}

TEST_CASE("commutation relations") {
    for (const U3Irrep g : {U3Irrep{2, 1, 0}, U3Irrep{3, 1, 0}, U3Irrep{2, 2, 1}}) {
        const IrrepBasis basis(g);
        Eigen::MatrixXd e[4][4];
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) e[i][j] = generator_matrix(i, j, basis);
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                CHECK((e[a][b] - e[b][a].transpose()).cwiseAbs().maxCoeff() <= 1e-12);
                for (int c = 1; c <= 3; ++c)
                    for (int d = 1; d <= 3; ++d) {
                        Eigen::MatrixXd lhs = e[a][b] * e[c][d] - e[c][d] * e[a][b];
                        if (b == c) lhs -= e[a][d];
                        if (d == a) lhs += e[c][b];
                        CHECK(lhs.cwiseAbs().maxCoeff() <= 1e-12);
                    }
            }
    }
}

TEST_CASE("shift invariance of amplitudes") {
    // Adding a common shift to every entry leaves all amplitudes unchanged;
    // the canonical order is also shift invariant, so the matrices agree.
    const IrrepBasis plain(U3Irrep{2, 1, 0});
    const IrrepBasis shifted(U3Irrep{3, 2, 1});
    REQUIRE(plain.size() == shifted.size());
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {1, 3}, {2, 1}, {3, 2}, {3, 1}}) {
        const Eigen::MatrixXd a = generator_matrix(i, j, plain);
        const Eigen::MatrixXd b = generator_matrix(i, j, shifted);
        CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("invalid generator indices") {
    CHECK_THROWS_AS(apply_generator(0, 1, GelfandPattern{1, 0, 0, 1, 0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_generator(1, 4, GelfandPattern{1, 0, 0, 1, 0, 1}),
                    std::invalid_argument);
}
