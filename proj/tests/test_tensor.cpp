#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "u3/tensor.hpp"

using namespace u3;

TEST_CASE("fundamental square") {
    const auto dec = decompose(U3Irrep{1, 0, 0}, U3Irrep{1, 0, 0});
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].coupled == U3Irrep{2, 0, 0});
    CHECK(dec[0].rho_max == 1);
    CHECK(dec[1].coupled == U3Irrep{1, 1, 0});
    CHECK(dec[1].rho_max == 1);
}

TEST_CASE("adjoint square carries a doubled coupling") {
    const auto dec = decompose(U3Irrep{2, 1, 0}, U3Irrep{2, 1, 0});
    long sum = 0;
    int found = 0;
    for (const auto& d : dec) {
        sum += d.rho_max * dimension(d.coupled);
        if (d.coupled == U3Irrep{3, 2, 1}) {
            found = d.rho_max;
            CHECK(d.rho_max == 2);
        }
    }
    CHECK(found == 2);
    CHECK(sum == 64);
    CHECK(outer_multiplicity({2, 1, 0}, {2, 1, 0}, {3, 2, 1}) == 2);
    CHECK(outer_multiplicity({2, 1, 0}, {2, 1, 0}, {2, 2, 2}) == 1);
    CHECK(outer_multiplicity({2, 1, 0}, {2, 1, 0}, {4, 2, 0}) == 1);
}

TEST_CASE("ordering of the decomposition") {
    const auto dec = decompose(U3Irrep{2, 1, 0}, U3Irrep{1, 1, 0});
    for (size_t i = 1; i < dec.size(); ++i) {
        const auto& a = dec[i - 1].coupled;
        const auto& b = dec[i].coupled;
        CHECK(std::tie(b.n13, b.n23, b.n33) < std::tie(a.n13, a.n23, a.n33));
    }
}

TEST_CASE("dimension sum and symmetry") {
    const U3Irrep samples[] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {2, 0, 0},
                               {2, 1, 0}, {2, 2, 1}, {3, 1, 0}, {2, 1, 1}};
    for (const U3Irrep& g1 : samples) {
        for (const U3Irrep& g2 : samples) {
            const auto dec = decompose(g1, g2);
            CHECK(dec == decompose(g2, g1));
            long sum = 0;
            for (const auto& d : dec) {
                CHECK(d.rho_max >= 1);
                CHECK(valid(d.coupled));
                CHECK(total_quanta(d.coupled) == total_quanta(g1) + total_quanta(g2));
                CHECK(outer_multiplicity(g1, g2, d.coupled) == d.rho_max);
                sum += d.rho_max * dimension(d.coupled);
            }
            CHECK(sum == dimension(g1) * dimension(g2));
        }
    }
}

TEST_CASE("trivial factor") {
    const auto dec = decompose(U3Irrep{3, 1, 0}, U3Irrep{0, 0, 0});
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].coupled == U3Irrep{3, 1, 0});
    CHECK(dec[0].rho_max == 1);
}

TEST_CASE("absent couplings") {
    // Wrong quanta count.
    CHECK(outer_multiplicity({1, 0, 0}, {1, 0, 0}, {2, 1, 0}) == 0);
    // Right quanta but unreachable shape: a column of three cannot be built
    // from two rows of boxes added to a single row.
    CHECK(outer_multiplicity({1, 0, 0}, {2, 0, 0}, {1, 1, 1}) == 0);
    CHECK(outer_multiplicity({1, 0, 0}, {1, 1, 0}, {1, 1, 1}) == 1);
    // Invalid target labels.
    CHECK(outer_multiplicity({1, 0, 0}, {1, 0, 0}, {0, 1, 1}) == 0);
}

TEST_CASE("shifted factors") {
    // A fully shifted factor acts as the shift of every coupled label.
    const auto plain = decompose(U3Irrep{2, 1, 0}, U3Irrep{1, 0, 0});
    const auto shifted = decompose(U3Irrep{3, 2, 1}, U3Irrep{1, 0, 0});
    REQUIRE(plain.size() == shifted.size());
    long sum = 0;
    for (const auto& d : shifted) sum += d.rho_max * dimension(d.coupled);
    CHECK(sum == dimension(U3Irrep{3, 2, 1}) * 3);
    for (size_t i = 0; i < plain.size(); ++i) {
        CHECK(shifted[i].rho_max == plain[i].rho_max);
        CHECK(shifted[i].coupled ==
              U3Irrep{plain[i].coupled.n13 + 1, plain[i].coupled.n23 + 1,
                      plain[i].coupled.n33 + 1});
    }
}
