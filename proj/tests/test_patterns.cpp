#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "u3/pattern.hpp"

using namespace u3;

TEST_CASE("dimension formula") {
    CHECK(dimension(U3Irrep{0, 0, 0}) == 1);
    CHECK(dimension(U3Irrep{1, 0, 0}) == 3);
    CHECK(dimension(U3Irrep{1, 1, 0}) == 3);
    CHECK(dimension(U3Irrep{1, 1, 1}) == 1);
    CHECK(dimension(U3Irrep{2, 1, 0}) == 8);
    CHECK(dimension(U3Irrep{3, 2, 0}) == 15);
    CHECK(dimension(U3Irrep{4, 2, 0}) == 27);
    CHECK(dimension(U3Irrep{10, 5, 0}) == 216);
    CHECK(dimension(SU3Irrep{1, 1}) == 8);
    CHECK(dimension(SU3Irrep{2, 2}) == 27);
    CHECK(dimension(SU3Irrep{4, 2}) == 60);
    // Shifts do not change the dimension.
    CHECK(dimension(U3Irrep{5, 3, 2}) == dimension(U3Irrep{3, 1, 0}));
}

TEST_CASE("label algebra") {
    CHECK(su3_part(U3Irrep{4, 3, 2}) == SU3Irrep{1, 1});
    CHECK(normalize(U3Irrep{4, 3, 2}) == std::pair{SU3Irrep{1, 1}, 2});
    CHECK(lift(SU3Irrep{1, 1}) == U3Irrep{2, 1, 0});
    CHECK(lift(SU3Irrep{4, 2}) == U3Irrep{6, 2, 0});
    CHECK(total_quanta(U3Irrep{3, 2, 1}) == 6);
    CHECK(valid(U3Irrep{2, 2, 2}));
    CHECK_FALSE(valid(U3Irrep{1, 2, 0}));
    CHECK_FALSE(valid(U3Irrep{1, 0, -1}));
    CHECK(to_string(U3Irrep{3, 2, 0}) == "3,2,0");
    CHECK(parse_u3("3,2,0") == U3Irrep{3, 2, 0});
    CHECK_FALSE(parse_u3("3,2").has_value());
    CHECK_FALSE(parse_u3("a,b,c").has_value());
}

TEST_CASE("betweenness") {
    CHECK(valid(GelfandPattern{2, 1, 0, 2, 1, 1}));
    CHECK(valid(GelfandPattern{2, 1, 0, 1, 1, 1}));
    CHECK_FALSE(valid(GelfandPattern{2, 1, 0, 3, 0, 1})); // n12 > n13
    CHECK_FALSE(valid(GelfandPattern{2, 1, 0, 2, 2, 2})); // n22 > n23
    CHECK_FALSE(valid(GelfandPattern{2, 1, 0, 2, 0, 3})); // n11 > n12
    CHECK_FALSE(valid(GelfandPattern{2, 1, 0, 1, 2, 1})); // n12 < n22
}

TEST_CASE("weights") {
    const GelfandPattern p{3, 2, 0, 3, 1, 2};
    CHECK(weight1(p) == 2);
    CHECK(weight2(p) == 2); // n12 + n22 - n11
    CHECK(weight3(p) == 1); // total - n12 - n22
    CHECK(zrow1(p) == 2);
    CHECK(zrow2(p) == 4);
    CHECK(l0_weight(p) == 0); // 2 n11 - n12 - n22
    const GelfandPattern hw = highest_weight(U3Irrep{3, 2, 0});
    CHECK(hw == GelfandPattern{3, 2, 0, 3, 2, 3});
    CHECK(weight1(hw) == 3);
    CHECK(weight2(hw) == 2);
    CHECK(weight3(hw) == 0);
}

TEST_CASE("fundamental enumeration order") {
    const auto states = enumerate_patterns(U3Irrep{1, 0, 0});
    REQUIRE(states.size() == 3);
    CHECK(states[0] == GelfandPattern{1, 0, 0, 1, 0, 1});
    CHECK(states[1] == GelfandPattern{1, 0, 0, 1, 0, 0});
    CHECK(states[2] == GelfandPattern{1, 0, 0, 0, 0, 0});
}

TEST_CASE("enumeration properties") {
    for (const U3Irrep g : {U3Irrep{3, 2, 0}, U3Irrep{4, 2, 1}, U3Irrep{5, 0, 0}}) {
        const auto states = enumerate_patterns(g);
        REQUIRE(static_cast<long>(states.size()) == dimension(g));
        CHECK(states.front() == highest_weight(g));
        std::set<std::string> seen;
        for (size_t i = 0; i < states.size(); ++i) {
            CHECK(valid(states[i]));
            CHECK(states[i].irrep() == g);
            CHECK(seen.insert(to_string(states[i])).second);
            if (i > 0) {
                CHECK(canonical_less(states[i - 1], states[i]));
                // Primary sort key: total weight of the first two rows.
                const int prev = zrow1(states[i - 1]) + zrow2(states[i - 1]);
                const int cur = zrow1(states[i]) + zrow2(states[i]);
                CHECK(prev >= cur);
                if (prev == cur) CHECK(zrow2(states[i - 1]) >= zrow2(states[i]));
            }
        }
    }
}

TEST_CASE("pattern round trip") {
    const GelfandPattern p{4, 2, 1, 3, 2, 2};
    CHECK(to_string(p) == "4,2,1;3,2;2");
    CHECK(parse_pattern("4,2,1;3,2;2") == p);
    CHECK_FALSE(parse_pattern("4,2,1;3,2").has_value());
    CHECK_FALSE(parse_pattern("4,2,1,3,2,2").has_value());
    CHECK_FALSE(parse_pattern("").has_value());
}

TEST_CASE("basis lookup") {
    const IrrepBasis basis(U3Irrep{3, 1, 0});
    REQUIRE(basis.size() == dimension(U3Irrep{3, 1, 0}));
    for (int i = 0; i < basis.size(); ++i) CHECK(basis.index(basis.state(i)) == i);
    CHECK(basis.index(GelfandPattern{3, 1, 0, 9, 9, 9}) == -1);

    // Weight blocks partition the basis.
    long covered = 0;
    for (const auto& [z2, z1] : basis.weights()) {
        const auto& block = basis.weight_block(z2, z1);
        CHECK(!block.empty());
        for (int i : block) {
            CHECK(zrow2(basis.state(i)) == z2);
            CHECK(zrow1(basis.state(i)) == z1);
        }
        covered += static_cast<long>(block.size());
    }
    CHECK(covered == basis.size());
    CHECK(basis.weight_block(99, 99).empty());
    CHECK(basis.weight_block(-1, 0).empty());
}
