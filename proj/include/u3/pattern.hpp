#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "u3/irrep.hpp"

namespace u3 {

// A triangular basis-state label for a U(3) irrep:
//
//   n13  n23  n33
//      n12  n22
//        n11
//
// subject to the betweenness conditions
//   n13 >= n12 >= n23,  n23 >= n22 >= n33,  n12 >= n11 >= n22.
struct GelfandPattern {
    int n13 = 0, n23 = 0, n33 = 0; // top row (the irrep label)
    int n12 = 0, n22 = 0;          // middle row
    int n11 = 0;                   // bottom row

    U3Irrep irrep() const { return {n13, n23, n33}; }

    friend bool operator==(const GelfandPattern&, const GelfandPattern&) = default;
};

bool valid(const GelfandPattern& p);

// Weight of E11, i.e. the number of quanta in the first single-particle state.
inline int weight1(const GelfandPattern& p) { return p.n11; }
// Weight of E22.
inline int weight2(const GelfandPattern& p) { return p.n12 + p.n22 - p.n11; }
// Weight of E33.
inline int weight3(const GelfandPattern& p) { return p.n13 + p.n23 + p.n33 - p.n12 - p.n22; }

// Row sums z1 = n11 and z2 = n12 + n22; together they determine the weight.
inline int zrow1(const GelfandPattern& p) { return p.n11; }
inline int zrow2(const GelfandPattern& p) { return p.n12 + p.n22; }

// Eigenvalue of L0 = E11 - E22 on this pattern.
inline int l0_weight(const GelfandPattern& p) { return 2 * p.n11 - p.n12 - p.n22; }

// The unique pattern of maximal weight: both lower rows repeat the top row.
inline GelfandPattern highest_weight(const U3Irrep& g) {
    return {g.n13, g.n23, g.n33, g.n13, g.n23, g.n13};
}

// Canonical order: decreasing total row sum z2+z1, then decreasing z2, then
// decreasing (n12, n22, n11) lexicographically.  The highest-weight pattern
// always sorts first.  Patterns of different irreps compare by top row.
bool canonical_less(const GelfandPattern& a, const GelfandPattern& b);

struct CanonicalLess {
    bool operator()(const GelfandPattern& a, const GelfandPattern& b) const {
        return canonical_less(a, b);
    }
};

// All patterns of an irrep in canonical order.
std::vector<GelfandPattern> enumerate_patterns(const U3Irrep& g);

std::string to_string(const GelfandPattern& p);                  // "n13,n23,n33;n12,n22;n11"
std::optional<GelfandPattern> parse_pattern(const std::string&); // inverse of to_string

// Packs the six entries (each assumed < 1024) into one integer for hashing.
std::uint64_t pack(const GelfandPattern& p);

// An enumerated irrep basis with constant-time pattern lookup and an index
// of the states in each weight block (z2, z1), preserving canonical order.
class IrrepBasis {
  public:
    explicit IrrepBasis(const U3Irrep& g);

    const U3Irrep& irrep() const { return irrep_; }
    const std::vector<GelfandPattern>& states() const { return states_; }
    int size() const { return static_cast<int>(states_.size()); }
    const GelfandPattern& state(int i) const { return states_[i]; }

    // Index of a pattern in states(), or -1 if it does not belong.
    int index(const GelfandPattern& p) const;

    // Indices of the states with row sums (z2, z1), canonical order.
    const std::vector<int>& weight_block(int z2, int z1) const;

    // All (z2, z1) pairs that occur, ordered by decreasing z2+z1 then
    // decreasing z2 (the canonical block order).
    const std::vector<std::pair<int, int>>& weights() const { return weights_; }

  private:
    U3Irrep irrep_;
    std::vector<GelfandPattern> states_;
    std::unordered_map<std::uint64_t, int> index_;
    std::unordered_map<std::uint64_t, std::vector<int>> blocks_;
    std::vector<std::pair<int, int>> weights_;
};

} // namespace u3
