#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace u3 {

// A U(3) irrep labelled by its highest weight [n13, n23, n33],
// a weakly decreasing triple of non-negative integers.
struct U3Irrep {
    int n13 = 0, n23 = 0, n33 = 0;

    friend auto operator<=>(const U3Irrep&, const U3Irrep&) = default;
};

// An SU(3) irrep in Elliott labels (lambda, mu).
struct SU3Irrep {
    int lambda = 0, mu = 0;

    friend auto operator<=>(const SU3Irrep&, const SU3Irrep&) = default;
};

inline bool valid(const U3Irrep& g) {
    return g.n13 >= g.n23 && g.n23 >= g.n33 && g.n33 >= 0;
}

inline bool valid(const SU3Irrep& s) { return s.lambda >= 0 && s.mu >= 0; }

inline int total_quanta(const U3Irrep& g) { return g.n13 + g.n23 + g.n33; }

// Exact integer dimension (the product of the first two factors is always
// even, so the division by 2 is exact).
inline long dimension(const U3Irrep& g) {
    long a = 1 + g.n13 - g.n23;
    long b = 1 + g.n23 - g.n33;
    long c = 2 + g.n13 - g.n33;
    return a * b * c / 2;
}

inline long dimension(const SU3Irrep& s) {
    long a = 1 + s.lambda;
    long b = 1 + s.mu;
    long c = 2 + s.lambda + s.mu;
    return a * b * c / 2;
}

inline SU3Irrep su3_part(const U3Irrep& g) { return {g.n13 - g.n23, g.n23 - g.n33}; }

// Splits a U(3) irrep into its SU(3) part and the overall shift m, so that
// [n13,n23,n33] = [lambda+mu, mu, 0] + m * [1,1,1].
inline std::pair<SU3Irrep, int> normalize(const U3Irrep& g) {
    return {su3_part(g), g.n33};
}

// The U(3) irrep with the given SU(3) labels and zero shift.
inline U3Irrep lift(const SU3Irrep& s) { return {s.lambda + s.mu, s.mu, 0}; }

std::string to_string(const U3Irrep& g);                  // "n13,n23,n33"
std::optional<U3Irrep> parse_u3(const std::string& text); // inverse of to_string

} // namespace u3
