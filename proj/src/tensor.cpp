#include "u3/tensor.hpp"

#include <algorithm>
#include <array>

namespace u3 {

namespace {

// Counts the fillings of the skew shape c/a with content b that obey the
// Littlewood-Richardson rules: rows weakly increase, columns strictly
// increase, and the reverse reading word (right to left, top row first) is
// a lattice word.  With three rows the filling is fixed by the per-row
// label counts, which keeps the search tiny; every candidate count vector
// is then verified against the explicit rules.
int lr_fillings(const U3Irrep& a, const U3Irrep& c, const U3Irrep& b) {
    const int r1 = c.n13 - a.n13, r2 = c.n23 - a.n23, r3 = c.n33 - a.n33;
    if (r1 < 0 || r2 < 0 || r3 < 0) return 0;

    int count = 0;
    // Row 1 can only hold 1's (any larger label would head the reading
    // word).  Rows 2 and 3 hold {1,2} and {1,2,3}; k[r][l] is the number
    // of labels l+1 in row r+1.
    const int k11 = r1;
    for (int k21 = 0; k21 <= r2; ++k21) {
        const int k22 = r2 - k21;
        for (int k31 = 0; k31 <= r3; ++k31) {
            for (int k32 = 0; k31 + k32 <= r3; ++k32) {
                const int k33 = r3 - k31 - k32;
                if (k11 + k21 + k31 != b.n13 || k22 + k32 != b.n23 || k33 != b.n33) continue;

                // Labels laid out along each row: 1's first, then 2's,
                // then 3's; cell columns are 1-based.
                auto label2 = [&](int col) { // row 2, cols a.n23+1 .. c.n23
                    return col <= a.n23 + k21 ? 1 : 2;
                };
                auto label3 = [&](int col) { // row 3, cols a.n33+1 .. c.n33
                    if (col <= a.n33 + k31) return 1;
                    return col <= a.n33 + k31 + k32 ? 2 : 3;
                };

                // Column strictness between filled cells.
                bool ok = true;
                for (int col = a.n13 + 1; col <= c.n23 && ok; ++col)
                    if (col > a.n23 && label2(col) <= 1) ok = false;
                for (int col = a.n23 + 1; col <= c.n33 && ok; ++col)
                    if (col > a.n33 && label3(col) <= label2(col)) ok = false;
                if (!ok) continue;

                // Lattice condition on the reverse reading word.
                std::array<int, 4> seen{};
                auto read = [&](int label) {
                    ++seen[label];
                    return label == 1 || seen[label] <= seen[label - 1];
                };
                for (int col = c.n13; col > a.n13 && ok; --col) ok = read(1);
                for (int col = c.n23; col > a.n23 && ok; --col) ok = read(label2(col));
                for (int col = c.n33; col > a.n33 && ok; --col) ok = read(label3(col));
                if (ok) ++count;
            }
        }
    }
    return count;
}

} // namespace

int outer_multiplicity(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& coupled) {
    if (!valid(g1) || !valid(g2) || !valid(coupled)) return 0;
    if (total_quanta(coupled) != total_quanta(g1) + total_quanta(g2)) return 0;
    // The rule is symmetric; attach the smaller irrep as content for a
    // slightly smaller search.
    if (total_quanta(g2) <= total_quanta(g1)) return lr_fillings(g1, coupled, g2);
    return lr_fillings(g2, coupled, g1);
}

std::vector<DecompositionEntry> decompose(const U3Irrep& g1, const U3Irrep& g2) {
    std::vector<DecompositionEntry> out;
    const int total = total_quanta(g1) + total_quanta(g2);
    for (int c1 = g1.n13 + g2.n13; c1 >= g1.n13; --c1) {
        for (int c2 = std::min(c1, total - c1); c2 >= 0; --c2) {
            const int c3 = total - c1 - c2;
            if (c3 < 0 || c3 > c2) continue;
            const U3Irrep coupled{c1, c2, c3};
            const int rho = outer_multiplicity(g1, g2, coupled);
            if (rho > 0) out.push_back({coupled, rho});
        }
    }
    // The loops emit decreasing (c1, c2, c3) lexicographically already.
    return out;
}

} // namespace u3
