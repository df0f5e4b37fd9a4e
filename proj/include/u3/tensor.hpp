#pragma once

#include <vector>

#include "u3/irrep.hpp"

namespace u3 {

// One coupled irrep in a tensor-product decomposition, with its outer
// multiplicity.
struct DecompositionEntry {
    U3Irrep coupled;
    int rho_max = 0;

    friend bool operator==(const DecompositionEntry&, const DecompositionEntry&) = default;
};

// Littlewood-Richardson decomposition of g1 (x) g2 into U(3) irreps,
// restricted to at most three rows.  Entries are sorted by decreasing
// highest weight (lexicographically) and rho_max counts the valid skew
// tableaux.  The result satisfies
//   sum_i rho_max_i * dimension(coupled_i) = dimension(g1) * dimension(g2)
// exactly, and is symmetric under swapping g1 and g2.
std::vector<DecompositionEntry> decompose(const U3Irrep& g1, const U3Irrep& g2);

// Outer multiplicity of one coupled irrep in g1 (x) g2 (0 if absent).
int outer_multiplicity(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& coupled);

} // namespace u3
