#pragma once

#include <map>

#include <Eigen/Dense>

#include "u3/pattern.hpp"

namespace u3 {

// A finite linear combination of patterns of one irrep, keyed in canonical
// order.  Terms with amplitude exactly zero are never stored.
using LinearCombo = std::map<GelfandPattern, double, CanonicalLess>;

// Action of the U(3) generator E_ij (1-based i, j) on a basis pattern.
// The diagonal generators are multiplication by the pattern weight; the
// raising and lowering generators move one quantum between rows, with
// amplitudes that are square roots of products of integer betweenness
// slacks.  Amplitude factors are evaluated one by one with a zero
// short-circuit, so terms whose target pattern is invalid contribute
// nothing and no zero denominators are ever touched.
LinearCombo apply_generator(int i, int j, const GelfandPattern& p);

// Matrix of E_ij on the full irrep basis: column s holds the expansion of
// E_ij applied to basis state s, rows in the same canonical order.
Eigen::MatrixXd generator_matrix(int i, int j, const IrrepBasis& basis);

} // namespace u3
