#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "u3/generators.hpp"
#include "u3/irrep.hpp"
#include "u3/pattern.hpp"

namespace u3 {

// Truncated integer parts used by the angular-momentum counting formulas:
// int_p floors non-negative arguments and clips negative ones to zero;
// int_m is the ceiling.
int int_p(double x);
int int_m(double x);

// Number of times angular momentum L occurs in the SU(3) irrep given by a
// shift-free U(3) label [n13, n23, 0].  Zero outside 0 <= L <= n13.
int inner_multiplicity(const U3Irrep& normalized, int L);

// Angular-momentum content of the SU(3) irrep (lambda, mu) as a map
// L -> multiplicity, built from the K-band rule and cross-checked against
// inner_multiplicity (InternalMismatch on disagreement).
std::map<int, int> allowed_L(const SU3Irrep& s);

// True iff the multiplicity-weighted sum over 2L+1 recovers the dimension.
bool so3_dimension_check(const U3Irrep& normalized);

// Inclusive range of the pattern parameter q for given L and t; empty when
// q_min > q_max.  The bounds are exactly the betweenness conditions for the
// pattern (n12, n22; n11) = (L + 2q - t, t; L + q).
std::pair<int, int> q_bounds(int L, int t, int n13, int n23);

// One candidate pattern label (q, t) for an angular-momentum state.
struct QT {
    int q = 0, t = 0;

    friend bool operator==(const QT&, const QT&) = default;
};

// Orthonormal transformation from the canonical basis to angular-momentum
// states of one L in a shift-free irrep.  Row kappa (0-based) of `rows`
// holds the expansion of the highest-projection state |kappa, L, M=L> over
// the candidate patterns; candidates are ordered by t then q, and the
// pattern for (q, t) is (n13, n23, 0; L + 2q - t, t; L + q).
struct So3Transform {
    U3Irrep irrep; // n33 == 0
    int L = 0;
    std::vector<QT> candidates;
    Eigen::MatrixXd rows; // kappa_max x candidates.size()

    int kappa_max() const { return static_cast<int>(rows.rows()); }

    GelfandPattern pattern(int c) const {
        const QT& qt = candidates[c];
        return {irrep.n13, irrep.n23, 0, L + 2 * qt.q - qt.t, qt.t, L + qt.q};
    }
};

// Builds the M = L transformation for one L: candidates from q_bounds, one
// orthonormal phase-fixed row per null vector of the raising condition
// L+ |state> = 0.  Throws MultiplicityMismatch if the number of rows found
// differs from inner_multiplicity.
So3Transform hw_transform(const U3Irrep& normalized, int L, double tol = 1e-10);

// The normalized angular-momentum state |kappa, L, M> obtained by lowering
// row `kappa` (0-based) of `t` with L- = sqrt(2) (E31 + E23), dividing by
// sqrt((L + M_k)(L - M_k + 1)) at each step so the result stays unit norm.
LinearCombo lowered_state(const So3Transform& t, int kappa, int M);

// All angular-momentum transforms of a shift-free irrep, L ascending,
// only L with nonzero multiplicity.
std::vector<So3Transform> all_transforms(const U3Irrep& normalized, double tol = 1e-10);

// One row label of the full canonical -> (kappa, L, M) basis change.
struct So3State {
    int L = 0, kappa = 1, M = 0; // kappa is 1-based
};

// Full orthogonal basis-change matrix of one irrep (any shift): row r holds
// the expansion of angular-momentum state `labels[r]` over the canonical
// basis of `basis`.  Labels are ordered by L ascending, kappa ascending,
// M descending.
std::pair<std::vector<So3State>, Eigen::MatrixXd>
physical_basis_matrix(const IrrepBasis& basis, double tol = 1e-10);

} // namespace u3
