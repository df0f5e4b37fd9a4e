#pragma once

#include <vector>

#include "u3/canonical_cgc.hpp"
#include "u3/physical.hpp"
#include "u3/recoupling.hpp"

namespace u3 {

// SO(3) Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> for integer
// angular momenta, Condon-Shortley phases.  Zero outside the triangle and
// projection rules.
double so3_cgc(int j1, int m1, int j2, int m2, int J, int M);

// One reduced coupling coefficient
//   < (l1,m1) kappa1 L1; (l2,m2) kappa2 L2 || coupled kappa3 L3 >_rho
// connecting angular-momentum-coupled product states to the coupled-irrep
// angular-momentum basis.  kappa and rho indices are 1-based.
struct ReducedWignerEntry {
    U3Irrep coupled;
    int rho = 1;
    int kappa1 = 1, L1 = 0;
    int kappa2 = 1, L2 = 0;
    int kappa3 = 1, L3 = 0;
    double value = 0.0;
};

// All reduced coefficients for one SU(3) product s1 (x) s2, grouped the way
// they are computed: coupled irreps in decomposition order, then L3, kappa3,
// L1, kappa1, L2, kappa2, rho ascending.
struct WignerTable {
    SU3Irrep s1, s2;
    double tol = 1e-10;
    std::vector<ReducedWignerEntry> entries;
};

WignerTable wigner_table(const SU3Irrep& s1, const SU3Irrep& s2, TableCache& cache);

// Single reduced coefficient; `coupled` is a U(3) label whose SU(3) part
// names the coupled irrep (the overall shift must equal the difference in
// total quanta).  Builds (or reuses from `cache`) everything it needs.
double reduced_wigner(const SU3Irrep& s1, int kappa1, int L1, const SU3Irrep& s2, int kappa2,
                      int L2, const U3Irrep& coupled, int kappa3, int L3, int rho,
                      TableCache& cache);

// Coupling coefficient with explicit projections: the SO(3) coefficient
// <L1 M1; L2 M2 | L3 M3> times the reduced coefficient.
double full_wigner(const SU3Irrep& s1, int kappa1, int L1, int M1, const SU3Irrep& s2, int kappa2,
                   int L2, int M2, const U3Irrep& coupled, int kappa3, int L3, int M3, int rho,
                   TableCache& cache);

} // namespace u3
