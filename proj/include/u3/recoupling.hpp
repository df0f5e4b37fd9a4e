#pragma once

#include <vector>

#include "u3/canonical_cgc.hpp"
#include "u3/irrep.hpp"

namespace u3 {

// Recoupling coefficients U(g1 g2 g g3; g12 rho12 rho12_3, g23 rho23 rho1_23)
// relating the coupling order ((g1 g2) g3) -> g to (g1 (g2 g3)) -> g.
// Values form a dense tensor over the four multiplicity indices; fixing
// (rho12, rho12_3) and running over (rho23, rho1_23) -- or vice versa --
// gives the rows/columns of an orthogonal matrix once all intermediate
// irreps are collected.
struct UTensor {
    U3Irrep g1, g2, g, g3, g12, g23;
    int rho12_max = 0, rho12_3_max = 0, rho23_max = 0, rho1_23_max = 0;
    std::vector<double> values; // indexed via operator()

    bool empty() const { return values.empty(); }

    // All multiplicity indices are 1-based, matching the usual labelling.
    double operator()(int rho12, int rho12_3, int rho23, int rho1_23) const {
        int i = ((rho12 - 1) * rho12_3_max + (rho12_3 - 1)) * rho23_max + (rho23 - 1);
        return values[static_cast<size_t>(i) * rho1_23_max + (rho1_23 - 1)];
    }
};

// Recoupling coefficients Z(g2 g1 g g3; g12 rho12 rho12_3, g13 rho13 rho13_2)
// relating ((g1 g2) g3) -> g to ((g1 g3) g2) -> g.
struct ZTensor {
    U3Irrep g2, g1, g, g3, g12, g13;
    int rho12_max = 0, rho12_3_max = 0, rho13_max = 0, rho13_2_max = 0;
    std::vector<double> values;

    bool empty() const { return values.empty(); }

    double operator()(int rho12, int rho12_3, int rho13, int rho13_2) const {
        int i = ((rho12 - 1) * rho12_3_max + (rho12_3 - 1)) * rho13_max + (rho13 - 1);
        return values[static_cast<size_t>(i) * rho13_2_max + (rho13_2 - 1)];
    }
};

// 9-(U(3)) coefficients for the simultaneous recoupling of four irreps,
//
//    | g1   g2   g12  rho12   |
//    | g3   g4   g34  rho34   |
//    | g13  g24  g    rho13_24|
//    | rho13 rho24 rho12_34   |
//
// stored densely over the six multiplicity indices.
struct NineU3 {
    U3Irrep g1, g2, g12, g3, g4, g34, g13, g24, g;
    int rho12_max = 0, rho34_max = 0, rho13_max = 0, rho24_max = 0;
    int rho12_34_max = 0, rho13_24_max = 0;
    std::vector<double> values;

    bool empty() const { return values.empty(); }

    double operator()(int rho12, int rho34, int rho13, int rho24, int rho12_34,
                      int rho13_24) const {
        size_t i = rho12 - 1;
        i = i * rho34_max + (rho34 - 1);
        i = i * rho13_max + (rho13 - 1);
        i = i * rho24_max + (rho24 - 1);
        i = i * rho12_34_max + (rho12_34 - 1);
        return values[i * rho13_24_max + (rho13_24 - 1)];
    }
};

// Computes the full U tensor by matching the two coupling orders on a
// single weight block of g1 against the highest-weight states of g and
// g23.  Throws SingularSystem when the determining system is rank
// deficient and ResidualTooLarge when it is inconsistent.
UTensor u_coefficients(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& g,
                       const U3Irrep& g3, const U3Irrep& g12, const U3Irrep& g23,
                       TableCache& cache);

// Computes the full Z tensor analogously, sweeping a weight block of g2.
ZTensor z_coefficients(const U3Irrep& g2, const U3Irrep& g1, const U3Irrep& g,
                       const U3Irrep& g3, const U3Irrep& g12, const U3Irrep& g13,
                       TableCache& cache);

// Assembles the 9-(U(3)) tensor from U and Z tensors by summing over the
// intermediate irrep g0 of the three-irrep couplings.
NineU3 nine_u3(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& g12, const U3Irrep& g3,
               const U3Irrep& g4, const U3Irrep& g34, const U3Irrep& g13, const U3Irrep& g24,
               const U3Irrep& g, TableCache& cache);

} // namespace u3
