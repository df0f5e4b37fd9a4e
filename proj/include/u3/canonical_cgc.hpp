#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <Eigen/Dense>

#include "u3/generators.hpp"
#include "u3/pattern.hpp"
#include "u3/tensor.hpp"

namespace u3 {

// One product-basis contribution to a coupled state: basis indices into the
// two factor bases plus the coefficient.
struct CGTerm {
    int i1 = 0, i2 = 0;
    double value = 0.0;
};

// Clebsch-Gordan table for one coupling g1 (x) g2 -> coupled.  For every
// coupled basis state s and every outer-multiplicity sheet rho it stores
// the expansion of |coupled, s; rho> over product states |g1, i1> |g2, i2>,
// as a sparse list of terms sorted by (i1, i2).
//
// Invariants (up to the numerical tolerance the table was built with):
//  * every (s, rho) expansion has unit norm;
//  * expansions of the same s on different rho sheets are orthogonal;
//  * only product states passing the weight selection rule appear;
//  * applying a coupled-irrep generator to the left-hand side and the
//    product-rule generator to the right-hand side agree (equivariance).
class CGTable {
  public:
    CGTable(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& coupled, double tol = 1e-10);

    const U3Irrep& g1() const { return g1_; }
    const U3Irrep& g2() const { return g2_; }
    const U3Irrep& coupled() const { return coupled_; }
    double tol() const { return tol_; }
    int rho_max() const { return rho_max_; }

    const IrrepBasis& basis1() const { return *basis1_; }
    const IrrepBasis& basis2() const { return *basis2_; }
    const IrrepBasis& coupled_basis() const { return *coupled_basis_; }

    // Terms of coupled state s on sheet rho (rho is 0-based internally).
    const std::vector<CGTerm>& terms(int s, int rho) const { return terms_[s][rho]; }

    // Coefficient of the product state (i1, i2) in coupled state s, sheet
    // rho; zero when the pair does not contribute.
    double coefficient(int s, int rho, int i1, int i2) const;

  private:
    friend CGTable table_from_parts(const U3Irrep&, const U3Irrep&, const U3Irrep&, double, int,
                                    std::vector<std::vector<std::vector<CGTerm>>>);
    CGTable() = default;

    void build();

    U3Irrep g1_, g2_, coupled_;
    double tol_ = 1e-10;
    int rho_max_ = 0;
    std::shared_ptr<const IrrepBasis> basis1_, basis2_, coupled_basis_;
    // terms_[s][rho] lists the expansion of coupled state s, sheet rho.
    std::vector<std::vector<std::vector<CGTerm>>> terms_;
};

// Rebuilds a table object from stored parts (used by the table cache).
CGTable table_from_parts(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& coupled, double tol,
                         int rho_max, std::vector<std::vector<std::vector<CGTerm>>> terms);

// Weight selection rule: a product pair can contribute to a coupled pattern
// only when the bottom row sums match and the middle row sums match.
inline bool selection_ok(const GelfandPattern& p1, const GelfandPattern& p2,
                         const GelfandPattern& coupled) {
    return zrow1(p1) + zrow1(p2) == zrow1(coupled) && zrow2(p1) + zrow2(p2) == zrow2(coupled);
}

// All product pairs (i1, i2) whose weights add up to (z2, z1), ordered by
// (i1, i2).
std::vector<std::pair<int, int>> product_candidates(const IrrepBasis& b1, const IrrepBasis& b2,
                                                    int z2, int z1);

// Expansion coefficients of the highest-weight coupled states over the
// candidate product pairs: one orthonormal, phase-fixed column per
// multiplicity sheet.  Returns the candidate list and the coefficient
// matrix (candidates x rho_max).  An empty result (zero columns) signals
// rho_max = 0.  Throws MultiplicityMismatch when the null-space dimension
// disagrees with the Littlewood-Richardson multiplicity.
std::pair<std::vector<std::pair<int, int>>, Eigen::MatrixXd>
highest_weight_cgc(const IrrepBasis& b1, const IrrepBasis& b2, const U3Irrep& coupled,
                   double tol = 1e-10);

// Maximum equivariance defect of a table for generator E_ij: apply the
// generator to each coupled state both through the coupled irrep and
// through the product rule and measure the largest coefficient difference.
double equivariance_residual(const CGTable& table, int i, int j);

// Process-wide memo for Clebsch-Gordan tables at a fixed tolerance.
// Recoupling and reduced-coupling computations reuse many tables; the
// cache hands out shared pointers to immutable tables.
class TableCache {
  public:
    explicit TableCache(double tol = 1e-10) : tol_(tol) {}

    double tol() const { return tol_; }

    std::shared_ptr<const CGTable> table(const U3Irrep& g1, const U3Irrep& g2,
                                         const U3Irrep& coupled);

  private:
    double tol_;
    std::mutex mutex_;
    std::map<std::array<int, 9>, std::shared_ptr<const CGTable>> tables_;
};

} // namespace u3
