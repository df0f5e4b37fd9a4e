#include "u3/wigner.hpp"

#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include "u3/errors.hpp"

namespace u3 {

namespace {

double log_factorial(int n) {
    static std::vector<double> table{0.0, 0.0};
    while (static_cast<int>(table.size()) <= n)
        table.push_back(table.back() + std::log(static_cast<double>(table.size())));
    return table[n];
}

// Renders a pattern combo of a shift-free irrep as a dense vector over a
// (possibly shifted) basis; the shift adds m to all six pattern entries.
Eigen::VectorXd densify(const LinearCombo& combo, const IrrepBasis& basis, int shift) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(basis.size());
    for (const auto& [p, c] : combo) {
        GelfandPattern q = p;
        q.n13 += shift;
        q.n23 += shift;
        q.n33 += shift;
        q.n12 += shift;
        q.n22 += shift;
        q.n11 += shift;
        v(basis.index(q)) = c;
    }
    return v;
}

// Shared assembly state for reduced coefficients of one product s1 (x) s2:
// angular-momentum transforms of both factors and of each coupled irrep,
// plus dense lowered states of the first factor, all built on demand.
class Assembler {
  public:
    Assembler(const SU3Irrep& s1, const SU3Irrep& s2, TableCache& cache)
        : cache_(cache), lifted1_(lift(s1)), lifted2_(lift(s2)) {}

    const So3Transform& factor1(int L) { return transform(t1_, lifted1_, L); }
    const So3Transform& factor2(int L) { return transform(t2_, lifted2_, L); }

    const So3Transform& coupled(const U3Irrep& g, int L) {
        return transform(t3_, lift(su3_part(g)), L);
    }

    // |kappa1, L1, M> of the first factor over the basis of g1.
    const Eigen::VectorXd& lowered1(int L, int kappa, int M, const IrrepBasis& basis) {
        auto it = lowered_.find({L, kappa, M});
        if (it == lowered_.end())
            it = lowered_
                     .emplace(std::array<int, 3>{L, kappa, M},
                              densify(lowered_state(factor1(L), kappa, M), basis, 0))
                     .first;
        return it->second;
    }

    // <(s1) kappa1 L1; (s2) kappa2 L2 || g'' kappa3 L3>_rho with 0-based
    // kappa and rho indices.
    double reduced(const CGTable& table, int kappa1, int L1, int kappa2, int L2, int kappa3,
                   int L3, int rho) {
        if (L3 < std::abs(L1 - L2) || L3 > L1 + L2) return 0.0;
        const int gamma = L1 + L2 - L3;
        const int m1 = L1 - gamma;

        const Eigen::VectorXd& c1 = lowered1(L1, kappa1, m1, table.basis1());
        const So3Transform& f2 = factor2(L2);
        const So3Transform& f3 = coupled(table.coupled(), L3);
        const int shift = table.coupled().n33;

        // Contract the product-state overlap <c1 c2 | coupled state> with
        // the coupled-side angular-momentum row at M3 = L3.
        double acc = 0.0;
        for (int c = 0; c < static_cast<int>(f3.candidates.size()); ++c) {
            const double w3 = f3.rows(kappa3, c);
            if (w3 == 0.0) continue;
            GelfandPattern p3 = f3.pattern(c);
            p3.n13 += shift;
            p3.n23 += shift;
            p3.n33 += shift;
            p3.n12 += shift;
            p3.n22 += shift;
            p3.n11 += shift;
            const int s = table.coupled_basis().index(p3);
            double overlap = 0.0;
            for (const CGTerm& term : table.terms(s, rho)) {
                const double a = c1(term.i1);
                if (a == 0.0) continue;
                const GelfandPattern& p2 = table.basis2().state(term.i2);
                if (l0_weight(p2) != L2) continue;
                // Row of factor 2 at maximal projection: candidate lookup
                // via (q, t) = (n11 - L2, n22).
                const double b = row_value(f2, kappa2, p2.n11 - L2, p2.n22);
                if (b != 0.0) overlap += a * b * term.value;
            }
            acc += w3 * overlap;
        }

        const double pre = so3_cgc(L1, m1, L2, L2, L3, L3);
        if (std::abs(pre) < 1e-12)
            throw InternalMismatch("reduced coupling: vanishing projection coefficient at L1=" +
                                   std::to_string(L1) + " L2=" + std::to_string(L2) +
                                   " L3=" + std::to_string(L3));
        return acc / pre;
    }

  private:
    using Key = std::array<int, 3>;

    static double row_value(const So3Transform& t, int kappa, int q, int tt) {
        for (int c = 0; c < static_cast<int>(t.candidates.size()); ++c)
            if (t.candidates[c].q == q && t.candidates[c].t == tt) return t.rows(kappa, c);
        return 0.0;
    }

    const So3Transform& transform(std::map<Key, So3Transform>& store, const U3Irrep& reduced,
                                  int L) {
        const Key key{reduced.n13, reduced.n23, L};
        auto it = store.find(key);
        if (it == store.end())
            it = store.emplace(key, hw_transform(reduced, L, cache_.tol())).first;
        return it->second;
    }

    TableCache& cache_;
    U3Irrep lifted1_, lifted2_;
    std::map<Key, So3Transform> t1_, t2_, t3_;
    std::map<Key, Eigen::VectorXd> lowered_;
};

} // namespace

double so3_cgc(int j1, int m1, int j2, int m2, int J, int M) {
    if (m1 + m2 != M) return 0.0;
    if (J < std::abs(j1 - j2) || J > j1 + j2) return 0.0;
    if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J) return 0.0;

    const double log_delta = 0.5 * (log_factorial(j1 + j2 - J) + log_factorial(j1 - j2 + J) +
                                    log_factorial(-j1 + j2 + J) - log_factorial(j1 + j2 + J + 1));
    const double log_pre =
        0.5 * (std::log(2.0 * J + 1.0) + log_factorial(J + M) + log_factorial(J - M) +
               log_factorial(j1 - m1) + log_factorial(j1 + m1) + log_factorial(j2 - m2) +
               log_factorial(j2 + m2));

    const int kmin = std::max({0, j2 - J - m1, j1 - J + m2});
    const int kmax = std::min({j1 + j2 - J, j1 - m1, j2 + m2});
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double log_term = log_factorial(k) + log_factorial(j1 + j2 - J - k) +
                                log_factorial(j1 - m1 - k) + log_factorial(j2 + m2 - k) +
                                log_factorial(J - j2 + m1 + k) + log_factorial(J - j1 - m2 + k);
        const double term = std::exp(log_delta + log_pre - log_term);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

WignerTable wigner_table(const SU3Irrep& s1, const SU3Irrep& s2, TableCache& cache) {
    WignerTable out;
    out.s1 = s1;
    out.s2 = s2;
    out.tol = cache.tol();

    Assembler assembler(s1, s2, cache);
    const auto content1 = allowed_L(s1);
    const auto content2 = allowed_L(s2);

    for (const DecompositionEntry& entry : decompose(lift(s1), lift(s2))) {
        const auto table = cache.table(lift(s1), lift(s2), entry.coupled);
        const auto content3 = allowed_L(su3_part(entry.coupled));
        for (const auto& [L3, kmax3] : content3) {
            for (int kappa3 = 0; kappa3 < kmax3; ++kappa3) {
                for (const auto& [L1, kmax1] : content1) {
                    for (int kappa1 = 0; kappa1 < kmax1; ++kappa1) {
                        for (const auto& [L2, kmax2] : content2) {
                            if (L3 < std::abs(L1 - L2) || L3 > L1 + L2) continue;
                            for (int kappa2 = 0; kappa2 < kmax2; ++kappa2) {
                                for (int rho = 0; rho < entry.rho_max; ++rho) {
                                    const double value = assembler.reduced(
                                        *table, kappa1, L1, kappa2, L2, kappa3, L3, rho);
                                    out.entries.push_back({entry.coupled, rho + 1, kappa1 + 1,
                                                           L1, kappa2 + 1, L2, kappa3 + 1, L3,
                                                           value});
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

double reduced_wigner(const SU3Irrep& s1, int kappa1, int L1, const SU3Irrep& s2, int kappa2,
                      int L2, const U3Irrep& coupled, int kappa3, int L3, int rho,
                      TableCache& cache) {
    if (kappa1 < 1 || kappa2 < 1 || kappa3 < 1 || rho < 1)
        throw std::invalid_argument("reduced_wigner: kappa and rho labels are 1-based");
    const auto table = cache.table(lift(s1), lift(s2), coupled);
    if (rho > table->rho_max()) return 0.0;
    if (kappa1 > inner_multiplicity(lift(s1), L1) ||
        kappa2 > inner_multiplicity(lift(s2), L2) ||
        kappa3 > inner_multiplicity(lift(su3_part(coupled)), L3))
        return 0.0;
    Assembler assembler(s1, s2, cache);
    return assembler.reduced(*table, kappa1 - 1, L1, kappa2 - 1, L2, kappa3 - 1, L3, rho - 1);
}

double full_wigner(const SU3Irrep& s1, int kappa1, int L1, int M1, const SU3Irrep& s2, int kappa2,
                   int L2, int M2, const U3Irrep& coupled, int kappa3, int L3, int M3, int rho,
                   TableCache& cache) {
    const double geometric = so3_cgc(L1, M1, L2, M2, L3, M3);
    if (geometric == 0.0) return 0.0;
    return geometric * reduced_wigner(s1, kappa1, L1, s2, kappa2, L2, coupled, kappa3, L3, rho,
                                      cache);
}

} // namespace u3
