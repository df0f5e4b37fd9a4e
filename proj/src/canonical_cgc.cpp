#include "u3/canonical_cgc.hpp"

#include <algorithm>
#include <cmath>

#include "u3/linalg.hpp"

namespace u3 {

namespace {

// Coefficients below this are treated as structural zeros when a table is
// stored; well separated from every verification tolerance.
constexpr double kPrune = 1e-14;

std::string label(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& coupled) {
    return to_string(g1) + " x " + to_string(g2) + " -> " + to_string(coupled);
}

} // namespace

std::vector<std::pair<int, int>> product_candidates(const IrrepBasis& b1, const IrrepBasis& b2,
                                                    int z2, int z1) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [z2a, z1a] : b1.weights()) {
        const auto& left = b1.weight_block(z2a, z1a);
        const auto& right = b2.weight_block(z2 - z2a, z1 - z1a);
        for (int i1 : left)
            for (int i2 : right) out.emplace_back(i1, i2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<std::vector<std::pair<int, int>>, Eigen::MatrixXd>
highest_weight_cgc(const IrrepBasis& b1, const IrrepBasis& b2, const U3Irrep& coupled,
                   double tol) {
    const GelfandPattern hw = highest_weight(coupled);
    auto cands = product_candidates(b1, b2, zrow2(hw), zrow1(hw));

    // Rows of the constraint matrix are indexed by the product states hit
    // by the two raising generators; a highest-weight combination must be
    // annihilated by both.  The two generators raise to different weight
    // blocks, so keying rows by the image pair alone never merges an E12
    // equation with an E23 equation.
    struct Entry {
        int row, col;
        double value;
    };
    std::map<std::pair<int, int>, int> row_of;
    std::vector<Entry> entries;
    auto add = [&](int i1, int i2, int col, double value) {
        auto [it, fresh] = row_of.try_emplace(std::make_pair(i1, i2),
                                              static_cast<int>(row_of.size()));
        entries.push_back({it->second, col, value});
    };
    for (int col = 0; col < static_cast<int>(cands.size()); ++col) {
        const auto [i1, i2] = cands[col];
        for (int gen = 0; gen < 2; ++gen) {
            const int gi = gen == 0 ? 1 : 2, gj = gen == 0 ? 2 : 3;
            for (const auto& [t, a] : apply_generator(gi, gj, b1.state(i1)))
                add(b1.index(t), i2, col, a);
            for (const auto& [t, a] : apply_generator(gi, gj, b2.state(i2)))
                add(i1, b2.index(t), col, a);
        }
    }
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<int>(row_of.size()),
                                              static_cast<int>(cands.size()));
    for (const Entry& t : entries) p(t.row, t.col) += t.value;

    Eigen::MatrixXd ns = fix_phase(gram_schmidt(null_space(p, tol), tol));
    const int lr = outer_multiplicity(b1.irrep(), b2.irrep(), coupled);
    if (ns.cols() != lr)
        throw MultiplicityMismatch(label(b1.irrep(), b2.irrep(), coupled) +
                                   ": null space dimension " + std::to_string(ns.cols()) +
                                   " != outer multiplicity " + std::to_string(lr));
    return {std::move(cands), std::move(ns)};
}

CGTable::CGTable(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& coupled, double tol)
    : g1_(g1), g2_(g2), coupled_(coupled), tol_(tol),
      basis1_(std::make_shared<IrrepBasis>(g1)), basis2_(std::make_shared<IrrepBasis>(g2)),
      coupled_basis_(std::make_shared<IrrepBasis>(coupled)) {
    build();
}

void CGTable::build() {
    const IrrepBasis &b1 = *basis1_, &b2 = *basis2_, &bc = *coupled_basis_;

    auto [hw_cands, hw_vecs] = highest_weight_cgc(b1, b2, coupled_, tol_);
    rho_max_ = static_cast<int>(hw_vecs.cols());
    terms_.assign(bc.size(), std::vector<std::vector<CGTerm>>(rho_max_));
    if (rho_max_ == 0) return;

    auto store = [&](int s, int rho, const std::vector<std::pair<int, int>>& cands,
                     const auto& vec) {
        auto& list = terms_[s][rho];
        for (int k = 0; k < static_cast<int>(cands.size()); ++k)
            if (std::abs(vec(k)) > kPrune) list.push_back({cands[k].first, cands[k].second, vec(k)});
    };
    for (int rho = 0; rho < rho_max_; ++rho) store(0, rho, hw_cands, hw_vecs.col(rho));

    // Walk the weight blocks downward.  Every state in a block is reached
    // by lowering the already-known states one level up with E21 (from the
    // block at z1+1) or E32 (from the block at z2+1), which gives an
    // overdetermined consistent linear system per block, shared by all
    // multiplicity sheets.
    const auto& weights = bc.weights();
    for (size_t w = 1; w < weights.size(); ++w) {
        const auto [z2, z1] = weights[w];
        const auto& targets = bc.weight_block(z2, z1);
        const auto cands = product_candidates(b1, b2, z2, z1);
        const int ncand = static_cast<int>(cands.size());
        std::map<std::pair<int, int>, int> cand_col;
        for (int k = 0; k < ncand; ++k) cand_col.emplace(cands[k], k);

        std::vector<std::pair<int, int>> parents; // (generator flag, state)
        for (int p : bc.weight_block(z2, z1 + 1)) parents.emplace_back(0, p); // E21
        for (int p : bc.weight_block(z2 + 1, z1)) parents.emplace_back(1, p); // E32

        const int nrows = static_cast<int>(parents.size());
        const int ntarg = static_cast<int>(targets.size());
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nrows, ntarg);
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(nrows, static_cast<long>(ncand) * rho_max_);
        for (int r = 0; r < nrows; ++r) {
            const auto [flag, p] = parents[r];
            const int gi = flag == 0 ? 2 : 3, gj = flag == 0 ? 1 : 2;
            for (const auto& [t, amp] : apply_generator(gi, gj, bc.state(p))) {
                const int idx = bc.index(t);
                for (int c = 0; c < ntarg; ++c)
                    if (targets[c] == idx) a(r, c) = amp;
            }
            for (int rho = 0; rho < rho_max_; ++rho) {
                for (const CGTerm& term : terms_[p][rho]) {
                    for (const auto& [t, amp] : apply_generator(gi, gj, b1.state(term.i1))) {
                        auto it = cand_col.find({b1.index(t), term.i2});
                        b(r, static_cast<long>(rho) * ncand + it->second) += term.value * amp;
                    }
                    for (const auto& [t, amp] : apply_generator(gi, gj, b2.state(term.i2))) {
                        auto it = cand_col.find({term.i1, b2.index(t)});
                        b(r, static_cast<long>(rho) * ncand + it->second) += term.value * amp;
                    }
                }
            }
        }

        Eigen::MatrixXd x = solve_consistent<double>(
            a, b, tol_, label(g1_, g2_, coupled_) + " block z2=" + std::to_string(z2) +
                            " z1=" + std::to_string(z1));

        for (int c = 0; c < ntarg; ++c) {
            for (int rho = 0; rho < rho_max_; ++rho) {
                Eigen::VectorXd v =
                    x.row(c).segment(static_cast<long>(rho) * ncand, ncand).transpose();
                const double norm = v.norm();
                if (std::abs(norm - 1.0) > 1e-6)
                    throw ResidualTooLarge(label(g1_, g2_, coupled_) + ": state " +
                                           to_string(bc.state(targets[c])) +
                                           " came out with norm " + std::to_string(norm));
                v /= norm;
                store(targets[c], rho, cands, v);
            }
        }
    }
}

double CGTable::coefficient(int s, int rho, int i1, int i2) const {
    const auto& list = terms_[s][rho];
    auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(i1, i2),
                               [](const CGTerm& t, const std::pair<int, int>& k) {
                                   return std::make_pair(t.i1, t.i2) < k;
                               });
    if (it == list.end() || it->i1 != i1 || it->i2 != i2) return 0.0;
    return it->value;
}

CGTable table_from_parts(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& coupled, double tol,
                         int rho_max, std::vector<std::vector<std::vector<CGTerm>>> terms) {
    CGTable t;
    t.g1_ = g1;
    t.g2_ = g2;
    t.coupled_ = coupled;
    t.tol_ = tol;
    t.rho_max_ = rho_max;
    t.basis1_ = std::make_shared<IrrepBasis>(g1);
    t.basis2_ = std::make_shared<IrrepBasis>(g2);
    t.coupled_basis_ = std::make_shared<IrrepBasis>(coupled);
    t.terms_ = std::move(terms);
    return t;
}

double equivariance_residual(const CGTable& table, int i, int j) {
    const IrrepBasis &b1 = table.basis1(), &b2 = table.basis2(), &bc = table.coupled_basis();
    double worst = 0.0;
    for (int s = 0; s < bc.size(); ++s) {
        const LinearCombo action = apply_generator(i, j, bc.state(s));
        for (int rho = 0; rho < table.rho_max(); ++rho) {
            std::map<std::pair<int, int>, double> diff;
            for (const auto& [t, amp] : action) {
                const int idx = bc.index(t);
                for (const CGTerm& term : table.terms(idx, rho))
                    diff[{term.i1, term.i2}] += amp * term.value;
            }
            for (const CGTerm& term : table.terms(s, rho)) {
                for (const auto& [t, amp] : apply_generator(i, j, b1.state(term.i1)))
                    diff[{b1.index(t), term.i2}] -= term.value * amp;
                for (const auto& [t, amp] : apply_generator(i, j, b2.state(term.i2)))
                    diff[{term.i1, b2.index(t)}] -= term.value * amp;
            }
            for (const auto& [key, value] : diff) worst = std::max(worst, std::abs(value));
        }
    }
    return worst;
}

std::shared_ptr<const CGTable> TableCache::table(const U3Irrep& g1, const U3Irrep& g2,
                                                 const U3Irrep& coupled) {
    const std::array<int, 9> key{g1.n13,      g1.n23,      g1.n33,      g2.n13, g2.n23,
                                 g2.n33,      coupled.n13, coupled.n23, coupled.n33};
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_.find(key);
    if (it == tables_.end())
        it = tables_.emplace(key, std::make_shared<CGTable>(g1, g2, coupled, tol_)).first;
    return it->second;
}

} // namespace u3
