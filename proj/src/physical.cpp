#include "u3/physical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "u3/errors.hpp"
#include "u3/linalg.hpp"

namespace u3 {

int int_p(double x) { return x < 0 ? 0 : static_cast<int>(std::floor(x)); }

int int_m(double x) { return static_cast<int>(std::ceil(x)); }

namespace {

void require_shift_free(const U3Irrep& g, const char* who) {
    if (!valid(g) || g.n33 != 0)
        throw std::invalid_argument(std::string(who) + ": label " + to_string(g) +
                                    " must be a valid shift-free irrep");
}

} // namespace

int inner_multiplicity(const U3Irrep& normalized, int L) {
    require_shift_free(normalized, "inner_multiplicity");
    // The counting formula is valid on the angular-momentum range of the
    // irrep, 0 <= L <= n13; outside it the multiplicity is zero.
    if (L < 0 || L > normalized.n13) return 0;
    const int n13 = normalized.n13, n23 = normalized.n23;
    const int count = int_p((n13 - L) / 2.0) - int_p((n13 - n23 + 1 - L) / 2.0) -
                      int_p((n23 + 1 - L) / 2.0) + 1;
    return std::max(count, 0);
}

std::map<int, int> allowed_L(const SU3Irrep& s) {
    const int lambda = s.lambda, mu = s.mu;
    const int low = std::min(lambda, mu), high = std::max(lambda, mu);
    std::map<int, int> content;
    for (int K = low; K >= 0; K -= 2) {
        if (K == 0) {
            for (int L = high; L >= 0; L -= 2) ++content[L];
        } else {
            for (int L = K; L <= K + high; ++L) ++content[L];
        }
    }
    // Cross-check against the closed-form count.
    const U3Irrep g = lift(s);
    for (int L = 0; L <= g.n13; ++L) {
        const int direct = inner_multiplicity(g, L);
        const auto it = content.find(L);
        const int banded = it == content.end() ? 0 : it->second;
        if (direct != banded)
            throw InternalMismatch("allowed_L(" + std::to_string(lambda) + "," +
                                   std::to_string(mu) + "): K-band count " +
                                   std::to_string(banded) + " != direct count " +
                                   std::to_string(direct) + " at L=" + std::to_string(L));
    }
    return content;
}

bool so3_dimension_check(const U3Irrep& normalized) {
    require_shift_free(normalized, "so3_dimension_check");
    long sum = 0;
    for (int L = 0; L <= normalized.n13; ++L)
        sum += static_cast<long>(inner_multiplicity(normalized, L)) * (2 * L + 1);
    return sum == dimension(normalized);
}

std::pair<int, int> q_bounds(int L, int t, int n13, int n23) {
    const int qmin = std::max(t, int_m((t - L + n23) / 2.0));
    // Plain floor (not the clipped integer part): for L > n13 the range
    // must come out empty, not clipped to q = 0.
    const int qmax = static_cast<int>(std::floor((n13 - L + t) / 2.0));
    return {qmin, qmax};
}

So3Transform hw_transform(const U3Irrep& normalized, int L, double tol) {
    require_shift_free(normalized, "hw_transform");
    So3Transform out;
    out.irrep = normalized;
    out.L = L;
    for (int t = 0; t <= normalized.n23; ++t) {
        const auto [qmin, qmax] = q_bounds(L, t, normalized.n13, normalized.n23);
        for (int q = qmin; q <= qmax; ++q) out.candidates.push_back({q, t});
    }
    const int ncand = static_cast<int>(out.candidates.size());

    // A maximal-projection state must be annihilated by the raising
    // operator L+ = sqrt(2) (E13 + E32); collect its images grouped by
    // target pattern.
    std::map<GelfandPattern, int, CanonicalLess> row_of;
    struct Entry {
        int row, col;
        double value;
    };
    std::vector<Entry> entries;
    for (int col = 0; col < ncand; ++col) {
        const GelfandPattern p = out.pattern(col);
        for (auto [gi, gj] : {std::pair{1, 3}, std::pair{3, 2}}) {
            for (const auto& [target, amp] : apply_generator(gi, gj, p)) {
                auto [it, fresh] = row_of.try_emplace(target, static_cast<int>(row_of.size()));
                entries.push_back({it->second, col, std::sqrt(2.0) * amp});
            }
        }
    }
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(static_cast<int>(row_of.size()), ncand);
    for (const Entry& e : entries) p(e.row, e.col) += e.value;

    const Eigen::MatrixXd ns = fix_phase(gram_schmidt(null_space(p, tol), tol));
    const int expected = inner_multiplicity(normalized, L);
    if (ns.cols() != expected)
        throw MultiplicityMismatch("hw_transform(" + to_string(normalized) + ", L=" +
                                   std::to_string(L) + "): found " + std::to_string(ns.cols()) +
                                   " states, expected " + std::to_string(expected));
    out.rows = ns.transpose();
    return out;
}

LinearCombo lowered_state(const So3Transform& t, int kappa, int M) {
    if (kappa < 0 || kappa >= t.kappa_max() || M < -t.L || M > t.L)
        throw std::invalid_argument("lowered_state: labels out of range");
    LinearCombo combo;
    for (int c = 0; c < static_cast<int>(t.candidates.size()); ++c) {
        const double v = t.rows(kappa, c);
        if (v != 0.0) combo[t.pattern(c)] = v;
    }
    // Step M down one unit at a time with L- = sqrt(2) (E31 + E23),
    // dividing by sqrt((L + Mk)(L - Mk + 1)) so the state stays normalized.
    for (int mk = t.L; mk > M; --mk) {
        LinearCombo next;
        const double denom = std::sqrt(static_cast<double>(t.L + mk) * (t.L - mk + 1));
        for (const auto& [p, c] : combo) {
            for (auto [gi, gj] : {std::pair{3, 1}, std::pair{2, 3}}) {
                for (const auto& [target, amp] : apply_generator(gi, gj, p)) {
                    const double value = std::sqrt(2.0) * amp * c / denom;
                    if (value != 0.0) next[target] += value;
                }
            }
        }
        combo = std::move(next);
    }
    return combo;
}

std::vector<So3Transform> all_transforms(const U3Irrep& normalized, double tol) {
    require_shift_free(normalized, "all_transforms");
    std::vector<So3Transform> out;
    for (int L = 0; L <= normalized.n13; ++L)
        if (inner_multiplicity(normalized, L) > 0) out.push_back(hw_transform(normalized, L, tol));
    return out;
}

std::pair<std::vector<So3State>, Eigen::MatrixXd>
physical_basis_matrix(const IrrepBasis& basis, double tol) {
    // Work on the shift-free part; a nonzero overall shift m adds m to all
    // six pattern entries and leaves every amplitude unchanged.
    const auto [su3, shift] = normalize(basis.irrep());
    const U3Irrep reduced = lift(su3);

    std::vector<So3State> labels;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(basis.size(), basis.size());
    int row = 0;
    for (const So3Transform& t : all_transforms(reduced, tol)) {
        for (int kappa = 0; kappa < t.kappa_max(); ++kappa) {
            for (int M = t.L; M >= -t.L; --M) {
                labels.push_back({t.L, kappa + 1, M});
                for (const auto& [p, c] : lowered_state(t, kappa, M)) {
                    GelfandPattern q = p;
                    q.n13 += shift;
                    q.n23 += shift;
                    q.n33 += shift;
                    q.n12 += shift;
                    q.n22 += shift;
                    q.n11 += shift;
                    m(row, basis.index(q)) = c;
                }
                ++row;
            }
        }
    }
    if (row != basis.size())
        throw InternalMismatch("physical_basis_matrix(" + to_string(basis.irrep()) +
                               "): assembled " + std::to_string(row) + " states for dimension " +
                               std::to_string(basis.size()));
    return {std::move(labels), std::move(m)};
}

} // namespace u3
