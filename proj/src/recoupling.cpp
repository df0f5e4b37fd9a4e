#include "u3/recoupling.hpp"

#include <unordered_map>

#include "u3/linalg.hpp"

namespace u3 {

namespace {

std::string ulabel(const char* kind, const U3Irrep& a, const U3Irrep& b, const U3Irrep& g,
                   const U3Irrep& c, const U3Irrep& x, const U3Irrep& y) {
    return std::string(kind) + "(" + to_string(a) + " " + to_string(b) + " " + to_string(g) +
           " " + to_string(c) + "; " + to_string(x) + ", " + to_string(y) + ")";
}

// Expansion terms of one coupled state grouped by the index of the second
// factor: i2 -> list of (i1, coefficient).
using ByRight = std::unordered_map<int, std::vector<std::pair<int, double>>>;

ByRight group_by_right(const CGTable& t, int state, int rho) {
    ByRight out;
    for (const CGTerm& term : t.terms(state, rho)) out[term.i2].emplace_back(term.i1, term.value);
    return out;
}

ByRight group_by_left(const CGTable& t, int state, int rho) {
    ByRight out;
    for (const CGTerm& term : t.terms(state, rho)) out[term.i1].emplace_back(term.i2, term.value);
    return out;
}

} // namespace

UTensor u_coefficients(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& g,
                       const U3Irrep& g3, const U3Irrep& g12, const U3Irrep& g23,
                       TableCache& cache) {
    UTensor out;
    out.g1 = g1;
    out.g2 = g2;
    out.g = g;
    out.g3 = g3;
    out.g12 = g12;
    out.g23 = g23;
    out.rho12_max = outer_multiplicity(g1, g2, g12);
    out.rho12_3_max = outer_multiplicity(g12, g3, g);
    out.rho23_max = outer_multiplicity(g2, g3, g23);
    out.rho1_23_max = outer_multiplicity(g1, g23, g);
    if (out.rho12_max == 0 || out.rho12_3_max == 0 || out.rho23_max == 0 ||
        out.rho1_23_max == 0)
        return out;

    const auto t1_23 = cache.table(g1, g23, g);
    const auto t12 = cache.table(g1, g2, g12);
    const auto t12_3 = cache.table(g12, g3, g);
    const auto t23 = cache.table(g2, g3, g23);
    const IrrepBasis& b1 = t1_23->basis1();

    // Match both coupling orders on the overlap <G1; highest(g23) | highest(g)>.
    // The G1 states that can contribute all sit in one weight block of g1.
    const GelfandPattern hw_g = highest_weight(g);
    const GelfandPattern hw_g23 = highest_weight(g23);
    const auto& block =
        b1.weight_block(zrow2(hw_g) - zrow2(hw_g23), zrow1(hw_g) - zrow1(hw_g23));
    std::unordered_map<int, int> row_of;
    for (int r = 0; r < static_cast<int>(block.size()); ++r) row_of.emplace(block[r], r);

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(block.size(), out.rho1_23_max);
    for (int r = 0; r < static_cast<int>(block.size()); ++r)
        for (int rho = 0; rho < out.rho1_23_max; ++rho)
            a(r, rho) = t1_23->coefficient(0, rho, block[r], 0);

    const std::string context = ulabel("U", g1, g2, g, g3, g12, g23);
    if (numerical_rank<double>(a, cache.tol()) < out.rho1_23_max)
        throw SingularSystem(context + ": overlap system is rank deficient");

    // Right-hand sides: the same overlaps evaluated in the (g1 g2)->g12,
    // (g12 g3)->g order, one column per (rho12, rho12_3, rho23).
    const int ncols = out.rho12_max * out.rho12_3_max * out.rho23_max;
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(block.size(), ncols);

    std::vector<ByRight> hw23_by_g3(out.rho23_max);
    for (int rho23 = 0; rho23 < out.rho23_max; ++rho23)
        hw23_by_g3[rho23] = group_by_right(*t23, 0, rho23);

    // Expansions of g12 states by the g2 index, built once per state used.
    std::unordered_map<long, ByRight> g12_by_g2;
    auto g12_terms = [&](int i12, int rho12) -> const ByRight& {
        const long key = static_cast<long>(i12) * out.rho12_max + rho12;
        auto it = g12_by_g2.find(key);
        if (it == g12_by_g2.end()) it = g12_by_g2.emplace(key, group_by_right(*t12, i12, rho12)).first;
        return it->second;
    };

    for (int rho12_3 = 0; rho12_3 < out.rho12_3_max; ++rho12_3) {
        for (const CGTerm& outer : t12_3->terms(0, rho12_3)) { // (i12, i3, c)
            for (int rho23 = 0; rho23 < out.rho23_max; ++rho23) {
                auto match = hw23_by_g3[rho23].find(outer.i2);
                if (match == hw23_by_g3[rho23].end()) continue;
                for (int rho12 = 0; rho12 < out.rho12_max; ++rho12) {
                    const ByRight& inner = g12_terms(outer.i1, rho12);
                    const int col = (rho12 * out.rho12_3_max + rho12_3) * out.rho23_max + rho23;
                    for (const auto& [i2, c23] : match->second) {
                        auto it = inner.find(i2);
                        if (it == inner.end()) continue;
                        for (const auto& [i1, c12] : it->second)
                            b(row_of.at(i1), col) += c12 * outer.value * c23;
                    }
                }
            }
        }
    }

    Eigen::MatrixXd x = solve_consistent<double>(a, b, cache.tol(), context);

    out.values.assign(static_cast<size_t>(ncols) * out.rho1_23_max, 0.0);
    for (int col = 0; col < ncols; ++col)
        for (int rho = 0; rho < out.rho1_23_max; ++rho)
            out.values[static_cast<size_t>(col) * out.rho1_23_max + rho] = x(rho, col);
    return out;
}

ZTensor z_coefficients(const U3Irrep& g2, const U3Irrep& g1, const U3Irrep& g,
                       const U3Irrep& g3, const U3Irrep& g12, const U3Irrep& g13,
                       TableCache& cache) {
    ZTensor out;
    out.g2 = g2;
    out.g1 = g1;
    out.g = g;
    out.g3 = g3;
    out.g12 = g12;
    out.g13 = g13;
    out.rho12_max = outer_multiplicity(g1, g2, g12);
    out.rho12_3_max = outer_multiplicity(g12, g3, g);
    out.rho13_max = outer_multiplicity(g1, g3, g13);
    out.rho13_2_max = outer_multiplicity(g13, g2, g);
    if (out.rho12_max == 0 || out.rho12_3_max == 0 || out.rho13_max == 0 ||
        out.rho13_2_max == 0)
        return out;

    const auto t13_2 = cache.table(g13, g2, g);
    const auto t12 = cache.table(g1, g2, g12);
    const auto t12_3 = cache.table(g12, g3, g);
    const auto t13 = cache.table(g1, g3, g13);
    const IrrepBasis& b2 = t13_2->basis2();

    // Match on the overlap <highest(g13); G2 | highest(g)> over one weight
    // block of g2.
    const GelfandPattern hw_g = highest_weight(g);
    const GelfandPattern hw_g13 = highest_weight(g13);
    const auto& block =
        b2.weight_block(zrow2(hw_g) - zrow2(hw_g13), zrow1(hw_g) - zrow1(hw_g13));
    std::unordered_map<int, int> row_of;
    for (int r = 0; r < static_cast<int>(block.size()); ++r) row_of.emplace(block[r], r);

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(block.size(), out.rho13_2_max);
    for (int r = 0; r < static_cast<int>(block.size()); ++r)
        for (int rho = 0; rho < out.rho13_2_max; ++rho)
            a(r, rho) = t13_2->coefficient(0, rho, 0, block[r]);

    const std::string context = ulabel("Z", g2, g1, g, g3, g12, g13);
    if (numerical_rank<double>(a, cache.tol()) < out.rho13_2_max)
        throw SingularSystem(context + ": overlap system is rank deficient");

    const int ncols = out.rho12_max * out.rho12_3_max * out.rho13_max;
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(block.size(), ncols);

    std::vector<ByRight> hw13_by_g3(out.rho13_max);
    for (int rho13 = 0; rho13 < out.rho13_max; ++rho13)
        hw13_by_g3[rho13] = group_by_right(*t13, 0, rho13);

    std::unordered_map<long, ByRight> g12_by_g1;
    auto g12_terms = [&](int i12, int rho12) -> const ByRight& {
        const long key = static_cast<long>(i12) * out.rho12_max + rho12;
        auto it = g12_by_g1.find(key);
        if (it == g12_by_g1.end()) it = g12_by_g1.emplace(key, group_by_left(*t12, i12, rho12)).first;
        return it->second;
    };

    for (int rho12_3 = 0; rho12_3 < out.rho12_3_max; ++rho12_3) {
        for (const CGTerm& outer : t12_3->terms(0, rho12_3)) { // (i12, i3, c)
            for (int rho13 = 0; rho13 < out.rho13_max; ++rho13) {
                auto match = hw13_by_g3[rho13].find(outer.i2);
                if (match == hw13_by_g3[rho13].end()) continue;
                for (int rho12 = 0; rho12 < out.rho12_max; ++rho12) {
                    const ByRight& inner = g12_terms(outer.i1, rho12);
                    const int col = (rho12 * out.rho12_3_max + rho12_3) * out.rho13_max + rho13;
                    for (const auto& [i1, c13] : match->second) {
                        auto it = inner.find(i1);
                        if (it == inner.end()) continue;
                        for (const auto& [i2, c12] : it->second)
                            b(row_of.at(i2), col) += c12 * outer.value * c13;
                    }
                }
            }
        }
    }

    Eigen::MatrixXd x = solve_consistent<double>(a, b, cache.tol(), context);

    out.values.assign(static_cast<size_t>(ncols) * out.rho13_2_max, 0.0);
    for (int col = 0; col < ncols; ++col)
        for (int rho = 0; rho < out.rho13_2_max; ++rho)
            out.values[static_cast<size_t>(col) * out.rho13_2_max + rho] = x(rho, col);
    return out;
}

NineU3 nine_u3(const U3Irrep& g1, const U3Irrep& g2, const U3Irrep& g12, const U3Irrep& g3,
               const U3Irrep& g4, const U3Irrep& g34, const U3Irrep& g13, const U3Irrep& g24,
               const U3Irrep& g, TableCache& cache) {
    NineU3 out;
    out.g1 = g1;
    out.g2 = g2;
    out.g12 = g12;
    out.g3 = g3;
    out.g4 = g4;
    out.g34 = g34;
    out.g13 = g13;
    out.g24 = g24;
    out.g = g;
    out.rho12_max = outer_multiplicity(g1, g2, g12);
    out.rho34_max = outer_multiplicity(g3, g4, g34);
    out.rho13_max = outer_multiplicity(g1, g3, g13);
    out.rho24_max = outer_multiplicity(g2, g4, g24);
    out.rho12_34_max = outer_multiplicity(g12, g34, g);
    out.rho13_24_max = outer_multiplicity(g13, g24, g);
    if (out.rho12_max == 0 || out.rho34_max == 0 || out.rho13_max == 0 || out.rho24_max == 0 ||
        out.rho12_34_max == 0 || out.rho13_24_max == 0)
        return out;

    const size_t total = static_cast<size_t>(out.rho12_max) * out.rho34_max * out.rho13_max *
                         out.rho24_max * out.rho12_34_max * out.rho13_24_max;
    out.values.assign(total, 0.0);

    // Sum over the intermediate irrep g0 of the three-irrep couplings
    // (g12 g3) and (g13 g2), which both must reach g through g4.
    for (const DecompositionEntry& entry : decompose(g12, g3)) {
        const U3Irrep& g0 = entry.coupled;
        const int r12_3 = entry.rho_max;
        const int r13_2 = outer_multiplicity(g13, g2, g0);
        const int r04 = outer_multiplicity(g0, g4, g);
        if (r13_2 == 0 || r04 == 0) continue;

        const UTensor u1 = u_coefficients(g13, g2, g, g4, g0, g24, cache);
        const ZTensor z0 = z_coefficients(g2, g1, g0, g3, g12, g13, cache);
        const UTensor u2 = u_coefficients(g12, g3, g, g4, g0, g34, cache);
        if (u1.empty() || z0.empty() || u2.empty()) continue;

        for (int r12 = 1; r12 <= out.rho12_max; ++r12)
            for (int r34 = 1; r34 <= out.rho34_max; ++r34)
                for (int r13 = 1; r13 <= out.rho13_max; ++r13)
                    for (int r24 = 1; r24 <= out.rho24_max; ++r24)
                        for (int ra = 1; ra <= out.rho12_34_max; ++ra)
                            for (int rb = 1; rb <= out.rho13_24_max; ++rb) {
                                double sum = 0.0;
                                for (int s2 = 1; s2 <= r13_2; ++s2)
                                    for (int s4 = 1; s4 <= r04; ++s4)
                                        for (int s3 = 1; s3 <= r12_3; ++s3)
                                            sum += u1(s2, s4, r24, rb) * z0(r12, s3, r13, s2) *
                                                   u2(s3, s4, r34, ra);
                                size_t i = r12 - 1;
                                i = i * out.rho34_max + (r34 - 1);
                                i = i * out.rho13_max + (r13 - 1);
                                i = i * out.rho24_max + (r24 - 1);
                                i = i * out.rho12_34_max + (ra - 1);
                                i = i * out.rho13_24_max + (rb - 1);
                                out.values[i] += sum;
                            }
    }
    return out;
}

} // namespace u3
