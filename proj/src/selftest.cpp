#include "u3/selftest.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "u3/canonical_cgc.hpp"
#include "u3/linalg.hpp"
#include "u3/physical.hpp"
#include "u3/recoupling.hpp"
#include "u3/render.hpp"
#include "u3/table_io.hpp"
#include "u3/wigner.hpp"

namespace u3 {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<U3Irrep> irreps_by_quanta(int maxq) {
    std::vector<U3Irrep> out;
    for (int total = 0; total <= maxq; ++total)
        for (int n13 = total; n13 >= 0; --n13)
            for (int n23 = std::min(n13, total - n13); n23 >= 0; --n23) {
                const int n33 = total - n13 - n23;
                if (n33 >= 0 && n33 <= n23) out.push_back({n13, n23, n33});
            }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

// Labels of the angular-momentum basis in the row order produced by
// physical_basis_matrix.
std::vector<So3State> so3_labels(const SU3Irrep& s) {
    std::vector<So3State> out;
    for (const auto& [L, kmax] : allowed_L(s))
        for (int kappa = 1; kappa <= kmax; ++kappa)
            for (int M = L; M >= -L; --M) out.push_back({L, kappa, M});
    return out;
}

// Square basis-change matrix from the product of canonical bases to the
// coupled-and-angular-momentum basis, assembled from a reduced-coefficient
// table: rows = product angular-momentum pairs, columns = (coupled irrep,
// rho, coupled angular-momentum state).
Eigen::MatrixXd wigner_matrix(const WignerTable& table) {
    const std::vector<So3State> rows1 = so3_labels(table.s1);
    const std::vector<So3State> rows2 = so3_labels(table.s2);
    const long nrows = static_cast<long>(rows1.size()) * rows2.size();

    std::map<std::tuple<int, int, int>, long> row1_of, row2_of;
    for (long i = 0; i < static_cast<long>(rows1.size()); ++i)
        row1_of[{rows1[i].L, rows1[i].kappa, rows1[i].M}] = i;
    for (long i = 0; i < static_cast<long>(rows2.size()); ++i)
        row2_of[{rows2[i].L, rows2[i].kappa, rows2[i].M}] = i;

    // Column layout: coupled irreps in decomposition order, rho sheets,
    // then angular-momentum labels of the coupled irrep.
    const auto entries = decompose(lift(table.s1), lift(table.s2));
    std::map<std::array<int, 3>, long> coupled_base;
    std::map<std::array<int, 3>, std::map<std::tuple<int, int, int>, long>> col3_of;
    long ncols = 0;
    for (const auto& d : entries) {
        const std::array<int, 3> key{d.coupled.n13, d.coupled.n23, d.coupled.n33};
        coupled_base[key] = ncols;
        auto& within = col3_of[key];
        const auto labels = so3_labels(su3_part(d.coupled));
        for (long i = 0; i < static_cast<long>(labels.size()); ++i)
            within[{labels[i].L, labels[i].kappa, labels[i].M}] = i;
        ncols += d.rho_max * static_cast<long>(labels.size());
    }

    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(nrows, ncols);
    for (const ReducedWignerEntry& e : table.entries) {
        const std::array<int, 3> key{e.coupled.n13, e.coupled.n23, e.coupled.n33};
        const auto& within = col3_of[key];
        const long dim3 = static_cast<long>(within.size());
        for (int m1 = -e.L1; m1 <= e.L1; ++m1) {
            for (int m2 = -e.L2; m2 <= e.L2; ++m2) {
                const int m3 = m1 + m2;
                if (m3 < -e.L3 || m3 > e.L3) continue;
                const double geom = so3_cgc(e.L1, m1, e.L2, m2, e.L3, m3);
                if (geom == 0.0) continue;
                const long row = row1_of.at({e.L1, e.kappa1, m1}) * rows2.size() +
                                 row2_of.at({e.L2, e.kappa2, m2});
                const long col = coupled_base.at(key) + (e.rho - 1) * dim3 +
                                 within.at({e.L3, e.kappa3, m3});
                w(row, col) += geom * e.value;
            }
        }
    }
    return w;
}

// Independent construction of the same basis change: Kronecker product of
// the factor basis changes, times the coupling tables, times the coupled
// basis change, following the canonical route throughout.
Eigen::MatrixXd wigner_oracle_matrix(const SU3Irrep& s1, const SU3Irrep& s2, TableCache& cache) {
    const IrrepBasis b1(lift(s1)), b2(lift(s2));
    const auto [labels1, t1] = physical_basis_matrix(b1, cache.tol());
    const auto [labels2, t2] = physical_basis_matrix(b2, cache.tol());
    const long nrows = static_cast<long>(b1.size()) * b2.size();

    const auto entries = decompose(lift(s1), lift(s2));
    long ncols = 0;
    for (const auto& d : entries) ncols += d.rho_max * dimension(d.coupled);

    Eigen::MatrixXd w(nrows, ncols);
    long base = 0;
    for (const auto& d : entries) {
        const auto table = cache.table(lift(s1), lift(s2), d.coupled);
        const IrrepBasis bc(d.coupled);
        const auto [labels3, t3] = physical_basis_matrix(bc, cache.tol());
        // c(product, coupled state) for each rho, in the canonical bases.
        for (int rho = 0; rho < d.rho_max; ++rho) {
            // Rotate both factor indices of every coupled-state expansion,
            // then rotate the coupled index.
            Eigen::MatrixXd half(nrows, bc.size());
            for (int s = 0; s < bc.size(); ++s) {
                Eigen::MatrixXd grid = Eigen::MatrixXd::Zero(b2.size(), b1.size());
                for (const CGTerm& term : table->terms(s, rho))
                    grid(term.i2, term.i1) = term.value;
                const Eigen::MatrixXd m = t2 * grid * t1.transpose();
                for (long p1 = 0; p1 < b1.size(); ++p1)
                    for (long p2 = 0; p2 < b2.size(); ++p2)
                        half(p1 * b2.size() + p2, s) = m(p2, p1);
            }
            w.block(0, base, nrows, bc.size()) = half * t3.transpose();
            base += bc.size();
        }
    }
    return w;
}

CheckResult run_one(const char* name, const std::function<std::string()>& body) {
    CheckResult result;
    result.name = name;
    const auto start = Clock::now();
    try {
        result.detail = body();
        result.passed = true;
    } catch (const std::exception& e) {
        result.detail = e.what();
        result.passed = false;
    }
    result.seconds = elapsed(start);
    return result;
}

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

} // namespace

CheckResult check_dimensions_and_enumeration() {
    return run_one("dimension-enumeration", [] {
        long irreps = 0;
        for (int n13 = 0; n13 <= 10; ++n13) {
            for (int n23 = 0; n23 <= n13; ++n23) {
                for (int n33 = 0; n33 <= n23; ++n33) {
                    const U3Irrep g{n13, n23, n33};
                    ++irreps;
                    const auto patterns = enumerate_patterns(g);
                    require(static_cast<long>(patterns.size()) == dimension(g),
                            to_string(g) + ": enumeration disagrees with dimension");
                    require(patterns.front() == highest_weight(g),
                            to_string(g) + ": first pattern is not the highest weight");
                    for (size_t i = 0; i < patterns.size(); ++i) {
                        require(valid(patterns[i]), to_string(g) + ": invalid pattern emitted");
                        if (i > 0)
                            require(canonical_less(patterns[i - 1], patterns[i]),
                                    to_string(g) + ": canonical order violated");
                    }
                }
            }
        }
        // Brute-force cross-check of the betweenness filter on a subrange.
        for (int n13 = 0; n13 <= 4; ++n13) {
            for (int n23 = 0; n23 <= n13; ++n23) {
                for (int n33 = 0; n33 <= n23; ++n33) {
                    const U3Irrep g{n13, n23, n33};
                    long brute = 0;
                    for (int n12 = 0; n12 <= n13; ++n12)
                        for (int n22 = 0; n22 <= n13; ++n22)
                            for (int n11 = 0; n11 <= n13; ++n11)
                                if (valid(GelfandPattern{n13, n23, n33, n12, n22, n11})) ++brute;
                    require(brute == dimension(g), to_string(g) + ": brute-force count differs");
                }
            }
        }
        require(dimension(U3Irrep{3, 2, 0}) == 15, "dim [3,2,0] != 15");
        require(dimension(U3Irrep{10, 5, 0}) == 216, "dim [10,5,0] != 216");
        require(dimension(SU3Irrep{1, 1}) == 8, "dim (1,1) != 8");
        return std::to_string(irreps) + " irreps enumerated and verified";
    });
}

CheckResult check_generator_algebra() {
    return run_one("generator-algebra", [] {
        double worst = 0.0;
        long checked = 0;
        for (int n33 = 0; n33 <= 2; ++n33) {
            for (int n23 = n33; n23 <= n33 + 12; ++n23) {
                for (int n13 = n23; n13 <= n23 + 12; ++n13) {
                    const U3Irrep g{n13, n23, n33};
                    if (dimension(g) > 50) continue;
                    ++checked;
                    const IrrepBasis basis(g);
                    Eigen::MatrixXd e[4][4];
                    for (int i = 1; i <= 3; ++i)
                        for (int j = 1; j <= 3; ++j) e[i][j] = generator_matrix(i, j, basis);

                    // Lowering operators are the transposes of the raisings.
                    for (int i = 1; i <= 3; ++i)
                        for (int j = 1; j <= 3; ++j)
                            worst = std::max(worst,
                                             (e[i][j] - e[j][i].transpose()).cwiseAbs().maxCoeff());

                    // Commutators: [E_ab, E_cd] = d_bc E_ad - d_da E_cb.
                    for (int a = 1; a <= 3; ++a)
                        for (int b = 1; b <= 3; ++b)
                            for (int c = 1; c <= 3; ++c)
                                for (int d = 1; d <= 3; ++d) {
                                    Eigen::MatrixXd lhs = e[a][b] * e[c][d] - e[c][d] * e[a][b];
                                    if (b == c) lhs -= e[a][d];
                                    if (d == a) lhs += e[c][b];
                                    worst = std::max(worst, lhs.cwiseAbs().maxCoeff());
                                }

                    // The trace part acts as the total quanta.
                    Eigen::MatrixXd total = e[1][1] + e[2][2] + e[3][3] -
                                            static_cast<double>(total_quanta(g)) *
                                                Eigen::MatrixXd::Identity(basis.size(),
                                                                          basis.size());
                    worst = std::max(worst, total.cwiseAbs().maxCoeff());

                    // The highest-weight pattern is annihilated by raisings.
                    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}})
                        require(apply_generator(i, j, highest_weight(g)).empty(),
                                to_string(g) + ": highest weight not annihilated");
                }
            }
        }
        require(worst <= 1e-12, "generator algebra residual " + std::to_string(worst));
        return std::to_string(checked) + " irreps, worst residual " + fmt(worst);
    });
}

CheckResult check_multiplicities(const SelftestOptions& opts) {
    return run_one("outer-multiplicity", [&] {
        const auto universe = irreps_by_quanta(opts.max_quanta);
        std::map<std::array<int, 3>, std::shared_ptr<IrrepBasis>> bases;
        auto basis = [&](const U3Irrep& g) {
            auto& slot = bases[{g.n13, g.n23, g.n33}];
            if (!slot) slot = std::make_shared<IrrepBasis>(g);
            return slot;
        };
        long pairs = 0, couplings = 0;
        for (const U3Irrep& g1 : universe) {
            for (const U3Irrep& g2 : universe) {
                if (dimension(g1) * dimension(g2) > opts.max_product_dim) continue;
                ++pairs;
                const auto dec = decompose(g1, g2);
                require(dec == decompose(g2, g1), "decomposition not symmetric");
                long sum = 0;
                for (const auto& d : dec) sum += d.rho_max * dimension(d.coupled);
                require(sum == dimension(g1) * dimension(g2),
                        to_string(g1) + " x " + to_string(g2) + ": dimension sum " +
                            std::to_string(sum));
                for (const auto& d : dec) {
                    ++couplings;
                    // Throws MultiplicityMismatch if the null-space dimension
                    // differs from the tableau count.
                    highest_weight_cgc(*basis(g1), *basis(g2), d.coupled, opts.tol);
                }
            }
        }
        require(outer_multiplicity({2, 1, 0}, {2, 1, 0}, {3, 2, 1}) == 2,
                "[2,1,0] x [2,1,0] -> [3,2,1] should have multiplicity 2");
        return std::to_string(pairs) + " pairs, " + std::to_string(couplings) +
               " couplings matched";
    });
}

CheckResult check_cgc_tables(const SelftestOptions& opts) {
    return run_one("coupling-tables", [&] {
        const auto universe = irreps_by_quanta(opts.max_quanta);
        long tables = 0;
        double worst_norm = 0.0, worst_equi = 0.0, worst_unitary = 0.0;
        for (const U3Irrep& g1 : universe) {
            for (const U3Irrep& g2 : universe) {
                if (dimension(g1) * dimension(g2) > opts.max_product_dim) continue;
                const auto dec = decompose(g1, g2);
                std::vector<CGTable> all;
                all.reserve(dec.size());
                for (const auto& d : dec) all.emplace_back(g1, g2, d.coupled, opts.tol);
                tables += static_cast<long>(all.size());

                const IrrepBasis &b1 = all.front().basis1(), &b2 = all.front().basis2();
                for (const CGTable& t : all) {
                    // Norms, cross-sheet orthogonality, selection purity.
                    for (int s = 0; s < t.coupled_basis().size(); ++s) {
                        const GelfandPattern& target = t.coupled_basis().state(s);
                        for (int rho = 0; rho < t.rho_max(); ++rho) {
                            double norm2 = 0.0;
                            for (const CGTerm& term : t.terms(s, rho)) {
                                norm2 += term.value * term.value;
                                require(selection_ok(b1.state(term.i1), b2.state(term.i2),
                                                     target),
                                        "selection rule violated in stored table");
                            }
                            worst_norm = std::max(worst_norm, std::abs(norm2 - 1.0));
                            for (int rho2 = rho + 1; rho2 < t.rho_max(); ++rho2) {
                                double dot = 0.0;
                                for (const CGTerm& term : t.terms(s, rho))
                                    dot += term.value * t.coefficient(s, rho2, term.i1, term.i2);
                                worst_norm = std::max(worst_norm, std::abs(dot));
                            }
                        }
                    }
                    // Equivariance for every generator.
                    for (int i = 1; i <= 3; ++i)
                        for (int j = 1; j <= 3; ++j)
                            worst_equi = std::max(worst_equi, equivariance_residual(t, i, j));
                }

                // Per-weight unitarity across all coupled irreps: product
                // states of one weight map orthogonally onto coupled states
                // of that weight.
                std::map<std::pair<int, int>, std::vector<Eigen::VectorXd>> columns;
                std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>> slot;
                for (const CGTable& t : all) {
                    for (int s = 0; s < t.coupled_basis().size(); ++s) {
                        const GelfandPattern& target = t.coupled_basis().state(s);
                        const std::pair<int, int> w{zrow2(target), zrow1(target)};
                        auto& index = slot[w];
                        if (index.empty()) {
                            const auto cands = product_candidates(b1, b2, w.first, w.second);
                            for (int k = 0; k < static_cast<int>(cands.size()); ++k)
                                index.emplace(cands[k], k);
                        }
                        for (int rho = 0; rho < t.rho_max(); ++rho) {
                            Eigen::VectorXd v = Eigen::VectorXd::Zero(slot[w].size());
                            for (const CGTerm& term : t.terms(s, rho))
                                v(slot[w].at({term.i1, term.i2})) = term.value;
                            columns[w].push_back(std::move(v));
                        }
                    }
                }
                for (const auto& [w, cols] : columns) {
                    const long n = static_cast<long>(cols.size());
                    require(n == static_cast<long>(cols.front().size()),
                            "weight block is not square: completeness violated");
                    Eigen::MatrixXd m(cols.front().size(), n);
                    for (long c = 0; c < n; ++c) m.col(c) = cols[c];
                    const double d1 =
                        (m.transpose() * m - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
                    const double d2 =
                        (m * m.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
                    worst_unitary = std::max({worst_unitary, d1, d2});
                }
            }
        }
        require(worst_norm <= 1e-10, "normalization residual " + std::to_string(worst_norm));
        require(worst_equi <= 1e-10, "equivariance residual " + std::to_string(worst_equi));
        require(worst_unitary <= 1e-10, "unitarity residual " + std::to_string(worst_unitary));
        return std::to_string(tables) + " tables; norm " + fmt(worst_norm) + ", equivariance " +
               fmt(worst_equi) + ", unitarity " + fmt(worst_unitary);
    });
}

CheckResult check_recoupling(const SelftestOptions& opts) {
    return run_one("recoupling", [&] {
        TableCache cache(opts.tol);
        const auto universe = irreps_by_quanta(std::min(opts.max_quanta, 4));
        const U3Irrep trivial{0, 0, 0};
        double worst_u = 0.0, worst_z = 0.0, worst_nine = 0.0, worst_id = 0.0;
        long sets = 0, nine_sets = 0;

        for (const U3Irrep& g1 : universe) {
            for (const U3Irrep& g2 : universe) {
                const auto dec12 = decompose(g1, g2);
                for (const U3Irrep& g3 : universe) {
                    // All couplings (g1 g2) g3 -> g grouped by g.
                    std::map<std::array<int, 3>, std::vector<std::pair<U3Irrep, int>>> routes;
                    for (const auto& d12 : dec12)
                        for (const auto& d : decompose(d12.coupled, g3))
                            routes[{d.coupled.n13, d.coupled.n23, d.coupled.n33}].emplace_back(
                                d12.coupled, d12.rho_max * d.rho_max);

                    for (const auto& [key, via12] : routes) {
                        const U3Irrep g{key[0], key[1], key[2]};
                        ++sets;
                        long total = 0;
                        for (const auto& [g12, count] : via12) total += count;

                        // U matrix: rows (g12, rho12, rho12_3), columns
                        // (g23, rho23, rho1_23).
                        Eigen::MatrixXd mu(total, total);
                        long col0 = 0;
                        for (const auto& d23 : decompose(g2, g3)) {
                            const int r1_23 = outer_multiplicity(g1, d23.coupled, g);
                            if (r1_23 == 0) continue;
                            long row0 = 0;
                            for (const auto& [g12, count] : via12) {
                                const UTensor u =
                                    u_coefficients(g1, g2, g, g3, g12, d23.coupled, cache);
                                require(!u.empty(), "missing U tensor in sweep");
                                for (int r12 = 1; r12 <= u.rho12_max; ++r12)
                                    for (int r123 = 1; r123 <= u.rho12_3_max; ++r123)
                                        for (int r23 = 1; r23 <= u.rho23_max; ++r23)
                                            for (int r = 1; r <= u.rho1_23_max; ++r)
                                                mu(row0 + (r12 - 1) * u.rho12_3_max + (r123 - 1),
                                                   col0 + (r23 - 1) * u.rho1_23_max + (r - 1)) =
                                                    u(r12, r123, r23, r);
                                row0 += count;
                            }
                            require(row0 == total, "U row count mismatch");
                            col0 += static_cast<long>(d23.rho_max) * r1_23;
                        }
                        require(col0 == total, "U column count mismatch: completeness violated");
                        const double du = (mu * mu.transpose() -
                                           Eigen::MatrixXd::Identity(total, total))
                                              .cwiseAbs()
                                              .maxCoeff();
                        const double du2 = (mu.transpose() * mu -
                                            Eigen::MatrixXd::Identity(total, total))
                                               .cwiseAbs()
                                               .maxCoeff();
                        worst_u = std::max({worst_u, du, du2});

                        // Z matrix: rows (g12, rho12, rho12_3), columns
                        // (g13, rho13, rho13_2).
                        Eigen::MatrixXd mz(total, total);
                        col0 = 0;
                        for (const auto& d13 : decompose(g1, g3)) {
                            const int r13_2 = outer_multiplicity(d13.coupled, g2, g);
                            if (r13_2 == 0) continue;
                            long row0 = 0;
                            for (const auto& [g12, count] : via12) {
                                const ZTensor z =
                                    z_coefficients(g2, g1, g, g3, g12, d13.coupled, cache);
                                require(!z.empty(), "missing Z tensor in sweep");
                                for (int r12 = 1; r12 <= z.rho12_max; ++r12)
                                    for (int r123 = 1; r123 <= z.rho12_3_max; ++r123)
                                        for (int r13 = 1; r13 <= z.rho13_max; ++r13)
                                            for (int r = 1; r <= z.rho13_2_max; ++r)
                                                mz(row0 + (r12 - 1) * z.rho12_3_max + (r123 - 1),
                                                   col0 + (r13 - 1) * z.rho13_2_max + (r - 1)) =
                                                    z(r12, r123, r13, r);
                                row0 += count;
                            }
                            col0 += static_cast<long>(d13.rho_max) * r13_2;
                        }
                        require(col0 == total, "Z column count mismatch: completeness violated");
                        const double dz = (mz * mz.transpose() -
                                           Eigen::MatrixXd::Identity(total, total))
                                              .cwiseAbs()
                                              .maxCoeff();
                        const double dz2 = (mz.transpose() * mz -
                                            Eigen::MatrixXd::Identity(total, total))
                                               .cwiseAbs()
                                               .maxCoeff();
                        worst_z = std::max({worst_z, dz, dz2});
                    }
                }
            }
        }

        // A trivial third irrep collapses U to the identity.
        for (const U3Irrep& g1 : universe) {
            for (const U3Irrep& g2 : universe) {
                for (const auto& d12 : decompose(g1, g2)) {
                    const UTensor u =
                        u_coefficients(g1, g2, d12.coupled, trivial, d12.coupled, g2, cache);
                    for (int r12 = 1; r12 <= u.rho12_max; ++r12)
                        for (int r = 1; r <= u.rho1_23_max; ++r)
                            worst_id = std::max(worst_id,
                                                std::abs(u(r12, 1, 1, r) - (r12 == r ? 1.0 : 0.0)));
                }
            }
        }

        // The four-irrep recoupling with a trivial fourth label reduces to
        // the corresponding Z tensor.
        const auto small = irreps_by_quanta(3);
        for (const U3Irrep& g1 : small) {
            for (const U3Irrep& g2 : small) {
                for (const U3Irrep& g3 : small) {
                    for (const auto& d12 : decompose(g1, g2)) {
                        for (const auto& d : decompose(d12.coupled, g3)) {
                            const U3Irrep& g = d.coupled;
                            for (const auto& d13 : decompose(g1, g3)) {
                                if (outer_multiplicity(d13.coupled, g2, g) == 0) continue;
                                ++nine_sets;
                                const NineU3 nine =
                                    nine_u3(g1, g2, d12.coupled, g3, trivial, g3, d13.coupled,
                                            g2, g, cache);
                                const ZTensor z = z_coefficients(g2, g1, g, g3, d12.coupled,
                                                                 d13.coupled, cache);
                                require(!nine.empty() && !z.empty(),
                                        "missing tensor in trivial-label comparison");
                                for (int r12 = 1; r12 <= z.rho12_max; ++r12)
                                    for (int ra = 1; ra <= z.rho12_3_max; ++ra)
                                        for (int r13 = 1; r13 <= z.rho13_max; ++r13)
                                            for (int rb = 1; rb <= z.rho13_2_max; ++rb)
                                                worst_nine = std::max(
                                                    worst_nine,
                                                    std::abs(nine(r12, 1, r13, 1, ra, rb) -
                                                             z(r12, ra, r13, rb)));
                            }
                        }
                    }
                }
            }
        }

        require(worst_u <= 1e-9, "U unitarity residual " + std::to_string(worst_u));
        require(worst_z <= 1e-9, "Z unitarity residual " + std::to_string(worst_z));
        require(worst_id <= 1e-9, "trivial-label U residual " + std::to_string(worst_id));
        require(worst_nine <= 1e-9, "nine-label residual " + std::to_string(worst_nine));
        return std::to_string(sets) + " U/Z sets, " + std::to_string(nine_sets) +
               " trivial-label sets; U " + fmt(worst_u) + ", Z " + fmt(worst_z) + ", nine " +
               fmt(worst_nine);
    });
}

CheckResult check_so3_content() {
    return run_one("so3-content", [] {
        long checked = 0;
        for (int lambda = 0; lambda + 0 <= 12; ++lambda) {
            for (int mu = 0; lambda + mu <= 12; ++mu) {
                const SU3Irrep s{lambda, mu};
                const auto content = allowed_L(s); // self-consistency inside
                long sum = 0;
                for (const auto& [L, count] : content) sum += static_cast<long>(count) * (2 * L + 1);
                require(sum == dimension(s),
                        "(" + std::to_string(lambda) + "," + std::to_string(mu) +
                            "): content sum " + std::to_string(sum));
                require(so3_dimension_check(lift(s)), "dimension check failed");
                ++checked;
            }
        }
        const std::map<int, int> expected{{0, 1}, {2, 2}, {3, 1}, {4, 1}};
        require(allowed_L({2, 2}) == expected, "(2,2) content differs from the banded rule");
        require(int_p(1.5) == 1 && int_p(-0.5) == 0 && int_m(0.5) == 1 && int_m(2.0) == 2,
                "integer-part conventions violated");
        return std::to_string(checked) + " irreps of content verified";
    });
}

CheckResult check_so3_transforms() {
    return run_one("so3-transform", [] {
        double worst_raise = 0.0, worst_ortho = 0.0;
        long transforms = 0;
        for (int lambda = 0; lambda + 0 <= 8; ++lambda) {
            for (int mu = 0; lambda + mu <= 8; ++mu) {
                const U3Irrep g = lift(SU3Irrep{lambda, mu});
                const IrrepBasis basis(g);
                for (const So3Transform& t : all_transforms(g)) {
                    ++transforms;
                    // Candidates are exactly the patterns with projection L.
                    long direct = 0;
                    for (const GelfandPattern& p : basis.states())
                        if (l0_weight(p) == t.L) ++direct;
                    require(direct == static_cast<long>(t.candidates.size()),
                            "candidate set differs from the projection-" + std::to_string(t.L) +
                                " patterns of " + to_string(g));

                    // Rows are orthonormal and annihilated by the raising
                    // operator.
                    const Eigen::MatrixXd gram = t.rows * t.rows.transpose();
                    worst_ortho = std::max(worst_ortho,
                                           (gram - Eigen::MatrixXd::Identity(t.kappa_max(),
                                                                             t.kappa_max()))
                                               .cwiseAbs()
                                               .maxCoeff());
                    for (int kappa = 0; kappa < t.kappa_max(); ++kappa) {
                        LinearCombo raised;
                        for (int c = 0; c < static_cast<int>(t.candidates.size()); ++c) {
                            const double v = t.rows(kappa, c);
                            if (v == 0.0) continue;
                            for (auto [gi, gj] : {std::pair{1, 3}, std::pair{3, 2}})
                                for (const auto& [target, amp] :
                                     apply_generator(gi, gj, t.pattern(c)))
                                    raised[target] += std::sqrt(2.0) * amp * v;
                        }
                        for (const auto& [p, v] : raised)
                            worst_raise = std::max(worst_raise, std::abs(v));
                    }
                }
                // The full basis change is orthogonal.
                const auto [labels, m] = physical_basis_matrix(basis);
                worst_ortho = std::max(worst_ortho, (m * m.transpose() -
                                                     Eigen::MatrixXd::Identity(basis.size(),
                                                                               basis.size()))
                                                        .cwiseAbs()
                                                        .maxCoeff());
            }
        }
        // A shifted irrep reuses the shift-free transform.
        {
            const IrrepBasis basis(U3Irrep{3, 2, 1});
            const auto [labels, m] = physical_basis_matrix(basis);
            worst_ortho = std::max(worst_ortho, (m * m.transpose() -
                                                 Eigen::MatrixXd::Identity(basis.size(),
                                                                           basis.size()))
                                                    .cwiseAbs()
                                                    .maxCoeff());
        }
        // Frozen two-candidate example: (2,0) at L = 0.
        {
            const So3Transform t = hw_transform(U3Irrep{2, 0, 0}, 0);
            require(t.kappa_max() == 1 && t.candidates.size() == 2, "(2,0) L=0 layout");
            require(t.candidates[0] == QT{0, 0} && t.candidates[1] == QT{1, 0},
                    "(2,0) L=0 candidate order");
            require(std::abs(t.rows(0, 0) - 1.0 / std::sqrt(3.0)) <= 1e-12 &&
                        std::abs(t.rows(0, 1) + std::sqrt(2.0 / 3.0)) <= 1e-12,
                    "(2,0) L=0 coefficients");
        }
        require(worst_raise <= 1e-10, "raising residual " + std::to_string(worst_raise));
        require(worst_ortho <= 1e-10, "orthogonality residual " + std::to_string(worst_ortho));
        return std::to_string(transforms) + " transforms; raising " + fmt(worst_raise) +
               ", orthogonality " + fmt(worst_ortho);
    });
}

CheckResult check_wigner_orthogonality() {
    return run_one("wigner-orthogonality", [] {
        const std::vector<std::pair<SU3Irrep, SU3Irrep>> products{
            {{1, 0}, {1, 0}}, {{1, 1}, {1, 1}}, {{2, 0}, {1, 1}}};
        double worst = 0.0;
        long entries = 0;
        for (const auto& [s1, s2] : products) {
            TableCache cache;
            const WignerTable table = wigner_table(s1, s2, cache);
            entries += static_cast<long>(table.entries.size());
            const Eigen::MatrixXd w = wigner_matrix(table);
            require(w.rows() == w.cols(), "coupling matrix is not square");
            const long n = w.rows();
            const double d1 =
                (w * w.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
            const double d2 =
                (w.transpose() * w - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
            worst = std::max({worst, d1, d2});
            // The multiplicity-2 coupling must appear in (1,1) x (1,1).
            if (s1.lambda == 1 && s1.mu == 1)
                require(outer_multiplicity(lift(s1), lift(s2), {3, 2, 1}) == 2 ||
                            outer_multiplicity(lift(s1), lift(s2), {2, 2, 2}) == 2,
                        "(1,1) x (1,1) lost its doubled coupling");
        }
        require(worst <= 1e-8, "orthogonality residual " + std::to_string(worst));
        return std::to_string(entries) + " reduced entries; orthogonality " + fmt(worst);
    });
}

CheckResult check_wigner_oracle() {
    return run_one("wigner-oracle", [] {
        const std::vector<std::pair<SU3Irrep, SU3Irrep>> products{{{1, 0}, {1, 0}},
                                                                  {{1, 1}, {1, 1}}};
        double worst = 0.0;
        for (const auto& [s1, s2] : products) {
            TableCache cache;
            const WignerTable table = wigner_table(s1, s2, cache);
            const Eigen::MatrixXd w = wigner_matrix(table);
            const Eigen::MatrixXd oracle = wigner_oracle_matrix(s1, s2, cache);
            require(w.rows() == oracle.rows() && w.cols() == oracle.cols(),
                    "oracle shape mismatch");
            worst = std::max(worst, (w - oracle).cwiseAbs().maxCoeff());

            // Cross-check each reduced value by projecting the oracle onto
            // the maximal coupled projection.
            const auto rows1 = so3_labels(s1);
            const auto rows2 = so3_labels(s2);
            std::map<std::tuple<int, int, int>, long> row1_of, row2_of;
            for (long i = 0; i < static_cast<long>(rows1.size()); ++i)
                row1_of[{rows1[i].L, rows1[i].kappa, rows1[i].M}] = i;
            for (long i = 0; i < static_cast<long>(rows2.size()); ++i)
                row2_of[{rows2[i].L, rows2[i].kappa, rows2[i].M}] = i;
            const auto dec = decompose(lift(s1), lift(s2));
            std::map<std::array<int, 3>, long> base;
            std::map<std::array<int, 3>, std::map<std::tuple<int, int, int>, long>> within;
            long col = 0;
            for (const auto& d : dec) {
                const std::array<int, 3> key{d.coupled.n13, d.coupled.n23, d.coupled.n33};
                base[key] = col;
                const auto labels = so3_labels(su3_part(d.coupled));
                for (long i = 0; i < static_cast<long>(labels.size()); ++i)
                    within[key][{labels[i].L, labels[i].kappa, labels[i].M}] = i;
                col += d.rho_max * static_cast<long>(labels.size());
            }
            for (const ReducedWignerEntry& e : table.entries) {
                const std::array<int, 3> key{e.coupled.n13, e.coupled.n23, e.coupled.n33};
                const long dim3 = static_cast<long>(within[key].size());
                double projected = 0.0;
                for (int m1 = -e.L1; m1 <= e.L1; ++m1) {
                    const int m2 = e.L3 - m1;
                    if (m2 < -e.L2 || m2 > e.L2) continue;
                    const double geom = so3_cgc(e.L1, m1, e.L2, m2, e.L3, e.L3);
                    if (geom == 0.0) continue;
                    const long row = row1_of.at({e.L1, e.kappa1, m1}) * rows2.size() +
                                     row2_of.at({e.L2, e.kappa2, m2});
                    const long c = base.at(key) + (e.rho - 1) * dim3 +
                                   within[key].at({e.L3, e.kappa3, e.L3});
                    projected += geom * oracle(row, c);
                }
                worst = std::max(worst, std::abs(projected - e.value));
            }
        }
        require(worst <= 1e-8, "oracle deviation " + std::to_string(worst));
        return "matrix and projection agreement " + fmt(worst);
    });
}

CheckResult check_performance(const SelftestOptions& opts) {
    return run_one("performance-cache", [&] {
        TableCache cache(opts.tol);
        const SU3Irrep s1{4, 2}, s2{2, 2};

        const auto t0 = Clock::now();
        const WignerTable table = wigner_table(s1, s2, cache);
        const double build = elapsed(t0);
        require(build < 30.0, "table build took " + fmt(build) + " s");

        namespace fs = std::filesystem;
        fs::path dir;
        if (!opts.cache_dir.empty()) {
            dir = opts.cache_dir;
        } else {
            static std::mt19937_64 rng{std::random_device{}()};
            dir = fs::temp_directory_path() / ("u3coef-selftest-" + std::to_string(rng()));
        }
        save_wigner(dir, table);
        const auto t1 = Clock::now();
        const auto reloaded = load_wigner(dir, s1, s2, opts.tol);
        const double load = elapsed(t1);
        require(reloaded.has_value(), "cache reload failed");
        require(load < 0.1, "cache reload took " + fmt(load) + " s");
        require(reloaded->entries.size() == table.entries.size(), "cache entry count differs");
        for (size_t i = 0; i < table.entries.size(); ++i) {
            const auto &a = table.entries[i], &b = reloaded->entries[i];
            require(a.coupled == b.coupled && a.rho == b.rho && a.kappa1 == b.kappa1 &&
                        a.L1 == b.L1 && a.kappa2 == b.kappa2 && a.L2 == b.L2 &&
                        a.kappa3 == b.kappa3 && a.L3 == b.L3,
                    "cache labels differ after reload");
            require(std::memcmp(&a.value, &b.value, sizeof(double)) == 0,
                    "cache values are not bit-identical");
        }
        if (opts.cache_dir.empty()) {
            std::error_code ec;
            fs::remove_all(dir, ec);
        }
        return "build " + fmt(build) + " s over " + std::to_string(table.entries.size()) +
               " entries, bit-identical reload in " + fmt(load) + " s";
    });
}

CheckResult check_determinism() {
    return run_one("determinism", [] {
        std::vector<std::pair<std::string, std::function<std::string()>>> ops;
        ops.emplace_back("dim", [] { return render_dim_json(U3Irrep{3, 2, 0}).dump(); });
        ops.emplace_back("enumerate",
                         [] { return render_enumerate_json(U3Irrep{3, 2, 0}).dump(); });
        ops.emplace_back("decompose", [] {
            return render_decompose_json({2, 1, 0}, {1, 1, 0}).dump();
        });
        ops.emplace_back("cgc", [] {
            return render_cgc_json(CGTable({2, 1, 0}, {2, 1, 0}, {3, 2, 1})).dump();
        });
        ops.emplace_back("ucoef", [] {
            TableCache cache;
            return render_ucoef_json(u_coefficients({1, 0, 0}, {1, 0, 0}, {2, 1, 0}, {1, 0, 0},
                                                    {2, 0, 0}, {1, 1, 0}, cache))
                .dump();
        });
        ops.emplace_back("zcoef", [] {
            TableCache cache;
            return render_zcoef_json(z_coefficients({1, 0, 0}, {1, 0, 0}, {2, 1, 0}, {1, 0, 0},
                                                    {2, 0, 0}, {1, 1, 0}, cache))
                .dump();
        });
        ops.emplace_back("nine", [] {
            TableCache cache;
            return render_nine_json(nine_u3({1, 0, 0}, {1, 0, 0}, {2, 0, 0}, {1, 0, 0},
                                            {1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {1, 1, 0},
                                            {2, 1, 1}, cache))
                .dump();
        });
        ops.emplace_back("content", [] { return render_content_json(SU3Irrep{4, 2}).dump(); });
        ops.emplace_back("transform", [] {
            return render_transform_json(hw_transform(U3Irrep{4, 0, 0}, 2)).dump();
        });
        ops.emplace_back("wigner", [] {
            TableCache cache;
            return render_wigner_json(wigner_table({1, 1}, {1, 1}, cache)).dump();
        });
        for (const auto& [name, op] : ops) {
            const std::string first = op(), second = op();
            require(!first.empty() && first == second,
                    name + ": repeated runs produced different bytes");
        }
        return std::to_string(ops.size()) + " operations rendered twice, byte-identical";
    });
}

std::vector<CheckResult> run_selftest(const SelftestOptions& opts) {
    std::vector<CheckResult> out;
    out.push_back(check_dimensions_and_enumeration());
    out.push_back(check_generator_algebra());
    out.push_back(check_multiplicities(opts));
    out.push_back(check_cgc_tables(opts));
    out.push_back(check_recoupling(opts));
    out.push_back(check_so3_content());
    out.push_back(check_so3_transforms());
    out.push_back(check_wigner_orthogonality());
    out.push_back(check_wigner_oracle());
    out.push_back(check_performance(opts));
    out.push_back(check_determinism());
    return out;
}

} // namespace u3
