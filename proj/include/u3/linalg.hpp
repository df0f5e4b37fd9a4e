#pragma once

#include <Eigen/Dense>

#include "u3/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace u3 {

// Orthonormal basis of the null space of a (possibly empty) dense matrix.
// Columns are the right singular vectors whose singular values satisfy
// sigma <= tol * sigma_max.  A matrix with no rows (or identically zero)
// has the full space as its null space.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
null_space(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a, double tol = 1e-10) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index n = a.cols();
    if (n == 0) return Mat(0, 0);
    if (a.rows() == 0 || a.norm() == Scalar(0)) return Mat::Identity(n, n);

    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const Scalar cutoff = tol * sv(0);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    const Eigen::Index nullity = n - rank;
    return svd.matrixV().rightCols(nullity);
}

// In-place modified Gram-Schmidt with one re-orthogonalization pass.
// Columns whose remainder falls below tol (relative to the starting norm)
// are dropped.  Returns the orthonormalized columns.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
gram_schmidt(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& v, double tol = 1e-10) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    Mat q(v.rows(), v.cols());
    Eigen::Index kept = 0;
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        Vec w = v.col(j);
        const Scalar original = w.norm();
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index k = 0; k < kept; ++k) w -= q.col(k).dot(w) * q.col(k);
        if (w.norm() <= tol * (original > Scalar(0) ? original : Scalar(1))) continue;
        q.col(kept++) = w / w.norm();
    }
    return q.leftCols(kept);
}

// Sign convention: scale each column so that its first entry of magnitude
// above the detection threshold is positive.  Idempotent.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
fix_phase(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> v, double threshold = 1e-10) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        for (Eigen::Index i = 0; i < v.rows(); ++i) {
            const Scalar x = v(i, j);
            if (x > Scalar(threshold)) break;
            if (x < Scalar(-threshold)) {
                v.col(j) = -v.col(j);
                break;
            }
        }
    }
    return v;
}

// Least-squares solution X of A X = B for a system that is expected to be
// consistent.  After solving, each column must satisfy
// |A x - b| <= tol * (|A| |x| + |b| + max(|A|, |B|)); otherwise
// ResidualTooLarge is thrown with `context` in the message.  The last term
// keeps the check relative to the scale of the whole system, so columns
// whose exact content is zero (and carry only assembly roundoff) are not
// rejected: zero right-hand sides occur legitimately, for instance when a
// recoupling coefficient vanishes accidentally.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
solve_consistent(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                 const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b,
                 double tol = 1e-10, const std::string& context = {}) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::ColPivHouseholderQR<Mat> qr(a);
    Mat x = qr.solve(b);
    const double anorm = a.norm();
    const double bscale = std::max(b.norm(), anorm);
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const double resid = (a * x.col(j) - b.col(j)).norm();
        const double bound = tol * (anorm * x.col(j).norm() + b.col(j).norm() + bscale);
        if (resid > bound) {
            char msg[128];
            std::snprintf(msg, sizeof msg, ": residual %.3e exceeds bound %.3e", resid, bound);
            throw ResidualTooLarge(context + msg);
        }
    }
    return x;
}

// Numerical column rank of a matrix under the same relative singular-value
// cutoff used by null_space.
template <typename Scalar>
Eigen::Index numerical_rank(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                            double tol = 1e-10) {
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (a.rows() == 0 || a.cols() == 0 || a.norm() == Scalar(0)) return 0;
    Eigen::JacobiSVD<Mat> svd(a);
    const auto& sv = svd.singularValues();
    const Scalar cutoff = tol * sv(0);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    return rank;
}

} // namespace u3
