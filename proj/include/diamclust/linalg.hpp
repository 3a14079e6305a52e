#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include <Eigen/Core>

#include "diamclust/error.hpp"

namespace diamclust {

template <typename Scalar>
using SymmetricMatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using SymmetricMatrix = SymmetricMatrixT<double>;

template <typename Derived>
void require_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw InvalidInput("matrix is not square");
  if (!m.allFinite()) throw InvalidInput("matrix has non-finite entries");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw InvalidInput("matrix is not symmetric");
}

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is below this times max(1, |M|_F).
  double off_tol = 1e-12;
  int max_sweeps = 100;
};

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> symmetric_eigenvalues(
    const Eigen::MatrixBase<Derived>& m, const JacobiOptions& opt = {}) {
  using Scalar = typename Derived::Scalar;
  require_symmetric(m);
  SymmetricMatrixT<Scalar> a = m;
  const Eigen::Index n = a.rows();

  auto off_norm = [&] {
    Scalar s(0);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) s += 2 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  const Scalar threshold = Scalar(opt.off_tol) * std::max(Scalar(1), a.norm());

  int sweep = 0;
  for (; off_norm() > threshold; ++sweep) {
    if (sweep >= opt.max_sweeps)
      throw NonConvergence("Jacobi eigenvalue iteration did not converge in " +
                           std::to_string(opt.max_sweeps) + " sweeps");
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        // Rotation angle zeroing a(p, q), in the numerically stable form.
        const Scalar theta = (a(q, q) - a(p, p)) / (2 * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const Scalar c = 1 / std::sqrt(t * t + 1);
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eig = a.diagonal();
  std::sort(eig.data(), eig.data() + eig.size());
  return eig;
}

template <typename Derived>
typename Derived::Scalar min_eigenvalue(const Eigen::MatrixBase<Derived>& m,
                                        const JacobiOptions& opt = {}) {
  if (m.rows() == 0) throw InvalidInput("empty matrix has no eigenvalues");
  return symmetric_eigenvalues(m, opt)(0);
}

/// Upper-triangular U with U^t U = Q (Cholesky). A pivot at or below
/// 1e-12 * max diagonal raises NotPositiveDefinite.
template <typename Derived>
SymmetricMatrixT<typename Derived::Scalar> psd_factor(const Eigen::MatrixBase<Derived>& q) {
  using Scalar = typename Derived::Scalar;
  require_symmetric(q);
  const Eigen::Index n = q.rows();
  SymmetricMatrixT<Scalar> u = SymmetricMatrixT<Scalar>::Zero(n, n);
  if (n == 0) return u;
  const Scalar floor = Scalar(1e-12) * std::max(Scalar(0), q.diagonal().maxCoeff());

  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar pivot = q(j, j) - u.col(j).head(j).squaredNorm();
    if (!(pivot > floor)) throw NotPositiveDefinite(static_cast<std::size_t>(j), double(pivot));
    const Scalar ujj = std::sqrt(pivot);
    u(j, j) = ujj;
    for (Eigen::Index k = j + 1; k < n; ++k)
      u(j, k) = (q(j, k) - u.col(j).head(j).dot(u.col(k).head(j))) / ujj;
  }
  return u;
}

}  // namespace diamclust
