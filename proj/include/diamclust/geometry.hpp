#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "diamclust/error.hpp"
#include "diamclust/graph.hpp"

namespace diamclust {

/// Default absolute slack on distances for ball membership.
inline constexpr double kDefaultTol = 1e-9;

template <typename Scalar>
using PointT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Point = PointT<double>;

/// Finite point set of uniform dimension. Points are stored as the columns
/// of a dim x n matrix; column index is the stable point identifier.
template <typename Scalar>
class PointSetT {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  PointSetT() = default;

  /// Throws InvalidInput if dim == 0 or any coordinate is non-finite.
  explicit PointSetT(Matrix coords) : coords_(std::move(coords)) {
    if (coords_.rows() == 0) throw InvalidInput("point dimension must be at least 1");
    if (!coords_.allFinite()) throw InvalidInput("point coordinates must be finite");
  }

  PointSetT(std::size_t dim, const std::vector<std::vector<Scalar>>& rows)
      : PointSetT(from_rows(dim, rows)) {}

  std::size_t dim() const { return static_cast<std::size_t>(coords_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(coords_.cols()); }
  bool empty() const { return coords_.cols() == 0; }

  auto operator[](std::size_t i) const { return coords_.col(static_cast<Eigen::Index>(i)); }
  const Matrix& coords() const { return coords_; }

  PointSetT scaled(Scalar factor) const { return PointSetT(Matrix(coords_ * factor)); }

 private:
  static Matrix from_rows(std::size_t dim, const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[j].size() != dim) throw DimensionMismatch(dim, rows[j].size());
      for (std::size_t i = 0; i < dim; ++i)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[j][i];
    }
    return m;
  }

  Matrix coords_{Matrix(1, 0)};
};

using PointSet = PointSetT<double>;

template <typename Scalar>
struct BallT {
  PointT<Scalar> center;
  Scalar radius{0};
};

using Ball = BallT<double>;

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar dist(const Eigen::MatrixBase<DerivedA>& p,
                               const Eigen::MatrixBase<DerivedB>& q) {
  if (p.size() != q.size())
    throw DimensionMismatch(static_cast<std::size_t>(p.size()), static_cast<std::size_t>(q.size()));
  return (p - q).norm();
}

/// Largest pairwise distance among the selected points; 0 for fewer than two.
template <typename Scalar>
Scalar diameter(const PointSetT<Scalar>& points, const IndexSet& subset) {
  Scalar best(0);
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b)
      best = std::max(best, (points[subset[a]] - points[subset[b]]).norm());
  return best;
}

template <typename Scalar>
Scalar diameter(const PointSetT<Scalar>& points) {
  Scalar best(0);
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      best = std::max(best, (points[a] - points[b]).norm());
  return best;
}

/// Indices i (ascending) with |P_i - center| <= radius + tol.
template <typename Scalar>
IndexSet points_in_ball(const PointSetT<Scalar>& points, const BallT<Scalar>& ball,
                        Scalar tol = Scalar(kDefaultTol)) {
  if (points.size() > 0 && static_cast<std::size_t>(ball.center.size()) != points.dim())
    throw DimensionMismatch(points.dim(), static_cast<std::size_t>(ball.center.size()));
  IndexSet inside;
  for (std::size_t i = 0; i < points.size(); ++i)
    if ((points[i] - ball.center).norm() <= ball.radius + tol) inside.push_back(i);
  return inside;
}

template <typename Scalar>
std::size_t count_in_ball(const PointSetT<Scalar>& points, const BallT<Scalar>& ball,
                          Scalar tol = Scalar(kDefaultTol)) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if ((points[i] - ball.center).norm() <= ball.radius + tol) ++count;
  return count;
}

/// Edge ij iff |P_i - P_j| <= r. Subsets of diameter <= r are exactly its cliques.
template <typename Scalar>
Graph disc_graph(const PointSetT<Scalar>& points, Scalar r) {
  if (r < 0) throw InvalidInput("disc graph radius must be nonnegative");
  Graph g(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if ((points[i] - points[j]).norm() <= r) g.add_edge(i, j);
  return g;
}

/// All pairwise distances i < j, in row-major pair order.
template <typename Scalar>
std::vector<Scalar> pairwise_distances(const PointSetT<Scalar>& points) {
  std::vector<Scalar> out;
  out.reserve(points.size() * (points.size() - (points.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) out.push_back((points[i] - points[j]).norm());
  return out;
}

}  // namespace diamclust
