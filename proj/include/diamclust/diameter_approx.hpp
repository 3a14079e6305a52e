#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "diamclust/geometry.hpp"

namespace diamclust {

struct ApproxConfig {
  /// Diameter slack relative to r: output diameter <= (sqrt(2) + epsilon) r.
  double epsilon = 0.25;
  /// Number of picks per tuple; replaces steps_for_epsilon(epsilon) when set.
  std::optional<std::size_t> k_override;
  /// Absolute slack on ball membership and on the validity test of a step.
  double tol = kDefaultTol;
  /// Skip tuples whose picks are not pairwise within r. Such tuples cannot
  /// come from a diameter-r subset, so the size and diameter guarantees are kept.
  bool prune_noncanonical = true;
  /// Worker threads for the tuple enumeration; the result does not depend on it.
  unsigned threads = 1;
};

/// Which picks generated a candidate ball. early_stop marks balls emitted
/// because the farthest pick was already within r*sqrt(2)/2 of the center.
struct Provenance {
  IndexSet tuple;
  bool early_stop = false;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Solution {
  IndexSet indices;
  double achieved_diameter = 0.0;
  Ball ball;
  Provenance provenance;
  /// Diameter parameter the solver ran with (the selected r for solve_min_diameter).
  double target_r = 0.0;
  std::size_t k_used = 0;
  std::uint64_t candidates_examined = 0;

  std::size_t size() const { return indices.size(); }
};

namespace step {

struct Advance {
  Point next_center;
  double next_radius;
};

struct EarlyStop {
  Ball ball;
};

struct Invalid {};

}  // namespace step

using StepOutcome = std::variant<step::Advance, step::EarlyStop, step::Invalid>;

/// r_1 = r, r_{i+1} = r sqrt(1 - r^2 / (4 r_i^2)); returns (r_1, ..., r_k).
std::vector<double> radius_sequence(double r, std::size_t k);

/// Closed form of radius_sequence(1, k).back(): sqrt((k + 1) / (2k)).
double normalized_radius(std::size_t k);

/// Smallest k with normalized_radius(k) <= sqrt(2)/2 + epsilon/2.
std::size_t steps_for_epsilon(double epsilon);

/// One shrinking-ball step. The current ball is B(center, r_cur) and the
/// pick p_next is the (assumed) farthest member of the target set from the
/// center. With x = |center - p_next|:
///   x > r_cur + tol      -> Invalid
///   x <= r sqrt(2) / 2   -> EarlyStop(B(center, x))
///   otherwise            -> Advance(p_next + r^2/(2x^2) (center - p_next), r sqrt(1 - r^2/(4x^2)))
template <typename DerivedA, typename DerivedB>
StepOutcome shrink_step(const Eigen::MatrixBase<DerivedA>& center, double r_cur,
                        const Eigen::MatrixBase<DerivedB>& p_next, double r, double tol = 0.0);

Solution solve_max_points(const PointSet& points, double r, const ApproxConfig& cfg = {});

/// Minimum diameter of k_target points by a linear scan of candidate radii
/// (0 and all pairwise distances) with solve_max_points.
Solution solve_min_diameter(const PointSet& points, std::size_t k_target,
                            const ApproxConfig& cfg = {});

/// Best ball of radius r around an input point; diameter at most 2r.
Solution trivial_two_approx(const PointSet& points, double r, double tol = kDefaultTol);

inline constexpr std::size_t kDefaultOracleCap = 25;

/// Exact maximum subset of diameter <= r (maximum clique of the disc graph).
Solution brute_force_max(const PointSet& points, double r, std::size_t cap = kDefaultOracleCap);

/// Exact minimum-diameter subset of size k_target.
Solution brute_force_min_diameter(const PointSet& points, std::size_t k_target,
                                  std::size_t cap = kDefaultOracleCap);

/// Greedily removes an endpoint of the current farthest pair (the one with the
/// larger distance sum to the rest, ties to the larger index) until k remain.
IndexSet truncate_to(const PointSet& points, IndexSet indices, std::size_t k);

// ---------------------------------------------------------------------------

template <typename DerivedA, typename DerivedB>
StepOutcome shrink_step(const Eigen::MatrixBase<DerivedA>& center, double r_cur,
                        const Eigen::MatrixBase<DerivedB>& p_next, double r, double tol) {
  if (!(r > 0.0)) throw InvalidInput("shrink step needs r > 0");
  const double x = dist(center, p_next);
  if (x > r_cur + tol) return step::Invalid{};
  if (x <= r * std::sqrt(0.5)) return step::EarlyStop{Ball{Point(center), x}};
  const double ratio = r * r / (2.0 * x * x);
  Point next = p_next + ratio * (center - p_next);
  return step::Advance{std::move(next), r * std::sqrt(1.0 - r * r / (4.0 * x * x))};
}

}  // namespace diamclust
