#pragma once

#include <cstddef>
#include <cstdint>

#include "diamclust/diameter_approx.hpp"
#include "diamclust/geometry.hpp"
#include "diamclust/graph.hpp"
#include "diamclust/linalg.hpp"

namespace diamclust {

struct EmbedParams {
  double gamma = 0.01;
  double jl_lambda = 0.1;
  std::uint64_t seed = 42;
  int max_retries = 16;
  bool apply_jl = true;
};

struct EmbeddingResult {
  PointSet points;
  std::size_t target_dim = 0;
  /// max over pairs of max(ratio, 1/ratio) for projected/original distance.
  double achieved_max_distortion = 1.0;
  int retries_used = 0;
  bool projected = false;
};

struct HardnessInstance {
  EmbeddingResult embedding;
  /// Subsets with diameter <= threshold_r are exactly the independent sets of G.
  double threshold_r = 0.0;
};

/// Outcome of an exact clique / independent-set computation through geometry.
struct GeometricSetResult {
  std::size_t size = 0;
  IndexSet vertices;
  /// Minimum adjacency eigenvalue of the embedded graph (NaN when not computed).
  double min_eigenvalue = 0.0;
  double shift = 0.0;
  double radius = 0.0;
  double epsilon = 0.0;
  std::size_t k_used = 0;
};

/// Required gap below -2 for the eigenvalue condition.
inline constexpr double kEigenvalueMargin = 1e-6;

/// Columns of the Cholesky factor of Q = A_H + c I, one point per vertex.
/// |f(i)|^2 = c and |f(i) - f(j)|^2 = 2c - 2 A_ij.
PointSet embed_for_clique(const Graph& h, double c);

/// ceil(8 ln(max(n, 2)) / lambda^2).
std::size_t jl_target_dim(std::size_t n, double jl_lambda);

/// Worst multiplicative change of any pairwise distance between two
/// same-sized point sets; zero-length pairs must stay zero.
double max_distortion(const PointSet& original, const PointSet& image, Index* worst_u = nullptr,
                      Index* worst_v = nullptr);

/// Gaussian random projection to jl_target_dim dimensions, verified to keep
/// every pairwise distance within a factor 1 + lambda/2 and retried with
/// derived seeds otherwise. Inputs already at or below the target
/// dimension pass through unchanged.
EmbeddingResult jl_project(const PointSet& points, double jl_lambda, std::uint64_t seed,
                           int max_retries = 16);

/// (1 + lambda/2) sqrt(6 + 2 gamma): clique pairs land below it, non-adjacent pairs above.
double hardness_threshold(double gamma, double jl_lambda);
bool hardness_separated(double gamma, double jl_lambda);

/// Embeds the complement of a 3-regular graph (optionally JL-projected).
HardnessInstance embed_3regular_hardness(const Graph& g, const EmbedParams& params = {});

/// omega(H) via solve_max_points on the spectral embedding of H, valid when
/// the minimum adjacency eigenvalue of H exceeds -2 + kEigenvalueMargin.
GeometricSetResult exact_clique_via_geometry(const Graph& h);

/// alpha(G) = omega(G^c); the eigenvalue condition is checked on G^c.
GeometricSetResult exact_mis(const Graph& g);

/// alpha(G) from a caller-supplied map with edges at distance > sqrt(2) + delta
/// and non-edges at distance <= 1 (slack kDefaultTol).
GeometricSetResult verify_corollary1_input(const Graph& g, const PointSet& f, double delta);

}  // namespace diamclust
