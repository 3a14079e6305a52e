#include "diamclust/spectral.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace diamclust {

PointSet embed_for_clique(const Graph& h, double c) {
  if (h.num_vertices() == 0) throw InvalidInput("cannot embed an empty graph");
  const auto n = static_cast<Eigen::Index>(h.num_vertices());
  const SymmetricMatrix q = adjacency_matrix(h) + c * SymmetricMatrix::Identity(n, n);
  return PointSet(psd_factor(q));
}

std::size_t jl_target_dim(std::size_t n, double jl_lambda) {
  if (!(jl_lambda > 0.0 && jl_lambda < 1.0)) throw InvalidInput("JL lambda must lie in (0, 1)");
  const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
  return static_cast<std::size_t>(std::ceil(8.0 * std::log(nn) / (jl_lambda * jl_lambda)));
}

double max_distortion(const PointSet& original, const PointSet& image, Index* worst_u,
                      Index* worst_v) {
  if (original.size() != image.size()) throw DimensionMismatch(original.size(), image.size());
  double worst = 1.0;
  for (Index i = 0; i < original.size(); ++i) {
    for (Index j = i + 1; j < original.size(); ++j) {
      const double before = (original[i] - original[j]).norm();
      const double after = (image[i] - image[j]).norm();
      double factor;
      if (before == 0.0 || after == 0.0)
        factor = before == after ? 1.0 : std::numeric_limits<double>::infinity();
      else
        factor = std::max(after / before, before / after);
      if (factor > worst) {
        worst = factor;
        if (worst_u) *worst_u = i;
        if (worst_v) *worst_v = j;
      }
    }
  }
  return worst;
}

EmbeddingResult jl_project(const PointSet& points, double jl_lambda, std::uint64_t seed,
                           int max_retries) {
  const std::size_t target = jl_target_dim(points.size(), jl_lambda);
  if (max_retries < 1) throw InvalidInput("max_retries must be positive");
  if (target >= points.dim()) return EmbeddingResult{points, points.dim(), 1.0, 0, false};

  const double bound = 1.0 + jl_lambda / 2.0;
  const auto rows = static_cast<Eigen::Index>(target);
  const auto cols = static_cast<Eigen::Index>(points.dim());
  Index worst_u = 0, worst_v = 0;
  double worst = 0.0;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd proj(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) proj(i, j) = normal(rng);
    proj /= std::sqrt(static_cast<double>(target));

    PointSet image(Eigen::MatrixXd(proj * points.coords()));
    Index u = 0, v = 0;
    const double distortion = max_distortion(points, image, &u, &v);
    if (distortion <= bound) return EmbeddingResult{std::move(image), target, distortion, attempt, true};
    if (distortion > worst) worst = distortion, worst_u = u, worst_v = v;
  }
  throw DistortionNotAchieved(worst_u, worst_v, worst, max_retries);
}

double hardness_threshold(double gamma, double jl_lambda) {
  return (1.0 + jl_lambda / 2.0) * std::sqrt(6.0 + 2.0 * gamma);
}

bool hardness_separated(double gamma, double jl_lambda) {
  return hardness_threshold(gamma, jl_lambda) < std::sqrt(8.0 + 2.0 * gamma) / (1.0 + jl_lambda / 2.0);
}

HardnessInstance embed_3regular_hardness(const Graph& g, const EmbedParams& params) {
  if (!g.is_regular(3)) throw NotThreeRegular("graph is not 3-regular");
  if (!(params.gamma > 0.0)) throw InvalidInput("gamma must be positive");
  if (!(params.jl_lambda > 0.0 && params.jl_lambda < 1.0))
    throw InvalidInput("JL lambda must lie in (0, 1)");
  if (!hardness_separated(params.gamma, params.jl_lambda))
    throw InvalidInput("gamma and lambda too large: clique and non-clique distances overlap");

  PointSet base = embed_for_clique(complement(g), 4.0 + params.gamma);
  HardnessInstance out;
  if (params.apply_jl)
    out.embedding = jl_project(base, params.jl_lambda, params.seed, params.max_retries);
  else
    out.embedding = EmbeddingResult{std::move(base), g.num_vertices(), 1.0, 0, false};
  out.threshold_r = hardness_threshold(params.gamma, params.jl_lambda);
  return out;
}

GeometricSetResult exact_clique_via_geometry(const Graph& h) {
  GeometricSetResult out;
  if (h.num_vertices() == 0) return out;
  const double lambda_min = min_eigenvalue(adjacency_matrix(h));
  out.min_eigenvalue = lambda_min;
  if (h.num_edges() == 0) {
    out.size = 1;
    out.vertices = {0};
    return out;
  }
  const double m = -lambda_min;
  if (!(m < 2.0 - kEigenvalueMargin)) throw EigenvalueConditionFailed(lambda_min);

  const double c = (m + 2.0) / 2.0;
  const double r_edge = std::sqrt(2.0 * c - 2.0);
  const double r_nonedge = std::sqrt(2.0 * c);
  ApproxConfig cfg;
  cfg.epsilon = (r_nonedge / r_edge - std::sqrt(2.0)) / 2.0;

  const Solution sol = solve_max_points(embed_for_clique(h, c), r_edge, cfg);
  if (!h.is_clique(sol.indices))
    throw GuaranteeViolation("geometric solution is not a clique of the input graph");
  out.size = sol.size();
  out.vertices = sol.indices;
  out.shift = c;
  out.radius = r_edge;
  out.epsilon = cfg.epsilon;
  out.k_used = sol.k_used;
  return out;
}

GeometricSetResult exact_mis(const Graph& g) { return exact_clique_via_geometry(complement(g)); }

GeometricSetResult verify_corollary1_input(const Graph& g, const PointSet& f, double delta) {
  if (!(delta > 0.0)) throw InvalidInput("delta must be positive");
  if (f.size() != g.num_vertices()) throw DimensionMismatch(g.num_vertices(), f.size());
  GeometricSetResult out;
  out.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  if (f.empty()) return out;

  const double edge_floor = std::sqrt(2.0) + delta;
  for (Index u = 0; u < f.size(); ++u) {
    for (Index v = u + 1; v < f.size(); ++v) {
      const double d = (f[u] - f[v]).norm();
      if (g.adjacent(u, v) && !(d > edge_floor))
        throw ConditionViolated(u, v, d, "edge not farther than sqrt(2) + delta");
      if (!g.adjacent(u, v) && d > 1.0 + kDefaultTol)
        throw ConditionViolated(u, v, d, "non-edge farther than 1");
    }
  }

  ApproxConfig cfg;
  cfg.epsilon = delta / 2.0;
  const Solution sol = solve_max_points(f, 1.0, cfg);
  if (!g.is_independent(sol.indices))
    throw GuaranteeViolation("geometric solution is not an independent set");
  out.size = sol.size();
  out.vertices = sol.indices;
  out.radius = 1.0;
  out.epsilon = cfg.epsilon;
  out.k_used = sol.k_used;
  return out;
}

}  // namespace diamclust
