#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance suites.
// The oracles here enumerate subsets directly and never call into the
// library's own search code.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "diamclust/geometry.hpp"
#include "diamclust/graph.hpp"

namespace diamclust::testing {

inline PointSet make_points(std::size_t dim, const std::vector<std::vector<double>>& rows) {
  return PointSet(dim, rows);
}

inline PointSet unit_square() { return make_points(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

inline PointSet on_line(const std::vector<double>& xs) {
  std::vector<std::vector<double>> rows;
  for (double x : xs) rows.push_back({x});
  return make_points(1, rows);
}

inline PointSet random_points(std::size_t n, std::size_t dim, std::mt19937_64& rng,
                              double scale = 1.0) {
  std::uniform_real_distribution<double> unit(0.0, scale);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(n));
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = unit(rng);
  return PointSet(std::move(m));
}

inline IndexSet members(std::uint32_t mask, std::size_t n) {
  IndexSet s;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1u << i)) s.push_back(i);
  return s;
}

inline double naive_diameter(const PointSet& p, const IndexSet& s) {
  double best = 0.0;
  for (Index a : s)
    for (Index b : s) {
      double sum = 0.0;
      for (std::size_t i = 0; i < p.dim(); ++i) {
        const double d = p[a](static_cast<Eigen::Index>(i)) - p[b](static_cast<Eigen::Index>(i));
        sum += d * d;
      }
      best = std::max(best, std::sqrt(sum));
    }
  return best;
}

/// Size of the largest subset with diameter <= r, by enumerating all 2^n subsets.
inline std::size_t exhaustive_max_size(const PointSet& p, double r) {
  std::size_t best = 0;
  const std::size_t n = p.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const IndexSet s = members(mask, n);
    if (s.size() > best && naive_diameter(p, s) <= r) best = s.size();
  }
  return best;
}

/// Minimum diameter over all k-subsets, by enumeration.
inline double exhaustive_min_diameter(const PointSet& p, std::size_t k) {
  double best = INFINITY;
  const std::size_t n = p.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const IndexSet s = members(mask, n);
    if (s.size() == k) best = std::min(best, naive_diameter(p, s));
  }
  return best;
}

inline bool subset_is_clique(const Graph& g, const IndexSet& s) {
  for (Index a : s)
    for (Index b : s)
      if (a != b && !g.adjacent(a, b)) return false;
  return true;
}

/// omega(G) by subset enumeration (n <= 20).
inline std::size_t exhaustive_clique_number(const Graph& g) {
  std::size_t best = 0;
  const std::size_t n = g.num_vertices();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const IndexSet s = members(mask, n);
    if (s.size() > best && subset_is_clique(g, s)) best = s.size();
  }
  return best;
}

inline std::size_t exhaustive_independence_number(const Graph& g) {
  return exhaustive_clique_number(complement(g));
}

}  // namespace diamclust::testing
