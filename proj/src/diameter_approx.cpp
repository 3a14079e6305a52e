#include "diamclust/diameter_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace diamclust {

std::vector<double> radius_sequence(double r, std::size_t k) {
  if (!(r > 0.0)) throw InvalidInput("radius sequence needs r > 0");
  std::vector<double> seq;
  seq.reserve(k);
  if (k == 0) return seq;
  seq.push_back(r);
  while (seq.size() < k) {
    const double prev = seq.back();
    seq.push_back(r * std::sqrt(1.0 - r * r / (4.0 * prev * prev)));
  }
  return seq;
}

double normalized_radius(std::size_t k) {
  if (k == 0) throw InvalidInput("k must be positive");
  const double kk = static_cast<double>(k);
  return std::sqrt((kk + 1.0) / (2.0 * kk));
}

std::size_t steps_for_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidInput("epsilon must be positive");
  const double target = std::sqrt(0.5) + epsilon / 2.0;
  // rho_k^2 = 1/2 + 1/(2k) <= target^2  <=>  k >= 1 / (2 target^2 - 1).
  const double bound = 1.0 / (2.0 * target * target - 1.0);
  std::size_t k = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(bound)));
  while (k > 1 && normalized_radius(k - 1) <= target) --k;
  while (normalized_radius(k) > target) ++k;
  return k;
}

namespace {

struct Candidate {
  std::size_t count = 0;
  Ball ball;
  Provenance provenance;
};

// Total order: more points, then smaller radius, then lexicographically
// smaller tuple, then completed before early-stopped.
bool better(const Candidate& a, const Candidate& b) {
  if (a.count != b.count) return a.count > b.count;
  if (a.ball.radius != b.ball.radius) return a.ball.radius < b.ball.radius;
  if (a.provenance.tuple != b.provenance.tuple) return a.provenance.tuple < b.provenance.tuple;
  return !a.provenance.early_stop && b.provenance.early_stop;
}

class TupleSearch {
 public:
  TupleSearch(const PointSet& points, const Eigen::MatrixXd& pair_dist, double r, std::size_t k,
              const ApproxConfig& cfg)
      : points_(points), pair_dist_(pair_dist), r_(r), k_(k), cfg_(cfg),
        final_radius_(r * normalized_radius(k)) {}

  void run_from(Index first) {
    tuple_.assign(1, first);
    descend(Point(points_[first]), r_);
  }

  const std::optional<Candidate>& best() const { return best_; }
  std::uint64_t examined() const { return examined_; }

 private:
  void offer(const Ball& ball, bool early_stop) {
    ++examined_;
    Candidate c{count_in_ball(points_, ball, cfg_.tol), ball, Provenance{tuple_, early_stop}};
    if (!best_ || better(c, *best_)) best_ = std::move(c);
  }

  bool compatible(Index q) const {
    for (Index p : tuple_)
      if (pair_dist_(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) > r_ + cfg_.tol)
        return false;
    return true;
  }

  void descend(const Point& center, double r_cur) {
    if (tuple_.size() == k_) {
      offer(Ball{center, final_radius_}, false);
      return;
    }
    for (Index q = 0; q < points_.size(); ++q) {
      if (cfg_.prune_noncanonical && !compatible(q)) continue;
      auto outcome = shrink_step(center, r_cur, points_[q], r_, cfg_.tol);
      if (std::holds_alternative<step::Invalid>(outcome)) continue;
      tuple_.push_back(q);
      if (auto* stop = std::get_if<step::EarlyStop>(&outcome)) {
        offer(stop->ball, true);
      } else {
        auto& adv = std::get<step::Advance>(outcome);
        descend(adv.next_center, adv.next_radius);
      }
      tuple_.pop_back();
    }
  }

  const PointSet& points_;
  const Eigen::MatrixXd& pair_dist_;
  double r_;
  std::size_t k_;
  const ApproxConfig& cfg_;
  double final_radius_;
  IndexSet tuple_;
  std::optional<Candidate> best_;
  std::uint64_t examined_ = 0;
};

Eigen::MatrixXd distance_matrix(const PointSet& points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j)
      d(i, j) = d(j, i) = (points[static_cast<Index>(i)] - points[static_cast<Index>(j)]).norm();
  }
  return d;
}

Solution finish(const PointSet& points, Candidate best, double r, std::size_t k,
                std::uint64_t examined, double tol) {
  Solution s;
  s.indices = points_in_ball(points, best.ball, tol);
  s.achieved_diameter = diameter(points, s.indices);
  s.ball = std::move(best.ball);
  s.provenance = std::move(best.provenance);
  s.target_r = r;
  s.k_used = k;
  s.candidates_examined = examined;
  return s;
}

void require_nonempty(const PointSet& points) {
  if (points.empty()) throw InvalidInput("point set is empty");
}

}  // namespace

Solution solve_max_points(const PointSet& points, double r, const ApproxConfig& cfg) {
  require_nonempty(points);
  if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidInput("r must be finite and nonnegative");
  if (!(cfg.tol >= 0.0)) throw InvalidInput("tolerance must be nonnegative");
  const std::size_t k = cfg.k_override ? *cfg.k_override : steps_for_epsilon(cfg.epsilon);
  if (k == 0) throw InvalidInput("k must be positive");
  const std::size_t n = points.size();

  if (r == 0.0) {
    // Every step stops immediately: the farthest pick sits at distance 0.
    Candidate best;
    bool have = false;
    for (Index p = 0; p < n; ++p) {
      Candidate c{0, Ball{Point(points[p]), 0.0}, Provenance{{p, p}, true}};
      c.count = count_in_ball(points, c.ball, cfg.tol);
      if (!have || better(c, best)) best = std::move(c), have = true;
    }
    return finish(points, std::move(best), r, k, n, cfg.tol);
  }

  const Eigen::MatrixXd pair_dist = distance_matrix(points);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(n)));

  std::vector<TupleSearch> searches;
  searches.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) searches.emplace_back(points, pair_dist, r, k, cfg);

  auto work = [&](unsigned w) {
    for (Index first = w; first < n; first += workers) searches[w].run_from(first);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::optional<Candidate> best;
  std::uint64_t examined = 0;
  for (const auto& s : searches) {
    examined += s.examined();
    if (s.best() && (!best || better(*s.best(), *best))) best = s.best();
  }
  // Each first pick yields at least the depth-1 path, so best is always set.
  return finish(points, std::move(*best), r, k, examined, cfg.tol);
}

IndexSet truncate_to(const PointSet& points, IndexSet indices, std::size_t k) {
  while (indices.size() > k) {
    std::size_t a = 0, b = 1;
    double far = -1.0;
    for (std::size_t i = 0; i < indices.size(); ++i)
      for (std::size_t j = i + 1; j < indices.size(); ++j) {
        const double d = (points[indices[i]] - points[indices[j]]).norm();
        if (d > far) far = d, a = i, b = j;
      }
    auto spread = [&](std::size_t i) {
      double sum = 0.0;
      for (Index q : indices) sum += (points[indices[i]] - points[q]).norm();
      return sum;
    };
    const double sa = spread(a), sb = spread(b);
    const std::size_t drop = sa > sb ? a : (sb > sa ? b : (indices[a] > indices[b] ? a : b));
    indices.erase(indices.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  return indices;
}

namespace {

std::vector<double> candidate_radii(const PointSet& points) {
  std::vector<double> radii = pairwise_distances(points);
  radii.push_back(0.0);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

void check_k_target(const PointSet& points, std::size_t k_target) {
  require_nonempty(points);
  if (k_target == 0) throw InvalidInput("k must be at least 1");
  if (k_target > points.size())
    throw InvalidInput("k = " + std::to_string(k_target) + " exceeds the number of points (" +
                       std::to_string(points.size()) + ")");
}

}  // namespace

Solution solve_min_diameter(const PointSet& points, std::size_t k_target, const ApproxConfig& cfg) {
  check_k_target(points, k_target);
  std::uint64_t examined = 0;
  for (double r : candidate_radii(points)) {
    Solution s = solve_max_points(points, r, cfg);
    examined += s.candidates_examined;
    if (s.size() >= k_target) {
      s.indices = truncate_to(points, std::move(s.indices), k_target);
      s.achieved_diameter = diameter(points, s.indices);
      s.candidates_examined = examined;
      return s;
    }
  }
  // Unreachable: at r = diam(P) every first pick's ball holds all n points.
  throw GuaranteeViolation("no candidate radius reached the requested size");
}

Solution trivial_two_approx(const PointSet& points, double r, double tol) {
  require_nonempty(points);
  if (!(r >= 0.0)) throw InvalidInput("r must be nonnegative");
  Index best = 0;
  std::size_t best_count = 0;
  for (Index p = 0; p < points.size(); ++p) {
    const std::size_t c = count_in_ball(points, Ball{Point(points[p]), r}, tol);
    if (c > best_count) best_count = c, best = p;
  }
  Solution s;
  s.ball = Ball{Point(points[best]), r};
  s.indices = points_in_ball(points, s.ball, tol);
  s.achieved_diameter = diameter(points, s.indices);
  s.provenance = Provenance{{best}, false};
  s.target_r = r;
  s.k_used = 1;
  s.candidates_examined = points.size();
  return s;
}

namespace {

Solution exact_solution(const PointSet& points, IndexSet indices, double r) {
  Solution s;
  s.indices = std::move(indices);
  s.achieved_diameter = diameter(points, s.indices);
  if (!s.indices.empty()) s.ball = Ball{Point(points[s.indices.front()]), s.achieved_diameter};
  s.target_r = r;
  return s;
}

}  // namespace

Solution brute_force_max(const PointSet& points, double r, std::size_t cap) {
  require_nonempty(points);
  if (points.size() > cap) throw OracleCapExceeded(points.size(), cap);
  return exact_solution(points, max_clique(disc_graph(points, r)), r);
}

Solution brute_force_min_diameter(const PointSet& points, std::size_t k_target, std::size_t cap) {
  check_k_target(points, k_target);
  if (points.size() > cap) throw OracleCapExceeded(points.size(), cap);
  for (double r : candidate_radii(points)) {
    IndexSet clique = max_clique(disc_graph(points, r));
    if (clique.size() >= k_target)
      return exact_solution(points, truncate_to(points, std::move(clique), k_target), r);
  }
  throw GuaranteeViolation("no candidate radius reached the requested size");
}

}  // namespace diamclust
