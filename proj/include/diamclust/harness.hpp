#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "diamclust/diameter_approx.hpp"
#include "diamclust/geometry.hpp"

namespace diamclust {

enum class PointKind { UniformCube, Gaussian, PlantedCluster };

PointKind parse_point_kind(const std::string& name);
std::string to_string(PointKind kind);

struct GenParams {
  PointKind kind = PointKind::UniformCube;
  std::size_t n = 0;
  std::size_t dim = 2;
  std::uint64_t seed = 1;
  /// planted-cluster: points 0..planted_size-1 lie in a ball of diameter planted_r.
  std::size_t planted_size = 0;
  double planted_r = 1.0;
  /// planted-cluster: background points are uniform in [0, box]^dim.
  double box = 10.0;
};

struct GeneratedPoints {
  PointSet points;
  IndexSet planted;
};

GeneratedPoints gen_points(const GenParams& params);

enum class SolverKind { Approx, Trivial, Exact };

SolverKind parse_solver_kind(const std::string& name);
std::string to_string(SolverKind kind);

struct ExperimentSpec {
  std::string instance_id = "instance";
  /// Exactly one of file / generator.
  std::optional<std::string> file;
  std::optional<GenParams> generator;
  std::vector<SolverKind> solvers{SolverKind::Approx};
  /// Exactly one of r (max points at diameter r) / k_target (min diameter of k points).
  std::optional<double> r;
  std::optional<std::size_t> k_target;
  double epsilon = 0.25;
  double tol = kDefaultTol;
  std::size_t oracle_cap = kDefaultOracleCap;
  unsigned threads = 1;
};

struct SolverRun {
  SolverKind solver = SolverKind::Approx;
  Solution solution;
  double wall_ms = 0.0;
  /// Size over exact optimum size (r mode) or k_target (k mode); absent without a reference.
  std::optional<double> size_ratio;
  /// Diameter over r (r mode) or over the exact minimum diameter (k mode).
  std::optional<double> diameter_ratio;
  std::vector<std::string> violations;
};

struct Report {
  std::string instance_id;
  std::size_t n = 0;
  std::size_t dim = 0;
  std::optional<std::uint64_t> seed;
  std::optional<double> r;
  std::optional<std::size_t> k_target;
  double epsilon = 0.0;
  std::size_t k_used = 0;
  std::vector<SolverRun> runs;

  bool violated() const;
  const SolverRun* find(SolverKind kind) const;
  nlohmann::json to_json(bool include_timing = true) const;
};

Report run_experiment(const ExperimentSpec& spec);

/// Same as run_experiment on an already loaded instance.
Report run_experiment(const ExperimentSpec& spec, const PointSet& points);

struct SolverAggregate {
  std::size_t runs = 0;
  std::optional<double> worst_size_ratio;
  std::optional<double> mean_size_ratio;
  std::optional<double> worst_diameter_ratio;
  std::optional<double> mean_diameter_ratio;
  std::size_t violations = 0;
};

struct SuiteReport {
  std::vector<Report> reports;
  std::map<std::string, SolverAggregate> aggregate;

  bool violated() const;
  nlohmann::json to_json(bool include_timing = true) const;
  void print_table(std::ostream& out) const;
};

/// Runs the template spec against every *.json point set in corpus_dir,
/// in filename order. Instances are independent and may run concurrently.
SuiteReport compare_suite(const std::string& corpus_dir, const ExperimentSpec& config,
                          unsigned parallel = 1);

}  // namespace diamclust
