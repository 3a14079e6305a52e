#include "diamclust/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "diamclust/io.hpp"

namespace diamclust {

PointKind parse_point_kind(const std::string& name) {
  if (name == "uniform-cube") return PointKind::UniformCube;
  if (name == "gaussian") return PointKind::Gaussian;
  if (name == "planted-cluster") return PointKind::PlantedCluster;
  throw InvalidInput("unknown point kind: " + name);
}

std::string to_string(PointKind kind) {
  switch (kind) {
    case PointKind::UniformCube: return "uniform-cube";
    case PointKind::Gaussian: return "gaussian";
    case PointKind::PlantedCluster: return "planted-cluster";
  }
  return "?";
}

SolverKind parse_solver_kind(const std::string& name) {
  if (name == "approx") return SolverKind::Approx;
  if (name == "trivial") return SolverKind::Trivial;
  if (name == "exact") return SolverKind::Exact;
  throw InvalidInput("unknown solver: " + name);
}

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::Approx: return "approx";
    case SolverKind::Trivial: return "trivial";
    case SolverKind::Exact: return "exact";
  }
  return "?";
}

GeneratedPoints gen_points(const GenParams& params) {
  if (params.n == 0) throw InvalidInput("point count must be positive");
  if (params.dim == 0) throw InvalidInput("dimension must be positive");
  const auto dim = static_cast<Eigen::Index>(params.dim);
  const auto n = static_cast<Eigen::Index>(params.n);

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd coords(dim, n);
  GeneratedPoints out;

  switch (params.kind) {
    case PointKind::UniformCube:
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) coords(i, j) = unit(rng);
      break;
    case PointKind::Gaussian:
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) coords(i, j) = normal(rng);
      break;
    case PointKind::PlantedCluster: {
      if (params.planted_size == 0 || params.planted_size > params.n)
        throw InvalidInput("planted size must lie in [1, n]");
      if (!(params.planted_r > 0.0) || !(params.box > 0.0))
        throw InvalidInput("planted radius and box size must be positive");
      Point center(dim);
      for (Eigen::Index i = 0; i < dim; ++i) center(i) = params.box * (0.25 + 0.5 * unit(rng));
      const auto planted = static_cast<Eigen::Index>(params.planted_size);
      for (Eigen::Index j = 0; j < planted; ++j) {
        // Uniform in the ball of radius planted_r / 2, so the cluster diameter is at most planted_r.
        Point dir(dim);
        for (Eigen::Index i = 0; i < dim; ++i) dir(i) = normal(rng);
        if (dir.norm() == 0.0) dir(0) = 1.0;
        const double radius = 0.5 * params.planted_r *
                              std::pow(unit(rng), 1.0 / static_cast<double>(params.dim));
        coords.col(j) = center + radius * dir.normalized();
        out.planted.push_back(static_cast<Index>(j));
      }
      for (Eigen::Index j = planted; j < n; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) coords(i, j) = params.box * unit(rng);
      break;
    }
  }
  out.points = PointSet(std::move(coords));
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
auto timed(F&& f, double& wall_ms) {
  const auto start = Clock::now();
  auto result = f();
  wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

// Problem-2 counterpart of the trivial baseline: first scanned radius at
// which a radius-r ball around an input point holds k_target points.
Solution trivial_min_diameter(const PointSet& points, std::size_t k_target, double tol) {
  std::vector<double> radii = pairwise_distances(points);
  radii.push_back(0.0);
  std::sort(radii.begin(), radii.end());
  for (double r : radii) {
    Solution s = trivial_two_approx(points, r, tol);
    if (s.size() >= k_target) {
      s.indices = truncate_to(points, std::move(s.indices), k_target);
      s.achieved_diameter = diameter(points, s.indices);
      return s;
    }
  }
  throw GuaranteeViolation("trivial scan never reached the requested size");
}

Solution run_solver(SolverKind kind, const ExperimentSpec& spec, const PointSet& points) {
  ApproxConfig cfg;
  cfg.epsilon = spec.epsilon;
  cfg.tol = spec.tol;
  cfg.threads = spec.threads;
  if (spec.r) {
    switch (kind) {
      case SolverKind::Approx: return solve_max_points(points, *spec.r, cfg);
      case SolverKind::Trivial: return trivial_two_approx(points, *spec.r, spec.tol);
      case SolverKind::Exact: return brute_force_max(points, *spec.r, spec.oracle_cap);
    }
  } else {
    switch (kind) {
      case SolverKind::Approx: return solve_min_diameter(points, *spec.k_target, cfg);
      case SolverKind::Trivial: return trivial_min_diameter(points, *spec.k_target, spec.tol);
      case SolverKind::Exact:
        return brute_force_min_diameter(points, *spec.k_target, spec.oracle_cap);
    }
  }
  throw InvalidInput("unknown solver");
}

double diameter_bound_factor(SolverKind kind, double epsilon) {
  switch (kind) {
    case SolverKind::Approx: return std::sqrt(2.0) + epsilon;
    case SolverKind::Trivial: return 2.0;
    case SolverKind::Exact: return 1.0;
  }
  return 1.0;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// Every claim is recomputed from the raw index set.
void verify(SolverRun& run, const ExperimentSpec& spec, const PointSet& points,
            const Solution* exact) {
  const Solution& s = run.solution;
  for (Index i : s.indices)
    if (i >= points.size()) run.violations.push_back("index out of range: " + std::to_string(i));
  if (!run.violations.empty()) return;

  const double recomputed = diameter(points, s.indices);
  if (std::abs(recomputed - s.achieved_diameter) > 1e-9)
    run.violations.push_back("claimed diameter " + fmt(s.achieved_diameter) + " != recomputed " +
                             fmt(recomputed));

  const double factor = diameter_bound_factor(run.solver, spec.epsilon);
  const double slack = run.solver == SolverKind::Exact ? 1e-12 : 2.0 * spec.tol;
  if (spec.r) {
    const double r = *spec.r;
    run.diameter_ratio = r > 0.0 ? recomputed / r : (recomputed == 0.0 ? 1.0 : INFINITY);
    if (recomputed > factor * r + slack)
      run.violations.push_back("diameter " + fmt(recomputed) + " exceeds bound " +
                               fmt(factor * r + slack));
    if (exact) {
      run.size_ratio = static_cast<double>(s.size()) / static_cast<double>(exact->size());
      if (s.size() < exact->size())
        run.violations.push_back("size " + std::to_string(s.size()) + " below optimum " +
                                 std::to_string(exact->size()));
    }
  } else {
    const std::size_t k = *spec.k_target;
    run.size_ratio = static_cast<double>(s.size()) / static_cast<double>(k);
    if (s.size() < k)
      run.violations.push_back("size " + std::to_string(s.size()) + " below k " + std::to_string(k));
    if (exact) {
      const double d_opt = exact->achieved_diameter;
      run.diameter_ratio = d_opt > 0.0 ? recomputed / d_opt : (recomputed == 0.0 ? 1.0 : INFINITY);
      if (recomputed > factor * d_opt + slack)
        run.violations.push_back("diameter " + fmt(recomputed) + " exceeds bound " +
                                 fmt(factor * d_opt + slack));
    }
  }
}

[[noreturn]] void rethrow_with_context(const Error& e, const std::string& context) {
  const std::string what = context + e.what();
  if (dynamic_cast<const InvalidInput*>(&e)) throw InvalidInput(what);
  if (dynamic_cast<const PreconditionFailed*>(&e)) throw PreconditionFailed(what);
  if (dynamic_cast<const GuaranteeViolation*>(&e)) throw GuaranteeViolation(what);
  throw Error(what);
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

Report run_experiment(const ExperimentSpec& spec, const PointSet& points) {
  if (spec.r.has_value() == spec.k_target.has_value())
    throw InvalidInput("experiment needs exactly one of r and k");
  if (spec.solvers.empty()) throw InvalidInput("experiment needs at least one solver");
  if (points.empty()) throw InvalidInput("instance " + spec.instance_id + " has no points");

  Report report;
  report.instance_id = spec.instance_id;
  report.n = points.size();
  report.dim = points.dim();
  if (spec.generator) report.seed = spec.generator->seed;
  report.r = spec.r;
  report.k_target = spec.k_target;
  report.epsilon = spec.epsilon;

  for (SolverKind kind : spec.solvers) {
    SolverRun run;
    run.solver = kind;
    try {
      run.solution = timed([&] { return run_solver(kind, spec, points); }, run.wall_ms);
    } catch (const Error& e) {
      rethrow_with_context(e, spec.instance_id + " [" + to_string(kind) + "]: ");
    }
    if (kind == SolverKind::Approx) report.k_used = run.solution.k_used;
    report.runs.push_back(std::move(run));
  }

  const SolverRun* exact = report.find(SolverKind::Exact);
  const Solution* exact_solution = exact ? &exact->solution : nullptr;
  for (auto& run : report.runs) verify(run, spec, points, exact_solution);
  return report;
}

Report run_experiment(const ExperimentSpec& spec) {
  if (spec.file.has_value() == spec.generator.has_value())
    throw InvalidInput("experiment needs exactly one instance source");
  const PointSet points =
      spec.file ? read_point_set_file(*spec.file) : gen_points(*spec.generator).points;
  return run_experiment(spec, points);
}

bool Report::violated() const {
  return std::any_of(runs.begin(), runs.end(), [](const SolverRun& r) { return !r.violations.empty(); });
}

const SolverRun* Report::find(SolverKind kind) const {
  for (const auto& run : runs)
    if (run.solver == kind) return &run;
  return nullptr;
}

nlohmann::json Report::to_json(bool include_timing) const {
  nlohmann::json solvers = nlohmann::json::object();
  for (const auto& run : runs) {
    const Solution& s = run.solution;
    nlohmann::json j = {
        {"size", s.size()},
        {"diameter", s.achieved_diameter},
        {"indices", s.indices},
        {"ball", {{"center", diamclust::to_json(s.ball.center)}, {"radius", s.ball.radius}}},
        {"size_ratio", optional_json(run.size_ratio)},
        {"diameter_ratio", optional_json(run.diameter_ratio)},
        {"violations", run.violations},
    };
    if (run.solver == SolverKind::Approx) j["candidates_examined"] = s.candidates_examined;
    if (include_timing) j["wall_ms"] = run.wall_ms;
    solvers[to_string(run.solver)] = std::move(j);
  }
  nlohmann::json env = {{"n", n}, {"dim", dim}, {"epsilon", epsilon}, {"k_used", k_used}};
  env["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  nlohmann::json out = {{"instance", instance_id}, {"solvers", solvers}, {"environment", env},
                        {"guarantee_violated", violated()}};
  if (r) out["r"] = *r;
  if (k_target) out["k_target"] = *k_target;
  return out;
}

bool SuiteReport::violated() const {
  return std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.violated(); });
}

nlohmann::json SuiteReport::to_json(bool include_timing) const {
  nlohmann::json agg = nlohmann::json::object();
  for (const auto& [name, a] : aggregate) {
    agg[name] = {{"runs", a.runs},
                 {"worst_size_ratio", optional_json(a.worst_size_ratio)},
                 {"mean_size_ratio", optional_json(a.mean_size_ratio)},
                 {"worst_diameter_ratio", optional_json(a.worst_diameter_ratio)},
                 {"mean_diameter_ratio", optional_json(a.mean_diameter_ratio)},
                 {"violations", a.violations}};
  }
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& r : reports) instances.push_back(r.to_json(include_timing));
  return {{"aggregate", agg}, {"instances", instances}, {"guarantee_violated", violated()}};
}

void SuiteReport::print_table(std::ostream& out) const {
  auto cell = [](const std::optional<double>& v) {
    std::ostringstream os;
    if (v) os << std::fixed << std::setprecision(4) << *v;
    else os << "-";
    return os.str();
  };
  out << std::left << std::setw(10) << "solver" << std::setw(6) << "runs" << std::setw(12)
      << "worst_size" << std::setw(12) << "mean_size" << std::setw(12) << "worst_diam"
      << std::setw(12) << "mean_diam" << "violations\n";
  for (const auto& [name, a] : aggregate) {
    out << std::left << std::setw(10) << name << std::setw(6) << a.runs << std::setw(12)
        << cell(a.worst_size_ratio) << std::setw(12) << cell(a.mean_size_ratio) << std::setw(12)
        << cell(a.worst_diameter_ratio) << std::setw(12) << cell(a.mean_diameter_ratio)
        << a.violations << '\n';
  }
}

SuiteReport compare_suite(const std::string& corpus_dir, const ExperimentSpec& config,
                          unsigned parallel) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(corpus_dir, ec)) throw InvalidInput("cannot read corpus directory: " + corpus_dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus_dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) throw InvalidInput("cannot read corpus directory: " + corpus_dir);
  if (files.empty()) throw InvalidInput("corpus directory has no .json instances: " + corpus_dir);
  std::sort(files.begin(), files.end());

  auto run_one = [&](const fs::path& path) {
    ExperimentSpec spec = config;
    spec.generator.reset();
    spec.file = path.string();
    spec.instance_id = path.filename().string();
    return run_experiment(spec);
  };

  SuiteReport suite;
  const unsigned width = std::max(1u, parallel);
  for (std::size_t start = 0; start < files.size(); start += width) {
    std::vector<std::future<Report>> batch;
    for (std::size_t i = start; i < std::min(files.size(), start + width); ++i)
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, run_one,
                                 files[i]));
    for (auto& f : batch) suite.reports.push_back(f.get());
  }

  for (SolverKind kind : config.solvers) {
    SolverAggregate a;
    double size_sum = 0.0, diam_sum = 0.0;
    std::size_t size_n = 0, diam_n = 0;
    for (const auto& report : suite.reports) {
      const SolverRun* run = report.find(kind);
      if (!run) continue;
      ++a.runs;
      if (!run->violations.empty()) ++a.violations;
      if (run->size_ratio) {
        a.worst_size_ratio = std::min(a.worst_size_ratio.value_or(INFINITY), *run->size_ratio);
        size_sum += *run->size_ratio;
        ++size_n;
      }
      if (run->diameter_ratio) {
        a.worst_diameter_ratio = std::max(a.worst_diameter_ratio.value_or(-INFINITY), *run->diameter_ratio);
        diam_sum += *run->diameter_ratio;
        ++diam_n;
      }
    }
    if (size_n) a.mean_size_ratio = size_sum / static_cast<double>(size_n);
    if (diam_n) a.mean_diameter_ratio = diam_sum / static_cast<double>(diam_n);
    suite.aggregate[to_string(kind)] = a;
  }
  return suite;
}

}  // namespace diamclust
