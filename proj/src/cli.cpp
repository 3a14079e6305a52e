#include "diamclust/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "diamclust/diameter_approx.hpp"
#include "diamclust/harness.hpp"
#include "diamclust/io.hpp"
#include "diamclust/spectral.hpp"

namespace diamclust {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw InvalidInput("cannot write output file: " + out_path);
  file << j.dump(2) << '\n';
}

json solution_json(const Solution& s) {
  return {{"size", s.size()},
          {"diameter", s.achieved_diameter},
          {"radius", s.ball.radius},
          {"center", to_json(s.ball.center)},
          {"indices", s.indices}};
}

struct SolveArgs {
  std::string points;
  double r = -1.0;
  double eps = 0.25;
  std::optional<std::size_t> k;
  bool exact = false;
  bool trivial = false;
  unsigned threads = 1;
  std::string out;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const PointSet points = read_point_set_file(a.points);
  ApproxConfig cfg;
  cfg.epsilon = a.eps;
  cfg.k_override = a.k;
  cfg.threads = a.threads;

  const auto start = Clock::now();
  const Solution sol = solve_max_points(points, a.r, cfg);
  const double wall = elapsed_ms(start);

  json j = solution_json(sol);
  j["k_used"] = sol.k_used;
  j["candidates_examined"] = sol.candidates_examined;
  j["wall_ms"] = wall;
  j["r"] = a.r;
  j["eps"] = a.eps;

  bool ok = sol.achieved_diameter <= (std::sqrt(2.0) + a.eps) * a.r + 2.0 * cfg.tol &&
            std::abs(diameter(points, sol.indices) - sol.achieved_diameter) <= 1e-9;
  if (a.exact) {
    const Solution exact = brute_force_max(points, a.r);
    j["opt_size"] = exact.size();
    j["exact"] = solution_json(exact);
    ok = ok && sol.size() >= exact.size();
  }
  if (a.trivial) {
    const Solution triv = trivial_two_approx(points, a.r, cfg.tol);
    j["trivial"] = solution_json(triv);
  }
  j["guarantee_ok"] = ok;
  emit(j, a.out, out);
  if (!ok) err << "guarantee violated\n";
  return ok ? kExitOk : kExitGuaranteeViolation;
}

struct SolveKArgs {
  std::string points;
  std::size_t k = 0;
  double eps = 0.25;
  bool exact = false;
  unsigned threads = 1;
  std::string out;
};

int cmd_solve_k(const SolveKArgs& a, std::ostream& out, std::ostream& err) {
  const PointSet points = read_point_set_file(a.points);
  ApproxConfig cfg;
  cfg.epsilon = a.eps;
  cfg.threads = a.threads;

  const auto start = Clock::now();
  const Solution sol = solve_min_diameter(points, a.k, cfg);
  const double wall = elapsed_ms(start);

  json j = solution_json(sol);
  j["r_selected"] = sol.target_r;
  j["k_used"] = sol.k_used;
  j["candidates_examined"] = sol.candidates_examined;
  j["wall_ms"] = wall;
  j["k_target"] = a.k;
  j["eps"] = a.eps;

  bool ok = sol.size() == a.k;
  if (a.exact) {
    const Solution exact = brute_force_min_diameter(points, a.k);
    j["opt_diameter"] = exact.achieved_diameter;
    j["exact"] = solution_json(exact);
    ok = ok && sol.achieved_diameter <=
                   (std::sqrt(2.0) + a.eps) * exact.achieved_diameter + 2.0 * cfg.tol;
  }
  j["guarantee_ok"] = ok;
  emit(j, a.out, out);
  if (!ok) err << "guarantee violated\n";
  return ok ? kExitOk : kExitGuaranteeViolation;
}

struct EmbedArgs {
  std::string graph;
  double gamma = 0.01;
  double jl_lambda = 0.1;
  std::uint64_t seed = 42;
  int max_retries = 16;
  bool no_jl = false;
  std::string out;
};

int cmd_embed(const EmbedArgs& a, std::ostream& out) {
  const Graph g = read_graph_file(a.graph);
  EmbedParams params;
  params.gamma = a.gamma;
  params.jl_lambda = a.jl_lambda;
  params.seed = a.seed;
  params.max_retries = a.max_retries;
  params.apply_jl = !a.no_jl;
  const HardnessInstance inst = embed_3regular_hardness(g, params);

  json j = to_json(inst.embedding.points);
  j["metadata"] = {{"threshold_r", inst.threshold_r},
                   {"gamma", a.gamma},
                   {"lambda", a.jl_lambda},
                   {"dim", inst.embedding.points.dim()},
                   {"max_distortion", inst.embedding.achieved_max_distortion},
                   {"projected", inst.embedding.projected},
                   {"retries_used", inst.embedding.retries_used},
                   {"seed", a.seed}};
  emit(j, a.out, out);
  return kExitOk;
}

json geometric_json(const GeometricSetResult& r) {
  return {{"vertices", r.vertices}, {"min_eigenvalue", r.min_eigenvalue},
          {"shift", r.shift},       {"radius", r.radius},
          {"epsilon", r.epsilon},   {"k_used", r.k_used}};
}

struct GenArgs {
  std::string kind;
  std::size_t n = 0;
  std::size_t dim = 2;
  std::uint64_t seed = 1;
  std::size_t planted_size = 0;
  double planted_r = 1.0;
  double box = 10.0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.kind == "random-3regular") {
    const Graph g = random_3regular(a.n, a.seed);
    if (a.out.empty()) {
      write_graph(out, g);
    } else {
      std::ofstream file(a.out);
      if (!file) throw InvalidInput("cannot write output file: " + a.out);
      write_graph(file, g);
    }
    return kExitOk;
  }
  GenParams p;
  p.kind = parse_point_kind(a.kind);
  p.n = a.n;
  p.dim = a.dim;
  p.seed = a.seed;
  p.planted_size = a.planted_size;
  p.planted_r = a.planted_r;
  p.box = a.box;
  const GeneratedPoints gen = gen_points(p);
  json j = to_json(gen.points);
  if (p.kind == PointKind::PlantedCluster) j["planted"] = gen.planted;
  j["seed"] = a.seed;
  emit(j, a.out, out);
  return kExitOk;
}

struct CompareArgs {
  std::string corpus;
  std::optional<double> r;
  std::optional<std::size_t> k;
  double eps = 0.25;
  std::vector<std::string> solvers{"approx", "trivial", "exact"};
  unsigned parallel = 1;
  bool no_timing = false;
  std::string out;
};

int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  ExperimentSpec spec;
  spec.r = a.r;
  spec.k_target = a.k;
  spec.epsilon = a.eps;
  spec.solvers.clear();
  for (const auto& s : a.solvers) spec.solvers.push_back(parse_solver_kind(s));
  if (spec.r.has_value() == spec.k_target.has_value())
    throw InvalidInput("compare needs exactly one of --r and --k");

  const SuiteReport suite = compare_suite(a.corpus, spec, a.parallel);
  suite.print_table(err);
  emit(suite.to_json(!a.no_timing), a.out, out);
  return suite.violated() ? kExitGuaranteeViolation : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded-diameter subsets of point sets and spectral graph embeddings"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Largest subset of diameter about r (sqrt(2)+eps approximation)");
  s->add_option("--points", solve.points, "PointSet JSON file")->required();
  s->add_option("--r", solve.r, "Target diameter")->required()->check(CLI::NonNegativeNumber);
  s->add_option("--eps", solve.eps, "Diameter slack")->check(CLI::PositiveNumber);
  s->add_option("--k", solve.k, "Picks per tuple (overrides eps-derived value)")->check(CLI::PositiveNumber);
  s->add_flag("--exact", solve.exact, "Also run the exact oracle");
  s->add_flag("--trivial", solve.trivial, "Also run the trivial 2-approximation");
  s->add_option("--threads", solve.threads, "Worker threads")->check(CLI::PositiveNumber);
  s->add_option("--out", solve.out, "Write the report here instead of stdout");

  SolveKArgs solve_k;
  auto* sk = app.add_subcommand("solve-k", "Smallest-diameter subset of k points");
  sk->add_option("--points", solve_k.points, "PointSet JSON file")->required();
  sk->add_option("--k", solve_k.k, "Subset size")->required()->check(CLI::PositiveNumber);
  sk->add_option("--eps", solve_k.eps, "Diameter slack")->check(CLI::PositiveNumber);
  sk->add_flag("--exact", solve_k.exact, "Also run the exact oracle");
  sk->add_option("--threads", solve_k.threads, "Worker threads")->check(CLI::PositiveNumber);
  sk->add_option("--out", solve_k.out, "Write the report here instead of stdout");

  EmbedArgs embed;
  auto* e = app.add_subcommand("embed", "Embed the complement of a 3-regular graph");
  e->add_option("--graph", embed.graph, "Graph file")->required();
  e->add_option("--gamma", embed.gamma, "Diagonal shift above 4")->check(CLI::PositiveNumber);
  e->add_option("--jl-lambda", embed.jl_lambda, "Projection distortion parameter");
  e->add_option("--seed", embed.seed, "Projection seed");
  e->add_option("--max-retries", embed.max_retries, "Projection attempts")->check(CLI::PositiveNumber);
  e->add_flag("--no-jl", embed.no_jl, "Skip the random projection");
  e->add_option("--out", embed.out, "Write the point set here instead of stdout");

  std::string mis_graph, clique_graph;
  auto* m = app.add_subcommand("mis", "Exact maximum independent set size via geometry");
  m->add_option("--graph", mis_graph, "Graph file")->required();
  auto* c = app.add_subcommand("clique", "Exact maximum clique size via geometry");
  c->add_option("--graph", clique_graph, "Graph file")->required();

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate instances");
  g->add_option("--kind", gen.kind, "random-3regular | uniform-cube | gaussian | planted-cluster")
      ->required();
  g->add_option("--n", gen.n, "Number of vertices or points")->required();
  g->add_option("--dim", gen.dim, "Point dimension");
  g->add_option("--seed", gen.seed, "Seed");
  g->add_option("--planted-size", gen.planted_size, "Planted cluster size");
  g->add_option("--planted-r", gen.planted_r, "Planted cluster diameter");
  g->add_option("--box", gen.box, "Background box side");
  g->add_option("--out", gen.out, "Write here instead of stdout");

  CompareArgs cmp;
  auto* cp = app.add_subcommand("compare", "Run solvers over a corpus of PointSet files");
  cp->add_option("--corpus", cmp.corpus, "Directory of *.json instances")->required();
  cp->add_option("--r", cmp.r, "Target diameter (max-points mode)");
  cp->add_option("--k", cmp.k, "Subset size (min-diameter mode)");
  cp->add_option("--eps", cmp.eps, "Diameter slack")->check(CLI::PositiveNumber);
  cp->add_option("--solvers", cmp.solvers, "Subset of approx, trivial, exact")->delimiter(',');
  cp->add_option("--parallel", cmp.parallel, "Instances run concurrently");
  cp->add_flag("--no-timing", cmp.no_timing, "Omit wall-clock fields");
  cp->add_option("--out", cmp.out, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out, err);
    if (sk->parsed()) return cmd_solve_k(solve_k, out, err);
    if (e->parsed()) return cmd_embed(embed, out);
    if (m->parsed()) {
      const auto r = exact_mis(read_graph_file(mis_graph));
      json j = geometric_json(r);
      j["alpha"] = r.size;
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (c->parsed()) {
      const auto r = exact_clique_via_geometry(read_graph_file(clique_graph));
      json j = geometric_json(r);
      j["omega"] = r.size;
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (g->parsed()) return cmd_gen(gen, out);
    if (cp->parsed()) return cmd_compare(cmp, out, err);
  } catch (const PreconditionFailed& ex) {
    err << "precondition failed: " << ex.what() << '\n';
    return kExitPrecondition;
  } catch (const GuaranteeViolation& ex) {
    err << "guarantee violated: " << ex.what() << '\n';
    return kExitGuaranteeViolation;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace diamclust
