#include "diamclust/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "diamclust/error.hpp"

namespace diamclust {

Graph::Graph(Index n) : n_(n), adj_(n * n, 0) {}

Graph::Graph(Index n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (!add_edge(u, v)) {
      throw InvalidInput("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
}

bool Graph::add_edge(Index u, Index v) {
  if (u >= n_ || v >= n_) {
    throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " +
                       std::to_string(v) + " (n = " + std::to_string(n_) + ")");
  }
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (adj_[u * n_ + v]) return false;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  const Edge e{u, v};
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  return true;
}

Index Graph::degree(Index v) const {
  Index d = 0;
  for (Index u = 0; u < n_; ++u) d += adj_[v * n_ + u];
  return d;
}

std::vector<Index> Graph::degrees() const {
  std::vector<Index> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

bool Graph::is_regular(Index d) const {
  const auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [d](Index x) { return x == d; });
}

bool Graph::is_clique(const IndexSet& vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!adjacent(vertices[a], vertices[b])) return false;
  return true;
}

bool Graph::is_independent(const IndexSet& vertices) const {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || adjacent(vertices[a], vertices[b])) return false;
  return true;
}

Graph complement(const Graph& g) {
  const Index n = g.num_vertices();
  Graph c(n);
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
  }
  return a;
}

namespace {

// Depth-first search over cliques in lexicographic order of their sorted
// vertex sequences. Only strictly larger cliques replace the incumbent, so
// the first maximum clique found is the lexicographically smallest.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  IndexSet run() {
    IndexSet candidates(g_.num_vertices());
    std::iota(candidates.begin(), candidates.end(), Index{0});
    extend(candidates);
    return best_;
  }

 private:
  void extend(const IndexSet& candidates) {
    if (current_.size() > best_.size()) best_ = current_;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current_.size() + (candidates.size() - i) <= best_.size()) return;
      const Index v = candidates[i];
      IndexSet next;
      next.reserve(candidates.size() - i);
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g_.adjacent(v, candidates[j])) next.push_back(candidates[j]);
      current_.push_back(v);
      extend(next);
      current_.pop_back();
    }
  }

  const Graph& g_;
  IndexSet current_;
  IndexSet best_;
};

}  // namespace

IndexSet max_clique(const Graph& g) { return CliqueSearch(g).run(); }

Graph read_graph(std::istream& in) {
  std::string line;
  auto next_line = [&](const char* what) {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return;
    }
    throw InvalidInput(std::string("graph file truncated: expected ") + what);
  };

  next_line("header 'n m'");
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0) throw InvalidInput("bad graph header: " + line);
  }
  Graph g(static_cast<Index>(n));
  for (long long i = 0; i < m; ++i) {
    next_line("edge line");
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest)) throw InvalidInput("bad edge line: " + line);
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge out of range: " + line);
    if (u >= v) throw InvalidInput("edge must satisfy u < v: " + line);
    if (!g.add_edge(static_cast<Index>(u), static_cast<Index>(v)))
      throw InvalidInput("duplicate edge: " + line);
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file: " + path);
  try {
    return read_graph(in);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph random_3regular(Index n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    throw InvalidInput("3-regular graph needs an even vertex count >= 4, got " +
                       std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::vector<Index> stubs(3 * n);
  for (Index i = 0; i < stubs.size(); ++i) stubs[i] = i / 3;

  for (;;) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; simple && i < stubs.size(); i += 2) {
      const Index u = stubs[i], v = stubs[i + 1];
      simple = u != v && g.add_edge(u, v);
    }
    if (simple) return g;
  }
}

Graph random_gnp(Index n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(n);
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

namespace graphs {

Graph complete(Index n) { return complement(Graph(n)); }

Graph empty(Index n) { return Graph(n); }

Graph path(Index n) {
  Graph g(n);
  for (Index v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(Index n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_bipartite(Index a, Index b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<Index>& parts) {
  std::vector<Index> part_of;
  for (Index p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  Graph g(part_of.size());
  for (Index u = 0; u < part_of.size(); ++u)
    for (Index v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (Index i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph line_graph(const Graph& g) {
  const auto& e = g.edges();
  Graph l(e.size());
  for (Index a = 0; a < e.size(); ++a)
    for (Index b = a + 1; b < e.size(); ++b)
      if (e[a].first == e[b].first || e[a].first == e[b].second || e[a].second == e[b].first ||
          e[a].second == e[b].second)
        l.add_edge(a, b);
  return l;
}

}  // namespace graphs

}  // namespace diamclust
