#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace diamclust {

using Index = std::size_t;
using IndexSet = std::vector<Index>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored canonically as (u, v) with u < v, sorted, without duplicates.
/// A dense adjacency bitmap is kept alongside for O(1) queries.
class Graph {
 public:
  using Edge = std::pair<Index, Index>;

  Graph() = default;
  explicit Graph(Index n);
  /// Throws InvalidInput on loops, out-of-range ids or duplicate edges.
  Graph(Index n, const std::vector<Edge>& edges);

  Index num_vertices() const { return n_; }
  Index num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Index u, Index v) const { return u != v && adj_[u * n_ + v] != 0; }
  Index degree(Index v) const;
  std::vector<Index> degrees() const;
  bool is_regular(Index d) const;

  /// Adds u-v; returns false if it already exists. Throws on loops or bad ids.
  bool add_edge(Index u, Index v);

  bool is_clique(const IndexSet& vertices) const;
  bool is_independent(const IndexSet& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Index n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adj_;
};

Graph complement(const Graph& g);

/// Dense 0/1 adjacency matrix.
Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Exact maximum clique by branch and bound. Among maximum cliques the
/// lexicographically smallest sorted index set is returned.
IndexSet max_clique(const Graph& g);

/// Plain-text graph format: first line "n m", then m lines "u v" with u < v.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

/// Random simple 3-regular graph by the pairing model with rejection.
/// Deterministic for a fixed seed. Requires n even and n >= 4.
Graph random_3regular(Index n, std::uint64_t seed);

/// Erdos-Renyi G(n, p), deterministic for a fixed seed.
Graph random_gnp(Index n, double p, std::uint64_t seed);

namespace graphs {

Graph complete(Index n);
Graph empty(Index n);
Graph path(Index n);
Graph cycle(Index n);
Graph complete_bipartite(Index a, Index b);
Graph complete_multipartite(const std::vector<Index>& parts);
Graph petersen();
/// Vertices are the edges of g, adjacent when they share an endpoint.
Graph line_graph(const Graph& g);

}  // namespace graphs

}  // namespace diamclust
