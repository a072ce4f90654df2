#ifndef BANHATTI_GRAPH_HPP
#define BANHATTI_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "banhatti/errors.hpp"

namespace banhatti {

using Vertex = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges keep the order in which they were first supplied (duplicates are
/// dropped), so every edge sum over the graph is evaluated in input order.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
  /// and out-of-range endpoints throw std::invalid_argument.
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return degrees_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const std::size_t> degrees() const noexcept { return degrees_; }
  std::size_t degree(Vertex v) const { return degrees_.at(v); }

  /// Neighbours of `v` in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  std::vector<std::size_t> offsets_;  // CSR row starts, size n+1
  std::vector<Vertex> adjacency_;
};

/// Edge-set equality, ignoring edge order.
bool operator==(const Graph& a, const Graph& b);

struct DegreeSummary {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::vector<std::size_t> degree_sequence;  // non-increasing
  bool is_connected = false;
  bool is_regular = false;
  bool is_bipartite = false;
  bool is_semiregular_bipartite = false;
};

DegreeSummary degree_summary(const Graph& g);

/// Every edge joins a vertex of degree max to one of degree min, with
/// max != min, and g is bipartite. Throws DomainError on disconnected input.
bool is_semiregular_bipartite(const Graph& g);

bool is_connected(const Graph& g);

Graph complement(const Graph& g);

/// Sparse tally of edges by endpoint-degree pair and of vertices by degree.
class EdgeTypeCounts {
 public:
  using DegreePair = std::pair<std::size_t, std::size_t>;  // first <= second

  explicit EdgeTypeCounts(const Graph& g);

  /// m_{i,j}; argument order is irrelevant.
  std::size_t edges_between(std::size_t i, std::size_t j) const;
  /// n_i
  std::size_t vertices_of_degree(std::size_t i) const;

  std::size_t max_degree() const noexcept { return vertex_counts_.empty() ? 0 : vertex_counts_.size() - 1; }
  const std::map<DegreePair, std::size_t>& pairs() const noexcept { return pair_counts_; }
  std::span<const std::size_t> vertex_counts() const noexcept { return vertex_counts_; }

 private:
  std::map<DegreePair, std::size_t> pair_counts_;
  std::vector<std::size_t> vertex_counts_;  // index = degree, 0..max
};

inline EdgeTypeCounts edge_type_counts(const Graph& g) { return EdgeTypeCounts(g); }

// Named families used throughout tests and the verification corpus.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t n);  // K_{1,n-1}
Graph complete_bipartite_graph(std::size_t a, std::size_t b);

}  // namespace banhatti

#endif  // BANHATTI_GRAPH_HPP
