#include "banhatti/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace banhatti {

std::string_view to_string(DomainErrorCode code) noexcept {
  switch (code) {
    case DomainErrorCode::Disconnected: return "disconnected";
    case DomainErrorCode::ZeroDegree: return "zero-degree";
    case DomainErrorCode::ComplementZeroDegree: return "complement-zero-degree";
    case DomainErrorCode::NotUnicyclic: return "not-unicyclic";
    case DomainErrorCode::NotRegular: return "not-regular";
    case DomainErrorCode::OutOfRange: return "out-of-range";
  }
  return "unknown";
}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : degrees_(order, 0) {
  if (order == 0) throw std::invalid_argument("graph must have at least one vertex");

  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= order) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) + " out of range for order " +
                                  std::to_string(order));
    }
    if (seen.insert(e).second) edges_.push_back(e);
  }

  for (const Edge& e : edges_) {
    ++degrees_[e.u];
    ++degrees_[e.v];
  }
  offsets_.assign(order + 1, 0);
  for (std::size_t v = 0; v < order; ++v) offsets_[v + 1] = offsets_[v] + degrees_[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < order; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= order()) throw std::out_of_range("vertex out of range");
  return std::span<const Vertex>(adjacency_).subspan(offsets_[v], degrees_[v]);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= order() || b >= order() || a == b) return false;
  auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), b);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (const Edge& e : a.edges()) {
    if (!b.has_edge(e.u, e.v)) return false;
  }
  return true;
}

namespace {

struct Traversal {
  bool connected = true;
  bool bipartite = true;
};

// Breadth-first 2-colouring over every component.
Traversal traverse(const Graph& g) {
  Traversal out;
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::size_t components = 0;
  std::queue<Vertex> frontier;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    ++components;
    colour[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          frontier.push(w);
        } else if (colour[w] == colour[v]) {
          out.bipartite = false;
        }
      }
    }
  }
  out.connected = components == 1;
  return out;
}

bool edges_join_extremes(const Graph& g, std::size_t max_degree, std::size_t min_degree) {
  if (max_degree == min_degree || g.size() == 0) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    auto a = g.degree(e.u), b = g.degree(e.v);
    return (a == max_degree && b == min_degree) || (a == min_degree && b == max_degree);
  });
}

}  // namespace

DegreeSummary degree_summary(const Graph& g) {
  DegreeSummary s;
  s.order = g.order();
  s.size = g.size();
  s.degree_sequence.assign(g.degrees().begin(), g.degrees().end());
  std::sort(s.degree_sequence.begin(), s.degree_sequence.end(), std::greater<>());
  s.max_degree = s.degree_sequence.front();
  s.min_degree = s.degree_sequence.back();
  s.is_regular = s.max_degree == s.min_degree;

  Traversal t = traverse(g);
  s.is_connected = t.connected;
  s.is_bipartite = t.bipartite;
  s.is_semiregular_bipartite = t.bipartite && edges_join_extremes(g, s.max_degree, s.min_degree);
  return s;
}

bool is_connected(const Graph& g) { return traverse(g).connected; }

bool is_semiregular_bipartite(const Graph& g) {
  DegreeSummary s = degree_summary(g);
  if (!s.is_connected) {
    throw DomainError(DomainErrorCode::Disconnected, "semiregularity is defined for connected graphs only");
  }
  return s.is_semiregular_bipartite;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2 - g.size());
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

EdgeTypeCounts::EdgeTypeCounts(const Graph& g) {
  std::size_t max_degree = 0;
  for (std::size_t d : g.degrees()) max_degree = std::max(max_degree, d);
  vertex_counts_.assign(max_degree + 1, 0);
  for (std::size_t d : g.degrees()) ++vertex_counts_[d];
  for (const Edge& e : g.edges()) {
    auto a = g.degree(e.u), b = g.degree(e.v);
    ++pair_counts_[{std::min(a, b), std::max(a, b)}];
  }
}

std::size_t EdgeTypeCounts::edges_between(std::size_t i, std::size_t j) const {
  auto it = pair_counts_.find({std::min(i, j), std::max(i, j)});
  return it == pair_counts_.end() ? 0 : it->second;
}

std::size_t EdgeTypeCounts::vertices_of_degree(std::size_t i) const {
  return i < vertex_counts_.size() ? vertex_counts_[i] : 0;
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  }
  return Graph(a + b, edges);
}

}  // namespace banhatti
