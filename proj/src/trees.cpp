#include "banhatti/trees.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace banhatti {

namespace {

void require_order(std::size_t n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw DomainError(DomainErrorCode::OutOfRange,
                      "tree order must be in 1.." + std::to_string(kMaxTreeOrder) + ", got " + std::to_string(n));
  }
}

// Next rooted level sequence in reverse lexicographic order, rewriting from
// position p. Returns false when p reaches the root.
bool next_rooted(std::vector<int>& levels, std::size_t p) {
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (levels[q] != levels[p] - 1) --q;
  for (std::size_t i = p; i < levels.size(); ++i) levels[i] = levels[i - p + q];
  return true;
}

bool next_rooted(std::vector<int>& levels) {
  std::size_t p = levels.size() - 1;
  while (p > 0 && levels[p] == 1) --p;
  return next_rooted(levels, p);
}

// Splits at the second level-1 vertex: `left` is the first root subtree
// (rebased to level 0), `rest` is the root with its remaining subtrees.
struct Split {
  std::vector<int> left;
  std::vector<int> rest;
};

Split split(const std::vector<int>& levels) {
  std::size_t m = levels.size();
  for (std::size_t i = 2; i < levels.size(); ++i) {
    if (levels[i] == 1) {
      m = i;
      break;
    }
  }
  Split s;
  for (std::size_t i = 1; i < m; ++i) s.left.push_back(levels[i] - 1);
  s.rest.push_back(0);
  for (std::size_t i = m; i < levels.size(); ++i) s.rest.push_back(levels[i]);
  return s;
}

// Moves `candidate` to the next sequence that is canonical for a free tree
// (rooted at its centre with the tallest, then largest, subtree first).
bool next_free(std::vector<int>& candidate) {
  const Split s = split(candidate);
  const int left_height = *std::max_element(s.left.begin(), s.left.end());
  const int rest_height = *std::max_element(s.rest.begin(), s.rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (s.left.size() > s.rest.size()) {
      valid = false;
    } else if (s.left.size() == s.rest.size() && s.left > s.rest) {
      valid = false;
    }
  }
  if (valid) return true;

  const std::size_t p = s.left.size();
  const int pivot = candidate[p];
  if (!next_rooted(candidate, p)) return false;
  if (pivot > 2) {
    const Split t = split(candidate);
    const int height = *std::max_element(t.left.begin(), t.left.end());
    const std::size_t len = static_cast<std::size_t>(height) + 1;
    for (std::size_t k = 0; k < len; ++k) candidate[candidate.size() - len + k] = static_cast<int>(k) + 1;
  }
  return true;
}

std::size_t max_degree_of(const Graph& g) {
  std::size_t d = 0;
  for (std::size_t x : g.degrees()) d = std::max(d, x);
  return d;
}

bool within(double value, double target, double tol) {
  return std::abs(value - target) <= tol * std::max(1.0, std::abs(target));
}

}  // namespace

TreeEnumerator::TreeEnumerator(std::size_t n, bool chemical) : n_(n), chemical_(chemical) { require_order(n); }

bool TreeEnumerator::advance() {
  if (done_) return false;
  if (n_ <= 2) {
    // One tree each; the successor machinery needs at least two root levels.
    if (started_) return done_ = true, false;
    started_ = true;
    current_.clear();
    for (std::size_t i = 0; i < n_; ++i) current_.push_back(static_cast<int>(i));
    return true;
  }
  if (!started_) {
    started_ = true;
    current_.clear();
    for (std::size_t i = 0; i <= n_ / 2; ++i) current_.push_back(static_cast<int>(i));
    for (std::size_t i = 1; i < (n_ + 1) / 2; ++i) current_.push_back(static_cast<int>(i));
  } else if (!next_rooted(current_)) {
    done_ = true;
    return false;
  }
  if (!next_free(current_)) {
    done_ = true;
    return false;
  }
  return true;
}

std::optional<Graph> TreeEnumerator::next() {
  while (advance()) {
    Graph t = tree_from_level_sequence(current_);
    if (!chemical_ || max_degree_of(t) <= kChemicalMaxDegree) return t;
  }
  return std::nullopt;
}

Graph tree_from_level_sequence(const std::vector<int>& levels) {
  if (levels.empty() || levels.front() != 0) throw std::invalid_argument("level sequence must start at 0");
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level{0};
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int level = levels[i];
    if (level < 1 || static_cast<std::size_t>(level) > last_at_level.size()) {
      throw std::invalid_argument("level sequence jumps by more than one");
    }
    edges.emplace_back(last_at_level[static_cast<std::size_t>(level) - 1], static_cast<Vertex>(i));
    last_at_level.resize(static_cast<std::size_t>(level));
    last_at_level.push_back(static_cast<Vertex>(i));
  }
  return Graph(levels.size(), edges);
}

std::vector<Graph> enumerate_trees(std::size_t n) {
  std::vector<Graph> out;
  for_each_tree({n, false}, [&](const Graph& t) { out.push_back(t); });
  return out;
}

std::vector<Graph> enumerate_chemical_trees(std::size_t n) {
  std::vector<Graph> out;
  for_each_tree({n, true}, [&](const Graph& t) { out.push_back(t); });
  return out;
}

void for_each_tree(const TreeFamily& family, const std::function<void(const Graph&)>& visit) {
  TreeEnumerator e(family.n, family.chemical);
  while (auto t = e.next()) visit(*t);
}

std::uint64_t count_free_trees(std::size_t n) {
  require_order(n);
  // Intermediate sums stay below 1e14 for n <= 32.
  using Wide = std::uint64_t;
  // rooted[k]: rooted unlabeled trees on k vertices.
  std::vector<Wide> rooted(n + 1, 0);
  rooted[1] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Wide sum = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      Wide divisor_sum = 0;
      for (std::size_t d = 1; d <= j; ++d) {
        if (j % d == 0) divisor_sum += static_cast<Wide>(d) * rooted[d];
      }
      sum += divisor_sum * rooted[k - j + 1];
    }
    rooted[k + 1] = sum / k;
  }
  Wide pairs = 0;
  for (std::size_t i = 1; i < n; ++i) pairs += rooted[i] * rooted[n - i];
  if (n % 2 == 0) pairs -= rooted[n / 2];
  return static_cast<std::uint64_t>(rooted[n] - pairs / 2);
}

bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) children.push_back(rooted_code(t, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("canonical form requires a tree");
  const std::size_t n = tree.order();
  if (n == 1) return "()";
  // Peel leaves layer by layer; the last one or two vertices are the centre.
  std::vector<std::size_t> degree(tree.degrees().begin(), tree.degrees().end());
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : tree.neighbors(leaf)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  const Vertex none = static_cast<Vertex>(n);
  std::string best = rooted_code(tree, layer[0], none);
  if (layer.size() == 2) best = std::min(best, rooted_code(tree, layer[1], none));
  return best;
}

double path_bso_closed_form(std::size_t n) {
  if (n < 3) throw DomainError(DomainErrorCode::OutOfRange, "path closed form needs n >= 3");
  return std::sqrt(2.0) * (static_cast<double>(n) - 3.0) / 2.0 + std::sqrt(5.0);
}

double star_bso_closed_form(std::size_t n) {
  if (n < 2) throw DomainError(DomainErrorCode::OutOfRange, "star closed form needs n >= 2");
  const double leaves = static_cast<double>(n) - 1.0;
  return std::sqrt(1.0 + leaves * leaves);
}

double chemical_bso_upper_bound(std::size_t n) {
  if (n < 5 || (n - 2) % 3 != 0) {
    throw DomainError(DomainErrorCode::OutOfRange,
                      "chemical-tree bound is only certified for n >= 5 with n - 2 divisible by 3, got n = " +
                          std::to_string(n));
  }
  const double x = static_cast<double>(n);
  return (2.0 * std::sqrt(17.0) * (x + 1.0) + std::sqrt(2.0) * (x - 5.0)) / 12.0;
}

double path_excess(std::int64_t x, std::int64_t y) {
  if (x < 1 || y < x) throw DomainError(DomainErrorCode::OutOfRange, "path_excess needs 1 <= x <= y");
  const double a = static_cast<double>(x), b = static_cast<double>(y);
  const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
  return std::sqrt(1.0 / (a * a) + 1.0 / (b * b)) + (s2 - s5) * (a + b) / (a * b) + s5 - 1.5 * s2;
}

double star_excess(std::int64_t x, std::int64_t y, std::int64_t max_degree) {
  if (max_degree < 2 || x < 1 || y < x || y > max_degree) {
    throw DomainError(DomainErrorCode::OutOfRange, "star_excess needs 1 <= x <= y <= max_degree, max_degree >= 2");
  }
  const double a = static_cast<double>(x), b = static_cast<double>(y), D = static_cast<double>(max_degree);
  const double s2 = std::sqrt(2.0), hub = std::sqrt(D * D + 1.0);
  return std::sqrt(1.0 / (a * a) + 1.0 / (b * b)) + (s2 - hub) / (D - 1.0) * (a + b) / (a * b) +
         (2.0 * hub - s2 * (D + 1.0)) / (D * (D - 1.0));
}

double leaf_hub_bso(double x, std::int64_t n) {
  if (!(x >= 2.0) || n < 3) throw DomainError(DomainErrorCode::OutOfRange, "leaf_hub_bso needs x >= 2, n >= 3");
  const double N = static_cast<double>(n), root = std::sqrt(x * x + 1.0);
  return ((x - 2.0) * N * root + std::sqrt(2.0) * (N - x - 1.0) + 2.0 * root) / (x * (x - 1.0));
}

ExtremalResult extremal_search(const TreeFamily& family, IndexKind index, double tol) {
  require_order(family.n);
  if (family.n < 2) throw DomainError(DomainErrorCode::OutOfRange, "indices need at least one edge (n >= 2)");

  ExtremalResult r;
  r.family = family;
  r.index = index;

  struct Scored {
    Graph tree;
    double value;
  };
  std::vector<Scored> scored;
  for_each_tree(family, [&](const Graph& t) { scored.push_back({t, classical_index(t, index).value}); });
  r.tree_count = scored.size();
  auto [lo, hi] = std::minmax_element(scored.begin(), scored.end(),
                                      [](const Scored& a, const Scored& b) { return a.value < b.value; });
  r.min_value = lo->value;
  r.max_value = hi->value;
  for (const Scored& s : scored) {
    if (within(s.value, r.min_value, tol)) r.min_trees.push_back(s.tree);
    if (within(s.value, r.max_value, tol)) r.max_trees.push_back(s.tree);
  }
  if (index == IndexKind::BSO && !family.chemical && family.n >= 3) {
    r.closed_form_min = path_bso_closed_form(family.n);
    r.closed_form_max = star_bso_closed_form(family.n);
  }
  return r;
}

ChemicalBoundCheck check_chemical_bound(std::size_t n, double tol) {
  ChemicalBoundCheck c;
  c.n = n;
  c.bound = chemical_bso_upper_bound(n);
  for_each_tree({n, true}, [&](const Graph& t) {
    const double value = bso(t);
    const EdgeTypeCounts counts(t);
    const bool no_mid_degrees = counts.vertices_of_degree(2) == 0 && counts.vertices_of_degree(3) == 0;
    const bool attains = within(value, c.bound, tol);
    ++c.tree_count;
    c.max_value = std::max(c.max_value, value);
    if (value > c.bound + tol) ++c.violations;
    if (attains) ++c.attaining;
    if (no_mid_degrees) ++c.without_degree_2_or_3;
    if (attains != no_mid_degrees) ++c.equality_mismatches;
  });
  return c;
}

}  // namespace banhatti
