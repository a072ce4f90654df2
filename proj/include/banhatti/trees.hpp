#ifndef BANHATTI_TREES_HPP
#define BANHATTI_TREES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "banhatti/graph.hpp"
#include "banhatti/indices.hpp"

namespace banhatti {

inline constexpr std::size_t kMaxTreeOrder = 32;
inline constexpr std::size_t kChemicalMaxDegree = 4;

struct TreeFamily {
  std::size_t n = 1;
  bool chemical = false;  // maximum degree <= 4
};

/// Streams one tree per isomorphism class of n-vertex free trees, in a fixed
/// order, using the Wright-Richmond-Odlyzko-McKay successor on canonical
/// level sequences (root level 0).
///
///   TreeEnumerator e(7);
///   while (auto t = e.next()) { ... }
class TreeEnumerator {
 public:
  /// Throws DomainError(OutOfRange) unless 1 <= n <= kMaxTreeOrder.
  explicit TreeEnumerator(std::size_t n, bool chemical = false);

  std::optional<Graph> next();

  /// Level sequence of the tree most recently returned by next().
  const std::vector<int>& level_sequence() const noexcept { return current_; }

 private:
  bool advance();

  std::size_t n_;
  bool chemical_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
};

std::vector<Graph> enumerate_trees(std::size_t n);
std::vector<Graph> enumerate_chemical_trees(std::size_t n);

/// Calls `visit` for every tree of the family, in enumeration order.
void for_each_tree(const TreeFamily& family, const std::function<void(const Graph&)>& visit);

/// Builds the tree whose preorder vertex levels are `levels` (levels[0] == 0).
Graph tree_from_level_sequence(const std::vector<int>& levels);

/// Number of free trees on n vertices from Otter's dissimilarity formula over
/// rooted-tree counts. Independent of the enumerator.
std::uint64_t count_free_trees(std::size_t n);

/// Isomorphism-invariant string for a tree: AHU parenthesis code rooted at
/// the centre (the smaller code when there are two centres).
std::string tree_canonical_form(const Graph& tree);

bool is_tree(const Graph& g);

struct ExtremalResult {
  TreeFamily family;
  IndexKind index = IndexKind::BSO;
  std::size_t tree_count = 0;
  double min_value = 0.0;
  double max_value = 0.0;
  std::vector<Graph> min_trees;  // every attaining tree, enumeration order
  std::vector<Graph> max_trees;
  std::optional<double> closed_form_min;  // BSO over free trees, n >= 3
  std::optional<double> closed_form_max;
};

/// Exhaustive min/max of `index` over the family. Trees within
/// tol * max(1, |extreme|) of an extreme are listed as attaining it.
/// Throws DomainError(OutOfRange) for n < 2 or n > kMaxTreeOrder.
ExtremalResult extremal_search(const TreeFamily& family, IndexKind index, double tol = 1e-9);

/// BSO(P_n) = sqrt2 (n-3)/2 + sqrt5, n >= 3.
double path_bso_closed_form(std::size_t n);
/// BSO(K_{1,n-1}) = sqrt(1 + (n-1)^2), n >= 2.
double star_bso_closed_form(std::size_t n);
/// (2 sqrt17 (n+1) + sqrt2 (n-5)) / 12, the largest BSO over chemical trees.
/// Only certified for n >= 5 with n = 2 (mod 3); other n throw DomainError.
double chemical_bso_upper_bound(std::size_t n);

/// Coefficient of m_{x,y} in BSO(T) - BSO(P_n) once m_{1,2} and m_{2,2} are
/// eliminated: sqrt(1/x^2+1/y^2) + (sqrt2-sqrt5)(x+y)/(xy) + sqrt5 - 3sqrt2/2.
/// Requires integers 1 <= x <= y.
double path_excess(std::int64_t x, std::int64_t y);

/// Coefficient of m_{x,y} once m_{1,D} and m_{D,D} are eliminated, D the
/// maximum degree. Requires 1 <= x <= y <= D, D >= 2.
double star_excess(std::int64_t x, std::int64_t y, std::int64_t max_degree);

/// BSO of an n-vertex tree using only degrees 1 and x, extended to real
/// x >= 2: ((x-2) n sqrt(x^2+1) + sqrt2 (n-x-1) + 2 sqrt(x^2+1)) / (x(x-1)).
double leaf_hub_bso(double x, std::int64_t n);

/// Outcome of checking the chemical-tree upper bound by exhaustive search.
struct ChemicalBoundCheck {
  std::size_t n = 0;
  double bound = 0.0;
  std::size_t tree_count = 0;
  double max_value = 0.0;
  std::size_t violations = 0;           // BSO > bound + tol
  std::size_t attaining = 0;            // |BSO - bound| <= tol * max(1, bound)
  std::size_t without_degree_2_or_3 = 0;
  std::size_t equality_mismatches = 0;  // attaining xor (n_2 = n_3 = 0)

  bool holds() const noexcept { return violations == 0 && equality_mismatches == 0; }
};

ChemicalBoundCheck check_chemical_bound(std::size_t n, double tol = 1e-9);

}  // namespace banhatti

#endif  // BANHATTI_TREES_HPP
