#include "banhatti/indices.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace banhatti {

std::string_view to_string(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::BSO: return "BSO";
    case IndexKind::SO: return "SO";
    case IndexKind::R: return "R";
    case IndexKind::M2Star: return "M2STAR";
    case IndexKind::H: return "H";
    case IndexKind::ID: return "ID";
    case IndexKind::SDD: return "SDD";
    case IndexKind::ISI: return "ISI";
    case IndexKind::GA: return "GA";
    case IndexKind::F: return "F";
  }
  return "?";
}

std::optional<IndexKind> parse_index_kind(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "M2*") return IndexKind::M2Star;
  for (IndexKind k : kAllIndexKinds) {
    if (upper == to_string(k)) return k;
  }
  return std::nullopt;
}

double edge_term(IndexKind kind, double a, double b) {
  switch (kind) {
    case IndexKind::BSO: return std::sqrt(1.0 / (a * a) + 1.0 / (b * b));
    case IndexKind::SO: return std::sqrt(a * a + b * b);
    case IndexKind::R: return 1.0 / std::sqrt(a * b);
    case IndexKind::M2Star: return 1.0 / (a * b);
    case IndexKind::H: return 2.0 / (a + b);
    case IndexKind::ID: return 1.0 / (a * a) + 1.0 / (b * b);
    case IndexKind::SDD: return (a * a + b * b) / (2.0 * a * b);
    case IndexKind::ISI: return a * b / (a + b);
    case IndexKind::GA: return 2.0 * std::sqrt(a * b) / (a + b);
    case IndexKind::F: return a * a + b * b;
  }
  return 0.0;
}

void require_index_domain(const Graph& g) {
  if (std::find(g.degrees().begin(), g.degrees().end(), 0u) != g.degrees().end()) {
    throw DomainError(DomainErrorCode::ZeroDegree, "indices are undefined for graphs with isolated vertices");
  }
  if (!is_connected(g)) {
    throw DomainError(DomainErrorCode::Disconnected, "indices are defined for connected graphs only");
  }
}

namespace {

double edge_sum(const Graph& g, IndexKind kind) {
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    total += edge_term(kind, static_cast<double>(g.degree(e.u)), static_cast<double>(g.degree(e.v)));
  }
  return total;
}

}  // namespace

double bso(const Graph& g) {
  require_index_domain(g);
  return edge_sum(g, IndexKind::BSO);
}

double sombor(const Graph& g) {
  require_index_domain(g);
  return edge_sum(g, IndexKind::SO);
}

IndexValue classical_index(const Graph& g, IndexKind kind) {
  switch (kind) {
    case IndexKind::BSO: return {kind, bso(g)};
    case IndexKind::SO: return {kind, sombor(g)};
    default: break;
  }
  require_index_domain(g);
  return {kind, edge_sum(g, kind)};
}

std::array<IndexValue, 10> all_indices(const Graph& g) {
  require_index_domain(g);
  std::array<IndexValue, 10> out{};
  for (std::size_t i = 0; i < kAllIndexKinds.size(); ++i) {
    out[i] = {kAllIndexKinds[i], edge_sum(g, kAllIndexKinds[i])};
  }
  return out;
}

double bso_from_edge_types(const EdgeTypeCounts& counts) {
  double total = 0.0;
  for (const auto& [pair, count] : counts.pairs()) {
    const double i = static_cast<double>(pair.first), j = static_cast<double>(pair.second);
    total += std::sqrt(1.0 / (i * i) + 1.0 / (j * j)) * static_cast<double>(count);
  }
  return total;
}

}  // namespace banhatti
