#ifndef BANHATTI_INDICES_HPP
#define BANHATTI_INDICES_HPP

#include <array>
#include <optional>
#include <string_view>

#include "banhatti/graph.hpp"

namespace banhatti {

/// The vertex-degree-based indices computed by this library. Each one is a
/// sum over edges uv of a term depending only on (d_u, d_v).
enum class IndexKind {
  BSO,     // first Banhatti-Sombor: sqrt(1/du^2 + 1/dv^2)
  SO,      // Sombor: sqrt(du^2 + dv^2)
  R,       // Randic: 1/sqrt(du dv)
  M2Star,  // modified second Zagreb: 1/(du dv)
  H,       // harmonic: 2/(du + dv)
  ID,      // inverse degree: 1/du^2 + 1/dv^2
  SDD,     // symmetric division deg: (du^2 + dv^2)/(2 du dv)
  ISI,     // inverse sum indeg: du dv/(du + dv)
  GA,      // geometric-arithmetic: 2 sqrt(du dv)/(du + dv)
  F,       // forgotten: du^2 + dv^2
};

inline constexpr std::array<IndexKind, 10> kAllIndexKinds = {
    IndexKind::BSO, IndexKind::SO,  IndexKind::R,   IndexKind::M2Star, IndexKind::H,
    IndexKind::ID,  IndexKind::SDD, IndexKind::ISI, IndexKind::GA,     IndexKind::F,
};

/// Canonical upper-case names: BSO, SO, R, M2STAR, H, ID, SDD, ISI, GA, F.
std::string_view to_string(IndexKind kind) noexcept;
/// Case-insensitive; also accepts "M2*".
std::optional<IndexKind> parse_index_kind(std::string_view name);

struct IndexValue {
  IndexKind kind;
  double value;
};

/// Per-edge contribution for endpoint degrees (a, b), a, b >= 1.
double edge_term(IndexKind kind, double a, double b);

/// Throws DomainError unless g is connected with minimum degree >= 1.
void require_index_domain(const Graph& g);

double bso(const Graph& g);
double sombor(const Graph& g);
IndexValue classical_index(const Graph& g, IndexKind kind);
std::array<IndexValue, 10> all_indices(const Graph& g);

/// BSO accumulated over the (i, j) edge-type tally rather than over edges.
double bso_from_edge_types(const EdgeTypeCounts& counts);

}  // namespace banhatti

#endif  // BANHATTI_INDICES_HPP
