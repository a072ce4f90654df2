#include "banhatti/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "banhatti/indices.hpp"

namespace banhatti {

namespace {

struct RegistryEntry {
  BoundId id;
  std::string_view name;
  EqualityCondition condition;
};

using enum EqualityCondition;

constexpr std::array<RegistryEntry, 27> kRegistry = {{
    {BoundId::OrderLower, "T3.1-lower", Regular},
    {BoundId::MinDegreeUpper, "T3.1-upper", Regular},
    {BoundId::MaxDegreeUpper, "T3.2", Regular},
    {BoundId::RandicLower, "T3.3-lower", Regular},
    {BoundId::ModifiedZagrebUpper, "T3.3-upper", Regular},
    {BoundId::InverseDegreeUpper, "T3.4", RegularOrSemiregularBipartite},
    {BoundId::HarmonicLower, "T3.5-lower", Regular},
    {BoundId::HarmonicUpper, "T3.5-upper", Regular},
    {BoundId::SddHarmonicLower, "T3.6-lower", Regular},
    {BoundId::SddUpper, "T3.6-upper", Regular},
    {BoundId::ZagrebSddUpper, "T3.7", RegularOrSemiregularBipartite},
    {BoundId::ZagrebDegreeRatioUpper, "C3.5", RegularOrSemiregularBipartite},
    {BoundId::ForgottenLower, "T3.8", Regular},
    {BoundId::SomborForgottenUpper, "T3.9", RegularOrSemiregularBipartite},
    {BoundId::ForgottenDegreeUpper, "C3.6", Regular},
    {BoundId::SomborDegreeUpper, "C3.7", Regular},
    {BoundId::GeometricArithmeticUpper, "T3.10", Regular},
    {BoundId::GeometricArithmeticDegreeUpper, "C3.8", Regular},
    {BoundId::SomborLower, "T3.11-lower", Regular},
    {BoundId::SomborUpper, "T3.11-upper", Regular},
    {BoundId::SomborZagrebDeviation, "T3.12", NotApplicable},
    {BoundId::RegularIdentity, "C3.1", NotApplicable},
    {BoundId::UnicyclicLower, "C3.2", NotApplicable},
    {BoundId::ComplementSumLower, "C3.3-lower", Regular},
    {BoundId::ComplementMinDegreeUpper, "C3.3-upper", Regular},
    {BoundId::ComplementSumLowerAlt, "C3.4-lower", Regular},
    {BoundId::ComplementMaxDegreeUpper, "C3.4-upper", Regular},
}};

constexpr std::array<BoundId, 27> kIds = [] {
  std::array<BoundId, 27> ids{};
  for (std::size_t i = 0; i < kRegistry.size(); ++i) ids[i] = kRegistry[i].id;
  return ids;
}();

const RegistryEntry& entry(BoundId id) {
  for (const auto& e : kRegistry) {
    if (e.id == id) return e;
  }
  throw std::logic_error("bound id missing from registry");
}

const double kSqrt2 = std::sqrt(2.0);

// Everything a bound needs, computed once per graph.
struct Context {
  double n = 0, m = 0, max_deg = 0, min_deg = 0;
  bool regular = false;
  bool semiregular_bipartite = false;
  double bso = 0, so = 0, randic = 0, m2star = 0, harmonic = 0, inverse_degree = 0, sdd = 0, isi = 0, ga = 0,
         forgotten = 0;
  std::int64_t size = 0;
  bool complement_ok = false;
  double complement_bso = 0;
};

double edge_sum(const Graph& g, IndexKind kind) {
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    total += edge_term(kind, static_cast<double>(g.degree(e.u)), static_cast<double>(g.degree(e.v)));
  }
  return total;
}

Context make_context(const Graph& g) {
  require_index_domain(g);
  const DegreeSummary s = degree_summary(g);
  Context c;
  c.n = static_cast<double>(s.order);
  c.m = static_cast<double>(s.size);
  c.size = static_cast<std::int64_t>(s.size);
  c.max_deg = static_cast<double>(s.max_degree);
  c.min_deg = static_cast<double>(s.min_degree);
  c.regular = s.is_regular;
  c.semiregular_bipartite = s.is_semiregular_bipartite;
  for (const IndexValue& v : all_indices(g)) {
    switch (v.kind) {
      case IndexKind::BSO: c.bso = v.value; break;
      case IndexKind::SO: c.so = v.value; break;
      case IndexKind::R: c.randic = v.value; break;
      case IndexKind::M2Star: c.m2star = v.value; break;
      case IndexKind::H: c.harmonic = v.value; break;
      case IndexKind::ID: c.inverse_degree = v.value; break;
      case IndexKind::SDD: c.sdd = v.value; break;
      case IndexKind::ISI: c.isi = v.value; break;
      case IndexKind::GA: c.ga = v.value; break;
      case IndexKind::F: c.forgotten = v.value; break;
    }
  }
  // The complement only needs minimum degree >= 1, not connectivity.
  if (s.max_degree + 2 <= s.order) {
    c.complement_ok = true;
    c.complement_bso = edge_sum(complement(g), IndexKind::BSO);
  }
  return c;
}

bool needs_complement(BoundId id) {
  return id == BoundId::ComplementSumLower || id == BoundId::ComplementMinDegreeUpper ||
         id == BoundId::ComplementSumLowerAlt || id == BoundId::ComplementMaxDegreeUpper;
}

struct Sides {
  double lhs;
  double rhs;
};

Sides sides(const Context& c, BoundId id) {
  const double n = c.n, m = c.m, D = c.max_deg, d = c.min_deg, B = c.bso;
  switch (id) {
    case BoundId::OrderLower: return {n / kSqrt2, B};
    case BoundId::MinDegreeUpper: return {B, kSqrt2 * m / d};
    case BoundId::MaxDegreeUpper: return {B, n - m * (2.0 - kSqrt2) / D};
    case BoundId::RandicLower: return {kSqrt2 * c.randic, B};
    case BoundId::ModifiedZagrebUpper: return {B, kSqrt2 * D * c.m2star};
    case BoundId::InverseDegreeUpper: return {B, std::sqrt(m * c.inverse_degree)};
    case BoundId::HarmonicLower: return {kSqrt2 * c.harmonic, B};
    case BoundId::HarmonicUpper: return {B, (D / d + d / D) * c.harmonic / kSqrt2};
    case BoundId::SddHarmonicLower: return {2.0 * kSqrt2 / (3.0 * D) * c.sdd + kSqrt2 / 3.0 * c.harmonic, B};
    case BoundId::SddUpper: return {B, kSqrt2 / d * c.sdd};
    case BoundId::ZagrebSddUpper: return {B, std::sqrt(2.0 * c.m2star * c.sdd)};
    case BoundId::ZagrebDegreeRatioUpper: return {B, std::sqrt(m * c.m2star * (D / d + d / D))};
    case BoundId::ForgottenLower:
      return {kSqrt2 / (D * D * D + d * d * d) * (m * d * d * d / D + c.forgotten / 2.0), B};
    case BoundId::SomborForgottenUpper: return {B, (2.0 * m * c.sdd + c.m2star * c.forgotten) / (2.0 * c.so)};
    case BoundId::ForgottenDegreeUpper:
      // m (Delta^2 delta + delta^3): the delta^3 term is what the chain through
      // SomborForgottenUpper produces (SDD <= m(Delta^2+delta^2)/(2 Delta delta),
      // SO >= sqrt2 delta m). A delta^2 term there fails on every regular graph
      // of degree >= 2.
      return {B, (m * (D * D * d + d * d * d) + D * c.forgotten) / (2.0 * kSqrt2 * D * d * d * d)};
    case BoundId::SomborDegreeUpper:
      return {B, m * m * (2.0 * D * D * D + D * D * d + d * d * d) / (2.0 * D * d * d * c.so)};
    case BoundId::GeometricArithmeticUpper:
      return {B, (c.harmonic * c.sdd + 2.0 * c.m2star * c.isi) / (kSqrt2 * c.ga)};
    case BoundId::GeometricArithmeticDegreeUpper:
      return {B, (m * m * D * D + m * m * d * d + 4.0 * m * D * c.isi) / (2.0 * kSqrt2 * D * d * d * c.ga)};
    case BoundId::SomborLower: return {2.0 * m * m / c.so, B};
    case BoundId::SomborUpper: return {B, c.so / (d * d)};
    case BoundId::SomborZagrebDeviation: {
      const Fraction xi = deviation_factor_closed_form(c.size);
      if (!(xi == deviation_factor_floor_form(c.size))) {
        throw std::logic_error("deviation factor closed form disagrees with floor form");
      }
      const double lhs = std::abs(B / m - c.so * c.m2star / (m * m));
      const double rhs = xi.to_double() * kSqrt2 * (D + d) * (D - d) * (D - d) / (D * D * d * d);
      return {lhs, rhs};
    }
    case BoundId::RegularIdentity: return {B, n / kSqrt2};
    case BoundId::UnicyclicLower: return {n / kSqrt2, B};
    case BoundId::ComplementSumLower:
    case BoundId::ComplementSumLowerAlt: return {kSqrt2 * n, B + c.complement_bso};
    case BoundId::ComplementMinDegreeUpper:
      return {B + c.complement_bso, kSqrt2 * (m / d + (n * (n - 1.0) - 2.0 * m) / (2.0 * (n - 1.0 - D)))};
    case BoundId::ComplementMaxDegreeUpper:
      return {B + c.complement_bso,
              2.0 * n - (2.0 - kSqrt2) * (m / D + (n * (n - 1.0) - 2.0 * m) / (2.0 * (n - 1.0 - d)))};
  }
  throw std::logic_error("unhandled bound id");
}

void check_preconditions(const Context& c, BoundId id) {
  if (needs_complement(id) && !c.complement_ok) {
    throw DomainError(DomainErrorCode::ComplementZeroDegree,
                      "complement has an isolated vertex (maximum degree is n-1)");
  }
  if (id == BoundId::UnicyclicLower && c.m != c.n) {
    throw DomainError(DomainErrorCode::NotUnicyclic, "graph is not unicyclic (m != n)");
  }
  if (id == BoundId::RegularIdentity && !c.regular) {
    throw DomainError(DomainErrorCode::NotRegular, "graph is not regular");
  }
}

BoundReport report(const Context& c, BoundId id, double tol) {
  check_preconditions(c, id);
  const RegistryEntry& e = entry(id);
  const Sides s = sides(c, id);

  BoundReport r;
  r.id = id;
  r.condition = e.condition;
  r.lhs = s.lhs;
  r.rhs = s.rhs;
  r.slack = s.rhs - s.lhs;
  const double scaled = tol * std::max(1.0, std::abs(s.rhs));
  r.equality_detected = std::abs(r.slack) <= scaled;
  // An identity holds only when both sides agree.
  r.holds = id == BoundId::RegularIdentity ? r.equality_detected : r.slack >= -scaled;
  switch (e.condition) {
    case Regular: r.equality_predicted = c.regular; break;
    case RegularOrSemiregularBipartite: r.equality_predicted = c.regular || c.semiregular_bipartite; break;
    case NotApplicable: r.equality_predicted = false; break;
  }
  r.consistent = e.condition == NotApplicable || r.equality_detected == r.equality_predicted;
  return r;
}

BoundReport skipped_report(BoundId id, const DomainError& err) {
  BoundReport r;
  r.id = id;
  r.condition = entry(id).condition;
  r.skipped = true;
  r.consistent = true;
  r.holds = true;
  r.skip_reason = std::string(to_string(err.code()));
  return r;
}

}  // namespace

std::string_view to_string(BoundId id) noexcept {
  for (const auto& e : kRegistry) {
    if (e.id == id) return e.name;
  }
  return "?";
}

std::string_view to_string(EqualityCondition c) noexcept {
  switch (c) {
    case Regular: return "regular";
    case RegularOrSemiregularBipartite: return "regular-or-semiregular-bipartite";
    case NotApplicable: return "not-applicable";
  }
  return "?";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (const auto& e : kRegistry) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

EqualityCondition equality_condition(BoundId id) noexcept { return entry(id).condition; }

std::span<const BoundId> all_bound_ids() noexcept { return kIds; }

BoundReport evaluate_bound(const Graph& g, BoundId id, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  return report(make_context(g), id, tol);
}

std::vector<BoundReport> check_all_bounds(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  std::vector<BoundReport> out;
  out.reserve(kIds.size());
  std::optional<Context> ctx;
  try {
    ctx = make_context(g);
  } catch (const DomainError& err) {
    for (BoundId id : kIds) out.push_back(skipped_report(id, err));
    return out;
  }
  for (BoundId id : kIds) {
    try {
      out.push_back(report(*ctx, id, tol));
    } catch (const DomainError& err) {
      out.push_back(skipped_report(id, err));
    }
  }
  return out;
}

NormBracket norm_bracket(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("norm_bracket requires positive arguments");
  const double sq = a * a + b * b;
  return {2.0 * kSqrt2 * (sq + a * b) / (3.0 * (a + b)), std::sqrt(sq), kSqrt2 * sq / (a + b)};
}

namespace {

Fraction reduced(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

void require_positive(std::int64_t m) {
  if (m < 1 || m > 1'000'000'000) {
    throw DomainError(DomainErrorCode::OutOfRange, "deviation factor needs 1 <= m <= 1e9");
  }
}

}  // namespace

Fraction deviation_factor_closed_form(std::int64_t m) {
  require_positive(m);
  // (1/4)(1 - (1 + s) / (2 m^2)) with s = (-1)^(m+1)  ==  (2 m^2 - (1 + s)) / (8 m^2)
  const std::int64_t s = (m % 2 == 1) ? 1 : -1;
  return reduced(2 * m * m - (1 + s), 8 * m * m);
}

Fraction deviation_factor_floor_form(std::int64_t m) {
  require_positive(m);
  const std::int64_t half = m / 2;
  // (half/m)(1 - half/m) == half (m - half) / m^2
  return reduced(half * (m - half), m * m);
}

}  // namespace banhatti
