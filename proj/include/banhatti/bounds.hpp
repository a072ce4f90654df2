#ifndef BANHATTI_BOUNDS_HPP
#define BANHATTI_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "banhatti/graph.hpp"

namespace banhatti {

/// Every inequality relating BSO to order, size, degrees and the companion
/// indices. Each inequality direction has its own id. The string form
/// (`to_string`) is the stable identifier used on the command line and in
/// JSON/CSV reports.
enum class BoundId {
  OrderLower,                      // T3.1-lower   n/sqrt2 <= BSO
  MinDegreeUpper,                  // T3.1-upper   BSO <= sqrt2 m/delta
  MaxDegreeUpper,                  // T3.2         BSO <= n - m(2-sqrt2)/Delta
  RandicLower,                     // T3.3-lower   sqrt2 R <= BSO
  ModifiedZagrebUpper,             // T3.3-upper   BSO <= sqrt2 Delta M2*
  InverseDegreeUpper,              // T3.4         BSO <= sqrt(m ID)
  HarmonicLower,                   // T3.5-lower   sqrt2 H <= BSO
  HarmonicUpper,                   // T3.5-upper   BSO <= (Delta/delta + delta/Delta) H / sqrt2
  SddHarmonicLower,                // T3.6-lower
  SddUpper,                        // T3.6-upper   BSO <= sqrt2 SDD/delta
  ZagrebSddUpper,                  // T3.7         BSO <= sqrt(2 M2* SDD)
  ZagrebDegreeRatioUpper,          // C3.5
  ForgottenLower,                  // T3.8
  SomborForgottenUpper,            // T3.9
  ForgottenDegreeUpper,            // C3.6
  SomborDegreeUpper,               // C3.7
  GeometricArithmeticUpper,        // T3.10
  GeometricArithmeticDegreeUpper,  // C3.8
  SomborLower,                     // T3.11-lower  2m^2/SO <= BSO
  SomborUpper,                     // T3.11-upper  BSO <= SO/delta^2
  SomborZagrebDeviation,           // T3.12        |BSO/m - SO M2*/m^2| <= xi(m) ...
  RegularIdentity,                 // C3.1         BSO = n/sqrt2 for regular graphs
  UnicyclicLower,                  // C3.2         n/sqrt2 <= BSO for m = n
  ComplementSumLower,              // C3.3-lower   sqrt2 n <= BSO(G) + BSO(~G)
  ComplementMinDegreeUpper,        // C3.3-upper
  ComplementSumLowerAlt,           // C3.4-lower   same inequality as C3.3-lower
  ComplementMaxDegreeUpper,        // C3.4-upper
};

enum class EqualityCondition {
  Regular,
  RegularOrSemiregularBipartite,
  NotApplicable,
};

std::string_view to_string(BoundId id) noexcept;
std::string_view to_string(EqualityCondition c) noexcept;
std::optional<BoundId> parse_bound_id(std::string_view name);

EqualityCondition equality_condition(BoundId id) noexcept;

/// All ids in registry order.
std::span<const BoundId> all_bound_ids() noexcept;

inline constexpr double kDefaultTolerance = 1e-9;

struct BoundReport {
  BoundId id{};
  EqualityCondition condition = EqualityCondition::NotApplicable;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = false;
  bool equality_detected = false;
  bool equality_predicted = false;
  bool consistent = false;  // detected == predicted; always true for NotApplicable
  bool skipped = false;
  std::string skip_reason;
};

/// Evaluates one inequality. Throws DomainError with a code naming the failed
/// precondition (disconnected, zero-degree, complement-zero-degree,
/// not-unicyclic, not-regular). `tol` is relative, scaled by max(1, |rhs|).
BoundReport evaluate_bound(const Graph& g, BoundId id, double tol = kDefaultTolerance);

/// One report per registry id; ids whose preconditions fail come back with
/// `skipped` set and `skip_reason` holding the error code.
std::vector<BoundReport> check_all_bounds(const Graph& g, double tol = kDefaultTolerance);

/// The scalar bracket 2sqrt2(a^2+b^2+ab)/(3(a+b)) <= sqrt(a^2+b^2) <=
/// sqrt2(a^2+b^2)/(a+b) for positive a, b; tight exactly when a == b.
struct NormBracket {
  double lower;
  double value;
  double upper;
};
NormBracket norm_bracket(double a, double b);

/// Exact non-negative fraction in lowest terms.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// The Gruss-type factor for m summands, from its parity closed form
/// (1/4)(1 - (1 + (-1)^(m+1)) / (2 m^2)).
Fraction deviation_factor_closed_form(std::int64_t m);
/// The same factor from (1/m) floor(m/2) (1 - (1/m) floor(m/2)).
Fraction deviation_factor_floor_form(std::int64_t m);

}  // namespace banhatti

#endif  // BANHATTI_BOUNDS_HPP
