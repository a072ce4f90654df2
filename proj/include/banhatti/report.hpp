#ifndef BANHATTI_REPORT_HPP
#define BANHATTI_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "banhatti/bounds.hpp"
#include "banhatti/trees.hpp"
#include "banhatti/verify.hpp"

namespace banhatti {

/// Shortest decimal string that parses back to the same double.
std::string shortest_repr(double value);

/// {id, lhs, rhs, slack, holds, equality_detected, equality_predicted,
///  consistent, skipped, skip_reason}; numeric fields are null when skipped.
nlohmann::json to_json(const BoundReport& r);

/// Column names matching to_json(BoundReport), in the same order.
const std::vector<std::string>& bound_report_columns();
std::vector<std::string> bound_report_cells(const BoundReport& r);

/// {n, chemical, index, min_value, max_value, closed_form_min,
///  closed_form_max, min_trees, max_trees, tree_count}; trees as graph6.
nlohmann::json to_json(const ExtremalResult& r);

nlohmann::json to_json(const ChemicalBoundCheck& c);
nlohmann::json to_json(const CheckResult& c);

/// RFC 4180 quoting when a cell contains a comma, quote or newline.
std::string csv_line(const std::vector<std::string>& cells);

}  // namespace banhatti

#endif  // BANHATTI_REPORT_HPP
