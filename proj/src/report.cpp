#include "banhatti/report.hpp"

#include <charconv>

#include "banhatti/io.hpp"

namespace banhatti {

std::string shortest_repr(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["id"] = std::string(to_string(r.id));
  if (r.skipped) {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["slack"] = nullptr;
  } else {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
  }
  j["holds"] = r.holds;
  j["equality_detected"] = r.equality_detected;
  j["equality_predicted"] = r.equality_predicted;
  j["consistent"] = r.consistent;
  j["skipped"] = r.skipped;
  j["skip_reason"] = r.skipped ? nlohmann::json(r.skip_reason) : nlohmann::json(nullptr);
  return j;
}

const std::vector<std::string>& bound_report_columns() {
  static const std::vector<std::string> columns = {
      "id", "lhs", "rhs", "slack", "holds", "equality_detected", "equality_predicted", "consistent", "skipped",
      "skip_reason"};
  return columns;
}

std::vector<std::string> bound_report_cells(const BoundReport& r) {
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  auto number = [&](double v) { return r.skipped ? std::string() : shortest_repr(v); };
  return {std::string(to_string(r.id)), number(r.lhs),         number(r.rhs),
          number(r.slack),              flag(r.holds),         flag(r.equality_detected),
          flag(r.equality_predicted),   flag(r.consistent),    flag(r.skipped),
          r.skip_reason};
}

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json graph6_list(const std::vector<Graph>& graphs) {
  nlohmann::json out = nlohmann::json::array();
  for (const Graph& g : graphs) out.push_back(to_graph6(g));
  return out;
}

}  // namespace

nlohmann::json to_json(const ExtremalResult& r) {
  nlohmann::json j;
  j["n"] = r.family.n;
  j["chemical"] = r.family.chemical;
  j["index"] = std::string(to_string(r.index));
  j["min_value"] = r.min_value;
  j["max_value"] = r.max_value;
  j["closed_form_min"] = optional_number(r.closed_form_min);
  j["closed_form_max"] = optional_number(r.closed_form_max);
  j["min_trees"] = graph6_list(r.min_trees);
  j["max_trees"] = graph6_list(r.max_trees);
  j["tree_count"] = r.tree_count;
  return j;
}

nlohmann::json to_json(const ChemicalBoundCheck& c) {
  return {{"n", c.n},
          {"bound", c.bound},
          {"tree_count", c.tree_count},
          {"max_value", c.max_value},
          {"violations", c.violations},
          {"attaining", c.attaining},
          {"without_degree_2_or_3", c.without_degree_2_or_3},
          {"equality_mismatches", c.equality_mismatches},
          {"holds", c.holds()}};
}

nlohmann::json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"advisory", c.advisory}, {"detail", c.detail}};
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    const std::string& cell = cells[i];
    if (cell.find_first_of(",\"\n\r") == std::string::npos) {
      out += cell;
      continue;
    }
    out += '"';
    for (char ch : cell) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  }
  return out;
}

}  // namespace banhatti
