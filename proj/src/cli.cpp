#include "banhatti/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "banhatti/io.hpp"
#include "banhatti/report.hpp"
#include "banhatti/trees.hpp"
#include "banhatti/verify.hpp"

namespace banhatti::cli {

namespace {

struct LoadedGraph {
  std::string label;
  std::optional<Graph> graph;
  std::string error;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

InputFormat detect(const std::string& path, InputFormat requested) {
  if (requested != InputFormat::Auto) return requested;
  auto ends_with = [&](std::string_view suffix) { return std::string_view(path).ends_with(suffix); };
  if (ends_with(".g6")) return InputFormat::Graph6;
  if (ends_with(".edges")) return InputFormat::EdgeList;
  if (path == "-") return InputFormat::Graph6;
  return InputFormat::Auto;
}

std::vector<LoadedGraph> load_inputs(const RunConfig& config) {
  std::vector<LoadedGraph> out;
  for (const std::string& path : config.inputs) {
    const InputFormat format = detect(path, config.input_format);
    if (format == InputFormat::Auto) {
      out.push_back({path, std::nullopt, "cannot infer input format from extension; use --input-format"});
      continue;
    }
    std::string content;
    if (path == "-") {
      content = read_all(std::cin);
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) {
        out.push_back({path, std::nullopt, "cannot open file"});
        continue;
      }
      content = read_all(file);
    }

    if (format == InputFormat::EdgeList) {
      try {
        out.push_back({path, parse_edge_list(content), {}});
      } catch (const std::exception& e) {
        out.push_back({path, std::nullopt, e.what()});
      }
      continue;
    }
    for (const Graph6Line& line : split_graph6_lines(content)) {
      std::string label = path + ":" + std::to_string(line.line_number);
      try {
        Graph g = parse_graph6(line.text);
        out.push_back({std::move(label), std::move(g), {}});
      } catch (const std::exception& e) {
        out.push_back({std::move(label), std::nullopt, e.what()});
      }
    }
  }
  return out;
}

void report_error(std::ostream& err, const std::string& label, const std::string& message) {
  fmt::print(err, "error: {}: {}\n", label, message);
}

std::string describe(const DomainError& e) { return std::string(to_string(e.code())) + ": " + e.what(); }

std::string fixed7(double v) { return fmt::format("{:.7f}", v); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int cmd_indices(const RunConfig& config, std::ostream& out, std::ostream& err) {
  int status = 0;
  nlohmann::json graphs = nlohmann::json::array();
  nlohmann::json errors = nlohmann::json::array();

  if (config.format == OutputFormat::Table) fmt::print(out, "{:<28} {:<7} {:>16}\n", "graph", "index", "value");
  if (config.format == OutputFormat::Csv) out << "graph,index,value\n";

  for (const LoadedGraph& item : load_inputs(config)) {
    std::string failure = item.error;
    std::optional<std::array<IndexValue, 10>> values;
    if (item.graph) {
      try {
        values = all_indices(*item.graph);
      } catch (const DomainError& e) {
        failure = describe(e);
      }
    }
    if (!values) {
      status = 1;
      report_error(err, item.label, failure);
      errors.push_back({{"graph", item.label}, {"error", failure}});
      continue;
    }
    nlohmann::json row = {{"graph", item.label},
                          {"graph6", to_graph6(*item.graph)},
                          {"n", item.graph->order()},
                          {"m", item.graph->size()}};
    for (const IndexValue& v : *values) {
      const std::string name(to_string(v.kind));
      row["indices"][name] = v.value;
      if (config.format == OutputFormat::Table) fmt::print(out, "{:<28} {:<7} {:>16}\n", item.label, name, fixed7(v.value));
      if (config.format == OutputFormat::Csv) out << csv_line({item.label, name, shortest_repr(v.value)}) << '\n';
    }
    graphs.push_back(std::move(row));
  }
  if (config.format == OutputFormat::Json) {
    out << nlohmann::json{{"graphs", graphs}, {"errors", errors}}.dump(2) << '\n';
  }
  return status;
}

int cmd_bounds(const RunConfig& config, std::ostream& out, std::ostream& err) {
  int status = 0;
  nlohmann::json graphs = nlohmann::json::array();
  nlohmann::json errors = nlohmann::json::array();

  if (config.format == OutputFormat::Table) {
    fmt::print(out, "{:<20} {:<12} {:>14} {:>14} {:>14} {:<5} {:<5} {:<5} {:<5} {}\n", "graph", "id", "lhs", "rhs",
               "slack", "holds", "eq", "pred", "cons", "status");
  }
  if (config.format == OutputFormat::Csv) {
    std::vector<std::string> header{"graph"};
    for (const auto& c : bound_report_columns()) header.push_back(c);
    out << csv_line(header) << '\n';
  }

  for (const LoadedGraph& item : load_inputs(config)) {
    if (!item.graph) {
      status = 1;
      report_error(err, item.label, item.error);
      errors.push_back({{"graph", item.label}, {"error", item.error}});
      continue;
    }
    try {
      require_index_domain(*item.graph);
    } catch (const DomainError& e) {
      status = 1;
      report_error(err, item.label, describe(e));
      errors.push_back({{"graph", item.label}, {"error", describe(e)}});
      continue;
    }

    std::vector<BoundReport> reports = check_all_bounds(*item.graph, config.tol);
    if (config.bound) {
      std::erase_if(reports, [&](const BoundReport& r) { return r.id != *config.bound; });
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const BoundReport& r : reports) {
      if (!r.skipped && (!r.holds || !r.consistent)) status = 1;
      rows.push_back(to_json(r));
      if (config.format == OutputFormat::Table) {
        if (r.skipped) {
          fmt::print(out, "{:<20} {:<12} {:>14} {:>14} {:>14} {:<5} {:<5} {:<5} {:<5} skipped: {}\n", item.label,
                     to_string(r.id), "-", "-", "-", "-", "-", "-", "-", r.skip_reason);
        } else {
          fmt::print(out, "{:<20} {:<12} {:>14} {:>14} {:>14} {:<5} {:<5} {:<5} {:<5} {}\n", item.label,
                     to_string(r.id), fixed7(r.lhs), fixed7(r.rhs), fixed7(r.slack), yes_no(r.holds),
                     yes_no(r.equality_detected), yes_no(r.equality_predicted), yes_no(r.consistent),
                     r.holds && r.consistent ? "ok" : "FAIL");
        }
      }
      if (config.format == OutputFormat::Csv) {
        std::vector<std::string> cells{item.label};
        for (auto& c : bound_report_cells(r)) cells.push_back(std::move(c));
        out << csv_line(cells) << '\n';
      }
    }
    graphs.push_back({{"graph", item.label}, {"graph6", to_graph6(*item.graph)}, {"reports", rows}});
  }
  if (config.format == OutputFormat::Json) {
    out << nlohmann::json{{"graphs", graphs}, {"errors", errors}}.dump(2) << '\n';
  }
  return status;
}

int cmd_extremal(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::size_t n = config.n;
  if (n < 3) {
    report_error(err, "extremal", "tree range starts at n = 3, got n = " + std::to_string(n));
    return 1;
  }
  if (n > kMaxTreeOrder) {
    report_error(err, "extremal", "n exceeds the enumeration limit " + std::to_string(kMaxTreeOrder));
    return 1;
  }

  const ExtremalResult r = extremal_search({n, config.chemical}, config.index, config.tol);
  nlohmann::json j = to_json(r);
  bool passed = true;
  auto close = [&](double a, double b) { return std::abs(a - b) <= config.tol * std::max(1.0, std::abs(b)); };

  nlohmann::json checks = nlohmann::json::object();
  if (r.closed_form_min && r.closed_form_max) {
    const bool min_match = close(r.min_value, *r.closed_form_min);
    const bool max_match = close(r.max_value, *r.closed_form_max);
    const bool min_path = r.min_trees.size() == 1 &&
                          tree_canonical_form(r.min_trees.front()) == tree_canonical_form(path_graph(n));
    const bool max_star = r.max_trees.size() == 1 &&
                          tree_canonical_form(r.max_trees.front()) == tree_canonical_form(star_graph(n));
    checks["closed_form_min_matches"] = min_match;
    checks["closed_form_max_matches"] = max_match;
    checks["min_unique_path"] = min_path;
    checks["max_unique_star"] = max_star;
    passed = min_match && max_match && min_path && max_star;
  }
  std::optional<ChemicalBoundCheck> chem;
  std::string chem_note;
  if (config.chemical && config.index == IndexKind::BSO) {
    if (n >= 5 && (n - 2) % 3 == 0) {
      chem = check_chemical_bound(n, config.tol);
      checks["chemical_bound_holds"] = chem->holds();
      passed = passed && chem->holds();
    } else {
      chem_note = "no certified bound for this n (requires n >= 5 and n - 2 divisible by 3)";
    }
  }
  j["checks"] = checks;
  j["chemical_bound"] = chem ? to_json(*chem) : nlohmann::json(nullptr);
  if (!chem_note.empty()) j["chemical_bound_note"] = chem_note;
  j["passed"] = passed;

  switch (config.format) {
    case OutputFormat::Json: out << j.dump(2) << '\n'; break;
    case OutputFormat::Csv: {
      out << "key,value\n";
      for (auto& [key, value] : j.items()) {
        out << csv_line({key, value.is_string() ? value.get<std::string>() : value.dump()}) << '\n';
      }
      break;
    }
    case OutputFormat::Table: {
      fmt::print(out, "family      : {} trees, n = {}\n", config.chemical ? "chemical" : "free", n);
      fmt::print(out, "index       : {}\n", to_string(r.index));
      fmt::print(out, "tree count  : {}\n", r.tree_count);
      fmt::print(out, "minimum     : {} ({} attaining: ", fixed7(r.min_value), r.min_trees.size());
      for (std::size_t i = 0; i < r.min_trees.size(); ++i) fmt::print(out, "{}{}", i ? " " : "", to_graph6(r.min_trees[i]));
      fmt::print(out, ")\nmaximum     : {} ({} attaining: ", fixed7(r.max_value), r.max_trees.size());
      for (std::size_t i = 0; i < r.max_trees.size(); ++i) fmt::print(out, "{}{}", i ? " " : "", to_graph6(r.max_trees[i]));
      fmt::print(out, ")\n");
      if (r.closed_form_min) {
        fmt::print(out, "path form   : {} matches={} unique={}\n", fixed7(*r.closed_form_min),
                   yes_no(checks["closed_form_min_matches"].get<bool>()), yes_no(checks["min_unique_path"].get<bool>()));
        fmt::print(out, "star form   : {} matches={} unique={}\n", fixed7(*r.closed_form_max),
                   yes_no(checks["closed_form_max_matches"].get<bool>()), yes_no(checks["max_unique_star"].get<bool>()));
      }
      if (chem) {
        fmt::print(out, "chem bound  : {} violations={} attaining={} n2=n3=0 trees={} mismatches={}\n",
                   fixed7(chem->bound), chem->violations, chem->attaining, chem->without_degree_2_or_3,
                   chem->equality_mismatches);
      } else if (!chem_note.empty()) {
        fmt::print(out, "chem bound  : {}\n", chem_note);
      }
      fmt::print(out, "result      : {}\n", passed ? "PASS" : "FAIL");
      break;
    }
  }
  return passed ? 0 : 1;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  std::vector<CheckResult> checks;
  auto append = [&](std::vector<CheckResult> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };

  if (config.suite == Suite::Default || config.suite == Suite::Random) {
    CorpusOptions options;
    options.seed = config.seed;
    options.random_count = config.count;
    options.max_random_order = config.max_n;
    options.max_tree_order = config.suite == Suite::Default ? std::min<std::size_t>(config.max_n, 10) : 0;
    append(run_bound_sweep(verification_corpus(options), config.tol));
  }
  if (config.suite == Suite::Default || config.suite == Suite::Trees) {
    append(run_tree_suite(config.max_n, config.tol));
    append(run_scalar_suite(config.seed));
  }

  std::size_t failed = 0, advisory = 0;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (c.advisory) {
      ++advisory;
    } else {
      ++failed;
    }
  }

  switch (config.format) {
    case OutputFormat::Json: {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& c : checks) list.push_back(to_json(c));
      static const char* kSuiteNames[] = {"default", "trees", "random"};
      out << nlohmann::json{{"suite", kSuiteNames[static_cast<int>(config.suite)]},
                            {"seed", config.seed},
                            {"checks", list},
                            {"failed", failed},
                            {"advisory", advisory},
                            {"passed", failed == 0}}
                 .dump(2)
          << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "name,passed,advisory,detail\n";
      for (const auto& c : checks) {
        out << csv_line({c.name, c.passed ? "true" : "false", c.advisory ? "true" : "false", c.detail}) << '\n';
      }
      break;
    case OutputFormat::Table:
      for (const auto& c : checks) {
        fmt::print(out, "{:<4}  {:<26} {}\n", c.passed ? "PASS" : (c.advisory ? "NOTE" : "FAIL"), c.name, c.detail);
      }
      fmt::print(out, "{} checks, {} failed, {} advisory\n", checks.size(), failed, advisory);
      break;
  }
  return failed == 0 ? 0 : 1;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::Indices: return cmd_indices(config, out, err);
    case Command::Bounds: return cmd_bounds(config, out, err);
    case Command::Extremal: return cmd_extremal(config, out, err);
    case Command::Verify: return cmd_verify(config, out, err);
  }
  return 2;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string index_name = "BSO";
  std::string bound_name;

  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::Table}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
  const std::map<std::string, InputFormat> input_formats{{"g6", InputFormat::Graph6},
                                                         {"edges", InputFormat::EdgeList}};
  const std::map<std::string, Suite> suites{
      {"default", Suite::Default}, {"trees", Suite::Trees}, {"random", Suite::Random}};

  CLI::App app{"Banhatti-Sombor and related degree-based indices: evaluation, bound checks, extremal trees"};
  app.name("bsoindex");
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format: table, json, csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--tol", config.tol, "Relative tolerance")->check(CLI::PositiveNumber);
  };
  auto graph_inputs = [&](CLI::App* sub) {
    sub->add_option("inputs", config.inputs, "Graph files (.g6: one graph per line, .edges: one graph)")
        ->required();
    sub->add_option("--input-format", config.input_format, "Override format detection: g6, edges")
        ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));
  };

  CLI::App* indices = app.add_subcommand("indices", "Print all ten indices for each input graph");
  common(indices);
  graph_inputs(indices);

  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate every registered bound on each input graph");
  common(bounds);
  graph_inputs(bounds);
  bounds->add_option("--id", bound_name, "Only report this bound (e.g. T3.4)");

  CLI::App* extremal = app.add_subcommand("extremal", "Exhaustive min/max of an index over n-vertex trees");
  common(extremal);
  extremal->add_option("--n", config.n, "Tree order")->required();
  extremal->add_flag("--chemical", config.chemical, "Restrict to trees with maximum degree <= 4");
  extremal->add_option("--index", index_name, "Index kind (BSO, SO, R, M2STAR, H, ID, SDD, ISI, GA, F)");

  CLI::App* verify = app.add_subcommand("verify", "Run the corpus sweeps and tree checks");
  common(verify);
  verify->add_option("--suite", config.suite, "default, trees or random")
      ->transform(CLI::CheckedTransformer(suites, CLI::ignore_case));
  verify->add_option("--seed", config.seed, "Seed for the random corpus");
  verify->add_option("--count", config.count, "Number of random graphs");
  verify->add_option("--max-n", config.max_n, "Largest order for random graphs and tree checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(indices)) config.command = Command::Indices;
  if (app.got_subcommand(bounds)) config.command = Command::Bounds;
  if (app.got_subcommand(extremal)) config.command = Command::Extremal;
  if (app.got_subcommand(verify)) config.command = Command::Verify;

  auto kind = parse_index_kind(index_name);
  if (!kind) {
    fmt::print(err, "error: unknown index kind '{}'\n", index_name);
    return 2;
  }
  config.index = *kind;
  if (!bound_name.empty()) {
    config.bound = parse_bound_id(bound_name);
    if (!config.bound) {
      fmt::print(err, "error: unknown bound id '{}'\n", bound_name);
      return 2;
    }
  }
  return run(config, out, err);
}

}  // namespace banhatti::cli
