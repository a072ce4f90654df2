#ifndef BANHATTI_CLI_HPP
#define BANHATTI_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "banhatti/bounds.hpp"
#include "banhatti/indices.hpp"

namespace banhatti::cli {

enum class Command { Indices, Bounds, Extremal, Verify };
enum class OutputFormat { Table, Json, Csv };
enum class InputFormat { Auto, Graph6, EdgeList };
enum class Suite { Default, Trees, Random };

struct RunConfig {
  Command command = Command::Indices;
  std::vector<std::string> inputs;  // "-" reads standard input
  InputFormat input_format = InputFormat::Auto;
  OutputFormat format = OutputFormat::Table;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 42;

  // extremal
  std::size_t n = 0;
  bool chemical = false;
  IndexKind index = IndexKind::BSO;

  // bounds
  std::optional<BoundId> bound;

  // verify
  Suite suite = Suite::Default;
  std::size_t count = 1000;
  std::size_t max_n = 12;
};

// Each command writes its report to `out`, diagnostics to `err`, and returns
// the process exit status: 0 iff every input parsed and every check passed.
int cmd_indices(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_extremal(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Usage errors exit with status 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace banhatti::cli

#endif  // BANHATTI_CLI_HPP
