#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace brt::cli {

enum class Command { Compute, QuasiTrees, Count, Verify, Dual, SpanningTrees };
enum class OutputFormat { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitSizeCap = 3;

struct RunConfig {
  Command command = Command::Compute;
  std::string method = "quasitree";  ///< statesum | tree | recursive | quasitree | all
  std::string input_path;            ///< "-" reads stdin
  OutputFormat format = OutputFormat::Text;
  std::optional<std::vector<std::size_t>> edge_order;  ///< 1-based, overrides the file
  std::size_t size_cap = 24;
  std::uint64_t seed = 1;
};

int run_compute(const RunConfig& cfg, std::ostream& out);
int run_quasi_tree_table(const RunConfig& cfg, std::ostream& out);
int run_count(const RunConfig& cfg, std::ostream& out);
int run_verify(const RunConfig& cfg, std::ostream& out);
int run_dual(const RunConfig& cfg, std::ostream& out);
int run_spanning_trees(const RunConfig& cfg, std::ostream& out);

/// Parses arguments and dispatches; library errors become exit codes with a
/// message on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace brt::cli
