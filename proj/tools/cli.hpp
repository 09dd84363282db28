#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "courteous/bounds.hpp"
#include "courteous/row.hpp"
#include "courteous/simulate.hpp"

namespace courteous::cli {

enum class Command { Exact, Simulate, Bounds, Theatre, Sweep, Poly };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command command);
std::string_view to_string(OutputFormat format);
Command command_from_string(std::string_view name);
OutputFormat format_from_string(std::string_view name);

// Fully resolved invocation. Grids are stored expanded so the canonical JSON
// echo round-trips bit for bit.
struct RunConfig {
  Command command = Command::Exact;
  SeatDistribution dist = SeatDistribution::Uniform;
  Entrances entrances = Entrances::OneLeft;
  std::vector<int> n_values;     // single entry for exact/simulate/poly
  std::vector<double> p_values;  // empty means "not given"
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  Semantics semantics = Semantics::Model;
  std::string layout;  // theatre: "lipari:N" or a JSON file path
  std::string check;   // bounds: lemma1 | interpolation | zipf-right | r40
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  // empty: stdout
  bool dry_run = false;
};

// "a:b:c" inclusive of both endpoints (within 1e-12 of the stop), or a single
// number. Throws std::invalid_argument on malformed input or step <= 0.
std::vector<double> parse_grid(const std::string& text);
std::vector<int> parse_int_grid(const std::string& text);

// Canonical sorted-key JSON echo of a config; config_from_json inverts it.
std::string canonical_json(const RunConfig& config);
RunConfig config_from_json(const std::string& text);

// One output row: (n, p, dist, entrances, method, value, std_error?).
struct Record {
  int n = 0;
  double p = 0.0;
  std::string dist;
  std::string entrances;
  std::string method;
  double value = 0.0;
  std::optional<double> std_error;
};

// CSV with a fixed header and 12 significant digits, or a JSON array carrying
// the same values.
void write_records(const std::vector<Record>& records, OutputFormat format, std::ostream& out);

// Plot tables for bound reports: (grid, value, lower, upper), or the gap form
// (grid, midpoint - value) used by the interpolation check. An empty grid
// yields just the header (CSV) or an empty array (JSON).
void emit_plot_data(const BoundReport& report, OutputFormat format, std::ostream& out);
void emit_gap_plot_data(const BoundReport& report, OutputFormat format, std::ostream& out);

// Dispatch a parsed config; throws on validation problems (mapped to exit 2
// by run_main).
void run(const RunConfig& config, std::ostream& out);

// Full command-line behavior: parse, honor THEATRE_SEED, dispatch, map
// exceptions to exit codes (0 ok, 2 validation, 1 internal).
int run_main(int argc, const char* const* argv);

}  // namespace courteous::cli
