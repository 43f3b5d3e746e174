#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rqit/grid.hpp"

namespace rqit::cli {

enum class Command { kFig1, kFig2, kFig3, kMetric, kCurvature, kValidate };

std::string to_string(Command command);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitArgument = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitIo = 4;

struct RunConfig {
  Command command = Command::kFig1;
  double r = 0.6;
  Grid xi_grid{0.0, 0.95, 0.01};
  Grid theta_grid{0.5, 2.5, 0.5};  // curvature only
  double cutoff_tol = 1e-12;
  std::int64_t samples = 200000;
  std::uint64_t seed = 42;
  std::string output_path = "-";  // "-" is stdout
  std::string svg_path;           // empty: no plot
  bool conditioned = false;       // fig2 only
};

// Per-command defaults for r, grids and samples.
RunConfig defaults_for(Command command);

// Parses "min:max:step".
Grid parse_grid(const std::string& text);
std::string format_grid(const Grid& grid);

// Computes the table for `config` and writes CSV (and SVG when requested).
// Errors are reported on `err` and mapped to the exit codes above.
int run(const RunConfig& config, std::ostream& err);

// Full command line: parse, then run. Help goes to `out`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rqit::cli
