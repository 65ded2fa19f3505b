#pragma once

// Command-line front end: hilbert, groebner, betti, syzygy-check, limit and
// verify subcommands.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dpjet {

enum ExitCode : int { kExitPass = 0, kExitMismatch = 1, kExitUsage = 2, kExitResource = 3 };

enum class Command { hilbert, groebner, betti, syzygy_check, limit, verify };
enum class OutputFormat { table, json, csv };

struct NRange {
  int lo = 0;
  int hi = 0;
};

/// Parses "A..B" (or a single "N"); nullopt when malformed or empty.
std::optional<NRange> parse_n_range(const std::string& s);

struct RunConfig {
  Command command = Command::verify;
  int n = 3;
  std::optional<NRange> n_range;
  int qmax = 10;
  int tmax = 5;
  OutputFormat format = OutputFormat::table;
  std::string method = "recursive";
  std::string out_path;

  // caps
  std::size_t max_slice_dim = 50000;
  std::size_t max_basis_size = 20000;
  int syzygy_max_n = 6;

  // subcommand switches
  bool verify = false;     // hilbert --verify
  bool recursive = false;  // groebner --recursive
  bool census = false;
  bool graded = false;
  bool check = false;
  bool drop_nu12 = false;
  bool rr = false;
  std::optional<int> gb_window;
};

/// Default caps, overridden by DPJET_MAX_SLICE_DIM and DPJET_MAX_BASIS_SIZE.
RunConfig default_config();

/// Execute a parsed configuration; output goes to `out` (or cfg.out_path).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parse argv (without the program name) and run.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpjet
