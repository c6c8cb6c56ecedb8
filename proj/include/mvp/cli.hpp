#pragma once

// Subcommands of the `mvpsim` tool. Each returns a process exit code:
//   0  success
//   1  machine result disagrees with the oracle (or selftest failure)
//   2  unreadable / malformed input, dimension mismatch, usage error

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mvp/machine.hpp"
#include "mvp/selftest.hpp"

namespace mvp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

struct MultiplyOptions {
  std::string a_path;
  std::string b_path;
  Backend backend = Backend::AxisLadder;
  Mode mode = Mode::Sequential;
  std::optional<std::string> out_path;  // stdout when empty
  std::optional<std::string> ops_path;  // BenchRow appended here
  bool verify = false;
};

struct MatvecOptions {
  std::string a_path;
  std::string v_path;
  Backend backend = Backend::AxisLadder;
  Mode mode = Mode::Sequential;
  std::optional<std::string> out_path;
  std::optional<std::string> ops_path;
  bool verify = false;
};

struct BenchOptions {
  std::vector<std::size_t> sizes{4, 8, 16, 32, 64};
  Backend backend = Backend::AxisLadder;
  Mode mode = Mode::Sequential;
  std::uint64_t seed = 42;
  std::size_t trials = 1;
  double density = 0.5;
  std::optional<std::string> csv_path;  // stdout when empty
  /// Record wall-clock microseconds; otherwise the usec column is 0 so that
  /// runs with the same seed are byte-identical.
  bool timing = false;
};

int cmd_multiply(const MultiplyOptions& options, std::ostream& out, std::ostream& err);
int cmd_matvec(const MatvecOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int cmd_selftest(const SelftestConfig& config, std::ostream& out, std::ostream& err);

/// Full command line, without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvp::cli
