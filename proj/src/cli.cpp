#include "mvp/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "mvp/algorithms.hpp"
#include "mvp/bench.hpp"
#include "mvp/bits.hpp"

namespace mvp::cli {

namespace {

/// Input failure already reported as "<path>: <detail>".
struct InputFailure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure{path + ": cannot open file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BitMatrix load_matrix_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_matrix(text);
  } catch (const ParseError& e) {
    throw InputFailure{path + ": " + e.what()};
  }
}

BitVector load_vector_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_vector(text);
  } catch (const ParseError& e) {
    throw InputFailure{path + ": " + e.what()};
  }
}

void write_output(const std::optional<std::string>& path, const std::string& text,
                  std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputFailure{*path + ": cannot open for writing"};
  f << text;
  if (!f) throw InputFailure{*path + ": write failed"};
}

void append_ops_row(const std::string& path, const BenchRow& row) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream f(path, std::ios::binary | std::ios::app);
  if (!f) throw InputFailure{path + ": cannot open for appending"};
  if (fresh) f << bench_csv_header() << '\n';
  f << format_bench_row(row) << '\n';
  if (!f) throw InputFailure{path + ": write failed"};
}

std::uint64_t elapsed_usec(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count());
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const InputFailure& e) {
    err << "error: " << e.message << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace

int cmd_multiply(const MultiplyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BitMatrix a = load_matrix_file(options.a_path);
    const BitMatrix b = load_matrix_file(options.b_path);
    if (a.size() != b.size()) {
      throw InputFailure{"dimension mismatch: A is " + std::to_string(a.size()) + "x" +
                         std::to_string(a.size()) + ", B is " + std::to_string(b.size()) +
                         "x" + std::to_string(b.size())};
    }
    auto machine = make_machine(options.backend, a.size(), options.mode);
    const auto start = std::chrono::steady_clock::now();
    const RunReport report = matmul(*machine, a, b);
    const std::uint64_t usec = elapsed_usec(start);

    write_output(options.out_path, serialize_matrix(report.matrix()), out);
    if (options.ops_path) append_ops_row(*options.ops_path, BenchRow::from_report(report, usec));

    if (options.verify && report.matrix() != oracle_matmul(a, b)) {
      err << "verify: machine product differs from the oracle\n";
      return kExitMismatch;
    }
    return kExitOk;
  });
}

int cmd_matvec(const MatvecOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BitMatrix a = load_matrix_file(options.a_path);
    const BitVector v = load_vector_file(options.v_path);
    if (a.size() != v.size()) {
      throw InputFailure{"dimension mismatch: A is " + std::to_string(a.size()) + "x" +
                         std::to_string(a.size()) + ", V has dimension " +
                         std::to_string(v.size())};
    }
    auto machine = make_machine(options.backend, a.size(), options.mode);
    machine->load_matrix(a);
    const auto start = std::chrono::steady_clock::now();
    const RunReport report = matvec(*machine, v);
    const std::uint64_t usec = elapsed_usec(start);

    write_output(options.out_path, serialize_vector(report.vector()), out);
    if (options.ops_path) append_ops_row(*options.ops_path, BenchRow::from_report(report, usec));

    if (options.verify && report.vector() != oracle_matvec(a, v)) {
      err << "verify: machine product differs from the oracle\n";
      return kExitMismatch;
    }
    return kExitOk;
  });
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.density < 0.0 || options.density > 1.0) {
      throw InputFailure{"--density must lie in [0, 1]"};
    }
    // Open the sink before doing any work so a bad path fails fast.
    std::ofstream file;
    if (options.csv_path) {
      file.open(*options.csv_path, std::ios::binary | std::ios::trunc);
      if (!file) throw InputFailure{*options.csv_path + ": cannot open for writing"};
    }
    std::ostream& csv = options.csv_path ? static_cast<std::ostream&>(file) : out;

    csv << bench_csv_header() << '\n';
    int status = kExitOk;
    for (std::size_t n : options.sizes) {
      if (n == 0) throw InputFailure{"--sizes: dimension must be at least 1"};
      for (std::size_t trial = 0; trial < options.trials; ++trial) {
        auto rng = instance_rng(options.seed, n, trial);
        const BitMatrix a = random_matrix(n, options.density, rng);
        const BitMatrix b = random_matrix(n, options.density, rng);
        auto machine = make_machine(options.backend, n, options.mode);

        const auto start = std::chrono::steady_clock::now();
        const RunReport report = matmul(*machine, a, b);
        const std::uint64_t usec = options.timing ? elapsed_usec(start) : 0;

        if (report.matrix() != oracle_matmul(a, b)) {
          err << "bench: n=" << n << " trial " << trial
              << ": machine product differs from the oracle\n";
          status = kExitMismatch;
        }
        csv << format_bench_row(BenchRow::from_report(report, usec)) << '\n';
      }
    }
    csv.flush();
    if (!csv) throw InputFailure{"bench: write failed"};
    return status;
  });
}

int cmd_selftest(const SelftestConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const SelftestResult result = run_selftest(config, out);
  if (!result.passed) {
    err << "selftest FAILED after " << result.checks << " checks\n" << result.counterexample;
    return kExitMismatch;
  }
  out << "selftest passed: " << result.checks << " checks in " << elapsed_usec(start) / 1000
      << " ms\n";
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mechanical matrix-vector processor simulator", "mvpsim"};
  app.require_subcommand(1);

  const std::vector<std::string> backends{"axis", "wall"};
  const std::vector<std::string> modes{"seq", "par"};

  MultiplyOptions mul;
  std::string mul_out, mul_ops, mul_backend = "axis", mul_mode = "seq";
  auto* multiply = app.add_subcommand("multiply", "Boolean product of two matrix files");
  multiply->add_option("--a", mul.a_path, "Left operand (matrix text file)")->required();
  multiply->add_option("--b", mul.b_path, "Right operand (matrix text file)")->required();
  multiply->add_option("--backend", mul_backend, "Machine: axis | wall")
      ->check(CLI::IsMember(backends));
  multiply->add_option("--mode", mul_mode, "seq | par (par: axis only)")
      ->check(CLI::IsMember(modes));
  multiply->add_option("--out", mul_out, "Write the product here instead of stdout");
  multiply->add_option("--ops", mul_ops, "Append an operation-count CSV row to this file");
  multiply->add_flag("--verify", mul.verify, "Compare against the brute-force oracle");

  MatvecOptions mv;
  std::string mv_out, mv_ops, mv_backend = "axis", mv_mode = "seq";
  auto* matvec_cmd = app.add_subcommand("matvec", "Boolean product of a matrix and a vector");
  matvec_cmd->add_option("--a", mv.a_path, "Matrix text file")->required();
  matvec_cmd->add_option("--v", mv.v_path, "Vector text file (one line)")->required();
  matvec_cmd->add_option("--backend", mv_backend, "Machine: axis | wall")
      ->check(CLI::IsMember(backends));
  matvec_cmd->add_option("--mode", mv_mode, "seq | par (par: axis only)")
      ->check(CLI::IsMember(modes));
  matvec_cmd->add_option("--out", mv_out, "Write the product here instead of stdout");
  matvec_cmd->add_option("--ops", mv_ops, "Append an operation-count CSV row to this file");
  matvec_cmd->add_flag("--verify", mv.verify, "Compare against the brute-force oracle");

  BenchOptions bench;
  std::string bench_csv, bench_backend = "axis", bench_mode = "seq";
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts of seeded random matmuls");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated dimensions")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--backend", bench_backend, "Machine: axis | wall")
      ->check(CLI::IsMember(backends));
  bench_cmd->add_option("--mode", bench_mode, "seq | par (par: axis only)")
      ->check(CLI::IsMember(modes));
  bench_cmd->add_option("--seed", bench.seed, "Base seed for instance generation");
  bench_cmd->add_option("--trials", bench.trials, "Trials per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--density", bench.density, "Probability of a 1 cell")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--csv", bench_csv, "Output CSV file (default stdout)");
  bench_cmd->add_flag("--timing", bench.timing, "Record wall-clock microseconds");

  SelftestConfig self;
  auto* selftest = app.add_subcommand("selftest", "Exhaustive oracle and duality checks");
  selftest->add_option("--seed", self.seed, "Seed for the duality configurations");
  selftest->add_option("--configs", self.duality_configs, "Number of duality configurations");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("mvpsim");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto optional_path = [](const std::string& s) -> std::optional<std::string> {
    if (s.empty()) return std::nullopt;
    return s;
  };

  if (*multiply) {
    mul.out_path = optional_path(mul_out);
    mul.ops_path = optional_path(mul_ops);
    mul.backend = *backend_from_string(mul_backend);
    mul.mode = *mode_from_string(mul_mode);
    return cmd_multiply(mul, out, err);
  }
  if (*matvec_cmd) {
    mv.out_path = optional_path(mv_out);
    mv.ops_path = optional_path(mv_ops);
    mv.backend = *backend_from_string(mv_backend);
    mv.mode = *mode_from_string(mv_mode);
    return cmd_matvec(mv, out, err);
  }
  if (*bench_cmd) {
    bench.csv_path = optional_path(bench_csv);
    bench.backend = *backend_from_string(bench_backend);
    bench.mode = *mode_from_string(bench_mode);
    return cmd_bench(bench, out, err);
  }
  return cmd_selftest(self, out, err);
}

}  // namespace mvp::cli
