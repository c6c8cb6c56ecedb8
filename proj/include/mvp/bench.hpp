#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "mvp/algorithms.hpp"
#include "mvp/bits.hpp"
#include "mvp/machine.hpp"
#include "mvp/oplog.hpp"

namespace mvp {

/// One CSV row per (n, backend, mode) trial.
struct BenchRow {
  std::size_t n = 0;
  Backend backend = Backend::AxisLadder;
  Mode mode = Mode::Sequential;
  std::uint64_t total_ops = 0;
  std::array<std::uint64_t, kOpCategoryCount> category_ops{};
  std::uint64_t parallel_phases = 0;
  std::uint64_t usec = 0;

  static BenchRow from_report(const RunReport& report, std::uint64_t usec = 0);
};

/// n,backend,mode,total_ops,<one column per OpCategory>,parallel_phases,usec
std::string bench_csv_header();
/// No trailing newline.
std::string format_bench_row(const BenchRow& row);

/// Random generator for trial `trial` at size `n`, derived from a base seed.
/// Identical arguments give identical streams on every run.
std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t n, std::size_t trial);

/// Each cell independently 1 with probability `density`.
BitMatrix random_matrix(std::size_t n, double density, std::mt19937_64& rng);
BitVector random_vector(std::size_t n, double density, std::mt19937_64& rng);

}  // namespace mvp
