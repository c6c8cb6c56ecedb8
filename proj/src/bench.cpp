#include "mvp/bench.hpp"

namespace mvp {

namespace {
// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

BenchRow BenchRow::from_report(const RunReport& report, std::uint64_t usec) {
  BenchRow row;
  row.n = report.n;
  row.backend = report.backend;
  row.mode = report.mode;
  row.total_ops = report.ops.total();
  for (std::size_t k = 0; k < kOpCategoryCount; ++k) {
    row.category_ops[k] = report.ops.count(kAllOpCategories[k]);
  }
  row.parallel_phases = report.ops.parallel_phases();
  row.usec = usec;
  return row;
}

std::string bench_csv_header() {
  std::string h = "n,backend,mode,total_ops";
  for (auto c : kAllOpCategories) {
    h += ',';
    h += to_string(c);
  }
  h += ",parallel_phases,usec";
  return h;
}

std::string format_bench_row(const BenchRow& row) {
  std::string s = std::to_string(row.n);
  s += ',';
  s += to_string(row.backend);
  s += ',';
  s += to_string(row.mode);
  s += ',';
  s += std::to_string(row.total_ops);
  for (auto count : row.category_ops) {
    s += ',';
    s += std::to_string(count);
  }
  s += ',';
  s += std::to_string(row.parallel_phases);
  s += ',';
  s += std::to_string(row.usec);
  return s;
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t n, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

BitMatrix random_matrix(std::size_t n, double density, std::mt19937_64& rng) {
  return BitMatrix::from_fn(
      n, [&](std::size_t, std::size_t) { return unit_uniform(rng) < density; });
}

BitVector random_vector(std::size_t n, double density, std::mt19937_64& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, unit_uniform(rng) < density);
  return v;
}

}  // namespace mvp
