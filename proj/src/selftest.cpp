#include "mvp/selftest.hpp"

#include <ostream>
#include <sstream>
#include <vector>

#include "mvp/algorithms.hpp"
#include "mvp/bench.hpp"

namespace mvp {

namespace {

using MachineFactory = std::function<std::unique_ptr<MvpMachine>(std::size_t)>;

struct MachineConfig {
  std::string label;
  MachineFactory make;
};

BitMatrix matrix_from_mask(std::size_t n, std::uint64_t mask) {
  return BitMatrix::from_fn(
      n, [&](std::size_t i, std::size_t j) { return ((mask >> (i * n + j)) & 1U) != 0; });
}

BitVector vector_from_mask(std::size_t n, std::uint64_t mask) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, ((mask >> i) & 1U) != 0);
  return v;
}

std::vector<MachineConfig> machine_configs(const SelftestConfig& config) {
  return {
      {"axis/seq", [&](std::size_t n) { return config.make_axis(n, Mode::Sequential); }},
      {"axis/par", [&](std::size_t n) { return config.make_axis(n, Mode::Parallel); }},
      {"wall/seq", [&](std::size_t n) { return config.make_wall(n); }},
  };
}

std::string describe(const std::string& label, const std::string& what) {
  return label + ": " + what;
}

bool check_matvec(const MachineConfig& cfg, std::size_t n, SelftestResult& result) {
  const std::uint64_t matrices = std::uint64_t{1} << (n * n);
  const std::uint64_t vectors = std::uint64_t{1} << n;
  for (std::uint64_t am = 0; am < matrices; ++am) {
    const BitMatrix a = matrix_from_mask(n, am);
    auto machine = cfg.make(n);
    machine->load_matrix(a);
    for (std::uint64_t vm = 0; vm < vectors; ++vm) {
      const BitVector v = vector_from_mask(n, vm);
      const BitVector got = matvec(*machine, v).vector();
      const BitVector want = oracle_matvec(a, v);
      ++result.checks;
      if (got != want) {
        std::ostringstream os;
        os << describe(cfg.label, "matvec mismatch") << "\nA:\n"
           << serialize_matrix(a) << "V:\n"
           << serialize_vector(v) << "machine:\n"
           << serialize_vector(got) << "oracle:\n"
           << serialize_vector(want);
        result.passed = false;
        result.counterexample = os.str();
        return false;
      }
    }
  }
  return true;
}

bool check_matmul(const MachineConfig& cfg, std::size_t n, SelftestResult& result) {
  const std::uint64_t matrices = std::uint64_t{1} << (n * n);
  auto machine = cfg.make(n);
  for (std::uint64_t am = 0; am < matrices; ++am) {
    const BitMatrix a = matrix_from_mask(n, am);
    for (std::uint64_t bm = 0; bm < matrices; ++bm) {
      const BitMatrix b = matrix_from_mask(n, bm);
      const BitMatrix got = matmul(*machine, a, b).matrix();
      const BitMatrix want = oracle_matmul(a, b);
      ++result.checks;
      if (got != want) {
        std::ostringstream os;
        os << describe(cfg.label, "matmul mismatch") << "\nA:\n"
           << serialize_matrix(a) << "B:\n"
           << serialize_matrix(b) << "machine:\n"
           << serialize_matrix(got) << "oracle:\n"
           << serialize_matrix(want);
        result.passed = false;
        result.counterexample = os.str();
        return false;
      }
    }
  }
  return true;
}

bool check_duality(const SelftestConfig& config, SelftestResult& result) {
  std::mt19937_64 rng(config.seed);
  for (std::size_t c = 0; c < config.duality_configs; ++c) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % config.duality_max_n);
    const BitMatrix a = random_matrix(n, 0.5, rng);
    const BitVector active = random_vector(n, 0.5, rng);

    auto axis = config.make_axis(n, Mode::Sequential);
    auto wall = config.make_wall(n);
    axis->load_matrix(a);
    wall->load_matrix(a);
    for (std::size_t j = 0; j < n; ++j) {
      if (active[j]) {
        axis->activate_column(j);
        wall->shift_wall_down(j);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const bool blocked = !axis->move_ladder(i);
      const bool observed = wall->observe_light(i);
      ++result.checks;
      if (blocked == observed) {
        std::ostringstream os;
        os << "duality violated at row " << (i + 1) << " (ladder "
           << (blocked ? "blocked" : "free") << ", light "
           << (observed ? "observed" : "not observed") << ")\nA:\n"
           << serialize_matrix(a) << "active columns:\n"
           << serialize_vector(active);
        result.passed = false;
        result.counterexample = os.str();
        return false;
      }
    }
  }
  return true;
}

}  // namespace

SelftestResult run_selftest(const SelftestConfig& config, std::ostream& log) {
  SelftestResult result;
  const auto configs = machine_configs(config);

  for (const auto& cfg : configs) {
    for (std::size_t n = 1; n <= config.max_exhaustive_n; ++n) {
      const std::size_t before = result.checks;
      if (!check_matvec(cfg, n, result)) return result;
      log << cfg.label << " matvec n=" << n << ": " << (result.checks - before)
          << " cases ok\n";
    }
    if (config.max_exhaustive_n >= 2) {
      const std::size_t before = result.checks;
      if (!check_matmul(cfg, 2, result)) return result;
      log << cfg.label << " matmul n=2: " << (result.checks - before) << " cases ok\n";
    }
  }

  const std::size_t before = result.checks;
  if (!check_duality(config, result)) return result;
  log << "ladder/light duality: " << config.duality_configs << " configurations, "
      << (result.checks - before) << " rows ok\n";
  return result;
}

}  // namespace mvp
