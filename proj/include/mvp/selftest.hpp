#pragma once

// Exhaustive small-instance verification of both machines against the
// brute-force oracle, plus the ladder/light duality check.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>

#include "mvp/axis_ladder.hpp"
#include "mvp/wall_light.hpp"

namespace mvp {

struct SelftestConfig {
  std::function<std::unique_ptr<AxisLadderMvp>(std::size_t, Mode)> make_axis =
      [](std::size_t n, Mode mode) { return std::make_unique<AxisLadderMvp>(n, mode); };
  std::function<std::unique_ptr<WallLightMvp>(std::size_t)> make_wall = [](std::size_t n) {
    return std::make_unique<WallLightMvp>(n);
  };
  std::size_t max_exhaustive_n = 3;
  std::uint64_t seed = 42;
  std::size_t duality_configs = 1000;
  std::size_t duality_max_n = 12;
};

struct SelftestResult {
  bool passed = true;
  std::size_t checks = 0;
  /// First failure, with the offending inputs in the text format.
  std::string counterexample;
};

/// Stops at the first failure. Progress lines go to `log`.
SelftestResult run_selftest(const SelftestConfig& config, std::ostream& log);

}  // namespace mvp
