#include "mvp/wall_light.hpp"

#include <string>

namespace mvp {

namespace {
Mode sequential_only(Mode mode) {
  if (mode != Mode::Sequential) {
    throw InputError("WallLightMvp: the wall/light machine has no parallel mode");
  }
  return mode;
}
}  // namespace

WallLightMvp::WallLightMvp(std::size_t n, Mode mode)
    : MvpMachine(n, sequential_only(mode)),
      walls_(n, Wall{std::vector<std::uint8_t>(n, 0), false}),
      output_(n, 1) {}

void WallLightMvp::shift_wall_down(std::size_t j) {
  check_column(j, "shift_wall_down");
  if (walls_[j].shifted) {
    throw StateError("shift_wall_down: wall " + std::to_string(j + 1) + " is already down");
  }
  toggle_column(j, true);
  invalidate_sync();
}

void WallLightMvp::shift_wall_up(std::size_t j) {
  check_column(j, "shift_wall_up");
  if (!walls_[j].shifted) {
    throw StateError("shift_wall_up: wall " + std::to_string(j + 1) + " is not shifted");
  }
  toggle_column(j, false);
  invalidate_sync();
}

void WallLightMvp::toggle_column(std::size_t j, bool activate) {
  charge(activate ? OpCategory::ColumnActivate : OpCategory::ColumnDeactivate);
  walls_[j].shifted = activate;
}

std::size_t WallLightMvp::section_in_beam(std::size_t i, std::size_t j) const {
  check_row(i, "section_in_beam");
  check_column(j, "section_in_beam");
  const std::size_t even_section = 2 * (i + 1);
  return walls_[j].shifted ? even_section - 1 : even_section;
}

bool WallLightMvp::window_open(std::size_t j, std::size_t section) const {
  check_column(j, "window_open");
  if (section < 1 || section > 2 * dimension()) {
    throw InputError("window_open: section " + std::to_string(section) + " out of range 1.." +
                     std::to_string(2 * dimension()));
  }
  if (section % 2 == 0) return true;
  const std::size_t row = (section - 1) / 2;
  return walls_[j].entry_window_closed[row] == 0;
}

bool WallLightMvp::passes_light(std::size_t i, std::size_t j) const {
  return window_open(j, section_in_beam(i, j));
}

bool WallLightMvp::light_visible(std::size_t i) const {
  check_row(i, "light_visible");
  for (std::size_t j = 0; j < dimension(); ++j) {
    if (!passes_light(i, j)) return false;
  }
  return true;
}

bool WallLightMvp::observe_light(std::size_t i) {
  require_matrix("observe_light");
  check_row(i, "observe_light");
  charge(OpCategory::LightObserve);
  return light_visible(i);
}

bool WallLightMvp::wall_shifted(std::size_t j) const {
  check_column(j, "wall_shifted");
  return walls_[j].shifted;
}

bool WallLightMvp::entry(std::size_t i, std::size_t j) const {
  return walls_[j].entry_window_closed[i] != 0;
}

void WallLightMvp::write_entry(std::size_t i, std::size_t j, bool value) {
  walls_[j].entry_window_closed[i] = value ? 1 : 0;
}

void WallLightMvp::do_set_output() {
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (observe_light(i)) {
      charge(OpCategory::OutputSwitch);
      output_[i] = 0;
    }
  }
}

bool WallLightMvp::output_coordinate(std::size_t i) const { return output_[i] != 0; }

void WallLightMvp::do_reset_output() {
  for (auto& coord : output_) {
    if (coord == 0) {
      charge(OpCategory::ResetStep);
      coord = 1;
    }
  }
}

}  // namespace mvp
