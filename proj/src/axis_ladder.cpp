#include "mvp/axis_ladder.hpp"

#include <string>

namespace mvp {

AxisLadderMvp::AxisLadderMvp(std::size_t n, Mode mode)
    : MvpMachine(n, mode),
      axes_(n, Axis{std::vector<std::uint8_t>(n, 0), false}),
      ladders_(n, LadderPosition::Initial),
      sections_(n, 1) {}

void AxisLadderMvp::require_parallel(const char* op) const {
  if (!parallel()) throw StateError(std::string(op) + ": machine is not in parallel mode");
}

void AxisLadderMvp::require_ladders_initial(const char* op) const {
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (ladders_[i] != LadderPosition::Initial) {
      throw StateError(std::string(op) + ": ladder " + std::to_string(i + 1) +
                       " is already shifted");
    }
  }
}

void AxisLadderMvp::activate_column(std::size_t j) {
  check_column(j, "activate_column");
  if (axes_[j].rotated) {
    throw StateError("activate_column: column " + std::to_string(j + 1) + " is already active");
  }
  toggle_column(j, true);
  invalidate_sync();
}

void AxisLadderMvp::deactivate_column(std::size_t j) {
  check_column(j, "deactivate_column");
  if (!axes_[j].rotated) {
    throw StateError("deactivate_column: column " + std::to_string(j + 1) + " is not active");
  }
  toggle_column(j, false);
  invalidate_sync();
}

void AxisLadderMvp::toggle_column(std::size_t j, bool activate) {
  charge(activate ? OpCategory::ColumnActivate : OpCategory::ColumnDeactivate);
  axes_[j].rotated = activate;
}

bool AxisLadderMvp::move_ladder(std::size_t i) {
  check_row(i, "move_ladder");
  if (ladders_[i] != LadderPosition::Initial) {
    throw StateError("move_ladder: ladder " + std::to_string(i + 1) + " is already shifted");
  }
  return slide_ladder(i);
}

bool AxisLadderMvp::slide_ladder(std::size_t i) {
  charge(OpCategory::LadderMove);
  if (row_blocked(i)) return false;
  ladders_[i] = LadderPosition::Shifted;
  charge(OpCategory::OutputSwitch);
  sections_[i] = 0;
  return true;
}

void AxisLadderMvp::parallel_sync() {
  require_parallel("parallel_sync");
  require_matrix("parallel_sync");
  require_vector("parallel_sync");
  const BitVector& v = *input_vector();
  {
    // Reverse movement of the previous vector's representation.
    PhaseScope phase(log(), true);
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (axes_[j].rotated) toggle_column(j, false);
    }
  }
  {
    PhaseScope phase(log(), true);
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (v[j]) toggle_column(j, true);
    }
  }
  mark_synced();
}

void AxisLadderMvp::parallel_ladder_step() {
  require_parallel("parallel_ladder_step");
  require_ladders_initial("parallel_ladder_step");
  PhaseScope phase(log(), true);
  for (std::size_t i = 0; i < dimension(); ++i) slide_ladder(i);
}

bool AxisLadderMvp::protrudes(std::size_t i, std::size_t j) const {
  return axes_[j].rotated && axes_[j].pulled_out[i] != 0;
}

bool AxisLadderMvp::row_blocked(std::size_t i) const {
  check_row(i, "row_blocked");
  for (std::size_t j = 0; j < dimension(); ++j) {
    if (protrudes(i, j)) return true;
  }
  return false;
}

bool AxisLadderMvp::column_active(std::size_t j) const {
  check_column(j, "column_active");
  return axes_[j].rotated;
}

LadderPosition AxisLadderMvp::ladder_position(std::size_t i) const {
  check_row(i, "ladder_position");
  return ladders_[i];
}

bool AxisLadderMvp::section_state(std::size_t i) const {
  check_row(i, "section_state");
  return sections_[i] != 0;
}

bool AxisLadderMvp::entry(std::size_t i, std::size_t j) const {
  return axes_[j].pulled_out[i] != 0;
}

void AxisLadderMvp::write_entry(std::size_t i, std::size_t j, bool value) {
  axes_[j].pulled_out[i] = value ? 1 : 0;
}

void AxisLadderMvp::do_sync_columns() {
  if (parallel()) {
    parallel_sync();
  } else {
    sequential_sync();
  }
}

void AxisLadderMvp::do_set_output() {
  if (parallel()) {
    parallel_ladder_step();
    return;
  }
  require_ladders_initial("set_output");
  for (std::size_t i = 0; i < dimension(); ++i) slide_ladder(i);
}

bool AxisLadderMvp::output_coordinate(std::size_t i) const { return sections_[i] != 0; }

void AxisLadderMvp::do_reset_output() {
  // Pull shifted ladders back, then flip switched sections back to 1.
  for (auto& ladder : ladders_) {
    if (ladder == LadderPosition::Shifted) {
      charge(OpCategory::ResetStep);
      ladder = LadderPosition::Initial;
    }
  }
  for (auto& section : sections_) {
    if (section == 0) {
      charge(OpCategory::ResetStep);
      section = 1;
    }
  }
}

}  // namespace mvp
