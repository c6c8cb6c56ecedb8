#pragma once

// Rotating-axis / sliding-ladder processor.
//
// Column j is an axis carrying n segments; a segment is pulled out
// (perpendicular) for a 1 entry and aligned with the axis for a 0. Activating
// the column rotates the axis by 90 degrees so its pulled-out segments hang
// vertically and stick through the openings of the ladders underneath. Row i
// has one ladder; sliding it right by one opening succeeds iff nothing sticks
// through it, and a full slide knocks output section i from 1 to 0.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mvp/machine.hpp"

namespace mvp {

enum class LadderPosition : std::uint8_t { Initial, Shifted };

class AxisLadderMvp : public MvpMachine {
 public:
  explicit AxisLadderMvp(std::size_t n, Mode mode = Mode::Sequential);

  Backend backend() const noexcept override { return Backend::AxisLadder; }

  /// Rotate axis j down. Throws StateError if already active.
  void activate_column(std::size_t j);
  /// Rotate axis j back. Throws StateError if not active.
  void deactivate_column(std::size_t j);

  /// Slide ladder i one opening to the right. Returns whether the full move
  /// happened (and so switched output section i to 0). A blocked attempt
  /// still costs one LadderMove.
  bool move_ladder(std::size_t i);

  /// Parallel mode only: withdraw every active column in one phase, then
  /// activate the columns selected by the loaded vector in a second phase.
  void parallel_sync();
  /// Parallel mode only: all ladders attempt their move in one phase.
  void parallel_ladder_step();

  /// Segment (i, j) sticks through ladder i's opening.
  virtual bool protrudes(std::size_t i, std::size_t j) const;
  bool row_blocked(std::size_t i) const;
  bool column_active(std::size_t j) const override;
  LadderPosition ladder_position(std::size_t i) const;
  /// Output section i (1 until a full ladder move switches it).
  bool section_state(std::size_t i) const;

 protected:
  bool entry(std::size_t i, std::size_t j) const override;
  void write_entry(std::size_t i, std::size_t j, bool value) override;
  void toggle_column(std::size_t j, bool activate) override;
  void do_sync_columns() override;
  void do_set_output() override;
  bool output_coordinate(std::size_t i) const override;
  void do_reset_output() override;

 private:
  struct Axis {
    std::vector<std::uint8_t> pulled_out;  // one per row
    bool rotated = false;
  };

  void require_parallel(const char* op) const;
  void require_ladders_initial(const char* op) const;
  bool slide_ladder(std::size_t i);

  std::vector<Axis> axes_;
  std::vector<LadderPosition> ladders_;
  std::vector<std::uint8_t> sections_;
};

}  // namespace mvp
