#pragma once

// Sliding-wall / light-beam processor.
//
// Column j is a thin wall split into 2n sections, numbered 1..2n from the
// top. Section 2k-1 carries the window for entry k (closed = 1, open = 0);
// every even section has a window that is always open. Light i shines at the
// height of section 2i of the first wall in its initial position. Activating
// a column shifts its wall down one section, which puts section 2i-1 in the
// beam. Light i is seen behind the last wall iff no active column has a 1 in
// row i, and output coordinate i is the complement of that observation.
//
// There is no parallel mode for this machine.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mvp/machine.hpp"

namespace mvp {

class WallLightMvp : public MvpMachine {
 public:
  explicit WallLightMvp(std::size_t n, Mode mode = Mode::Sequential);

  Backend backend() const noexcept override { return Backend::WallLight; }

  /// Activate column j. Charged as one ColumnActivate.
  void shift_wall_down(std::size_t j);
  /// Deactivate column j. Charged as one ColumnDeactivate.
  void shift_wall_up(std::size_t j);

  /// Look for light i behind the last wall; one LightObserve.
  bool observe_light(std::size_t i);

  /// 1-based section of wall j currently in front of light i.
  std::size_t section_in_beam(std::size_t i, std::size_t j) const;
  bool window_open(std::size_t j, std::size_t section) const;
  bool passes_light(std::size_t i, std::size_t j) const;
  /// Uncharged: would light i be observed right now?
  bool light_visible(std::size_t i) const;

  bool wall_shifted(std::size_t j) const;
  bool column_active(std::size_t j) const override { return wall_shifted(j); }

 protected:
  bool entry(std::size_t i, std::size_t j) const override;
  void write_entry(std::size_t i, std::size_t j, bool value) override;
  void toggle_column(std::size_t j, bool activate) override;
  void do_set_output() override;
  bool output_coordinate(std::size_t i) const override;
  void do_reset_output() override;

 private:
  struct Wall {
    std::vector<std::uint8_t> entry_window_closed;  // one per row
    bool shifted = false;
  };

  std::vector<Wall> walls_;
  std::vector<std::uint8_t> output_;
};

}  // namespace mvp
