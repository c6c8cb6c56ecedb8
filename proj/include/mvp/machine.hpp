#pragma once

// The matrix-vector processor (MVP) contract shared by every backend.
//
// A machine holds an n x n input array, an n-dimensional input vector and an
// n-dimensional output vector. The six contract operations map onto the six
// processor requirements:
//
//   load_matrix   read a matrix into the input array          <= n^2 + n ops
//   load_vector   read a vector into the input vector         <= n ops
//   report_output report the output vector                    <= n ops
//   sync_columns  column j active <=> input coordinate j is 1 <= 2n ops
//   set_output    output i = 1 <=> row i has a 1 in an active <= 2n ops
//                 column
//   reset_output  return the output mechanism to its initial  <= 2n ops
//                 state
//
// Every mechanical primitive is charged to the machine's OpLog. One pass is
// load_vector -> sync_columns -> set_output -> report_output -> reset_output;
// calls out of that order throw StateError. Column activation survives
// reset_output and is only changed by sync_columns (or the backend's
// explicit primitives).
//
// In Mode::Parallel each contract call is charged as whole parallel phases:
// load_vector, set_output, report_output and reset_output take one phase,
// sync_columns takes two (deactivate-all, activate), and load_matrix takes one
// phase per column.

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>

#include "mvp/bits.hpp"
#include "mvp/oplog.hpp"

namespace mvp {

enum class Mode : std::uint8_t { Sequential, Parallel };
enum class Backend : std::uint8_t { AxisLadder, WallLight };

/// "seq" / "par"
std::string_view to_string(Mode mode) noexcept;
/// "axis" / "wall"
std::string_view to_string(Backend backend) noexcept;
std::optional<Mode> mode_from_string(std::string_view name) noexcept;
std::optional<Backend> backend_from_string(std::string_view name) noexcept;

/// Fixed number of parallel phases in one complete matvec pass.
inline constexpr std::uint64_t kPhasesPerPass = 6;

class MvpMachine {
 public:
  virtual ~MvpMachine() = default;
  MvpMachine(const MvpMachine&) = delete;
  MvpMachine& operator=(const MvpMachine&) = delete;

  std::size_t dimension() const noexcept { return n_; }
  Mode mode() const noexcept { return mode_; }
  virtual Backend backend() const noexcept = 0;

  void load_matrix(const BitMatrix& a);
  void load_vector(const BitVector& v);
  void sync_columns();
  void set_output();
  BitVector report_output();
  void reset_output();

  const OpLog& oplog() const noexcept { return log_; }

  // Uncharged observation, for harnesses and tests.
  BitMatrix array_content() const;
  const std::optional<BitVector>& input_vector() const noexcept { return vector_; }
  virtual bool column_active(std::size_t j) const = 0;
  BitVector active_columns() const;
  bool matrix_loaded() const noexcept { return matrix_loaded_; }
  bool synced() const noexcept { return synced_; }
  bool output_ready() const noexcept { return output_ready_; }

 protected:
  MvpMachine(std::size_t n, Mode mode);

  void charge(OpCategory category, std::uint64_t count = 1) noexcept {
    log_.charge(category, count);
  }
  OpLog& log() noexcept { return log_; }
  bool parallel() const noexcept { return mode_ == Mode::Parallel; }

  void check_row(std::size_t i, const char* op) const;
  void check_column(std::size_t j, const char* op) const;
  void require_matrix(const char* op) const;
  void require_vector(const char* op) const;

  /// Manual activation changes break the activation/vector correspondence.
  void invalidate_sync() noexcept { synced_ = false; }
  void mark_synced() noexcept { synced_ = true; }

  /// Scan the input vector once, toggling only columns whose state differs.
  void sequential_sync();

  // Backend hooks.
  virtual bool entry(std::size_t i, std::size_t j) const = 0;
  /// Sets one array cell; the caller charges CellLoad.
  virtual void write_entry(std::size_t i, std::size_t j, bool value) = 0;
  /// Charges exactly one ColumnActivate or ColumnDeactivate.
  virtual void toggle_column(std::size_t j, bool activate) = 0;
  virtual void do_sync_columns() { sequential_sync(); }
  /// Precondition checks beyond the contract's are the backend's job.
  virtual void do_set_output() = 0;
  virtual bool output_coordinate(std::size_t i) const = 0;
  virtual void do_reset_output() = 0;

 private:
  std::size_t n_;
  Mode mode_;
  OpLog log_;
  std::optional<BitVector> vector_;
  bool matrix_loaded_ = false;
  bool synced_ = false;
  bool output_ready_ = false;
};

std::unique_ptr<MvpMachine> make_machine(Backend backend, std::size_t n,
                                         Mode mode = Mode::Sequential);

}  // namespace mvp
