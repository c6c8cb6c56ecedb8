#include "mvp/machine.hpp"

#include <string>

#include "mvp/axis_ladder.hpp"
#include "mvp/wall_light.hpp"

namespace mvp {

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::Sequential ? "seq" : "par";
}

std::string_view to_string(Backend backend) noexcept {
  return backend == Backend::AxisLadder ? "axis" : "wall";
}

std::optional<Mode> mode_from_string(std::string_view name) noexcept {
  if (name == "seq") return Mode::Sequential;
  if (name == "par") return Mode::Parallel;
  return std::nullopt;
}

std::optional<Backend> backend_from_string(std::string_view name) noexcept {
  if (name == "axis") return Backend::AxisLadder;
  if (name == "wall") return Backend::WallLight;
  return std::nullopt;
}

MvpMachine::MvpMachine(std::size_t n, Mode mode) : n_(n), mode_(mode) {
  if (n == 0) throw InputError("MVP dimension must be at least 1");
}

void MvpMachine::check_row(std::size_t i, const char* op) const {
  if (i >= n_) {
    throw InputError(std::string(op) + ": row " + std::to_string(i + 1) + " out of range 1.." +
                     std::to_string(n_));
  }
}

void MvpMachine::check_column(std::size_t j, const char* op) const {
  if (j >= n_) {
    throw InputError(std::string(op) + ": column " + std::to_string(j + 1) +
                     " out of range 1.." + std::to_string(n_));
  }
}

void MvpMachine::require_matrix(const char* op) const {
  if (!matrix_loaded_) throw StateError(std::string(op) + ": no matrix loaded");
}

void MvpMachine::require_vector(const char* op) const {
  if (!vector_) throw StateError(std::string(op) + ": no input vector loaded");
}

void MvpMachine::load_matrix(const BitMatrix& a) {
  if (a.size() != n_) {
    throw InputError("load_matrix: machine dimension is " + std::to_string(n_) +
                     " but matrix is " + std::to_string(a.size()) + "x" +
                     std::to_string(a.size()));
  }
  // Column-wise snake traversal; one parallel step per column.
  for (std::size_t j = 0; j < n_; ++j) {
    PhaseScope phase(log_, parallel());
    if (column_active(j)) toggle_column(j, false);
    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t i = (j % 2 == 0) ? k : n_ - 1 - k;
      charge(OpCategory::CellLoad);
      write_entry(i, j, a(i, j));
    }
  }
  matrix_loaded_ = true;
  synced_ = false;
}

void MvpMachine::load_vector(const BitVector& v) {
  if (v.size() != n_) {
    throw InputError("load_vector: machine dimension is " + std::to_string(n_) +
                     " but vector has dimension " + std::to_string(v.size()));
  }
  PhaseScope phase(log_, parallel());
  charge(OpCategory::VectorCoordLoad, n_);
  vector_ = v;
  synced_ = false;
}

void MvpMachine::sync_columns() {
  require_matrix("sync_columns");
  require_vector("sync_columns");
  do_sync_columns();
  synced_ = true;
}

void MvpMachine::sequential_sync() {
  const BitVector& v = *vector_;
  for (std::size_t j = 0; j < n_; ++j) {
    charge(OpCategory::ScanStep);
    if (v[j] && !column_active(j)) {
      toggle_column(j, true);
    } else if (!v[j] && column_active(j)) {
      toggle_column(j, false);
    }
  }
}

void MvpMachine::set_output() {
  if (!synced_) throw StateError("set_output: columns not synced to the current input vector");
  if (output_ready_) throw StateError("set_output: output already set; reset_output first");
  do_set_output();
  output_ready_ = true;
}

BitVector MvpMachine::report_output() {
  if (!output_ready_) throw StateError("report_output: output has not been set");
  PhaseScope phase(log_, parallel());
  BitVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    charge(OpCategory::OutputCoordReport);
    out.set(i, output_coordinate(i));
  }
  return out;
}

void MvpMachine::reset_output() {
  PhaseScope phase(log_, parallel());
  do_reset_output();
  output_ready_ = false;
}

BitMatrix MvpMachine::array_content() const {
  return BitMatrix::from_fn(n_, [this](std::size_t i, std::size_t j) { return entry(i, j); });
}

BitVector MvpMachine::active_columns() const {
  BitVector active(n_);
  for (std::size_t j = 0; j < n_; ++j) active.set(j, column_active(j));
  return active;
}

std::unique_ptr<MvpMachine> make_machine(Backend backend, std::size_t n, Mode mode) {
  switch (backend) {
    case Backend::AxisLadder:
      return std::make_unique<AxisLadderMvp>(n, mode);
    case Backend::WallLight:
      return std::make_unique<WallLightMvp>(n, mode);
  }
  throw InputError("make_machine: unknown backend");
}

}  // namespace mvp
