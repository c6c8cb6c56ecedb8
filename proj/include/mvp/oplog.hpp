#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace mvp {

/// Kinds of counted mechanical primitive. Every primitive a backend executes
/// is charged to exactly one category.
enum class OpCategory : std::uint8_t {
  ColumnActivate,
  ColumnDeactivate,
  ScanStep,
  LadderMove,
  OutputSwitch,
  LightObserve,
  WallShift,
  CellLoad,
  VectorCoordLoad,
  OutputCoordReport,
  ResetStep,
};

inline constexpr std::size_t kOpCategoryCount = 11;

inline constexpr std::array<OpCategory, kOpCategoryCount> kAllOpCategories = {
    OpCategory::ColumnActivate,    OpCategory::ColumnDeactivate, OpCategory::ScanStep,
    OpCategory::LadderMove,        OpCategory::OutputSwitch,     OpCategory::LightObserve,
    OpCategory::WallShift,         OpCategory::CellLoad,         OpCategory::VectorCoordLoad,
    OpCategory::OutputCoordReport, OpCategory::ResetStep,
};

std::string_view to_string(OpCategory c) noexcept;
std::optional<OpCategory> op_category_from_string(std::string_view name) noexcept;

/// Tally of charged operations, plus the per-phase trace of parallel steps.
///
/// While a phase is open every charge is also attributed to it, so
/// `phase_ops()[k]` is the number of operations performed in parallel step k.
/// Phases never nest.
class OpLog {
 public:
  void charge(OpCategory category, std::uint64_t count = 1) noexcept;

  void begin_phase();
  void end_phase();
  bool in_phase() const noexcept { return in_phase_; }

  std::uint64_t count(OpCategory category) const noexcept {
    return counts_[static_cast<std::size_t>(category)];
  }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t parallel_phases() const noexcept { return phase_ops_.size(); }
  const std::vector<std::uint64_t>& phase_ops() const noexcept { return phase_ops_; }
  std::uint64_t max_phase_ops() const noexcept;

  /// Activations plus deactivations.
  std::uint64_t toggles() const noexcept {
    return count(OpCategory::ColumnActivate) + count(OpCategory::ColumnDeactivate);
  }

  /// total() equals the sum of the per-category counts.
  bool consistent() const noexcept;

  /// Operations charged after `earlier` was snapshotted from this same log.
  OpLog since(const OpLog& earlier) const;

  friend bool operator==(const OpLog&, const OpLog&) = default;

 private:
  std::array<std::uint64_t, kOpCategoryCount> counts_{};
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> phase_ops_;
  bool in_phase_ = false;
};

/// Opens a phase on construction and closes it on destruction; inert when
/// `enabled` is false.
class PhaseScope {
 public:
  PhaseScope(OpLog& log, bool enabled) : log_(enabled ? &log : nullptr) {
    if (log_) log_->begin_phase();
  }
  ~PhaseScope() {
    if (log_) log_->end_phase();
  }
  PhaseScope(const PhaseScope&) = delete;
  PhaseScope& operator=(const PhaseScope&) = delete;

 private:
  OpLog* log_;
};

}  // namespace mvp
