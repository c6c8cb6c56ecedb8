#include "mvp/oplog.hpp"

#include <algorithm>
#include <numeric>

#include "mvp/errors.hpp"

namespace mvp {

namespace {
constexpr std::array<std::string_view, kOpCategoryCount> kNames = {
    "ColumnActivate", "ColumnDeactivate", "ScanStep",        "LadderMove",
    "OutputSwitch",   "LightObserve",     "WallShift",       "CellLoad",
    "VectorCoordLoad", "OutputCoordReport", "ResetStep",
};
}  // namespace

std::string_view to_string(OpCategory c) noexcept { return kNames[static_cast<std::size_t>(c)]; }

std::optional<OpCategory> op_category_from_string(std::string_view name) noexcept {
  for (auto c : kAllOpCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

void OpLog::charge(OpCategory category, std::uint64_t count) noexcept {
  counts_[static_cast<std::size_t>(category)] += count;
  total_ += count;
  if (in_phase_) phase_ops_.back() += count;
}

void OpLog::begin_phase() {
  if (in_phase_) throw StateError("OpLog: parallel phases cannot nest");
  phase_ops_.push_back(0);
  in_phase_ = true;
}

void OpLog::end_phase() {
  if (!in_phase_) throw StateError("OpLog: no open phase to end");
  in_phase_ = false;
}

std::uint64_t OpLog::max_phase_ops() const noexcept {
  if (phase_ops_.empty()) return 0;
  return *std::max_element(phase_ops_.begin(), phase_ops_.end());
}

bool OpLog::consistent() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0}) == total_;
}

OpLog OpLog::since(const OpLog& earlier) const {
  if (earlier.in_phase_ || in_phase_) {
    throw StateError("OpLog::since: snapshots must be taken between phases");
  }
  if (earlier.phase_ops_.size() > phase_ops_.size() || earlier.total_ > total_) {
    throw InputError("OpLog::since: snapshot is not an earlier state of this log");
  }
  OpLog d;
  for (std::size_t k = 0; k < kOpCategoryCount; ++k) {
    if (earlier.counts_[k] > counts_[k]) {
      throw InputError("OpLog::since: snapshot is not an earlier state of this log");
    }
    d.counts_[k] = counts_[k] - earlier.counts_[k];
  }
  d.total_ = total_ - earlier.total_;
  d.phase_ops_.assign(phase_ops_.begin() + static_cast<std::ptrdiff_t>(earlier.phase_ops_.size()),
                      phase_ops_.end());
  return d;
}

}  // namespace mvp
