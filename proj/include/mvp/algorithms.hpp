#pragma once

#include <cstddef>
#include <variant>

#include "mvp/bits.hpp"
#include "mvp/machine.hpp"
#include "mvp/oplog.hpp"

namespace mvp {

struct RunReport {
  std::variant<BitVector, BitMatrix> result;
  /// Operations charged during the run only.
  OpLog ops;
  Backend backend;
  Mode mode;
  std::size_t n;

  const BitVector& vector() const { return std::get<BitVector>(result); }
  const BitMatrix& matrix() const { return std::get<BitMatrix>(result); }
};

/// One complete pass over a machine that already holds the matrix:
/// load_vector, sync_columns, set_output, report_output, reset_output.
/// The trailing reset leaves the output mechanism ready for the next pass.
RunReport matvec(MvpMachine& machine, const BitVector& v);

/// Load A once, then one matvec pass per column of B; column j of the
/// result is the output reported by pass j.
RunReport matmul(MvpMachine& machine, const BitMatrix& a, const BitMatrix& b);

}  // namespace mvp
