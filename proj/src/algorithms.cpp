#include "mvp/algorithms.hpp"

#include <string>

namespace mvp {

namespace {

BitVector run_pass(MvpMachine& machine, const BitVector& v) {
  machine.load_vector(v);
  machine.sync_columns();
  machine.set_output();
  BitVector out = machine.report_output();
  machine.reset_output();
  return out;
}

}  // namespace

RunReport matvec(MvpMachine& machine, const BitVector& v) {
  const OpLog before = machine.oplog();
  BitVector out = run_pass(machine, v);
  return RunReport{std::move(out), machine.oplog().since(before), machine.backend(),
                   machine.mode(), machine.dimension()};
}

RunReport matmul(MvpMachine& machine, const BitMatrix& a, const BitMatrix& b) {
  const std::size_t n = machine.dimension();
  if (a.size() != n || b.size() != n) {
    throw InputError("matmul: operands are " + std::to_string(a.size()) + "x" +
                     std::to_string(a.size()) + " and " + std::to_string(b.size()) + "x" +
                     std::to_string(b.size()) + ", machine dimension is " + std::to_string(n));
  }
  const OpLog before = machine.oplog();
  machine.load_matrix(a);
  BitMatrix product(n);
  for (std::size_t j = 0; j < n; ++j) {
    product.set_column(j, run_pass(machine, b.column(j)));
  }
  return RunReport{std::move(product), machine.oplog().since(before), machine.backend(),
                   machine.mode(), n};
}

}  // namespace mvp
