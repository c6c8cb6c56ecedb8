#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "mvp/algorithms.hpp"
#include "mvp/axis_ladder.hpp"
#include "mvp/bits.hpp"
#include "mvp/machine.hpp"
#include "mvp/oplog.hpp"
#include "mvp/selftest.hpp"
#include "mvp/wall_light.hpp"

namespace py = pybind11;
using namespace mvp;

namespace {

BitMatrix matrix_from_rows(const std::vector<std::vector<bool>>& rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError("matrix rows must all have length " + std::to_string(n));
  }
  return BitMatrix::from_fn(n, [&](std::size_t i, std::size_t j) { return rows[i][j]; });
}

std::vector<std::vector<bool>> matrix_to_rows(const BitMatrix& a) {
  std::vector<std::vector<bool>> rows(a.size(), std::vector<bool>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) rows[i][j] = a(i, j);
  }
  return rows;
}

std::vector<bool> vector_to_list(const BitVector& v) {
  std::vector<bool> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

py::dict oplog_counts(const OpLog& log) {
  py::dict d;
  for (OpCategory c : kAllOpCategories) d[py::str(std::string(to_string(c)))] = log.count(c);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Operation-counting simulator of a mechanical matrix-vector processor";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StateError>(m, "StateError", PyExc_RuntimeError);

  py::class_<BitVector>(m, "BitVector")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init<const std::vector<bool>&>(), py::arg("bits"))
      .def_static("from_string", &BitVector::from_string, py::arg("bits"))
      .def("__len__", &BitVector::size)
      .def("__getitem__", &BitVector::at)
      .def("__setitem__", &BitVector::set)
      .def("count", &BitVector::count)
      .def("to_list", &vector_to_list)
      .def("__str__", &BitVector::to_string)
      .def("__repr__", [](const BitVector& v) { return "BitVector('" + v.to_string() + "')"; })
      .def(py::self == py::self);

  py::class_<BitMatrix>(m, "BitMatrix")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init(&matrix_from_rows), py::arg("rows"))
      .def_static("identity", &BitMatrix::identity, py::arg("n"))
      .def_static("ones", &BitMatrix::ones, py::arg("n"))
      .def_static("from_rows", &BitMatrix::from_rows, py::arg("rows"))
      .def_property_readonly("n", &BitMatrix::size)
      .def("__len__", &BitMatrix::size)
      .def("__getitem__",
           [](const BitMatrix& a, std::pair<std::size_t, std::size_t> ij) {
             return a.at(ij.first, ij.second);
           })
      .def("__setitem__",
           [](BitMatrix& a, std::pair<std::size_t, std::size_t> ij, bool value) {
             a.set(ij.first, ij.second, value);
           })
      .def("row", &BitMatrix::row, py::arg("i"))
      .def("column", &BitMatrix::column, py::arg("j"))
      .def("to_list", &matrix_to_rows)
      .def("__str__", &serialize_matrix)
      .def("__repr__", [](const BitMatrix& a) {
        return "BitMatrix(n=" + std::to_string(a.size()) + ")";
      })
      .def(py::self == py::self);

  m.def("oracle_matvec", &oracle_matvec, py::arg("a"), py::arg("v"));
  m.def("oracle_matmul", &oracle_matmul, py::arg("a"), py::arg("b"));
  m.def("parse_matrix", py::overload_cast<std::string_view>(&parse_matrix), py::arg("text"));
  m.def("serialize_matrix", &serialize_matrix, py::arg("a"));
  m.def("parse_vector", &parse_vector, py::arg("text"));
  m.def("serialize_vector", &serialize_vector, py::arg("v"));

  py::enum_<OpCategory> cat(m, "OpCategory");
  for (OpCategory c : kAllOpCategories) cat.value(std::string(to_string(c)).c_str(), c);

  py::class_<OpLog>(m, "OpLog")
      .def(py::init<>())
      .def("count", &OpLog::count, py::arg("category"))
      .def_property_readonly("total", &OpLog::total)
      .def_property_readonly("parallel_phases", &OpLog::parallel_phases)
      .def_property_readonly("phase_ops", &OpLog::phase_ops)
      .def_property_readonly("max_phase_ops", &OpLog::max_phase_ops)
      .def_property_readonly("toggles", &OpLog::toggles)
      .def("counts", &oplog_counts)
      .def("since", &OpLog::since, py::arg("earlier"))
      .def("__repr__", [](const OpLog& log) {
        return "OpLog(total=" + std::to_string(log.total()) +
               ", phases=" + std::to_string(log.parallel_phases()) + ")";
      });

  py::enum_<Mode>(m, "Mode")
      .value("Sequential", Mode::Sequential)
      .value("Parallel", Mode::Parallel);
  py::enum_<Backend>(m, "Backend")
      .value("AxisLadder", Backend::AxisLadder)
      .value("WallLight", Backend::WallLight);
  py::enum_<LadderPosition>(m, "LadderPosition")
      .value("Initial", LadderPosition::Initial)
      .value("Shifted", LadderPosition::Shifted);

  py::class_<MvpMachine>(m, "MvpMachine")
      .def_property_readonly("n", &MvpMachine::dimension)
      .def_property_readonly("mode", &MvpMachine::mode)
      .def_property_readonly("backend", &MvpMachine::backend)
      .def("load_matrix", &MvpMachine::load_matrix, py::arg("a"))
      .def("load_vector", &MvpMachine::load_vector, py::arg("v"))
      .def("sync_columns", &MvpMachine::sync_columns)
      .def("set_output", &MvpMachine::set_output)
      .def("report_output", &MvpMachine::report_output)
      .def("reset_output", &MvpMachine::reset_output)
      .def_property_readonly("oplog", &MvpMachine::oplog, py::return_value_policy::copy)
      .def("array_content", &MvpMachine::array_content)
      .def("column_active", &MvpMachine::column_active, py::arg("j"))
      .def("active_columns", &MvpMachine::active_columns)
      .def_property_readonly("matrix_loaded", &MvpMachine::matrix_loaded)
      .def_property_readonly("synced", &MvpMachine::synced)
      .def_property_readonly("output_ready", &MvpMachine::output_ready);

  py::class_<AxisLadderMvp, MvpMachine>(m, "AxisLadderMvp")
      .def(py::init<std::size_t, Mode>(), py::arg("n"), py::arg("mode") = Mode::Sequential)
      .def("activate_column", &AxisLadderMvp::activate_column, py::arg("j"))
      .def("deactivate_column", &AxisLadderMvp::deactivate_column, py::arg("j"))
      .def("move_ladder", &AxisLadderMvp::move_ladder, py::arg("i"))
      .def("parallel_sync", &AxisLadderMvp::parallel_sync)
      .def("parallel_ladder_step", &AxisLadderMvp::parallel_ladder_step)
      .def("protrudes", &AxisLadderMvp::protrudes, py::arg("i"), py::arg("j"))
      .def("row_blocked", &AxisLadderMvp::row_blocked, py::arg("i"))
      .def("ladder_position", &AxisLadderMvp::ladder_position, py::arg("i"))
      .def("section_state", &AxisLadderMvp::section_state, py::arg("i"));

  py::class_<WallLightMvp, MvpMachine>(m, "WallLightMvp")
      .def(py::init<std::size_t, Mode>(), py::arg("n"), py::arg("mode") = Mode::Sequential)
      .def("shift_wall_down", &WallLightMvp::shift_wall_down, py::arg("j"))
      .def("shift_wall_up", &WallLightMvp::shift_wall_up, py::arg("j"))
      .def("observe_light", &WallLightMvp::observe_light, py::arg("i"))
      .def("section_in_beam", &WallLightMvp::section_in_beam, py::arg("i"), py::arg("j"))
      .def("window_open", &WallLightMvp::window_open, py::arg("j"), py::arg("section"))
      .def("passes_light", &WallLightMvp::passes_light, py::arg("i"), py::arg("j"))
      .def("light_visible", &WallLightMvp::light_visible, py::arg("i"))
      .def("wall_shifted", &WallLightMvp::wall_shifted, py::arg("j"));

  m.def("make_machine", &make_machine, py::arg("backend"), py::arg("n"),
        py::arg("mode") = Mode::Sequential);

  py::class_<RunReport>(m, "RunReport")
      .def_property_readonly("result",
                             [](const RunReport& r) -> py::object {
                               if (std::holds_alternative<BitVector>(r.result)) {
                                 return py::cast(r.vector());
                               }
                               return py::cast(r.matrix());
                             })
      .def_readonly("ops", &RunReport::ops)
      .def_readonly("backend", &RunReport::backend)
      .def_readonly("mode", &RunReport::mode)
      .def_readonly("n", &RunReport::n);

  m.def("matvec", &matvec, py::arg("machine"), py::arg("v"));
  m.def("matmul", &matmul, py::arg("machine"), py::arg("a"), py::arg("b"));

  m.def(
      "run_selftest",
      [](std::size_t max_exhaustive_n, std::uint64_t seed, std::size_t duality_configs) {
        SelftestConfig config;
        config.max_exhaustive_n = max_exhaustive_n;
        config.seed = seed;
        config.duality_configs = duality_configs;
        std::ostringstream log;
        const SelftestResult r = run_selftest(config, log);
        py::dict d;
        d["passed"] = r.passed;
        d["checks"] = r.checks;
        d["counterexample"] = r.counterexample;
        d["log"] = log.str();
        return d;
      },
      py::arg("max_exhaustive_n") = 3, py::arg("seed") = 42, py::arg("duality_configs") = 1000);
}
