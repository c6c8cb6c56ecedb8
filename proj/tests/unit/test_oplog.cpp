#include <doctest.h>

#include "mvp/errors.hpp"
#include "mvp/oplog.hpp"

using namespace mvp;

TEST_CASE("charges accumulate per category and in total") {
  OpLog log;
  log.charge(OpCategory::CellLoad, 16);
  log.charge(OpCategory::ColumnActivate);
  log.charge(OpCategory::ColumnDeactivate, 2);
  CHECK(log.count(OpCategory::CellLoad) == 16);
  CHECK(log.toggles() == 3);
  CHECK(log.total() == 19);
  CHECK(log.parallel_phases() == 0);
  CHECK(log.consistent());
}

TEST_CASE("phases attribute charges") {
  OpLog log;
  log.charge(OpCategory::ScanStep);
  {
    PhaseScope phase(log, true);
    CHECK(log.in_phase());
    log.charge(OpCategory::LadderMove, 4);
    log.charge(OpCategory::OutputSwitch, 1);
  }
  {
    PhaseScope phase(log, true);
  }
  {
    PhaseScope inert(log, false);
    log.charge(OpCategory::ResetStep);
  }
  CHECK(log.parallel_phases() == 2);
  CHECK(log.phase_ops() == std::vector<std::uint64_t>{5, 0});
  CHECK(log.max_phase_ops() == 5);
  CHECK(log.total() == 7);
  CHECK(log.consistent());
}

TEST_CASE("phases do not nest") {
  OpLog log;
  log.begin_phase();
  CHECK_THROWS_AS(log.begin_phase(), StateError);
  log.end_phase();
  CHECK_THROWS_AS(log.end_phase(), StateError);
}

TEST_CASE("since() yields the delta between snapshots") {
  OpLog log;
  log.charge(OpCategory::CellLoad, 9);
  {
    PhaseScope p(log, true);
    log.charge(OpCategory::CellLoad, 3);
  }
  const OpLog before = log;
  log.charge(OpCategory::VectorCoordLoad, 3);
  {
    PhaseScope p(log, true);
    log.charge(OpCategory::ColumnActivate, 2);
  }
  const OpLog d = log.since(before);
  CHECK(d.total() == 5);
  CHECK(d.count(OpCategory::CellLoad) == 0);
  CHECK(d.count(OpCategory::VectorCoordLoad) == 3);
  CHECK(d.phase_ops() == std::vector<std::uint64_t>{2});
  CHECK(d.consistent());

  CHECK_THROWS_AS(before.since(log), InputError);
}

TEST_CASE("category names round trip") {
  for (auto c : kAllOpCategories) {
    auto back = op_category_from_string(to_string(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK_FALSE(op_category_from_string("Teleport").has_value());
  CHECK(to_string(OpCategory::OutputCoordReport) == "OutputCoordReport");
}
