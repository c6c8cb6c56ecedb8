#include <doctest.h>

#include <random>

#include "mvp/axis_ladder.hpp"
#include "test_support.hpp"

using namespace mvp;
using mvp::testing::figure_matrix;
using mvp::testing::figure_vector;

namespace {

// Column 1 holds 1,1,0,1; every other column is zero.
BitMatrix single_column() { return BitMatrix::from_rows({"1000", "1000", "0000", "1000"}); }

std::vector<std::size_t> protruding_rows(const AxisLadderMvp& m, std::size_t j) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m.protrudes(i, j)) rows.push_back(i + 1);
  }
  return rows;
}

}  // namespace

TEST_CASE("activating a column makes its 1-segments protrude") {
  AxisLadderMvp m(4);
  m.load_matrix(single_column());
  CHECK(protruding_rows(m, 0).empty());
  m.activate_column(0);
  CHECK(m.column_active(0));
  CHECK(protruding_rows(m, 0) == std::vector<std::size_t>{1, 2, 4});
  CHECK(m.oplog().count(OpCategory::ColumnActivate) == 1);

  CHECK_FALSE(m.move_ladder(0));
  CHECK_FALSE(m.move_ladder(1));
  CHECK(m.move_ladder(2));
  CHECK_FALSE(m.move_ladder(3));

  AxisLadderMvp z(3);
  z.load_matrix(BitMatrix(3));
  z.activate_column(1);
  CHECK(protruding_rows(z, 1).empty());
}

TEST_CASE("activation state errors") {
  AxisLadderMvp m(4);
  m.load_matrix(single_column());
  CHECK_THROWS_AS(m.deactivate_column(0), StateError);
  m.activate_column(0);
  CHECK_THROWS_AS(m.activate_column(0), StateError);
  CHECK_THROWS_AS(m.activate_column(4), InputError);
}

TEST_CASE("deactivation withdraws exactly that column") {
  AxisLadderMvp m(4);
  m.load_matrix(figure_matrix());
  m.activate_column(0);
  m.deactivate_column(0);
  for (std::size_t i = 0; i < 4; ++i) CHECK_FALSE(m.row_blocked(i));
  CHECK(m.oplog().count(OpCategory::ColumnDeactivate) == 1);

  m.activate_column(0);
  m.activate_column(2);
  m.deactivate_column(0);
  CHECK(m.active_columns() == BitVector::from_string("0010"));
  CHECK(protruding_rows(m, 0).empty());
  CHECK(protruding_rows(m, 2) == std::vector<std::size_t>{1, 4});
}

TEST_CASE("manual toggles invalidate the sync") {
  AxisLadderMvp m(4);
  m.load_matrix(figure_matrix());
  m.load_vector(figure_vector());
  m.sync_columns();
  m.deactivate_column(0);
  CHECK_FALSE(m.synced());
  CHECK_THROWS_AS(m.set_output(), StateError);
}

TEST_CASE("ladder moves") {
  AxisLadderMvp m(4);
  m.load_matrix(figure_matrix());
  m.activate_column(0);
  m.activate_column(2);

  const OpLog before = m.oplog();
  CHECK_FALSE(m.move_ladder(0));
  CHECK(m.section_state(0));
  CHECK(m.ladder_position(0) == LadderPosition::Initial);
  const OpLog blocked = m.oplog().since(before);
  CHECK(blocked.count(OpCategory::LadderMove) == 1);
  CHECK(blocked.count(OpCategory::OutputSwitch) == 0);

  CHECK_FALSE(m.move_ladder(1));
  CHECK(m.move_ladder(2));
  CHECK_FALSE(m.section_state(2));
  CHECK(m.ladder_position(2) == LadderPosition::Shifted);
  CHECK_FALSE(m.move_ladder(3));
  CHECK(m.oplog().count(OpCategory::OutputSwitch) == 1);

  std::string out;
  for (std::size_t i = 0; i < 4; ++i) out += m.section_state(i) ? '1' : '0';
  CHECK(out == "1101");

  CHECK_THROWS_AS(m.move_ladder(2), StateError);
}

TEST_CASE("a row of zeros always lets its ladder through") {
  AxisLadderMvp m(3);
  m.load_matrix(BitMatrix::from_rows({"111", "000", "101"}));
  m.activate_column(0);
  m.activate_column(1);
  m.activate_column(2);
  CHECK(m.move_ladder(1));
  CHECK_FALSE(m.section_state(1));
}

TEST_CASE("protrusion and blocking laws hold on random histories") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const BitMatrix a = mvp::testing::random_bits(n, rng);
    AxisLadderMvp m(n);
    m.load_matrix(a);
    for (int step = 0; step < 30; ++step) {
      const std::size_t j = rng() % n;
      if (m.column_active(j)) {
        m.deactivate_column(j);
      } else {
        m.activate_column(j);
      }
      for (std::size_t i = 0; i < n; ++i) {
        bool any = false;
        for (std::size_t k = 0; k < n; ++k) {
          REQUIRE(m.protrudes(i, k) == (a(i, k) && m.column_active(k)));
          any = any || m.protrudes(i, k);
        }
        REQUIRE(m.row_blocked(i) == any);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const bool blocked = m.row_blocked(i);
      CHECK(m.move_ladder(i) == !blocked);
    }
  }
}

TEST_CASE("parallel primitives require parallel mode") {
  AxisLadderMvp m(2);
  m.load_matrix(BitMatrix::identity(2));
  m.load_vector(BitVector::from_string("10"));
  CHECK_THROWS_AS(m.parallel_sync(), StateError);
  CHECK_THROWS_AS(m.parallel_ladder_step(), StateError);
}

TEST_CASE("parallel_sync") {
  AxisLadderMvp m(4, Mode::Parallel);
  m.load_matrix(figure_matrix());
  m.load_vector(figure_vector());

  OpLog before = m.oplog();
  m.parallel_sync();
  OpLog d = m.oplog().since(before);
  CHECK(m.active_columns() == figure_vector());
  CHECK(m.synced());
  CHECK(d.parallel_phases() == 2);
  CHECK(d.phase_ops() == std::vector<std::uint64_t>{0, 2});

  before = m.oplog();
  m.parallel_sync();
  d = m.oplog().since(before);
  CHECK(d.parallel_phases() == 2);
  CHECK(d.phase_ops() == std::vector<std::uint64_t>{2, 2});
  CHECK(m.active_columns() == figure_vector());

  m.load_vector(BitVector::from_string("1111"));
  m.parallel_sync();
  m.load_vector(BitVector(4));
  m.parallel_sync();
  CHECK(m.active_columns().count() == 0);

  AxisLadderMvp fresh(2, Mode::Parallel);
  fresh.load_matrix(BitMatrix(2));
  CHECK_THROWS_AS(fresh.parallel_sync(), StateError);
}

TEST_CASE("parallel_ladder_step") {
  AxisLadderMvp m(4, Mode::Parallel);
  m.load_matrix(figure_matrix());
  m.load_vector(figure_vector());
  m.parallel_sync();
  const OpLog before = m.oplog();
  m.parallel_ladder_step();
  const OpLog d = m.oplog().since(before);
  CHECK(d.parallel_phases() == 1);
  CHECK(d.phase_ops() == std::vector<std::uint64_t>{4 + 1});
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) out += m.section_state(i) ? '1' : '0';
  CHECK(out == "1101");
  CHECK_THROWS_AS(m.parallel_ladder_step(), StateError);

  AxisLadderMvp z(4, Mode::Parallel);
  z.load_matrix(figure_matrix());
  z.load_vector(BitVector(4));
  z.parallel_sync();
  z.parallel_ladder_step();
  for (std::size_t i = 0; i < 4; ++i) CHECK_FALSE(z.section_state(i));
}

TEST_CASE("sequential and parallel paths reach indistinguishable states") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    const BitMatrix a = mvp::testing::random_bits(n, rng);
    AxisLadderMvp seq(n, Mode::Sequential);
    AxisLadderMvp par(n, Mode::Parallel);
    seq.load_matrix(a);
    par.load_matrix(a);
    for (int pass = 0; pass < 3; ++pass) {
      const BitVector v = mvp::testing::random_bits_vector(n, rng);
      seq.load_vector(v);
      par.load_vector(v);
      seq.sync_columns();
      par.parallel_sync();
      CHECK(seq.active_columns() == par.active_columns());
      for (std::size_t i = 0; i < n; ++i) seq.move_ladder(i);
      par.parallel_ladder_step();
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(seq.section_state(i) == par.section_state(i));
        CHECK(seq.ladder_position(i) == par.ladder_position(i));
      }
      CHECK(seq.array_content() == par.array_content());
      seq.reset_output();
      par.reset_output();
    }
  }
}

TEST_CASE("a parallel pass costs exactly six phases") {
  for (std::size_t n : {1, 4, 16, 64}) {
    AxisLadderMvp m(n, Mode::Parallel);
    m.load_matrix(BitMatrix::ones(n));
    CHECK(m.oplog().parallel_phases() == n);
    const OpLog before = m.oplog();
    m.load_vector(mvp::testing::alternating(n, 0));
    m.sync_columns();
    m.set_output();
    m.report_output();
    m.reset_output();
    const OpLog d = m.oplog().since(before);
    CHECK(d.parallel_phases() == kPhasesPerPass);
    CHECK(d.max_phase_ops() <= 2 * n);
  }
}

TEST_CASE("reset pulls ladders back and restores sections") {
  AxisLadderMvp m(4);
  m.load_matrix(figure_matrix());
  m.load_vector(BitVector(4));
  m.sync_columns();
  m.set_output();
  const OpLog before = m.oplog();
  m.reset_output();
  const OpLog d = m.oplog().since(before);
  CHECK(d.count(OpCategory::ResetStep) == 8);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(m.section_state(i));
    CHECK(m.ladder_position(i) == LadderPosition::Initial);
  }
}
