#include <doctest.h>

#include <random>

#include "mvp/axis_ladder.hpp"
#include "mvp/wall_light.hpp"
#include "test_support.hpp"

using namespace mvp;
using mvp::testing::figure_matrix;
using mvp::testing::figure_vector;

TEST_CASE("no parallel mode") {
  CHECK_THROWS_AS(WallLightMvp(3, Mode::Parallel), InputError);
}

TEST_CASE("section geometry") {
  WallLightMvp m(4);
  m.load_matrix(BitMatrix::from_rows({"1000", "1000", "0000", "1000"}));
  // Even sections are always open; section 2k-1 is entry k.
  for (std::size_t s = 2; s <= 8; s += 2) CHECK(m.window_open(0, s));
  CHECK_FALSE(m.window_open(0, 1));
  CHECK_FALSE(m.window_open(0, 3));
  CHECK(m.window_open(0, 5));
  CHECK_FALSE(m.window_open(0, 7));
  CHECK_THROWS_AS(m.window_open(0, 0), InputError);
  CHECK_THROWS_AS(m.window_open(0, 9), InputError);

  CHECK(m.section_in_beam(2, 0) == 6);
  m.shift_wall_down(0);
  CHECK(m.section_in_beam(2, 0) == 5);
}

TEST_CASE("a shifted wall with entries 1,1,0,1 passes light only at row 3") {
  WallLightMvp m(4);
  m.load_matrix(BitMatrix::from_rows({"1000", "1000", "0000", "1000"}));
  for (std::size_t i = 0; i < 4; ++i) CHECK(m.passes_light(i, 0));
  m.shift_wall_down(0);
  CHECK(m.oplog().count(OpCategory::ColumnActivate) == 1);
  CHECK_FALSE(m.passes_light(0, 0));
  CHECK_FALSE(m.passes_light(1, 0));
  CHECK(m.passes_light(2, 0));
  CHECK_FALSE(m.passes_light(3, 0));

  m.load_vector(BitVector::from_string("1000"));
  m.sync_columns();
  m.set_output();
  CHECK(m.report_output() == BitVector::from_string("1101"));

  m.shift_wall_up(0);
  CHECK(m.oplog().count(OpCategory::ColumnDeactivate) == 1);
  for (std::size_t i = 0; i < 4; ++i) CHECK(m.passes_light(i, 0));
}

TEST_CASE("an all-zero wall passes light everywhere") {
  WallLightMvp m(5);
  m.load_matrix(BitMatrix(5));
  m.shift_wall_down(3);
  for (std::size_t i = 0; i < 5; ++i) CHECK(m.passes_light(i, 3));
}

TEST_CASE("observe_light") {
  WallLightMvp m(4);
  CHECK_THROWS_AS(m.observe_light(0), StateError);
  m.load_matrix(figure_matrix());
  for (std::size_t i = 0; i < 4; ++i) CHECK(m.observe_light(i));
  CHECK(m.oplog().count(OpCategory::LightObserve) == 4);

  m.shift_wall_down(0);
  m.shift_wall_down(2);
  CHECK_FALSE(m.observe_light(0));
  CHECK_FALSE(m.observe_light(1));
  CHECK(m.observe_light(2));
  CHECK_FALSE(m.observe_light(3));
}

TEST_CASE("no shifted walls gives an all-zero output") {
  WallLightMvp m(4);
  m.load_matrix(figure_matrix());
  m.load_vector(BitVector(4));
  m.sync_columns();
  const OpLog before = m.oplog();
  m.set_output();
  const OpLog d = m.oplog().since(before);
  CHECK(d.count(OpCategory::LightObserve) == 4);
  CHECK(d.count(OpCategory::OutputSwitch) == 4);
  CHECK(m.report_output() == BitVector(4));
}

TEST_CASE("figure configuration matches the ladder machine") {
  WallLightMvp wall(4);
  AxisLadderMvp axis(4);
  for (MvpMachine* m : {static_cast<MvpMachine*>(&wall), static_cast<MvpMachine*>(&axis)}) {
    m->load_matrix(figure_matrix());
    m->load_vector(figure_vector());
    m->sync_columns();
    m->set_output();
  }
  CHECK(wall.report_output() == BitVector::from_string("1101"));
  CHECK(axis.report_output() == wall.report_output());
}

TEST_CASE("shift state errors") {
  WallLightMvp m(2);
  CHECK_THROWS_AS(m.shift_wall_up(0), StateError);
  m.shift_wall_down(0);
  CHECK_THROWS_AS(m.shift_wall_down(0), StateError);
  CHECK_THROWS_AS(m.shift_wall_down(2), InputError);
}

TEST_CASE("window law and ladder duality on random configurations") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const BitMatrix a = mvp::testing::random_bits(n, rng);
    const BitVector active = mvp::testing::random_bits_vector(n, rng);
    WallLightMvp wall(n);
    AxisLadderMvp axis(n);
    wall.load_matrix(a);
    axis.load_matrix(a);
    for (std::size_t j = 0; j < n; ++j) {
      if (active[j]) {
        wall.shift_wall_down(j);
        axis.activate_column(j);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        REQUIRE(wall.passes_light(i, j) == !(active[j] && a(i, j)));
      }
      REQUIRE(wall.light_visible(i) == !axis.row_blocked(i));
    }
  }
}
