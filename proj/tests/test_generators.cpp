#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "laby/generators.hpp"
#include "laby/paths.hpp"

using namespace laby;
using testutil::fixture;

TEST_CASE("snake cross family shape") {
  for (int k = 1; k <= 8; ++k) {
    const Pattern s = snake_cross(k);
    CAPTURE(k);
    CHECK(s.width() == 4 * k + 7);
    CHECK(s.white_count() == 4 * (2 * k * k + 2 * k + 3) + 1);
    CHECK(s.white({2 * k + 3, 2 * k + 3}));  // central square

    const ValidationReport rep = validate(s);
    CHECK(rep.is_labyrinth());
    CHECK(rep.h_blocked);
    CHECK(rep.v_blocked);
    CHECK(rep.exit_row_blacks == 2 * k);
    CHECK(rep.exit_col_blacks == 2 * k);
    CHECK(rep.vertical_cols == std::vector<std::int32_t>{2 * k + 3});
    CHECK(rep.horizontal_rows == std::vector<std::int32_t>{2 * k + 3});

    // Four congruent arms make the whole pattern quarter-turn invariant.
    CHECK(rotate90(s) == s);
  }
  CHECK_THROWS_AS(snake_cross(0), BadParameter);
  CHECK_THROWS_AS(snake_cross(-2), BadParameter);
}

TEST_CASE("snake cross fixtures are reproduced bit-exactly") {
  CHECK(snake_cross(1) == fixture("fig3_special_cross.txt"));
  CHECK(snake_cross(1) == fixture("snake_a1.txt"));
  CHECK(snake_cross(2) == fixture("snake_a2.txt"));
  CHECK(snake_cross(3) == fixture("snake_a3.txt"));
  // The decorated width-15 pattern's core is exactly A_2.
  CHECK(core(fixture("fig8_decorated.txt")) == snake_cross(2));
}

TEST_CASE("left chirality mirrors right") {
  for (int k = 1; k <= 5; ++k) {
    const Pattern left = snake_cross(k, Chirality::Left);
    CHECK(left == mirror_columns(snake_cross(k)));
    CHECK(validate(left).is_labyrinth());
    CHECK(left != snake_cross(k));
  }
}

TEST_CASE("plain cross family") {
  for (int k = 1; k <= 7; ++k) {
    const Pattern c = plain_cross(k);
    CAPTURE(k);
    CHECK(c.width() == 2 * k + 1);
    CHECK(c.white_count() == 4 * k + 1);
    const ValidationReport rep = validate(c);
    CHECK(rep.is_labyrinth());
    CHECK_FALSE(rep.h_blocked);
    CHECK_FALSE(rep.v_blocked);
  }
  CHECK(plain_cross(1) == fixture("fig7_cross.txt"));
  CHECK_THROWS_AS(plain_cross(0), BadParameter);
}

TEST_CASE("decorate grows the pattern without touching the core") {
  const Pattern a2 = snake_cross(2);

  CHECK(decorate(a2, 1, 0) == a2);

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Pattern d = decorate(a2, seed, 120);
    CAPTURE(seed);
    CHECK(validate(d).is_labyrinth());
    CHECK(core(d) == a2);
    CHECK(d.white_count() > a2.white_count());
    // every white of a2 stays white
    for (const CellAddr& c : a2.white_cells()) REQUIRE(d.white(c));
  }

  // deterministic per seed
  CHECK(decorate(a2, 42, 80) == decorate(a2, 42, 80));
  CHECK_THROWS_AS(decorate(Pattern::solid(3), 1, 5), NotLabyrinth);
}
