#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "laby/dimension.hpp"

using namespace laby;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<std::int64_t> snake_widths(int n, int from = 1) {
  std::vector<std::int64_t> v;
  for (int k = from; k <= n; ++k) v.push_back(4 * std::int64_t{k} + 7);
  return v;
}

std::vector<std::int64_t> snake_counts(int n, int from = 1) {
  std::vector<std::int64_t> v;
  for (int k = from; k <= n; ++k) v.push_back(4 * std::int64_t{k} * k + 4 * k + 7);
  return v;
}

double snake_estimate(int n, int from = 1) {
  const auto w = snake_widths(n, from);
  const auto c = snake_counts(n, from);
  return level_estimate(w, c);
}

}  // namespace

TEST_CASE("dimension quotients") {
  CHECK(dim_quotient(0) == 1.0);
  CHECK_THAT(dim_quotient(1), WithinAbs(1.1293446514625658, 1e-12));
  CHECK_THAT(dim_quotient(1), WithinAbs(1.12928, 1e-3));
  CHECK_THAT(dim_quotient(2), WithinAbs(1.2680663021267002, 1e-12));
  CHECK_THAT(dim_quotient(10), WithinAbs(1.585019387802975, 1e-12));
  CHECK_THAT(dim_quotient(10000), WithinAbs(1.86915455170694, 1e-9));
  CHECK_THROWS_AS(dim_quotient(-1), BadParameter);

  // strictly increasing, bounded by 2; the count stays below width squared
  double prev = 1.0;
  for (int k = 1; k <= 2000; ++k) {
    const double d = dim_quotient(k);
    REQUIRE(d > prev);
    REQUIRE(d < 2.0);
    prev = d;
    const double m = 4.0 * k + 7.0;
    REQUIRE(4.0 * k * k + 4.0 * k + 7.0 < m * m);
  }
  CHECK(dim_quotient(1u << 30) < 2.0);
}

TEST_CASE("level estimates in log space") {
  CHECK_THAT(snake_estimate(1), WithinAbs(1.1293446514625658, 1e-12));
  CHECK_THAT(snake_estimate(2), WithinAbs(1.202918722297924, 1e-12));
  CHECK_THAT(snake_estimate(3), WithinAbs(1.260731167559723, 1e-12));
  CHECK_THAT(snake_estimate(10), WithinAbs(1.4585483228906078, 1e-12));
  CHECK_THAT(snake_estimate(1000), WithinAbs(1.808322718922097, 1e-9));

  // plain cross schedules: counts equal widths, estimate is exactly 1
  const std::vector<std::int64_t> w{3, 5, 7, 9};
  CHECK(level_estimate(w, w) == 1.0);

  CHECK_THROWS_AS(level_estimate(std::vector<std::int64_t>{3}, std::vector<std::int64_t>{}),
                  BadParameter);
  CHECK_THROWS_AS(level_estimate(std::vector<std::int64_t>{2}, std::vector<std::int64_t>{5}),
                  BadParameter);
  CHECK_THROWS_AS(level_estimate(std::vector<std::int64_t>{3}, std::vector<std::int64_t>{0}),
                  BadParameter);
}

TEST_CASE("snake estimate climbs strictly") {
  double prev = 0.0;
  for (int n = 1; n <= 400; ++n) {
    const double e = snake_estimate(n);
    REQUIRE(e > prev);
    prev = e;
  }
}

TEST_CASE("dropping a prefix does not move the limit") {
  double prev_diff = 1e9;
  for (const int n : {100, 1000, 10000}) {
    const double diff = std::abs(snake_estimate(n) - snake_estimate(n, 11));
    CHECK(diff < prev_diff);
    prev_diff = diff;
  }
  CHECK(prev_diff < 2e-4);
}

TEST_CASE("lemma3_schedule on the spec instances") {
  // Dyadic target: t = 1, every approximant is exact, r constant.
  const auto exact = lemma3_schedule(1, 1, 3, 1, 2.0, 8);
  for (const Lemma3Term& term : exact) {
    CHECK(term.p == term.q);
    CHECK(term.r == 2.0);
    CHECK(term.eps == 0.0);
  }

  const double a = std::log(15.0), b = std::log(11.0), c = std::log(31.0), d = std::log(15.0);
  const auto trace = lemma3_schedule(a, b, c, d, 1.2, 20);
  CHECK_THAT(trace[0].r, WithinAbs(1.188927770, 1e-8));
  CHECK_THAT(trace[1].r, WithinAbs(1.195188225, 1e-8));
  CHECK_THAT(trace[5].r, WithinAbs(1.199816034, 1e-8));
  for (std::size_t j = 0; j + 1 < trace.size(); ++j) REQUIRE(trace[j].r <= trace[j + 1].r + 1e-15);
  for (std::size_t j = 5; j < trace.size(); ++j) REQUIRE(std::abs(trace[j].r - 1.2) < 1e-3);

  CHECK_THROWS_AS(lemma3_schedule(a, b, c, d, a / b, 4), PreconditionViolated);
  CHECK_THROWS_AS(lemma3_schedule(a, b, c, d, c / d, 4), PreconditionViolated);
  CHECK_THROWS_AS(lemma3_schedule(-1, 1, 3, 1, 1.5, 4), BadParameter);
  CHECK_THROWS_AS(lemma3_schedule(a, b, c, d, 1.2, 0), BadParameter);
}

TEST_CASE("lemma3_schedule properties over random instances") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int it = 0; it < 100; ++it) {
    const double b = 0.5 + 4.5 * U(rng);
    const double d = 0.5 + 4.5 * U(rng);
    const double lo = 0.3 + 1.7 * U(rng);
    const double hi = lo + 0.05 + 1.95 * U(rng);
    const double a = lo * b;
    const double c = hi * d;
    const double alpha = lo + (0.1 + 0.8 * U(rng)) * (hi - lo);
    CAPTURE(a, b, c, d, alpha);
    const auto terms = lemma3_schedule(a, b, c, d, alpha, 32);
    const double t = (c - alpha * d) / (alpha * b - a);
    double prev_s = 1e300;
    double prev_err = 1e300;
    for (const Lemma3Term& term : terms) {
      REQUIRE(term.p >= 1);
      REQUIRE(term.q >= 1);
      const double s = static_cast<double>(term.p) / static_cast<double>(term.q);
      REQUIRE(s >= t - 1e-12);           // approximants come from above
      REQUIRE(s <= prev_s + 1e-12);      // and are nonincreasing
      const double err = std::abs(term.r - alpha);
      REQUIRE(err <= prev_err + 1e-12);  // error contracts monotonically
      prev_s = s;
      prev_err = err;
    }
    REQUIRE(std::abs(terms.back().r - alpha) < std::abs(terms.front().r - alpha) + 1e-15);
    REQUIRE(std::abs(terms.back().r - alpha) < 1e-6);
  }
}

TEST_CASE("bracket_index locates the dimension interval") {
  CHECK(bracket_index(1.0) == 0);
  CHECK(bracket_index(1.05) == 0);
  CHECK(bracket_index(1.2) == 1);
  CHECK(bracket_index(1.5) == 5);
  CHECK(bracket_index(1.8) == 266);
  CHECK(bracket_index(1.95) == 274877906992ULL);
  CHECK(bracket_index(dim_quotient(7)) == 7);
  CHECK_THROWS_AS(bracket_index(1.99), BadParameter);  // index beyond 64-bit range
}

TEST_CASE("target_dimension endpoints and exact hits") {
  const Schedule flat = target_dimension(1.0, 1e-3, 16);
  CHECK(flat.kind == ScheduleKind::PlainCross);
  CHECK(flat.converged);
  CHECK(flat.trace.back().estimate == 1.0);
  CHECK(flat.terms.front().k == 0);

  const double d2 = dim_quotient(2);
  const Schedule self_similar = target_dimension(d2, 1e-9, 16);
  CHECK(self_similar.kind == ScheduleKind::ConstantSnake);
  CHECK(self_similar.bracket_k == 2);
  CHECK(self_similar.converged);
  CHECK_THAT(self_similar.trace.back().estimate, WithinAbs(d2, 1e-12));

  const Schedule snake = target_dimension(2.0, 1e-3, 64);
  CHECK(snake.kind == ScheduleKind::PureSnake);
  CHECK_FALSE(snake.converged);
  CHECK_FALSE(snake.diagnostic.empty());
  CHECK(snake.terms.size() == 64);
  for (std::size_t j = 0; j < snake.terms.size(); ++j) {
    CHECK(snake.terms[j].k == j + 1);
    CHECK(snake.terms[j].p == 1);
    CHECK(snake.terms[j].q == 0);
  }
  for (std::size_t j = 0; j + 1 < snake.trace.size(); ++j)
    REQUIRE(snake.trace[j].estimate < snake.trace[j + 1].estimate);

  const Schedule loose = target_dimension(2.0, 0.5, 64);
  CHECK(loose.converged);

  CHECK_THROWS_AS(target_dimension(0.99, 1e-3, 8), BadParameter);
  CHECK_THROWS_AS(target_dimension(2.01, 1e-3, 8), BadParameter);
  CHECK_THROWS_AS(target_dimension(1.5, -1.0, 8), BadParameter);
}

TEST_CASE("target_dimension bracketed schedules converge") {
  for (const double delta : {1.05, 1.2, 1.5, 1.8, 1.95}) {
    CAPTURE(delta);
    const Schedule sch = target_dimension(delta, 1e-3, 64);
    CHECK(sch.kind == ScheduleKind::Bracketed);
    CHECK(sch.converged);
    CHECK(std::abs(sch.trace.back().estimate - delta) <= 1e-3);
    for (std::size_t j = 0; j + 1 < sch.trace.size(); ++j)
      REQUIRE(sch.trace[j].r <= sch.trace[j + 1].r + 1e-15);
    for (const ScheduleTerm& term : sch.terms) {
      CHECK(term.k == sch.bracket_k);
      CHECK(term.p >= 1);
      CHECK(term.q >= 1);
    }
  }
}

TEST_CASE("schedule files round trip") {
  const Schedule sch = target_dimension(1.2, 1e-4, 64);
  const std::string text = write_schedule(sch);
  const auto terms = read_schedule(text);
  REQUIRE(terms.size() == sch.terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    CHECK(terms[i].k == sch.terms[i].k);
    CHECK(terms[i].p == sch.terms[i].p);
    CHECK(terms[i].q == sch.terms[i].q);
  }
  CHECK_THAT(schedule_estimate(terms), WithinAbs(sch.trace.back().estimate, 1e-12));

  const std::string trace_text = write_trace(sch);
  CHECK(trace_text.find("term r estimate") == 0);

  CHECK_THROWS_AS(read_schedule(""), ParseError);
  CHECK_THROWS_AS(read_schedule("1 2\n"), ParseError);
  CHECK_THROWS_AS(read_schedule("1 0 0\n"), ParseError);
  CHECK_THROWS_AS(read_schedule("1 2 3 4\n"), ParseError);
}

TEST_CASE("schedule_estimate agrees with level_estimate on pure snake terms") {
  std::vector<ScheduleTerm> terms;
  for (std::uint64_t j = 1; j <= 40; ++j) terms.push_back({j, 1, 0});
  CHECK_THAT(schedule_estimate(terms), WithinAbs(snake_estimate(40), 1e-12));
}

TEST_CASE("closed-form estimate equals the materialized BFS estimate") {
  // log D(L_3) / log m(3) from the product formula vs. a BFS measurement on
  // the 3135x3135 grid.
  const std::vector<Pattern> snakes{snake_cross(1), snake_cross(2), snake_cross(3)};
  const Pattern l3 = compose_sequence(snakes).pattern;
  const ExitSet e = exit_set(l3);
  const std::int64_t measured = bfs_oracle(l3, e.top, e.bottom);
  const double via_bfs = std::log(static_cast<double>(measured)) /
                         std::log(static_cast<double>(l3.width()));
  CHECK_THAT(snake_estimate(3), WithinAbs(via_bfs, 1e-12));
}

TEST_CASE("star patterns") {
  CHECK(star_pattern(1, 1, 0) == snake_cross(1));
  CHECK(star_pattern(0, 1, 0) == plain_cross(1));

  const Pattern s11 = star_pattern(1, 1, 1);
  CHECK(s11.width() == 165);
  CHECK(validate(s11).is_labyrinth());
  const ExitSet e = exit_set(s11);
  CHECK(bfs_oracle(s11, e.top, e.bottom) == 465);

  const Pattern s20 = star_pattern(1, 2, 0);
  CHECK(s20.width() == 121);
  const ExitSet e2 = exit_set(s20);
  CHECK(bfs_oracle(s20, e2.left, e2.right) == 225);

  CHECK_THROWS_AS(star_pattern(1, 5, 0), TooLarge);  // 11^5 exceeds the default cap
  CHECK_THROWS_AS(star_pattern(1, 0, 0), BadParameter);
}
