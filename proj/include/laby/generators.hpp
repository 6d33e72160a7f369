#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "laby/props.hpp"

namespace laby {

enum class Chirality : std::uint8_t { Right, Left };

/// Parameters of the k-th snake cross pattern: width 4k+7, central square at
/// (2k+3, 2k+3), k windings per arm.
struct SnakeSpec {
  int k = 1;
  Chirality chirality = Chirality::Right;

  std::int32_t width() const { return 4 * k + 7; }
  CellAddr center() const { return {2 * k + 3, 2 * k + 3}; }
};

namespace detail {

// The arm toward the bottom exit, walked cell by cell. Starting below the
// center: two cells down, then alternating straight runs and two-cell
// descents. A straight run ends on the last cell strictly before one of the
// grid's two diagonals, or on the cell adjacent to the exit (final run).
inline std::vector<CellAddr> snake_bottom_arm(int k) {
  const std::int32_t m = 4 * k + 7;
  const std::int32_t c = 2 * k + 3;
  const CellAddr exit{c, 0};
  std::vector<CellAddr> arm;
  CellAddr pos{c, c};
  auto move = [&](std::int32_t dc, std::int32_t dr) {
    pos = {pos.col + dc, pos.row + dr};
    arm.push_back(pos);
  };

  move(0, -1);
  move(0, -1);
  // Direction state: runs alternate west/east, descents always go down.
  // Turn pattern (right chirality): right, left, left, right, repeating.
  std::int32_t run_dc = -1;  // first turn while facing the exit goes right = west
  bool done = false;
  while (!done) {
    while (true) {
      const CellAddr next{pos.col + run_dc, pos.row};
      if (next.col == next.row || next.col == m - 1 - next.row) break;  // next on a diagonal
      pos = next;
      arm.push_back(pos);
      if (std::abs(pos.col - exit.col) + std::abs(pos.row - exit.row) == 1) {
        done = true;
        break;
      }
    }
    if (done) break;
    move(0, -1);
    move(0, -1);
    run_dc = -run_dc;
  }
  arm.push_back(exit);
  return arm;
}

}  // namespace detail

/// The k-th snake cross pattern. One arm is walked, the other three are its
/// quarter-turn images about the central square; the left variant is the
/// mirror image of the right one.
inline Pattern snake_cross(const SnakeSpec& spec) {
  if (spec.k < 1) throw BadParameter("snake_cross requires k >= 1");
  const std::int32_t m = spec.width();
  std::vector<CellAddr> cells = detail::snake_bottom_arm(spec.k);
  cells.push_back(spec.center());
  const std::size_t n = cells.size();
  for (int rot = 0; rot < 3; ++rot) {
    const std::size_t base = rot * n;
    for (std::size_t i = 0; i < n; ++i) {
      const CellAddr c = cells[base + i];
      cells.push_back({m - 1 - c.row, c.col});
    }
  }
  Pattern p = Pattern::from_cells(m, cells);
  return spec.chirality == Chirality::Right ? p : mirror_columns(p);
}

inline Pattern snake_cross(int k, Chirality chirality = Chirality::Right) {
  return snake_cross(SnakeSpec{k, chirality});
}

/// Unblocked cross of width 2k+1: exactly row k and column k are white.
inline Pattern plain_cross(int k) {
  if (k < 1) throw BadParameter("plain_cross requires k >= 1");
  const std::int32_t m = 2 * k + 1;
  std::vector<CellAddr> cells;
  for (std::int32_t i = 0; i < m; ++i) {
    cells.push_back({i, k});
    if (i != k) cells.push_back({k, i});
  }
  return Pattern::from_cells(m, cells);
}

/// Grows a labyrinth pattern by attaching random white leaves to the tree,
/// rejecting any attachment that adds an exit pair or breaks the corner
/// property. The core is unchanged: leaves never lie on exit-to-exit paths.
/// Deterministic for a fixed seed; returns the input if nothing attaches.
inline Pattern decorate(const Pattern& p, std::uint64_t seed, int attempts) {
  {
    const ValidationReport report = validate(p);
    if (!report.is_labyrinth())
      throw NotLabyrinth(report.failures.empty() ? "validation failed" : report.failures.front());
  }
  std::mt19937_64 rng(seed);
  Pattern out = p;
  const std::int32_t m = p.width();
  std::vector<CellAddr> candidates;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    candidates.clear();
    PatternGraph g(out);
    for (std::int32_t j = 0; j < m; ++j)
      for (std::int32_t i = 0; i < m; ++i)
        if (!out.white(i, j) && g.degree({i, j}) == 1) candidates.push_back({i, j});
    if (candidates.empty()) break;
    const CellAddr pick =
        candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    Pattern grown = out.with_cell(pick, true);
    const FindExitsResult ex = find_exits(grown);
    if (ex.vertical_cols.size() != 1 || ex.horizontal_rows.size() != 1) continue;
    if (!check_corner(grown)) continue;
    out = std::move(grown);
  }
  return out;
}

}  // namespace laby
