#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "laby/props.hpp"

namespace laby {

using BigCount = boost::multiprecision::cpp_int;

/// Ordered list of white squares between two cells; length counts VERTICES
/// (the number of white squares on the path), not edges.
struct TreePath {
  std::vector<CellAddr> squares;
  std::int64_t length() const { return static_cast<std::int64_t>(squares.size()); }
};

namespace detail {

// Path algorithms index cells as row*m + col in a flat array; widths whose
// cell count would overflow the index are not materializable anyway.
inline std::int64_t cell_count_checked(const Pattern& p) {
  const std::int64_t n = std::int64_t{p.width()} * p.width();
  if (n >= (std::int64_t{1} << 31)) throw TooLarge(p.width(), 46340);
  return n;
}

}  // namespace detail

/// The unique simple path between two white cells of a tree pattern,
/// extracted with an iterative depth-first search.
inline TreePath tree_path(const Pattern& p, CellAddr from, CellAddr to) {
  const std::int32_t m = p.width();
  if (from.col < 0 || from.col >= m || from.row < 0 || from.row >= m)
    throw BadAddress(from.col, from.row, m);
  if (to.col < 0 || to.col >= m || to.row < 0 || to.row >= m) throw BadAddress(to.col, to.row, m);
  if (!p.white(from)) throw NotWhite(from.col, from.row);
  if (!p.white(to)) throw NotWhite(to.col, to.row);
  if (from == to) return TreePath{{from}};

  detail::cell_count_checked(p);
  const auto idx = [m](CellAddr c) { return static_cast<std::int32_t>(c.row) * m + c.col; };
  const std::int32_t target = idx(to);
  std::vector<std::int32_t> parent(static_cast<std::size_t>(m) * m, -1);
  std::vector<std::int32_t> stack;
  stack.push_back(idx(from));
  parent[static_cast<std::size_t>(idx(from))] = idx(from);
  bool found = false;
  while (!stack.empty() && !found) {
    const std::int32_t u = stack.back();
    stack.pop_back();
    const std::int32_t ui = u % m, uj = u / m;
    const std::int32_t cand[4] = {ui + 1 < m ? u + 1 : -1, ui > 0 ? u - 1 : -1,
                                  uj + 1 < m ? u + m : -1, uj > 0 ? u - m : -1};
    for (const std::int32_t v : cand) {
      if (v < 0 || parent[static_cast<std::size_t>(v)] >= 0) continue;
      if (!p.white(v % m, v / m)) continue;
      parent[static_cast<std::size_t>(v)] = u;
      if (v == target) {
        found = true;
        break;
      }
      stack.push_back(v);
    }
  }
  if (!found) throw NotTree("no path between the given cells (disconnected)");

  TreePath path;
  for (std::int32_t cur = target;; cur = parent[static_cast<std::size_t>(cur)]) {
    path.squares.push_back({cur % m, cur / m});
    if (cur == parent[static_cast<std::size_t>(cur)]) break;
  }
  std::reverse(path.squares.begin(), path.squares.end());
  return path;
}

/// Independent cross-check: frontier-sweep breadth-first distance, returned
/// as a vertex count (distance + 1). Shares no code with tree_path.
inline std::int64_t bfs_oracle(const Pattern& p, CellAddr from, CellAddr to) {
  const std::int32_t m = p.width();
  if (!p.white(from)) throw NotWhite(from.col, from.row);
  if (!p.white(to)) throw NotWhite(to.col, to.row);
  if (from == to) return 1;
  detail::cell_count_checked(p);
  const auto idx = [m](CellAddr c) { return static_cast<std::int32_t>(c.row) * m + c.col; };
  const std::int32_t target = idx(to);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(m) * m, 0);
  std::vector<std::int32_t> frontier{idx(from)}, next;
  seen[static_cast<std::size_t>(idx(from))] = 1;
  std::int64_t dist = 0;
  while (!frontier.empty()) {
    ++dist;
    next.clear();
    for (const std::int32_t u : frontier) {
      const std::int32_t ui = u % m, uj = u / m;
      const std::int32_t cand[4] = {ui + 1 < m ? u + 1 : -1, ui > 0 ? u - 1 : -1,
                                    uj + 1 < m ? u + m : -1, uj > 0 ? u - m : -1};
      for (const std::int32_t v : cand) {
        if (v < 0 || seen[static_cast<std::size_t>(v)]) continue;
        if (!p.white(v % m, v / m)) continue;
        if (v == target) return dist + 1;
        seen[static_cast<std::size_t>(v)] = 1;
        next.push_back(v);
      }
    }
    frontier.swap(next);
  }
  throw Unreachable();
}

/// Exit squares of a pattern with unique exit pairs.
inline ExitSet exit_set(const Pattern& p) {
  const FindExitsResult ex = find_exits(p);
  if (ex.vertical_cols.size() != 1 || ex.horizontal_rows.size() != 1)
    throw MissingExits(static_cast<int>(ex.vertical_cols.size()),
                       static_cast<int>(ex.horizontal_rows.size()));
  const std::int32_t m = p.width();
  return ExitSet{{ex.vertical_cols[0], m - 1},
                 {ex.vertical_cols[0], 0},
                 {0, ex.horizontal_rows[0]},
                 {m - 1, ex.horizontal_rows[0]}};
}

/// Fixed order for the six unordered exit pairs.
enum class ExitPair : int { TB = 0, LR = 1, TL = 2, TR = 3, BL = 4, BR = 5 };

inline constexpr std::array<std::pair<Side, Side>, 6> kExitPairSides = {{
    {Side::Top, Side::Bottom},
    {Side::Left, Side::Right},
    {Side::Top, Side::Left},
    {Side::Top, Side::Right},
    {Side::Bottom, Side::Left},
    {Side::Bottom, Side::Right},
}};

constexpr std::string_view to_string(ExitPair p) {
  constexpr std::string_view names[6] = {"TB", "LR", "TL", "TR", "BL", "BR"};
  return names[static_cast<int>(p)];
}

struct SixLengths {
  std::array<std::int64_t, 6> lengths{};  // indexed by ExitPair

  std::int64_t operator[](ExitPair p) const { return lengths[static_cast<std::size_t>(p)]; }
  bool all_equal() const {
    for (const std::int64_t v : lengths)
      if (v != lengths[0]) return false;
    return true;
  }
};

/// The six exit-to-exit path lengths (vertex counts) in pair order
/// TB, LR, TL, TR, BL, BR.
inline SixLengths exit_path_lengths(const Pattern& p) {
  FindExitsResult ex = find_exits(p);
  if (ex.vertical_cols.size() != 1 || ex.horizontal_rows.size() != 1)
    throw NotLabyrinth("exit pairs are not unique");
  const ExitSet e = exit_set(p);
  SixLengths out;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [sa, sb] = kExitPairSides[i];
    out.lengths[i] = tree_path(p, e.by_side(sa), e.by_side(sb)).length();
  }
  return out;
}

/// Squares on one snake-cross arm, central square excluded: 2k^2 + 2k + 3.
inline std::int64_t arm_square_count(std::int64_t k) {
  if (k < 1) throw BadParameter("arm_square_count requires k >= 1");
  return 2 * k * k + 2 * k + 3;
}

/// Finite-level arc approximation: the exit-to-exit path at every prefix
/// level of a pattern sequence. Level n+1 squares nest inside level n ones.
struct ArcApproximation {
  std::vector<TreePath> levels;
  std::vector<std::int64_t> widths;  // m(n) per level
};

inline ArcApproximation arc_approximation(std::span<const Pattern> patterns, Side a, Side b,
                                          std::int64_t max_width = kDefaultMaxWidth) {
  if (patterns.empty()) throw BadParameter("arc_approximation needs at least one pattern");
  if (a == b) throw BadParameter("arc endpoints must be distinct exits");
  ArcApproximation arc;
  Pattern level = patterns[0];
  for (std::size_t n = 0;; ++n) {
    const ExitSet e = exit_set(level);
    arc.levels.push_back(tree_path(level, e.by_side(a), e.by_side(b)));
    arc.widths.push_back(level.width());
    if (n + 1 == patterns.size()) break;
    level = compose(level, patterns[n + 1], max_width);
  }
  return arc;
}

// ---------------------------------------------------------------------------
// Path matrices: the substitution rule for exit-path lengths without
// materializing grids. Entry [P][Q] counts the squares of traversal type Q
// along the pattern's P-path; composing patterns multiplies the matrices,
// and row sums give the six path lengths of the composition.

struct PathMatrix {
  std::array<std::array<BigCount, 6>, 6> m{};

  friend PathMatrix operator*(const PathMatrix& a, const PathMatrix& b) {
    PathMatrix out;
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < 6; ++k) {
        if (a.m[i][k] == 0) continue;
        for (int j = 0; j < 6; ++j) out.m[i][j] += a.m[i][k] * b.m[k][j];
      }
    return out;
  }

  static PathMatrix identity() {
    PathMatrix out;
    for (int i = 0; i < 6; ++i) out.m[i][i] = 1;
    return out;
  }

  std::array<BigCount, 6> row_sums() const {
    std::array<BigCount, 6> out{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) out[i] += m[i][j];
    return out;
  }
};

namespace detail {

inline int pair_index(Side a, Side b) {
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [x, y] = kExitPairSides[i];
    if ((a == x && b == y) || (a == y && b == x)) return static_cast<int>(i);
  }
  throw BadParameter("a traversal cannot enter and leave through the same side");
}

inline Side step_side(CellAddr from, CellAddr to) {
  if (to.col == from.col + 1) return Side::Right;
  if (to.col == from.col - 1) return Side::Left;
  if (to.row == from.row + 1) return Side::Top;
  return Side::Bottom;
}

}  // namespace detail

/// Traversal-type counts of the six exit paths of one labyrinth pattern.
inline PathMatrix path_matrix(const Pattern& p) {
  const ExitSet e = exit_set(p);
  PathMatrix out;
  for (std::size_t pi = 0; pi < 6; ++pi) {
    const auto [sa, sb] = kExitPairSides[pi];
    const TreePath path = tree_path(p, e.by_side(sa), e.by_side(sb));
    const std::size_t n = path.squares.size();
    for (std::size_t s = 0; s < n; ++s) {
      // Endpoint squares are traversed from the outer boundary side; interior
      // squares from the side shared with the previous square.
      const Side in = s == 0 ? sa : detail::step_side(path.squares[s], path.squares[s - 1]);
      const Side outside = s + 1 == n ? sb : detail::step_side(path.squares[s], path.squares[s + 1]);
      out.m[pi][static_cast<std::size_t>(detail::pair_index(in, outside))] += 1;
    }
  }
  return out;
}

/// Exact six path lengths of compose_sequence(patterns) via the substitution
/// rule; no grid is materialized.
inline std::array<BigCount, 6> substituted_lengths(std::span<const Pattern> patterns) {
  if (patterns.empty()) throw BadParameter("substituted_lengths needs at least one pattern");
  PathMatrix acc = path_matrix(patterns[0]);
  for (std::size_t i = 1; i < patterns.size(); ++i) acc = acc * path_matrix(patterns[i]);
  return acc.row_sums();
}

}  // namespace laby
