#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laby/grid.hpp"

namespace laby {

/// Lightweight view of G(A): vertices are white squares, edges join white
/// squares sharing a side. Diagonal contact is not an edge.
class PatternGraph {
 public:
  explicit PatternGraph(const Pattern& p) : p_(&p) {}

  std::int64_t vertex_count() const { return p_->white_count(); }

  std::int64_t edge_count() const {
    const std::int32_t m = p_->width();
    std::int64_t e = 0;
    for (std::int32_t j = 0; j < m; ++j)
      for (std::int32_t i = 0; i < m; ++i) {
        if (!p_->white(i, j)) continue;
        if (i + 1 < m && p_->white(i + 1, j)) ++e;
        if (j + 1 < m && p_->white(i, j + 1)) ++e;
      }
    return e;
  }

  /// Writes up to 4 neighbours of `c` into `out`; returns the degree.
  int neighbors(CellAddr c, CellAddr out[4]) const {
    static constexpr std::int32_t dc[4] = {1, -1, 0, 0};
    static constexpr std::int32_t dr[4] = {0, 0, 1, -1};
    const std::int32_t m = p_->width();
    int n = 0;
    for (int d = 0; d < 4; ++d) {
      const std::int32_t ni = c.col + dc[d], nj = c.row + dr[d];
      if (ni >= 0 && ni < m && nj >= 0 && nj < m && p_->white(ni, nj)) out[n++] = {ni, nj};
    }
    return n;
  }

  int degree(CellAddr c) const {
    CellAddr scratch[4];
    return neighbors(c, scratch);
  }

  const Pattern& pattern() const { return *p_; }

 private:
  const Pattern* p_;
};

inline PatternGraph adjacency(const Pattern& p) { return PatternGraph(p); }

namespace detail {

// Flood fill from the first white cell; returns number of cells reached.
inline std::int64_t reachable_from_first(const Pattern& p) {
  const std::int32_t m = p.width();
  CellAddr start{-1, -1};
  for (std::int32_t j = 0; j < m && start.col < 0; ++j)
    for (std::int32_t i = 0; i < m; ++i)
      if (p.white(i, j)) {
        start = {i, j};
        break;
      }
  if (start.col < 0) return 0;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(m) * m, 0);
  auto idx = [m](CellAddr c) { return static_cast<std::size_t>(c.row) * m + c.col; };
  std::vector<CellAddr> stack{start};
  seen[idx(start)] = 1;
  std::int64_t n = 0;
  PatternGraph g(p);
  CellAddr nb[4];
  while (!stack.empty()) {
    CellAddr u = stack.back();
    stack.pop_back();
    ++n;
    const int deg = g.neighbors(u, nb);
    for (int d = 0; d < deg; ++d)
      if (!seen[idx(nb[d])]) {
        seen[idx(nb[d])] = 1;
        stack.push_back(nb[d]);
      }
  }
  return n;
}

}  // namespace detail

/// Property 1: G(A) is a tree (connected with |E| = |V| - 1).
inline bool check_tree(const Pattern& p) {
  PatternGraph g(p);
  return detail::reachable_from_first(p) == g.vertex_count() &&
         g.edge_count() == g.vertex_count() - 1;
}

struct FindExitsResult {
  std::vector<std::int32_t> vertical_cols;   // columns with white top & bottom cells
  std::vector<std::int32_t> horizontal_rows; // rows with white left & right cells
};

inline FindExitsResult find_exits(const Pattern& p) {
  const std::int32_t m = p.width();
  FindExitsResult r;
  for (std::int32_t i = 0; i < m; ++i)
    if (p.white(i, m - 1) && p.white(i, 0)) r.vertical_cols.push_back(i);
  for (std::int32_t j = 0; j < m; ++j)
    if (p.white(0, j) && p.white(m - 1, j)) r.horizontal_rows.push_back(j);
  return r;
}

/// Property 3: no two white squares at diagonally opposite corners.
inline bool check_corner(const Pattern& p) {
  const std::int32_t m = p.width();
  if (p.white(0, 0) && p.white(m - 1, m - 1)) return false;
  if (p.white(0, m - 1) && p.white(m - 1, 0)) return false;
  return true;
}

/// The four distinguished exit squares of a labyrinth pattern.
struct ExitSet {
  CellAddr top, bottom, left, right;

  CellAddr by_side(Side s) const {
    switch (s) {
      case Side::Top: return top;
      case Side::Bottom: return bottom;
      case Side::Left: return left;
      case Side::Right: return right;
    }
    return top;
  }
};

struct BlockedInfo {
  bool h_blocked = false;
  bool v_blocked = false;
  std::int64_t exit_row_blacks = 0;
  std::int64_t exit_col_blacks = 0;
};

/// Blockedness is defined only when exit pairs are unique.
inline BlockedInfo check_blocked(const Pattern& p) {
  const FindExitsResult ex = find_exits(p);
  if (ex.vertical_cols.size() != 1 || ex.horizontal_rows.size() != 1)
    throw MissingExits(static_cast<int>(ex.vertical_cols.size()),
                       static_cast<int>(ex.horizontal_rows.size()));
  const std::int32_t m = p.width();
  const std::int32_t col = ex.vertical_cols[0];
  const std::int32_t row = ex.horizontal_rows[0];
  BlockedInfo b;
  for (std::int32_t i = 0; i < m; ++i)
    if (!p.white(i, row)) ++b.exit_row_blacks;
  for (std::int32_t j = 0; j < m; ++j)
    if (!p.white(col, j)) ++b.exit_col_blacks;
  b.h_blocked = b.exit_row_blacks > 0;
  b.v_blocked = b.exit_col_blacks > 0;
  return b;
}

struct ValidationReport {
  std::int32_t width = 0;
  bool is_tree = false;
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  bool connected = false;
  std::vector<std::int32_t> vertical_cols;
  std::vector<std::int32_t> horizontal_rows;
  bool corner_ok = false;
  bool h_blocked = false;
  bool v_blocked = false;
  std::int64_t exit_row_blacks = 0;
  std::int64_t exit_col_blacks = 0;
  std::optional<ExitSet> exits;
  std::vector<std::string> failures;

  int vertical_pairs() const { return static_cast<int>(vertical_cols.size()); }
  int horizontal_pairs() const { return static_cast<int>(horizontal_rows.size()); }

  bool is_labyrinth() const {
    return is_tree && vertical_pairs() == 1 && horizontal_pairs() == 1 && corner_ok && width >= 3;
  }

  std::string to_text() const {
    std::string s;
    s += "width:       " + std::to_string(width) + "\n";
    s += "tree:        " + std::string(is_tree ? "yes" : "no") + " (" + std::to_string(vertices) +
         " vertices, " + std::to_string(edges) + " edges)\n";
    s += "exit pairs:  " + std::to_string(vertical_pairs()) + " vertical, " +
         std::to_string(horizontal_pairs()) + " horizontal\n";
    s += "corner:      " + std::string(corner_ok ? "ok" : "violated") + "\n";
    if (exits) {
      s += "blocked:     " + std::string(h_blocked ? "h" : "-") + std::string(v_blocked ? "v" : "-") +
           " (" + std::to_string(exit_row_blacks) + " black in exit row, " +
           std::to_string(exit_col_blacks) + " in exit column)\n";
    }
    s += "labyrinth:   " + std::string(is_labyrinth() ? "yes" : "no") + "\n";
    for (const std::string& f : failures) s += "failure:     " + f + "\n";
    return s;
  }

  /// Machine-readable key/value lines; fixed keys, -1 for absent exits.
  std::string to_kv() const {
    auto b = [](bool v) { return v ? "1" : "0"; };
    std::string s;
    s += "tree=" + std::string(b(is_tree)) + "\n";
    s += "v_pairs=" + std::to_string(vertical_pairs()) + "\n";
    s += "h_pairs=" + std::to_string(horizontal_pairs()) + "\n";
    s += "corner=" + std::string(b(corner_ok)) + "\n";
    s += "h_blocked=" + std::string(b(h_blocked)) + "\n";
    s += "v_blocked=" + std::string(b(v_blocked)) + "\n";
    s += "exit_col=" + std::to_string(vertical_pairs() == 1 ? vertical_cols[0] : -1) + "\n";
    s += "exit_row=" + std::to_string(horizontal_pairs() == 1 ? horizontal_rows[0] : -1) + "\n";
    return s;
  }
};

/// The minimal labyrinth sub-pattern: the subtree of G(A) spanning the four
/// exits, obtained by pruning non-exit leaves to a fixed point. Blacking any
/// remaining white square breaks the labyrinth properties.
inline Pattern core(const Pattern& p);

inline ValidationReport validate(const Pattern& p) {
  ValidationReport r;
  r.width = p.width();
  PatternGraph g(p);
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.connected = detail::reachable_from_first(p) == r.vertices;
  r.is_tree = r.connected && r.edges == r.vertices - 1;
  const FindExitsResult ex = find_exits(p);
  r.vertical_cols = ex.vertical_cols;
  r.horizontal_rows = ex.horizontal_rows;
  r.corner_ok = check_corner(p);

  if (!r.connected) r.failures.push_back("white squares are not connected");
  if (r.connected && r.edges != r.vertices - 1)
    r.failures.push_back("graph contains a cycle (" + std::to_string(r.edges) + " edges, " +
                         std::to_string(r.vertices) + " vertices)");
  if (r.vertical_pairs() != 1)
    r.failures.push_back(std::to_string(r.vertical_pairs()) + " vertical exit pairs");
  if (r.horizontal_pairs() != 1)
    r.failures.push_back(std::to_string(r.horizontal_pairs()) + " horizontal exit pairs");
  if (!r.corner_ok) r.failures.push_back("white squares at diagonally opposite corners");
  if (r.width < 3) r.failures.push_back("width < 3");

  if (r.vertical_pairs() == 1 && r.horizontal_pairs() == 1) {
    const std::int32_t m = p.width();
    const std::int32_t col = r.vertical_cols[0];
    const std::int32_t row = r.horizontal_rows[0];
    r.exits = ExitSet{{col, m - 1}, {col, 0}, {0, row}, {m - 1, row}};
    const BlockedInfo b = check_blocked(p);
    r.h_blocked = b.h_blocked;
    r.v_blocked = b.v_blocked;
    r.exit_row_blacks = b.exit_row_blacks;
    r.exit_col_blacks = b.exit_col_blacks;
  }
  return r;
}

inline Pattern core(const Pattern& p) {
  const ValidationReport report = validate(p);
  if (!report.is_labyrinth())
    throw NotLabyrinth(report.failures.empty() ? "validation failed" : report.failures.front());
  const ExitSet exits = *report.exits;
  const std::int32_t m = p.width();
  const auto idx = [m](CellAddr c) { return static_cast<std::size_t>(c.row) * m + c.col; };

  std::vector<std::uint8_t> alive(static_cast<std::size_t>(m) * m, 0);
  std::vector<std::uint8_t> is_exit(static_cast<std::size_t>(m) * m, 0);
  for (const CellAddr e : {exits.top, exits.bottom, exits.left, exits.right}) is_exit[idx(e)] = 1;
  std::vector<std::int32_t> degree(static_cast<std::size_t>(m) * m, 0);
  PatternGraph g(p);
  CellAddr nb[4];
  for (std::int32_t j = 0; j < m; ++j)
    for (std::int32_t i = 0; i < m; ++i)
      if (p.white(i, j)) {
        alive[idx({i, j})] = 1;
        degree[idx({i, j})] = g.neighbors({i, j}, nb);
      }

  std::vector<CellAddr> prune;
  for (std::int32_t j = 0; j < m; ++j)
    for (std::int32_t i = 0; i < m; ++i)
      if (alive[idx({i, j})] && degree[idx({i, j})] <= 1 && !is_exit[idx({i, j})])
        prune.push_back({i, j});
  while (!prune.empty()) {
    const CellAddr c = prune.back();
    prune.pop_back();
    if (!alive[idx(c)]) continue;
    alive[idx(c)] = 0;
    const int deg = g.neighbors(c, nb);
    for (int d = 0; d < deg; ++d) {
      if (!alive[idx(nb[d])]) continue;
      if (--degree[idx(nb[d])] <= 1 && !is_exit[idx(nb[d])]) prune.push_back(nb[d]);
    }
  }

  std::vector<CellAddr> cells;
  for (std::int32_t j = 0; j < m; ++j)
    for (std::int32_t i = 0; i < m; ++i)
      if (alive[idx({i, j})]) cells.push_back({i, j});
  return Pattern::from_cells(m, cells);
}

}  // namespace laby
