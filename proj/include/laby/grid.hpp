#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "laby/cell.hpp"
#include "laby/errors.hpp"

namespace laby {

/// Default cap on materialized grid widths. Dimension work beyond this uses
/// closed-form counts, never grids.
inline constexpr std::int64_t kDefaultMaxWidth = std::int64_t{1} << 16;

/// An m x m black/white grid (the m-pattern). Immutable after construction;
/// bits are packed per row so that level-3 snake compositions (3135^2 cells)
/// stay BFS-friendly.
class Pattern {
 public:
  static Pattern from_cells(std::int32_t width, std::span<const CellAddr> white_cells) {
    if (width < 1) throw BadParameter("pattern width must be >= 1");
    if (white_cells.empty()) throw EmptyPattern();
    Pattern p(width);
    for (const CellAddr& c : white_cells) {
      if (c.col < 0 || c.col >= width || c.row < 0 || c.row >= width)
        throw BadAddress(c.col, c.row, width);
      p.set(c.col, c.row);
    }
    p.count_ = p.popcount();
    return p;
  }

  static Pattern from_cells(std::int32_t width, std::initializer_list<CellAddr> cells) {
    return from_cells(width, std::span<const CellAddr>(cells.begin(), cells.size()));
  }

  /// The all-white pattern; solid(1) is the compose identity.
  static Pattern solid(std::int32_t width) {
    if (width < 1) throw BadParameter("pattern width must be >= 1");
    Pattern p(width);
    for (std::int32_t j = 0; j < width; ++j)
      for (std::int32_t i = 0; i < width; ++i) p.set(i, j);
    p.count_ = std::int64_t{width} * width;
    return p;
  }

  std::int32_t width() const { return width_; }

  bool white(std::int32_t col, std::int32_t row) const {
    return (word(col, row) >> (col & 63)) & 1u;
  }
  bool white(CellAddr c) const { return white(c.col, c.row); }

  std::int64_t white_count() const { return count_; }
  std::int64_t black_count() const { return std::int64_t{width_} * width_ - count_; }

  std::vector<CellAddr> white_cells() const {
    std::vector<CellAddr> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (std::int32_t j = 0; j < width_; ++j)
      for (std::int32_t i = 0; i < width_; ++i)
        if (white(i, j)) out.push_back({i, j});
    return out;
  }

  /// Copy with one cell flipped; used by decoration and minimality tests.
  Pattern with_cell(CellAddr c, bool make_white) const {
    if (c.col < 0 || c.col >= width_ || c.row < 0 || c.row >= width_)
      throw BadAddress(c.col, c.row, width_);
    Pattern p = *this;
    const bool was = p.white(c.col, c.row);
    if (was == make_white) return p;
    if (make_white)
      p.set(c.col, c.row);
    else
      p.bits_[p.index(c.col, c.row)] &= ~(std::uint64_t{1} << (c.col & 63));
    p.count_ += make_white ? 1 : -1;
    if (p.count_ == 0) throw EmptyPattern();
    return p;
  }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.width_ == b.width_ && a.bits_ == b.bits_;
  }

  // Raw row access for the traversal and compose kernels.
  std::span<const std::uint64_t> row_words(std::int32_t row) const {
    return {bits_.data() + static_cast<std::size_t>(row) * stride_, stride_};
  }
  std::size_t words_per_row() const { return stride_; }

 private:
  explicit Pattern(std::int32_t width)
      : width_(width),
        stride_((static_cast<std::size_t>(width) + 63) / 64),
        bits_(stride_ * static_cast<std::size_t>(width), 0) {}

  std::size_t index(std::int32_t col, std::int32_t row) const {
    return static_cast<std::size_t>(row) * stride_ + (static_cast<std::size_t>(col) >> 6);
  }
  std::uint64_t word(std::int32_t col, std::int32_t row) const { return bits_[index(col, row)]; }
  void set(std::int32_t col, std::int32_t row) {
    bits_[index(col, row)] |= std::uint64_t{1} << (col & 63);
  }

  std::int64_t popcount() const {
    std::int64_t n = 0;
    for (std::uint64_t w : bits_) n += std::popcount(w);
    return n;
  }

  std::int32_t width_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
  std::int64_t count_ = 0;

  friend Pattern compose(const Pattern&, const Pattern&, std::int64_t);
  friend Pattern mirror_columns(const Pattern&);
  friend Pattern rotate90(const Pattern&);
};

namespace detail {

// dst |= src << bit_offset, for src_bits bits of src. Unused high bits of the
// last source word must be zero (Pattern maintains that invariant).
inline void or_shifted(std::uint64_t* dst, const std::uint64_t* src, std::size_t src_words,
                       std::size_t bit_offset) {
  const std::size_t word_off = bit_offset >> 6;
  const unsigned shift = static_cast<unsigned>(bit_offset & 63);
  if (shift == 0) {
    for (std::size_t w = 0; w < src_words; ++w) dst[word_off + w] |= src[w];
    return;
  }
  std::uint64_t carry = 0;
  for (std::size_t w = 0; w < src_words; ++w) {
    dst[word_off + w] |= (src[w] << shift) | carry;
    carry = src[w] >> (64 - shift);
  }
  if (carry) dst[word_off + src_words] |= carry;
}

}  // namespace detail

/// W_n substitution: every white cell of `outer` becomes a copy of `inner`,
/// every black cell an all-black block. result(i,j) is white iff
/// outer(i/mi, j/mi) and inner(i%mi, j%mi) are both white.
inline Pattern compose(const Pattern& outer, const Pattern& inner,
                       std::int64_t max_width = kDefaultMaxWidth) {
  const std::int64_t m = std::int64_t{outer.width()} * inner.width();
  if (m > max_width) throw TooLarge(m, max_width);
  Pattern out(static_cast<std::int32_t>(m));
  const std::int32_t mi = inner.width();
  for (std::int32_t oj = 0; oj < outer.width(); ++oj) {
    for (std::int32_t oi = 0; oi < outer.width(); ++oi) {
      if (!outer.white(oi, oj)) continue;
      const std::size_t bit_offset = static_cast<std::size_t>(oi) * mi;
      for (std::int32_t r = 0; r < mi; ++r) {
        std::uint64_t* dst = out.bits_.data() +
                             (static_cast<std::size_t>(oj) * mi + r) * out.stride_;
        detail::or_shifted(dst, inner.row_words(r).data(), inner.words_per_row(), bit_offset);
      }
    }
  }
  out.count_ = outer.white_count() * inner.white_count();
  return out;
}

/// Level-n composition of a pattern sequence.
struct LevelSet {
  int level = 0;
  Pattern pattern;
  std::vector<std::int32_t> widths;
};

inline LevelSet compose_sequence(std::span<const Pattern> patterns,
                                 std::int64_t max_width = kDefaultMaxWidth) {
  if (patterns.empty()) throw BadParameter("compose_sequence needs at least one pattern");
  Pattern acc = patterns[0];
  std::vector<std::int32_t> widths{patterns[0].width()};
  for (std::size_t i = 1; i < patterns.size(); ++i) {
    acc = compose(acc, patterns[i], max_width);
    widths.push_back(patterns[i].width());
  }
  return LevelSet{static_cast<int>(patterns.size()), std::move(acc), std::move(widths)};
}

/// Reflection through the vertical axis (left/right chirality swap).
inline Pattern mirror_columns(const Pattern& p) {
  const std::int32_t m = p.width();
  Pattern out(m);
  for (std::int32_t j = 0; j < m; ++j)
    for (std::int32_t i = 0; i < m; ++i)
      if (p.white(i, j)) out.set(m - 1 - i, j);
  out.count_ = p.white_count();
  return out;
}

/// Counterclockwise quarter turn: (i,j) -> (m-1-j, i).
inline Pattern rotate90(const Pattern& p) {
  const std::int32_t m = p.width();
  Pattern out(m);
  for (std::int32_t j = 0; j < m; ++j)
    for (std::int32_t i = 0; i < m; ++i)
      if (p.white(i, j)) out.set(m - 1 - j, i);
  out.count_ = p.white_count();
  return out;
}

// ---------------------------------------------------------------------------
// Text format (bit-exact): line 1 is the decimal width m, then exactly m
// lines of exactly m characters, '.' white and '#' black, TOP row first,
// final newline required, no other whitespace.

inline Pattern read_pattern(std::string_view text) {
  std::size_t pos = 0;
  int line = 1;
  auto next_line = [&](bool final_required) -> std::string_view {
    if (pos >= text.size()) throw ParseError(line, 1, "unexpected end of input");
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (final_required) throw ParseError(line, static_cast<int>(text.size() - pos + 1),
                                           "missing final newline");
      nl = text.size();
    }
    std::string_view ln = text.substr(pos, nl - pos);
    pos = nl + 1;
    return ln;
  };

  std::string_view head = next_line(true);
  if (head.empty()) throw ParseError(1, 1, "expected decimal width");
  std::int64_t m = 0;
  for (std::size_t i = 0; i < head.size(); ++i) {
    const char ch = head[i];
    if (ch < '0' || ch > '9')
      throw ParseError(1, static_cast<int>(i + 1), "width must be decimal digits");
    m = m * 10 + (ch - '0');
    if (m > kDefaultMaxWidth * 16) throw ParseError(1, static_cast<int>(i + 1), "width out of range");
  }
  if (m < 1) throw ParseError(1, 1, "width must be >= 1");

  std::vector<CellAddr> cells;
  for (std::int64_t r = 0; r < m; ++r) {
    ++line;
    std::string_view ln = next_line(true);
    if (static_cast<std::int64_t>(ln.size()) != m)
      throw ParseError(line, static_cast<int>(ln.size() + 1),
                       "row has " + std::to_string(ln.size()) + " cells, expected " + std::to_string(m));
    const std::int32_t row = static_cast<std::int32_t>(m - 1 - r);  // text lists top first
    for (std::int64_t i = 0; i < m; ++i) {
      const char ch = ln[static_cast<std::size_t>(i)];
      if (ch == '.')
        cells.push_back({static_cast<std::int32_t>(i), row});
      else if (ch != '#')
        throw ParseError(line, static_cast<int>(i + 1), "expected '.' or '#'");
    }
  }
  if (pos != text.size()) throw ParseError(line + 1, 1, "trailing content after grid");
  if (cells.empty()) throw EmptyPattern();
  return Pattern::from_cells(static_cast<std::int32_t>(m), cells);
}

inline std::string write_pattern(const Pattern& p) {
  const std::int32_t m = p.width();
  std::string out = std::to_string(m);
  out.reserve(out.size() + static_cast<std::size_t>(m) * (m + 1) + 1);
  out.push_back('\n');
  for (std::int32_t j = m - 1; j >= 0; --j) {
    for (std::int32_t i = 0; i < m; ++i) out.push_back(p.white(i, j) ? '.' : '#');
    out.push_back('\n');
  }
  return out;
}

}  // namespace laby
