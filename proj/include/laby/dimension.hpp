#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "laby/generators.hpp"
#include "laby/paths.hpp"

namespace laby {

namespace detail {

// Snake family in log space; long doubles keep the tiny bracketing
// differences near delta -> 2 meaningful.
inline long double snake_count_log(std::uint64_t k) {
  const long double kk = static_cast<long double>(k);
  return std::log(4.0L * kk * kk + 4.0L * kk + 7.0L);
}
inline long double snake_width_log(std::uint64_t k) {
  return std::log(4.0L * static_cast<long double>(k) + 7.0L);
}

// Lower pattern of bracket index k: the width-3 plain cross for k = 0
// (dimension quotient exactly 1), snake A_k for k >= 1.
inline long double bracket_count_log(std::uint64_t k) {
  return k == 0 ? std::log(3.0L) : snake_count_log(k);
}
inline long double bracket_width_log(std::uint64_t k) {
  return k == 0 ? std::log(3.0L) : snake_width_log(k);
}

}  // namespace detail

/// k-th dimension quotient d_k: 1 for k = 0, else
/// log(4k^2+4k+7) / log(4k+7). Strictly increasing, bounded by 2.
inline double dim_quotient(std::int64_t k) {
  if (k < 0) throw BadParameter("dim_quotient requires k >= 0");
  if (k == 0) return 1.0;
  const std::uint64_t ku = static_cast<std::uint64_t>(k);
  return static_cast<double>(detail::snake_count_log(ku) / detail::snake_width_log(ku));
}

/// Finite-level dimension estimate log(prod counts)/log(prod widths),
/// evaluated as a quotient of log sums (no overflow at any n).
inline double level_estimate(std::span<const std::int64_t> widths,
                             std::span<const std::int64_t> counts) {
  if (widths.size() != counts.size())
    throw BadParameter("widths and counts must have equal length");
  if (widths.empty()) throw BadParameter("level_estimate needs at least one level");
  long double num = 0.0L, den = 0.0L;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (widths[i] < 3) throw BadParameter("widths must be >= 3");
    if (counts[i] < 1) throw BadParameter("counts must be >= 1");
    num += std::log(static_cast<long double>(counts[i]));
    den += std::log(static_cast<long double>(widths[i]));
  }
  return static_cast<double>(num / den);
}

struct Lemma3Term {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  double r = 0.0;    // (p*a + q*c) / (p*b + q*d)
  double eps = 0.0;  // p/q - t, nonnegative and shrinking
};

/// Integer pairs (p_j, q_j) with r_j = (p_j a + q_j c)/(p_j b + q_j d)
/// nondecreasing and converging to alpha. Denominators are powers of two;
/// p_j = ceil(t q_j) approaches t = (c - alpha d)/(alpha b - a) from above,
/// which is what makes the r_j climb (r is a decreasing function of p/q).
inline std::vector<Lemma3Term> lemma3_schedule(double a, double b, double c, double d,
                                               double alpha, int n_terms) {
  if (!(a > 0 && b > 0 && c > 0 && d > 0))
    throw BadParameter("lemma3_schedule requires positive a, b, c, d");
  if (n_terms < 1) throw BadParameter("lemma3_schedule requires n_terms >= 1");
  const long double la = a, lb = b, lc = c, ld = d, al = alpha;
  if (!(la / lb < al && al < lc / ld))
    throw PreconditionViolated("alpha must lie strictly between a/b and c/d");
  const long double t = (lc - al * ld) / (al * lb - la);
  std::vector<Lemma3Term> out;
  out.reserve(static_cast<std::size_t>(n_terms));
  for (int j = 1; j <= n_terms; ++j) {
    if (j > 62) throw BadParameter("schedule term " + std::to_string(j) + " overflows 64-bit integers");
    const std::uint64_t q = std::uint64_t{1} << j;
    const long double pq = std::ceil(t * static_cast<long double>(q));
    if (pq >= 9.2e18L)
      throw BadParameter("schedule term " + std::to_string(j) + " overflows 64-bit integers");
    const std::uint64_t p = static_cast<std::uint64_t>(pq) > 0 ? static_cast<std::uint64_t>(pq) : 1;
    const long double r = (p * la + q * lc) / (p * lb + q * ld);
    const long double eps = static_cast<long double>(p) / q - t;
    out.push_back({p, q, static_cast<double>(r), static_cast<double>(eps)});
  }
  return out;
}

enum class ScheduleKind : std::uint8_t {
  PlainCross,      // delta = 1: constant width-3 cross
  PureSnake,       // delta = 2: A_1, A_2, A_3, ...
  ConstantSnake,   // delta = d_k exactly: constant A_k
  Bracketed,       // d_k < delta < d_{k+1}: Lemma-3 mix of A_k and A_{k+1}
};

/// One schedule line `k p q`: apply the bracket-k lower pattern p times, then
/// the upper pattern (index k+1) q times. Index 0 is the width-3 plain cross,
/// index j >= 1 the snake pattern A_j. q may be 0 in degenerate schedules.
struct ScheduleTerm {
  std::uint64_t k = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
};

struct TraceRow {
  double r = 0.0;
  double estimate = 0.0;
  double eps = 0.0;
};

struct Schedule {
  double delta = 0.0;
  ScheduleKind kind = ScheduleKind::Bracketed;
  std::uint64_t bracket_k = 0;  // interval index with d_k <= delta <= d_{k+1}
  std::vector<ScheduleTerm> terms;
  std::vector<TraceRow> trace;
  bool converged = false;
  std::string diagnostic;
};

/// Cumulative log-space estimate over a term list (any prefix of a schedule).
inline double schedule_estimate(std::span<const ScheduleTerm> terms) {
  if (terms.empty()) throw BadParameter("schedule has no terms");
  long double num = 0.0L, den = 0.0L;
  for (const ScheduleTerm& s : terms) {
    num += s.p * detail::bracket_count_log(s.k) + s.q * detail::bracket_count_log(s.k + 1);
    den += s.p * detail::bracket_width_log(s.k) + s.q * detail::bracket_width_log(s.k + 1);
  }
  return static_cast<double>(num / den);
}

/// Largest k with d_k <= delta, found by exponential plus binary search on
/// the closed form. Grids are never touched.
inline std::uint64_t bracket_index(double delta) {
  if (!(delta >= 1.0 && delta < 2.0)) throw BadParameter("bracket_index requires 1 <= delta < 2");
  if (delta < dim_quotient(1)) return 0;
  std::uint64_t lo = 1, hi = 2;
  while (dim_quotient(static_cast<std::int64_t>(hi)) <= delta) {
    if (hi > (std::uint64_t{1} << 62))
      throw BadParameter("delta is too close to 2: bracket index exceeds 64-bit range");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (dim_quotient(static_cast<std::int64_t>(mid)) <= delta)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// Pattern schedule whose limit fractal's exit-to-exit arcs have box-counting
/// dimension delta. The reported estimate over the emitted prefix is within
/// tol of delta unless the schedule is the pure snake sequence (delta = 2,
/// where the estimate climbs to 2 only in the limit) or max_terms runs out;
/// both cases carry a diagnostic instead of silent success.
inline Schedule target_dimension(double delta, double tol, int max_terms) {
  if (!(delta >= 1.0 && delta <= 2.0)) throw BadParameter("delta must lie in [1, 2]");
  if (!(tol > 0)) throw BadParameter("tol must be positive");
  if (max_terms < 1) throw BadParameter("max_terms must be >= 1");

  Schedule sch;
  sch.delta = delta;

  if (delta == 2.0) {
    sch.kind = ScheduleKind::PureSnake;
    for (int j = 1; j <= max_terms; ++j) {
      sch.terms.push_back({static_cast<std::uint64_t>(j), 1, 0});
      sch.trace.push_back({dim_quotient(j), schedule_estimate(sch.terms), 0.0});
      if (std::abs(sch.trace.back().estimate - delta) <= tol) {
        sch.converged = true;
        return sch;
      }
    }
    sch.diagnostic = "pure snake sequence: estimate " +
                     std::to_string(sch.trace.back().estimate) + " after " +
                     std::to_string(max_terms) + " terms; the limit 2 is approached from below";
    return sch;
  }

  const std::uint64_t k = bracket_index(delta);
  sch.bracket_k = k;
  const double dk = k == 0 ? 1.0 : dim_quotient(static_cast<std::int64_t>(k));
  const double dk1 = dim_quotient(static_cast<std::int64_t>(k + 1));

  auto constant_schedule = [&](std::uint64_t kc, ScheduleKind kind) {
    sch.kind = kind;
    sch.bracket_k = kc;
    const double r = kc == 0 ? 1.0 : dim_quotient(static_cast<std::int64_t>(kc));
    for (int j = 1; j <= max_terms; ++j) {
      sch.terms.push_back({kc, 1, 0});
      sch.trace.push_back({r, schedule_estimate(sch.terms), 0.0});
      if (std::abs(sch.trace.back().estimate - delta) <= tol) {
        sch.converged = true;
        return;
      }
    }
    sch.diagnostic = "constant schedule estimate not within tol of delta";
  };

  // Exact hits are bit-exact double comparisons: passing dim_quotient(k)
  // itself selects the constant self-similar schedule.
  if (delta == 1.0) {
    constant_schedule(0, ScheduleKind::PlainCross);
    return sch;
  }
  if (delta == dk && k >= 1) {
    constant_schedule(k, ScheduleKind::ConstantSnake);
    return sch;
  }
  if (delta == dk1) {
    constant_schedule(k + 1, ScheduleKind::ConstantSnake);
    return sch;
  }

  sch.kind = ScheduleKind::Bracketed;
  const long double a = detail::bracket_count_log(k);
  const long double b = detail::bracket_width_log(k);
  const long double c = detail::bracket_count_log(k + 1);
  const long double d = detail::bracket_width_log(k + 1);
  const long double t = (c - delta * d) / (delta * b - a);
  long double num = 0.0L, den = 0.0L;
  for (int j = 1; j <= max_terms; ++j) {
    if (j > 62) {
      sch.diagnostic = "schedule term " + std::to_string(j) + " would overflow 64-bit integers";
      return sch;
    }
    const std::uint64_t q = std::uint64_t{1} << j;
    const long double pq = std::ceil(t * static_cast<long double>(q));
    if (pq >= 9.2e18L) {
      sch.diagnostic = "schedule term " + std::to_string(j) + " would overflow 64-bit integers";
      return sch;
    }
    const std::uint64_t p = static_cast<std::uint64_t>(pq) > 0 ? static_cast<std::uint64_t>(pq) : 1;
    sch.terms.push_back({k, p, q});
    const long double r = (p * a + q * c) / (p * b + q * d);
    num += p * a + q * c;
    den += p * b + q * d;
    sch.trace.push_back({static_cast<double>(r), static_cast<double>(num / den),
                         static_cast<double>(static_cast<long double>(p) / q - t)});
    if (std::abs(sch.trace.back().estimate - delta) <= tol) {
      sch.converged = true;
      return sch;
    }
  }
  sch.diagnostic = "estimate " + std::to_string(sch.trace.back().estimate) + " not within " +
                   std::to_string(tol) + " of " + std::to_string(delta) + " after " +
                   std::to_string(max_terms) + " terms";
  return sch;
}

/// Materialized composed pattern of one schedule term: p copies of the
/// bracket-k lower pattern, then q copies of the upper.
inline Pattern star_pattern(std::uint64_t k, std::uint64_t p, std::uint64_t q,
                            std::int64_t max_width = kDefaultMaxWidth) {
  if (p + q < 1) throw BadParameter("star_pattern requires p + q >= 1");
  auto base = [](std::uint64_t idx) {
    return idx == 0 ? plain_cross(1) : snake_cross(static_cast<int>(idx));
  };
  const std::int64_t upper_width = 4 * static_cast<std::int64_t>(k + 1) + 7;
  if (k > std::uint64_t{1} << 32 || upper_width > max_width)
    throw TooLarge(upper_width, max_width);
  std::vector<Pattern> seq;
  seq.reserve(static_cast<std::size_t>(p + q));
  for (std::uint64_t i = 0; i < p; ++i) seq.push_back(base(k));
  for (std::uint64_t i = 0; i < q; ++i) seq.push_back(base(k + 1));
  return compose_sequence(seq, max_width).pattern;
}

// ---------------------------------------------------------------------------
// Schedule files: one `k p q` line per term. Trace tables: `term r estimate`.

inline std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string write_schedule(const Schedule& sch) {
  std::string out;
  for (const ScheduleTerm& s : sch.terms)
    out += std::to_string(s.k) + " " + std::to_string(s.p) + " " + std::to_string(s.q) + "\n";
  return out;
}

inline std::string write_trace(const Schedule& sch) {
  std::string out = "term r estimate\n";
  for (std::size_t i = 0; i < sch.trace.size(); ++i)
    out += std::to_string(i + 1) + " " + format_g12(sch.trace[i].r) + " " +
           format_g12(sch.trace[i].estimate) + "\n";
  return out;
}

inline std::vector<ScheduleTerm> read_schedule(std::string_view text) {
  std::vector<ScheduleTerm> terms;
  int line = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view ln = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (ln.empty()) continue;
    unsigned long long k = 0, p = 0, q = 0;
    int consumed = 0;
    if (std::sscanf(std::string(ln).c_str(), "%llu %llu %llu %n", &k, &p, &q, &consumed) != 3 ||
        static_cast<std::size_t>(consumed) != ln.size())
      throw ParseError(line, consumed + 1, "expected 'k p q'");
    if (p + q < 1) throw ParseError(line, 1, "term needs p + q >= 1");
    terms.push_back({k, p, q});
  }
  if (terms.empty()) throw ParseError(1, 1, "schedule file has no terms");
  return terms;
}

}  // namespace laby
