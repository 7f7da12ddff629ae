#pragma once

// Exact LP oracle over the rationals by Fourier-Motzkin elimination.
// Exponential, so only for a handful of variables and constraints.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace testsupport {

using Rational = boost::multiprecision::cpp_rational;

enum class FmStatus { Optimal, Infeasible, Unbounded };

struct FmResult {
  FmStatus status = FmStatus::Infeasible;
  Rational value = 0;
};

// a . x <= b
struct FmRow {
  std::vector<Rational> a;
  Rational b;
};

struct FmProblem {
  std::size_t vars = 0;
  std::vector<FmRow> rows;  // all constraints as <= rows
  std::vector<Rational> objective;  // maximised
};

namespace detail {

// Scales a row so its first nonzero coefficient has magnitude 1, for deduplication.
inline FmRow normalise(FmRow r) {
  Rational scale = 0;
  for (const Rational& x : r.a)
    if (x != 0) {
      scale = abs(x);
      break;
    }
  if (scale == 0) return r;
  for (Rational& x : r.a) x /= scale;
  r.b /= scale;
  return r;
}

inline bool less(const FmRow& x, const FmRow& y) {
  if (x.a != y.a) return std::lexicographical_compare(x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
  return x.b < y.b;
}

// Eliminates variable j. Returns nullopt when a constant row is violated.
inline std::optional<std::vector<FmRow>> eliminate(const std::vector<FmRow>& rows, std::size_t j) {
  std::vector<FmRow> pos, neg, out;
  for (const FmRow& r : rows) {
    if (r.a[j] > 0)
      pos.push_back(r);
    else if (r.a[j] < 0)
      neg.push_back(r);
    else
      out.push_back(r);
  }
  for (const FmRow& p : pos)
    for (const FmRow& q : neg) {
      const Rational lp = -q.a[j], lq = p.a[j];
      FmRow r{std::vector<Rational>(p.a.size()), lp * p.b + lq * q.b};
      for (std::size_t i = 0; i < p.a.size(); ++i) r.a[i] = lp * p.a[i] + lq * q.a[i];
      r.a[j] = 0;
      out.push_back(r);
    }
  // Drop constant rows (checking them) and duplicates, keeping the tightest rhs.
  std::vector<FmRow> kept;
  for (FmRow& r : out) {
    if (std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x == 0; })) {
      if (r.b < 0) return std::nullopt;
      continue;
    }
    kept.push_back(normalise(std::move(r)));
  }
  std::sort(kept.begin(), kept.end(), less);
  std::vector<FmRow> unique;
  for (FmRow& r : kept) {
    if (!unique.empty() && unique.back().a == r.a) continue;  // sorted by b, first is tightest
    unique.push_back(std::move(r));
  }
  return unique;
}

}  // namespace detail

// Maximises objective . x by adding t - objective . x = 0 and eliminating x.
inline FmResult fm_solve(const FmProblem& p) {
  const std::size_t n = p.vars + 1;  // last variable is t
  std::vector<FmRow> rows;
  for (const FmRow& r : p.rows) {
    FmRow x{r.a, r.b};
    x.a.push_back(0);
    rows.push_back(std::move(x));
  }
  FmRow up{std::vector<Rational>(n), 0}, down{std::vector<Rational>(n), 0};
  for (std::size_t i = 0; i < p.vars; ++i) {
    up.a[i] = -p.objective[i];
    down.a[i] = p.objective[i];
  }
  up.a[p.vars] = 1;     //  t - c.x <= 0
  down.a[p.vars] = -1;  // -t + c.x <= 0
  rows.push_back(up);
  rows.push_back(down);

  for (std::size_t j = 0; j < p.vars; ++j) {
    auto next = detail::eliminate(rows, j);
    if (!next) return {FmStatus::Infeasible, 0};
    rows = std::move(*next);
  }
  std::optional<Rational> upper, lower;
  for (const FmRow& r : rows) {
    const Rational& a = r.a[p.vars];
    if (a > 0) {
      const Rational v = r.b / a;
      if (!upper || v < *upper) upper = v;
    } else if (a < 0) {
      const Rational v = r.b / a;
      if (!lower || v > *lower) lower = v;
    }
  }
  if (upper && lower && *lower > *upper) return {FmStatus::Infeasible, 0};
  if (!upper) return {FmStatus::Unbounded, 0};
  return {FmStatus::Optimal, *upper};
}

}  // namespace testsupport
