#include "spectrachrome/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "spectrachrome/errors.hpp"

namespace spectrachrome {

void LinearProgram::add(std::vector<double> coeffs, Relation relation, double rhs) {
  if (coeffs.size() != num_vars) {
    throw StructuralError("constraint has " + std::to_string(coeffs.size()) +
                          " coefficients, program has " + std::to_string(num_vars) + " variables");
  }
  constraints.push_back({std::move(coeffs), relation, rhs});
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "OPTIMAL";
    case LpStatus::Infeasible:
      return "INFEASIBLE";
    case LpStatus::Unbounded:
      return "UNBOUNDED";
  }
  return "?";
}

namespace {

double violation(const Constraint& c, const std::vector<double>& x) {
  double lhs = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) lhs += c.coeffs[i] * x[i];
  const double gap = lhs - c.rhs;
  switch (c.relation) {
    case Relation::LessEqual:
      return std::max(0.0, gap);
    case Relation::GreaterEqual:
      return std::max(0.0, -gap);
    case Relation::Equal:
      return std::abs(gap);
  }
  return 0.0;
}

}  // namespace

double max_violation(const LinearProgram& lp, const std::vector<double>& x) {
  double worst = 0.0;
  for (const Constraint& c : lp.constraints) worst = std::max(worst, violation(c, x));
  return worst;
}

std::string format_lp(const LinearProgram& lp) {
  std::ostringstream out;
  out << (lp.sense == Sense::Maximize ? "maximize" : "minimize");
  for (double c : lp.objective) out << ' ' << c;
  out << '\n';
  for (const Constraint& c : lp.constraints) {
    out << "  ";
    for (double a : c.coeffs) out << a << ' ';
    out << (c.relation == Relation::LessEqual ? "<=" : c.relation == Relation::Equal ? "=" : ">=")
        << ' ' << c.rhs << '\n';
  }
  return out.str();
}

namespace {

enum class ColumnKind { Structural, Slack, Artificial };

// Dense tableau in canonical form: each row expresses one basic variable.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), t_(rows, std::vector<double>(cols + 1, 0.0)), basis_(rows) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r][c]; }
  double& rhs(std::size_t r) { return t_[r][cols_]; }
  double rhs(std::size_t r) const { return t_[r][cols_]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }

  void pivot(std::size_t pr, std::size_t pc, std::vector<double>& reduced, double& objective) {
    std::vector<double>& prow = t_[pr];
    const double inv = 1.0 / prow[pc];
    for (double& x : prow) x *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (r == pr) continue;
      const double f = t_[r][pc];
      if (f == 0.0) continue;
      std::vector<double>& row = t_[r];
      for (std::size_t c = 0; c <= cols_; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
    const double f = reduced[pc];
    if (f != 0.0) {
      for (std::size_t c = 0; c < cols_; ++c) reduced[c] -= f * prow[c];
      objective -= f * prow[cols_];
      reduced[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<double>> t_;
  std::vector<std::size_t> basis_;
};

enum class PhaseResult { Optimal, Unbounded };

struct Phase {
  std::vector<double> reduced;  // reduced costs (minimisation)
  double objective = 0.0;       // -(current objective value)
  std::size_t unbounded_column = 0;
};

// Reduced costs for cost vector `cost` given the current basis.
Phase price(const Tableau& tab, const std::vector<double>& cost) {
  Phase ph;
  ph.reduced = cost;
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    const double cb = cost[tab.basic(r)];
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c < tab.cols(); ++c) ph.reduced[c] -= cb * tab.at(r, c);
    ph.objective -= cb * tab.rhs(r);
  }
  return ph;
}

PhaseResult run(Tableau& tab, Phase& ph, const std::vector<bool>& allowed, const LpOptions& opt,
                std::size_t& iterations) {
  while (true) {
    if (++iterations > opt.max_iterations) {
      throw NumericalError("simplex iteration cap reached");
    }
    // Bland: lowest-index improving column.
    std::size_t enter = tab.cols();
    for (std::size_t c = 0; c < tab.cols(); ++c) {
      if (allowed[c] && ph.reduced[c] < -opt.pivot_tol) {
        enter = c;
        break;
      }
    }
    if (enter == tab.cols()) return PhaseResult::Optimal;

    std::size_t leave = tab.rows();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      const double a = tab.at(r, enter);
      if (a <= opt.pivot_tol) continue;
      const double ratio = std::max(tab.rhs(r), 0.0) / a;
      const double slack = 1e-12 * std::max(1.0, ratio);
      if (leave == tab.rows() || ratio < best - slack) {
        best = ratio;
        leave = r;
      } else if (ratio <= best + slack && tab.basic(r) < tab.basic(leave)) {
        best = std::min(best, ratio);
        leave = r;
      }
    }
    if (leave == tab.rows()) {
      ph.unbounded_column = enter;
      return PhaseResult::Unbounded;
    }
    tab.pivot(leave, enter, ph.reduced, ph.objective);
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const LpOptions& opt) {
  const std::size_t nv = lp.num_vars;
  for (const Constraint& c : lp.constraints) {
    if (c.coeffs.size() != nv) throw StructuralError("constraint width does not match variable count");
    for (double a : c.coeffs)
      if (!std::isfinite(a)) throw DomainError("non-finite constraint coefficient");
    if (!std::isfinite(c.rhs)) throw DomainError("non-finite right-hand side");
  }

  // Row equilibration and sign normalisation (rhs >= 0).
  struct Row {
    std::vector<double> a;
    Relation rel;
    double b;
  };
  std::vector<Row> rows;
  for (const Constraint& c : lp.constraints) {
    double scale = 0.0;
    for (double a : c.coeffs) scale = std::max(scale, std::abs(a));
    if (scale == 0.0) {
      const bool ok = (c.relation == Relation::LessEqual && 0.0 <= c.rhs + opt.feasibility_tol) ||
                      (c.relation == Relation::GreaterEqual && 0.0 >= c.rhs - opt.feasibility_tol) ||
                      (c.relation == Relation::Equal && std::abs(c.rhs) <= opt.feasibility_tol);
      if (!ok) return {LpStatus::Infeasible, {}, 0.0, {}};
      continue;
    }
    Row row{c.coeffs, c.relation, c.rhs / scale};
    for (double& a : row.a) a /= scale;
    if (row.b < 0.0) {
      for (double& a : row.a) a = -a;
      row.b = -row.b;
      if (row.rel == Relation::LessEqual) {
        row.rel = Relation::GreaterEqual;
      } else if (row.rel == Relation::GreaterEqual) {
        row.rel = Relation::LessEqual;
      }
    }
    rows.push_back(std::move(row));
  }

  const std::size_t m = rows.size();
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const Row& r : rows) {
    if (r.rel != Relation::Equal) ++slack_count;
    if (r.rel != Relation::LessEqual) ++artificial_count;
  }
  const std::size_t structural = 2 * nv;
  const std::size_t ncols = structural + slack_count + artificial_count;
  std::vector<ColumnKind> kind(ncols, ColumnKind::Structural);
  std::vector<std::pair<std::size_t, double>> unit(ncols);  // row and sign of slack/artificial columns

  Tableau tab(m, ncols);
  std::size_t next_slack = structural;
  std::size_t next_art = structural + slack_count;
  for (std::size_t r = 0; r < m; ++r) {
    const Row& row = rows[r];
    for (std::size_t i = 0; i < nv; ++i) {
      tab.at(r, 2 * i) = row.a[i];
      tab.at(r, 2 * i + 1) = -row.a[i];
    }
    tab.rhs(r) = row.b;
    if (row.rel == Relation::LessEqual) {
      kind[next_slack] = ColumnKind::Slack;
      unit[next_slack] = {r, 1.0};
      tab.at(r, next_slack) = 1.0;
      tab.basic(r) = next_slack++;
    } else {
      if (row.rel == Relation::GreaterEqual) {
        kind[next_slack] = ColumnKind::Slack;
        unit[next_slack] = {r, -1.0};
        tab.at(r, next_slack++) = -1.0;
      }
      kind[next_art] = ColumnKind::Artificial;
      unit[next_art] = {r, 1.0};
      tab.at(r, next_art) = 1.0;
      tab.basic(r) = next_art++;
    }
  }

  std::size_t iterations = 0;
  std::vector<bool> allowed(ncols, true);

  // Phase 1: minimise the sum of artificials.
  if (artificial_count > 0) {
    std::vector<double> cost(ncols, 0.0);
    for (std::size_t c = 0; c < ncols; ++c)
      if (kind[c] == ColumnKind::Artificial) cost[c] = 1.0;
    Phase ph = price(tab, cost);
    run(tab, ph, allowed, opt, iterations);
    double rhs_scale = 1.0;
    for (const Row& r : rows) rhs_scale = std::max(rhs_scale, r.b);
    if (-ph.objective > opt.feasibility_tol * rhs_scale) return {LpStatus::Infeasible, {}, 0.0, {}};

    // Pivot remaining (zero-valued) artificials out of the basis; drop redundant rows.
    for (std::size_t r = tab.rows(); r-- > 0;) {
      if (kind[tab.basic(r)] != ColumnKind::Artificial) continue;
      std::size_t col = ncols;
      double best = opt.pivot_tol;
      for (std::size_t c = 0; c < ncols; ++c) {
        if (kind[c] != ColumnKind::Artificial && std::abs(tab.at(r, c)) > best) {
          best = std::abs(tab.at(r, c));
          col = c;
        }
      }
      if (col == ncols) {
        tab.drop_row(r);
      } else {
        tab.pivot(r, col, ph.reduced, ph.objective);
      }
    }
    for (std::size_t c = 0; c < ncols; ++c)
      if (kind[c] == ColumnKind::Artificial) allowed[c] = false;
  }

  // Phase 2.
  std::vector<double> cost(ncols, 0.0);
  const double sign = lp.sense == Sense::Maximize ? -1.0 : 1.0;
  for (std::size_t i = 0; i < nv; ++i) {
    cost[2 * i] = sign * lp.objective[i];
    cost[2 * i + 1] = -sign * lp.objective[i];
  }
  Phase ph = price(tab, cost);
  const PhaseResult result = run(tab, ph, allowed, opt, iterations);

  auto structural_point = [&](const std::vector<double>& full) {
    std::vector<double> x(nv);
    for (std::size_t i = 0; i < nv; ++i) x[i] = full[2 * i] - full[2 * i + 1];
    return x;
  };
  std::vector<double> full(ncols, 0.0);
  for (std::size_t r = 0; r < tab.rows(); ++r) full[tab.basic(r)] = tab.rhs(r);

  LpSolution sol;
  sol.x = structural_point(full);
  if (result == PhaseResult::Unbounded) {
    std::vector<double> dir(ncols, 0.0);
    dir[ph.unbounded_column] = 1.0;
    for (std::size_t r = 0; r < tab.rows(); ++r) dir[tab.basic(r)] = -tab.at(r, ph.unbounded_column);
    sol.status = LpStatus::Unbounded;
    sol.ray = structural_point(dir);
    return sol;
  }

  sol.status = LpStatus::Optimal;
  // Tableau updates accumulate round-off; re-solve the final basis against the original rows.
  {
    std::vector<std::size_t> basic;
    for (std::size_t r = 0; r < tab.rows(); ++r) basic.push_back(tab.basic(r));
    const std::size_t k = basic.size();
    std::vector<std::vector<double>> a(m, std::vector<double>(k + 1, 0.0));
    for (std::size_t r = 0; r < m; ++r) a[r][k] = rows[r].b;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t c = basic[j];
      if (kind[c] == ColumnKind::Structural) {
        for (std::size_t r = 0; r < m; ++r) a[r][j] = (c % 2 == 0 ? 1.0 : -1.0) * rows[r].a[c / 2];
      } else {
        a[unit[c].first][j] = unit[c].second;
      }
    }
    std::vector<std::size_t> pivot_row(k);
    std::vector<bool> used(m, false);
    bool ok = true;
    for (std::size_t j = 0; ok && j < k; ++j) {
      std::size_t best = m;
      for (std::size_t r = 0; r < m; ++r)
        if (!used[r] && (best == m || std::abs(a[r][j]) > std::abs(a[best][j]))) best = r;
      if (best == m || std::abs(a[best][j]) < 1e-12) {
        ok = false;
        break;
      }
      used[best] = true;
      pivot_row[j] = best;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == best || a[r][j] == 0.0) continue;
        const double f = a[r][j] / a[best][j];
        for (std::size_t c = j; c <= k; ++c) a[r][c] -= f * a[best][c];
      }
    }
    if (ok) {
      std::vector<double> refined(ncols, 0.0);
      for (std::size_t j = 0; j < k; ++j) refined[basic[j]] = a[pivot_row[j]][k] / a[pivot_row[j]][j];
      const std::vector<double> x = structural_point(refined);
      if (max_violation(lp, x) < max_violation(lp, sol.x)) sol.x = x;
    }
  }
  for (std::size_t i = 0; i < nv; ++i) sol.value += lp.objective[i] * sol.x[i];
  double worst_scaled = 0.0;
  for (const Constraint& c : lp.constraints) {
    double scale = 1.0;
    for (double a : c.coeffs) scale = std::max(scale, std::abs(a));
    worst_scaled = std::max(worst_scaled, violation(c, sol.x) / scale);
  }
  if (worst_scaled > opt.feasibility_tol) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "simplex solution violates a constraint by %.3g", worst_scaled);
    throw NumericalError(buf, worst_scaled);
  }
  return sol;
}

}  // namespace spectrachrome
