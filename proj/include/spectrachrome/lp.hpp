#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace spectrachrome {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };

struct Constraint {
  std::vector<double> coeffs;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

/// Linear program over free (sign-unrestricted) variables. Variable bounds are
/// ordinary constraints.
struct LinearProgram {
  explicit LinearProgram(std::size_t num_vars, Sense sense = Sense::Maximize)
      : num_vars(num_vars), sense(sense), objective(num_vars, 0.0) {}

  /// Throws StructuralError if `coeffs` does not have `num_vars` entries.
  void add(std::vector<double> coeffs, Relation relation, double rhs);

  std::size_t num_vars;
  Sense sense;
  std::vector<double> objective;
  std::vector<Constraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double value = 0.0;
  /// For Unbounded: a feasible direction along which the objective improves.
  std::vector<double> ray;
};

struct LpOptions {
  double feasibility_tol = 1e-7;
  double pivot_tol = 1e-9;
  std::size_t max_iterations = 200000;
};

/// Two-phase dense-tableau primal simplex with Bland's rule.
/// Throws NumericalError on iteration cap or if an optimal point violates a
/// constraint by more than the feasibility tolerance.
LpSolution solve_lp(const LinearProgram& lp, const LpOptions& options = {});

/// Largest absolute constraint violation of `x`.
double max_violation(const LinearProgram& lp, const std::vector<double>& x);

/// Plain-text rendering for debugging.
std::string format_lp(const LinearProgram& lp);

const char* to_string(LpStatus status);

}  // namespace spectrachrome
