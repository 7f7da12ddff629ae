#include "spectrachrome/patterns.hpp"


#include "spectrachrome/errors.hpp"

namespace spectrachrome {

std::string to_string(const SignPattern& pattern) {
  std::string out;
  for (Sign s : pattern) {
    switch (s) {
      case Sign::Neg:
        out += '-';
        break;
      case Sign::Zero:
        out += '0';
        break;
      case Sign::Pos:
        out += '+';
        break;
      case Sign::Free:
        out += '*';
        break;
    }
  }
  return out;
}

std::vector<double> power_row(double theta, int k) {
  std::vector<double> row(static_cast<std::size_t>(k) + 1);
  double p = 1.0;
  for (double& x : row) {
    x = p;
    p *= theta;
  }
  return row;
}

std::vector<double> trace_row(const Spectrum& spectrum, int k) {
  std::vector<double> row(static_cast<std::size_t>(k) + 1, 0.0);
  for (std::size_t j = 0; j < spectrum.distinct.size(); ++j) {
    const std::vector<double> pw = power_row(spectrum.distinct[j], k);
    for (std::size_t i = 0; i < row.size(); ++i) row[i] += static_cast<double>(spectrum.multiplicities[j]) * pw[i];
  }
  return row;
}

std::optional<Poly> feasible_poly_for_pattern(const Spectrum& spectrum, const SignPattern& pattern, int k,
                                              std::span<const CoeffConstraint> extra, double eps,
                                              const LpOptions& options) {
  if (pattern.size() != spectrum.distinct.size()) {
    throw StructuralError("sign pattern length " + std::to_string(pattern.size()) + " does not match " +
                          std::to_string(spectrum.distinct.size()) + " distinct eigenvalues");
  }
  if (!(eps > 0.0)) throw DomainError("pattern margin eps must be positive");
  if (k < 0) throw DomainError("polynomial degree bound must be nonnegative");

  LinearProgram lp(static_cast<std::size_t>(k) + 1);
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    std::vector<double> row = power_row(spectrum.distinct[j], k);
    switch (pattern[j]) {
      case Sign::Pos:
        lp.add(std::move(row), Relation::GreaterEqual, eps);
        break;
      case Sign::Neg:
        lp.add(std::move(row), Relation::LessEqual, -eps);
        break;
      case Sign::Zero:
        lp.add(std::move(row), Relation::Equal, 0.0);
        break;
      case Sign::Free:
        break;
    }
  }
  for (const CoeffConstraint& c : extra) lp.add(c.coeffs, c.relation, c.rhs);

  const LpSolution sol = solve_lp(lp, options);
  if (sol.status == LpStatus::Infeasible) return std::nullopt;
  return Poly(sol.x);
}

namespace {

struct WeightEnumerator {
  std::span<const std::size_t> weights;
  const std::function<bool(std::span<const std::uint8_t>)>& feasible;
  std::vector<std::size_t> suffix;  // suffix[i] = sum of weights[i..]
  std::vector<std::uint8_t> bits;
  std::size_t evaluated = 0;

  // Visits assignments of bits[i..] summing to `remaining`, 0 before 1 at each position.
  bool visit(std::size_t i, std::size_t remaining) {
    if (i == weights.size()) {
      if (remaining != 0) return false;
      ++evaluated;
      return feasible(bits);
    }
    if (remaining > suffix[i]) return false;
    bits[i] = 0;
    if (remaining <= suffix[i + 1] && visit(i + 1, remaining)) return true;
    if (weights[i] <= remaining) {
      bits[i] = 1;
      if (visit(i + 1, remaining - weights[i])) return true;
    }
    bits[i] = 0;
    return false;
  }
};

}  // namespace

std::optional<BinaryOptimum> milp_min_weighted_binaries(
    std::span<const std::size_t> weights, const std::function<bool(std::span<const std::uint8_t>)>& feasible,
    std::optional<std::size_t> below, std::size_t cap) {
  if (weights.size() > cap) {
    throw ResourceError("weighted binary program has " + std::to_string(weights.size()) +
                        " binaries, enumeration cap is " + std::to_string(cap) +
                        "; a branch-and-bound MILP solver is needed for this instance");
  }
  WeightEnumerator e{weights, feasible, std::vector<std::size_t>(weights.size() + 1, 0),
                     std::vector<std::uint8_t>(weights.size(), 0)};
  for (std::size_t i = weights.size(); i-- > 0;) e.suffix[i] = e.suffix[i + 1] + weights[i];
  const std::size_t total = e.suffix[0];
  // Zero weights make several vectors share a level; the enumerator still visits each once.
  for (std::size_t target = 0; target <= total; ++target) {
    if (below && target >= *below) break;
    if (e.visit(0, target)) return BinaryOptimum{e.bits, target, e.evaluated};
  }
  return std::nullopt;
}

int min_roots_for_pattern(const SignPattern& pattern) {
  int roots = 0;
  int zeros = 0;
  Sign last = Sign::Free;
  for (Sign s : pattern) {
    if (s == Sign::Free) continue;
    if (s == Sign::Zero) {
      ++zeros;
      continue;
    }
    if (last == Sign::Free) {
      roots += zeros;
    } else {
      const bool change = s != last;
      const bool odd = zeros % 2 == 1;
      roots += zeros + (odd != change ? 1 : 0);
    }
    last = s;
    zeros = 0;
  }
  return roots + zeros;
}

}  // namespace spectrachrome
