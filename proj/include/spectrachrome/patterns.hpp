#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectrachrome/lp.hpp"
#include "spectrachrome/spectral.hpp"

namespace spectrachrome {

/// Intended sign of p(theta_j) for one distinct eigenvalue. `Free` leaves the
/// value unconstrained (a relaxed binary in the weighted-count programs).
enum class Sign : std::uint8_t { Neg, Zero, Pos, Free };

using SignPattern = std::vector<Sign>;

std::string to_string(const SignPattern& pattern);

/// Linear constraint on polynomial coefficients a_0..a_k.
using CoeffConstraint = Constraint;

/// Coefficient row (1, theta, ..., theta^k).
std::vector<double> power_row(double theta, int k);

/// Row of the trace functional: sum_j m_j theta_j^i.
std::vector<double> trace_row(const Spectrum& spectrum, int k);

/// Finds any polynomial of degree <= k with p(theta_j) >= eps on Pos entries,
/// <= -eps on Neg entries and = 0 on Zero entries, subject to `extra`.
/// Returns nullopt when the program is infeasible.
std::optional<Poly> feasible_poly_for_pattern(const Spectrum& spectrum, const SignPattern& pattern, int k,
                                              std::span<const CoeffConstraint> extra, double eps,
                                              const LpOptions& options = {});

struct BinaryOptimum {
  std::vector<std::uint8_t> assignment;
  std::size_t value = 0;
  std::size_t evaluated = 0;  // feasibility callbacks issued
};

inline constexpr std::size_t kMaxEnumeratedBinaries = 24;

/// Minimises weights . b over b in {0,1}^m subject to a feasibility oracle.
/// Vectors are visited by nondecreasing weight, lexicographically smallest
/// first within a weight, so the first feasible vector is optimal.
/// Only weights strictly below `below` are explored when it is set.
/// Throws ResourceError when m exceeds `cap`.
std::optional<BinaryOptimum> milp_min_weighted_binaries(
    std::span<const std::size_t> weights,
    const std::function<bool(std::span<const std::uint8_t>)>& feasible,
    std::optional<std::size_t> below = std::nullopt, std::size_t cap = kMaxEnumeratedBinaries);

/// Lower bound on the number of real roots (with multiplicity) of any nonzero
/// polynomial realising `pattern` over strictly decreasing abscissae. Free
/// entries are skipped.
int min_roots_for_pattern(const SignPattern& pattern);

}  // namespace spectrachrome
