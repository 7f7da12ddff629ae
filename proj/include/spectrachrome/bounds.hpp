#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spectrachrome/graph.hpp"
#include "spectrachrome/lp.hpp"
#include "spectrachrome/patterns.hpp"
#include "spectrachrome/spectral.hpp"

namespace spectrachrome {

enum class BoundMethod { Inertial1, Inertial2, Ratio, InertiaK1 };

inline constexpr BoundMethod kAllMethods[] = {BoundMethod::Inertial1, BoundMethod::Inertial2,
                                              BoundMethod::Ratio, BoundMethod::InertiaK1};

/// CLI/JSON names: "inertial1", "inertial2", "ratio", "inertia1q".
const char* to_string(BoundMethod method);
std::optional<BoundMethod> parse_method(std::string_view name);

/// A lower bound on the quantum distance-k chromatic number, with the
/// polynomial that realises it.
struct BoundReport {
  BoundMethod method = BoundMethod::Inertial1;
  int k = 1;
  double raw_value = 0.0;
  int integer_bound = 0;
  Poly witness;
  bool applicable = false;
  std::vector<std::string> notes;
  /// Sign pattern over the distinct eigenvalues, for the inertial methods.
  SignPattern pattern;
  /// Vertices of the component the witness lives on; empty means the whole graph.
  std::vector<Vertex> component;
};

struct BoundOptions {
  SpectralOptions spectral;
  LpOptions lp;
  /// Margin for strict signs in pattern programs (scale-free, so 1 is general).
  double pattern_eps = 1.0;
  /// Margin for p(theta_0) > p(theta_j) under the unit normalisation of the ratio LP.
  double ratio_strict_eps = 1e-4;
  std::size_t enumeration_cap = kMaxEnumeratedBinaries;
  std::size_t max_patterns = std::size_t{1} << 22;
  /// Keep sum_j m_j p(theta_j) = 0 in the second inertial program. Dropping it
  /// is exposed for experiments only; the resulting value is not a valid bound.
  bool inertial2_trace_condition = true;
};

/// ceil(raw - 1e-7): guards against float noise pushing an integer bound up by one.
int integer_bound_from(double raw);

/// n / min(|{i : p(l_i) >= w(p)}|, |{i : p(l_i) <= W(p)}|), optimised over p of degree <= k.
BoundReport inertial1_bound(const Graph& g, int k, const BoundOptions& options = {});

/// 1 + |{p < 0}| / |{p > 0}| under the trace condition, for k-partially walk-regular graphs (or k = 1).
BoundReport inertial2_bound(const Graph& g, int k, const BoundOptions& options = {});

/// (p(l_1) - l(p)) / (W(p) - l(p)), maximised over p of degree <= k by one LP per (vertex, eigenvalue).
BoundReport ratio_bound(const Graph& g, int k, const BoundOptions& options = {});

/// 1 + max(n+/n-, n-/n+).
BoundReport inertia_k1_bound(const Graph& g, const BoundOptions& options = {});

/// Classical 1 - lambda_1 / lambda_n; 1 for an edgeless graph.
double hoffman_bound(const Spectrum& s);

BoundReport compute_bound(const Graph& g, int k, BoundMethod method, const BoundOptions& options = {});

/// Recomputes the method's formula from the witness polynomial alone.
/// Returns nullopt when the witness does not satisfy the method's hypotheses.
std::optional<double> evaluate_witness(const BoundReport& report, const Graph& g,
                                       const BoundOptions& options = {});

struct Certificate {
  int chi_k_exact = 0;
  bool exact_timed_out = false;
  BoundReport best_bound;
  std::vector<BoundReport> bounds;
  bool certified = false;
  std::optional<int> quantum_value;
  std::vector<std::string> notes;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct CertifyOptions {
  BoundOptions bounds;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::vector<BoundMethod> methods{std::begin(kAllMethods), std::end(kAllMethods)};
};

/// Sandwich bound <= chi_kq <= chi_k; certified when the best integer bound meets chi_k.
Certificate certify(const Graph& g, int k, const CertifyOptions& options = {});

}  // namespace spectrachrome
