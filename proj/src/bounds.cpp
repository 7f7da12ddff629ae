#include "spectrachrome/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "spectrachrome/errors.hpp"
#include "spectrachrome/exact.hpp"

namespace spectrachrome {

const char* to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::Inertial1:
      return "inertial1";
    case BoundMethod::Inertial2:
      return "inertial2";
    case BoundMethod::Ratio:
      return "ratio";
    case BoundMethod::InertiaK1:
      return "inertia1q";
  }
  return "?";
}

std::optional<BoundMethod> parse_method(std::string_view name) {
  for (BoundMethod m : kAllMethods)
    if (name == to_string(m)) return m;
  return std::nullopt;
}

int integer_bound_from(double raw) { return static_cast<int>(std::ceil(raw - 1e-7)); }

namespace {

// Spectrum plus closed-walk counts, and vertices grouped by identical
// walk-count signatures (vertices sharing one produce identical programs).
struct Prepared {
  Spectrum spectrum;
  Matrix walk_diag;
  std::vector<std::vector<double>> signatures;
};

Prepared prepare(const Graph& g, int k, const BoundOptions& options) {
  Prepared p{eigendecompose(g, options.spectral), walk_diagonals(g, k), {}};
  std::map<std::vector<double>, int> seen;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto row = p.walk_diag.row(u);
    std::vector<double> sig(row.begin(), row.end());
    if (seen.emplace(sig, 0).second) p.signatures.push_back(std::move(sig));
  }
  return p;
}

std::vector<double> difference(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

BoundReport inapplicable(BoundMethod method, int k, std::string why) {
  BoundReport r;
  r.method = method;
  r.k = k;
  r.applicable = false;
  r.notes.push_back(std::move(why));
  return r;
}

double sign_tolerance(const std::vector<double>& values) {
  double scale = 1.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  return 1e-6 * scale;
}

void check_degree(int k) {
  if (k < 1) throw DomainError("distance parameter k must be >= 1, got " + std::to_string(k));
}

bool principal_degenerate(const Spectrum& s) { return s.multiplicities.front() > 1; }

// Runs `method` on every connected component and keeps the largest value.
template <class Fn>
BoundReport per_component(const Graph& g, int k, BoundMethod method, Fn&& run) {
  BoundReport best = inapplicable(method, k, "no component admits the bound");
  bool found = false;
  for (const std::vector<Vertex>& comp : connected_components(g)) {
    BoundReport r = run(g.induced(comp));
    if (!r.applicable) continue;
    r.component = comp;
    if (!found || r.raw_value > best.raw_value + 1e-12) {
      best = std::move(r);
      found = true;
    }
  }
  best.notes.push_back("principal eigenvalue is degenerate; bound taken as the maximum over " +
                       std::to_string(connected_components(g).size()) + " connected components");
  return best;
}

// First inertial bound ------------------------------------------------------------

struct Inertial1Search {
  const Prepared& prep;
  int k;
  const BoundOptions& options;
  bool walk_regular;

  // Best denominator for one orientation. orientation = +1 bounds
  // |{p >= w(p)}| with w(p) = 0; -1 bounds |{p <= W(p)}| with W(p) = 0.
  std::optional<std::size_t> best_count(int orientation, std::size_t incumbent, Poly& witness,
                                        SignPattern& pattern) const {
    const Spectrum& s = prep.spectrum;
    const Sign strict = orientation > 0 ? Sign::Neg : Sign::Pos;
    const Relation toward = orientation > 0 ? Relation::GreaterEqual : Relation::LessEqual;

    std::vector<std::vector<CoeffConstraint>> normalisations;
    if (walk_regular) {
      normalisations.push_back({{trace_row(s, k), Relation::Equal, 0.0}});
    } else {
      for (std::size_t u = 0; u < prep.signatures.size(); ++u) {
        std::vector<CoeffConstraint> cs{{prep.signatures[u], Relation::Equal, 0.0}};
        for (std::size_t v = 0; v < prep.signatures.size(); ++v)
          if (v != u) cs.push_back({prep.signatures[v], toward, 0.0});
        normalisations.push_back(std::move(cs));
      }
    }

    std::optional<std::size_t> best;
    for (const auto& extra : normalisations) {
      const std::size_t bound = best ? *best : incumbent;
      std::optional<Poly> found;
      SignPattern found_pattern;
      auto feasible = [&](std::span<const std::uint8_t> b) {
        SignPattern pat(b.size());
        for (std::size_t j = 0; j < b.size(); ++j) pat[j] = b[j] ? Sign::Free : strict;
        auto poly = feasible_poly_for_pattern(s, pat, k, extra, options.pattern_eps, options.lp);
        if (!poly) return false;
        found = std::move(poly);
        found_pattern = std::move(pat);
        return true;
      };
      const auto opt = milp_min_weighted_binaries(s.multiplicities, feasible, bound, options.enumeration_cap);
      if (opt && (!best || opt->value < *best)) {
        best = opt->value;
        witness = *found;
        pattern = found_pattern;
      }
    }
    return best;
  }
};

}  // namespace

BoundReport inertial1_bound(const Graph& g, int k, const BoundOptions& options) {
  check_degree(k);
  const Prepared prep = prepare(g, k, options);
  const bool wr = is_k_partially_walk_regular(g, k);
  Inertial1Search search{prep, k, options, wr};

  const std::size_t n = g.order();
  BoundReport r;
  r.method = BoundMethod::Inertial1;
  r.k = k;
  r.applicable = true;

  // The all-Free assignment is always feasible (p = 0), so n is an incumbent.
  std::size_t best = n + 1;
  for (int orientation : {+1, -1}) {
    Poly witness;
    SignPattern pattern;
    const auto count = search.best_count(orientation, best, witness, pattern);
    if (count && *count < best) {
      best = *count;
      r.witness = witness;
      r.pattern = pattern;
    }
  }
  if (best == 0 || best > n) {
    throw NumericalError("first inertial program returned an impossible denominator");
  }
  r.raw_value = static_cast<double>(n) / static_cast<double>(best);
  r.integer_bound = integer_bound_from(r.raw_value);
  r.notes.push_back(wr ? "walk-regular program (trace normalisation)"
                       : "per-vertex programs over " + std::to_string(prep.signatures.size()) +
                             " walk-count classes");
  r.notes.push_back("optimal denominator " + std::to_string(best) + " (upper bound on alpha_k)");
  return r;
}

// Second inertial bound -----------------------------------------------------------

namespace {

struct PatternCandidate {
  SignPattern pattern;
  std::size_t positive = 0;
  std::size_t negative = 0;
};

// Sign patterns over {Neg, Zero, Pos} realisable by some nonzero polynomial of
// degree <= k (root-count argument) with at least one Pos entry.
std::vector<PatternCandidate> enumerate_patterns(const Spectrum& s, int k, std::size_t cap) {
  std::vector<PatternCandidate> out;
  SignPattern current(s.distinct.size(), Sign::Zero);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (min_roots_for_pattern(SignPattern(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(j))) > k)
      return;
    if (j == current.size()) {
      PatternCandidate c{current, 0, 0};
      for (std::size_t i = 0; i < current.size(); ++i) {
        if (current[i] == Sign::Pos) c.positive += s.multiplicities[i];
        if (current[i] == Sign::Neg) c.negative += s.multiplicities[i];
      }
      if (c.positive == 0) return;
      if (out.size() >= cap) {
        throw ResourceError("second inertial pattern enumeration exceeds " + std::to_string(cap) + " candidates");
      }
      out.push_back(std::move(c));
      return;
    }
    for (Sign sign : {Sign::Neg, Sign::Zero, Sign::Pos}) {
      current[j] = sign;
      self(self, j + 1);
    }
    current[j] = Sign::Zero;
  };
  rec(rec, 0);
  return out;
}

BoundReport inertial2_connected(const Graph& g, int k, const BoundOptions& options) {
  const Spectrum s = eigendecompose(g, options.spectral);
  std::vector<PatternCandidate> candidates = enumerate_patterns(s, k, options.max_patterns);
  // Descending value 1 + neg/pos (compared exactly by cross-multiplication), then pattern order.
  std::stable_sort(candidates.begin(), candidates.end(), [](const PatternCandidate& a, const PatternCandidate& b) {
    const auto lhs = a.negative * b.positive;
    const auto rhs = b.negative * a.positive;
    if (lhs != rhs) return lhs > rhs;
    return a.pattern < b.pattern;
  });

  std::vector<CoeffConstraint> extra;
  if (options.inertial2_trace_condition) extra.push_back({trace_row(s, k), Relation::Equal, 0.0});

  BoundReport r;
  r.method = BoundMethod::Inertial2;
  r.k = k;
  for (const PatternCandidate& c : candidates) {
    auto poly = feasible_poly_for_pattern(s, c.pattern, k, extra, options.pattern_eps, options.lp);
    if (!poly) continue;
    r.applicable = true;
    r.raw_value = 1.0 + static_cast<double>(c.negative) / static_cast<double>(c.positive);
    r.integer_bound = integer_bound_from(r.raw_value);
    r.witness = std::move(*poly);
    r.pattern = c.pattern;
    r.notes.push_back("sign pattern " + to_string(c.pattern) + " with " + std::to_string(c.positive) +
                      " positive and " + std::to_string(c.negative) + " negative eigenvalues");
    if (!options.inertial2_trace_condition) {
      r.notes.push_back("trace condition dropped: value is not a certified bound");
    }
    return r;
  }
  return inapplicable(BoundMethod::Inertial2, k, "no sign pattern is feasible");
}

}  // namespace

BoundReport inertial2_bound(const Graph& g, int k, const BoundOptions& options) {
  check_degree(k);
  if (k > 1 && !is_k_partially_walk_regular(g, k)) {
    return inapplicable(BoundMethod::Inertial2, k,
                        "graph is not " + std::to_string(k) + "-partially walk-regular");
  }
  const Spectrum s = eigendecompose(g, options.spectral);
  if (principal_degenerate(s) && !is_connected(g)) {
    return per_component(g, k, BoundMethod::Inertial2,
                         [&](const Graph& comp) { return inertial2_connected(comp, k, options); });
  }
  return inertial2_connected(g, k, options);
}

// Ratio bound ---------------------------------------------------------------------

namespace {

BoundReport ratio_connected(const Graph& g, int k, const BoundOptions& options) {
  const Prepared prep = prepare(g, k, options);
  const Spectrum& s = prep.spectrum;
  const std::size_t d = s.distinct.size() - 1;
  if (d == 0) return inapplicable(BoundMethod::Ratio, k, "only one distinct eigenvalue");
  if (principal_degenerate(s)) {
    return inapplicable(BoundMethod::Ratio, k, "principal eigenvalue is degenerate");
  }

  std::vector<std::vector<double>> rows;
  for (double theta : s.distinct) rows.push_back(power_row(theta, k));

  std::optional<double> best;
  Poly best_poly;
  std::size_t solved = 0;
  for (std::size_t u = 0; u < prep.signatures.size(); ++u) {
    const std::vector<double>& du = prep.signatures[u];
    for (std::size_t l = 1; l <= d; ++l) {
      LinearProgram lp(static_cast<std::size_t>(k) + 1, Sense::Maximize);
      lp.objective = difference(rows[0], rows[l]);
      for (std::size_t v = 0; v < prep.signatures.size(); ++v)
        if (v != u) lp.add(difference(prep.signatures[v], du), Relation::LessEqual, 0.0);
      lp.add(difference(du, rows[l]), Relation::Equal, 1.0);
      for (std::size_t j = 1; j <= d; ++j) {
        lp.add(difference(rows[0], rows[j]), Relation::GreaterEqual, options.ratio_strict_eps);
        if (j != l) lp.add(difference(rows[j], rows[l]), Relation::GreaterEqual, 0.0);
      }
      const LpSolution sol = solve_lp(lp, options.lp);
      ++solved;
      if (sol.status != LpStatus::Optimal) continue;
      if (!best || sol.value > *best + 1e-12) {
        best = sol.value;
        best_poly = Poly(sol.x);
      }
    }
  }
  if (!best) return inapplicable(BoundMethod::Ratio, k, "every (vertex, eigenvalue) program is infeasible");

  BoundReport r;
  r.method = BoundMethod::Ratio;
  r.k = k;
  r.applicable = true;
  r.witness = best_poly;
  const PolyStats st = poly_stats(best_poly, prep.walk_diag, s);
  const double lambda_p = *st.min_nonprincipal;
  r.raw_value = (st.at_lambda1 - lambda_p) / (st.max_diagonal - lambda_p);
  r.integer_bound = integer_bound_from(r.raw_value);
  r.notes.push_back("best of " + std::to_string(solved) + " linear programs; LP optimum " +
                    std::to_string(*best));
  return r;
}

}  // namespace

BoundReport ratio_bound(const Graph& g, int k, const BoundOptions& options) {
  check_degree(k);
  const Spectrum s = eigendecompose(g, options.spectral);
  if (principal_degenerate(s) && !is_connected(g)) {
    return per_component(g, k, BoundMethod::Ratio,
                         [&](const Graph& comp) { return ratio_connected(comp, k, options); });
  }
  return ratio_connected(g, k, options);
}

// Inertia bound -------------------------------------------------------------------

BoundReport inertia_k1_bound(const Graph& g, const BoundOptions& options) {
  const Inertia in = inertia(g, options.spectral);
  BoundReport r;
  r.method = BoundMethod::InertiaK1;
  r.k = 1;
  r.applicable = true;
  r.witness = Poly({0.0, 1.0});
  if (in.positive == 0 || in.negative == 0) {
    r.raw_value = 1.0;
    r.notes.push_back("edgeless graph: trivial bound");
  } else {
    const double pos = static_cast<double>(in.positive);
    const double neg = static_cast<double>(in.negative);
    r.raw_value = 1.0 + std::max(pos / neg, neg / pos);
    r.notes.push_back("inertia (" + std::to_string(in.positive) + ", " + std::to_string(in.zero) + ", " +
                      std::to_string(in.negative) + ")");
  }
  r.integer_bound = integer_bound_from(r.raw_value);
  return r;
}

double hoffman_bound(const Spectrum& s) {
  const double smallest = s.distinct.back();
  if (smallest >= 0.0) return 1.0;
  return 1.0 - s.distinct.front() / smallest;
}

BoundReport compute_bound(const Graph& g, int k, BoundMethod method, const BoundOptions& options) {
  switch (method) {
    case BoundMethod::Inertial1:
      return inertial1_bound(g, k, options);
    case BoundMethod::Inertial2:
      return inertial2_bound(g, k, options);
    case BoundMethod::Ratio:
      return ratio_bound(g, k, options);
    case BoundMethod::InertiaK1: {
      BoundReport r = inertia_k1_bound(g, options);
      if (k > 1) {
        r.notes.push_back("bounds chi_q, which is at most chi_kq");
        r.k = k;
      }
      return r;
    }
  }
  throw DomainError("unknown bound method");
}

// Witness re-evaluation -----------------------------------------------------------

std::optional<double> evaluate_witness(const BoundReport& report, const Graph& g, const BoundOptions& options) {
  if (!report.applicable) return std::nullopt;
  if (!report.component.empty()) {
    BoundReport whole = report;
    whole.component.clear();
    return evaluate_witness(whole, g.induced(report.component), options);
  }
  const Spectrum s = eigendecompose(g, options.spectral);
  const PolyEvaluation ev = eval_poly_matrix(report.witness, g, s);
  std::vector<double> values;
  for (double lambda : s.eigenvalues) values.push_back(report.witness(lambda));
  const double tol = sign_tolerance(values);
  const double n = static_cast<double>(g.order());

  switch (report.method) {
    case BoundMethod::Inertial1: {
      std::size_t above = 0, below = 0;
      for (double v : values) {
        if (v >= ev.stats.min_diagonal - tol) ++above;
        if (v <= ev.stats.max_diagonal + tol) ++below;
      }
      return n / static_cast<double>(std::min(above, below));
    }
    case BoundMethod::Inertial2: {
      std::size_t pos = 0, neg = 0;
      double trace = 0.0;
      for (double v : values) {
        trace += v;
        if (v > tol) ++pos;
        if (v < -tol) ++neg;
      }
      if (pos == 0) return std::nullopt;
      if (options.inertial2_trace_condition && std::abs(trace) > tol * n) return std::nullopt;
      return 1.0 + static_cast<double>(neg) / static_cast<double>(pos);
    }
    case BoundMethod::Ratio: {
      if (!ev.stats.min_nonprincipal) return std::nullopt;
      const double lambda_p = *ev.stats.min_nonprincipal;
      for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values.front() > values[i])) return std::nullopt;
      if (!(ev.stats.max_diagonal > lambda_p)) return std::nullopt;
      return (ev.stats.at_lambda1 - lambda_p) / (ev.stats.max_diagonal - lambda_p);
    }
    case BoundMethod::InertiaK1: {
      const Inertia in = inertia(s);
      if (in.positive == 0 || in.negative == 0) return 1.0;
      const double pos = static_cast<double>(in.positive);
      const double neg = static_cast<double>(in.negative);
      return 1.0 + std::max(pos / neg, neg / pos);
    }
  }
  return std::nullopt;
}

// Certification -------------------------------------------------------------------

Certificate certify(const Graph& g, int k, const CertifyOptions& options) {
  check_degree(k);
  Certificate cert;
  for (BoundMethod m : options.methods) cert.bounds.push_back(compute_bound(g, k, m, options.bounds));

  bool have_best = false;
  for (const BoundReport& r : cert.bounds) {
    if (!r.applicable) continue;
    if (!have_best || r.integer_bound > cert.best_bound.integer_bound) {
      cert.best_bound = r;
      have_best = true;
    }
  }
  if (!have_best) cert.notes.push_back("no applicable bound");

  const ColoringResult exact = distance_chromatic_number(g, k, options.node_budget);
  cert.chi_k_exact = exact.chi;
  cert.exact_timed_out = exact.timed_out;
  if (exact.timed_out) {
    cert.notes.push_back("exact solver exhausted its node budget; chi_k in [" + std::to_string(exact.lower_bound) +
                         ", " + std::to_string(exact.chi) + "]");
    return cert;
  }
  cert.certified = have_best && cert.best_bound.integer_bound == exact.chi;
  if (have_best && cert.best_bound.integer_bound > exact.chi) {
    throw NumericalError("bound " + std::string(to_string(cert.best_bound.method)) + " = " +
                         std::to_string(cert.best_bound.raw_value) + " exceeds exact chi_k = " +
                         std::to_string(exact.chi));
  }
  if (cert.certified) cert.quantum_value = exact.chi;
  return cert;
}

}  // namespace spectrachrome
