// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance               run all criteria
//   acceptance --criterion N run one

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

#include "fourier_motzkin.hpp"
#include "graph_enum.hpp"
#include "spectrachrome/bounds.hpp"
#include "spectrachrome/exact.hpp"
#include "spectrachrome/lp.hpp"
#include "spectrachrome/quantum.hpp"
#include "spectrachrome/spectral.hpp"

using namespace spectrachrome;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    if (o.pass) o.detail = what;
    o.pass = false;
  }
}

std::string fmt(const char* f, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

// 1. C6 spectrum {2^1, 1^2, -1^2, -2^1}.
Outcome criterion1() {
  Outcome o;
  const Graph c6 = generate_from_spec("cycle:6");
  const auto t0 = std::chrono::steady_clock::now();
  const Spectrum s = eigendecompose(c6);
  const double ms = elapsed_ms(t0);
  const double want[] = {2, 1, -1, -2};
  const std::size_t mult[] = {1, 2, 2, 1};
  require(o, s.distinct.size() == 4, "expected 4 distinct eigenvalues");
  for (std::size_t j = 0; o.pass && j < 4; ++j) {
    require(o, std::abs(s.distinct[j] - want[j]) <= 1e-9, "eigenvalue mismatch");
    require(o, s.multiplicities[j] == mult[j], "multiplicity mismatch");
  }
  require(o, ms < 10.0, "runtime " + fmt("%.2f ms", ms));
  if (o.pass) o.detail = "distinct {2,1,-1,-2}, mult {1,2,2,1}, " + fmt("%.3f ms", ms);
  return o;
}

// 2. First inertial program on C6, k = 2: weighted optimum 2, bound 3.
Outcome criterion2() {
  Outcome o;
  const Graph c6 = generate_from_spec("cycle:6");
  const auto t0 = std::chrono::steady_clock::now();
  const BoundReport r = inertial1_bound(c6, 2);
  const double ms = elapsed_ms(t0);
  const double denominator = 6.0 / r.raw_value;
  require(o, std::abs(denominator - 2.0) < 1e-9, "weighted optimum " + fmt("%g", denominator));
  require(o, r.integer_bound == 3, "bound " + std::to_string(r.integer_bound));
  // Re-substitute the witness into the program: Neg entries at <= -1, trace 0 (C6 is walk-regular).
  const Spectrum s = eigendecompose(c6);
  std::size_t weight = 0;
  for (std::size_t j = 0; j < r.pattern.size(); ++j) {
    const double v = r.witness(s.distinct[j]);
    if (r.pattern[j] == Sign::Neg) {
      require(o, v <= -1.0 + 1e-7, "Neg entry violated at theta=" + fmt("%g", s.distinct[j]));
    } else {
      weight += s.multiplicities[j];
    }
  }
  require(o, weight == 2, "pattern weight " + std::to_string(weight));
  double trace = 0.0;
  for (double lambda : s.eigenvalues) trace += r.witness(lambda);
  require(o, std::abs(trace) < 1e-7, "trace condition violated: " + fmt("%g", trace));
  const auto check = evaluate_witness(r, c6);
  require(o, check && std::abs(*check - 3.0) < 1e-9, "witness re-evaluation differs");
  require(o, ms < 100.0, "runtime " + fmt("%.2f ms", ms));
  if (o.pass) o.detail = "optimum 2, pattern " + to_string(r.pattern) + ", bound 3, " + fmt("%.2f ms", ms);
  return o;
}

// 3. chi_2(C6) = 3, alpha_2(C6) = 2, certified chi_2q(C6) = 3.
Outcome criterion3() {
  Outcome o;
  const Graph c6 = generate_from_spec("cycle:6");
  const auto t0 = std::chrono::steady_clock::now();
  const ColoringResult chi = distance_chromatic_number(c6, 2);
  const IndependenceResult alpha = distance_independence_number(c6, 2);
  const Certificate cert = certify(c6, 2);
  const double ms = elapsed_ms(t0);
  require(o, chi.chi == 3 && !chi.timed_out, "chi_2 = " + std::to_string(chi.chi));
  require(o, alpha.alpha == 2 && !alpha.timed_out, "alpha_2 = " + std::to_string(alpha.alpha));
  require(o, cert.certified && cert.quantum_value == 3, "not certified at 3");
  require(o, ms < 100.0, "runtime " + fmt("%.2f ms", ms));
  if (o.pass) o.detail = "chi_2 = 3, alpha_2 = 2, chi_2q = 3, " + fmt("%.2f ms", ms);
  return o;
}

// 4. Ratio bound on Petersen, k = 2: 10; chi_2 = 10; certified.
Outcome criterion4() {
  Outcome o;
  const Graph g = generate_from_spec("petersen");
  const auto t0 = std::chrono::steady_clock::now();
  const BoundReport r = ratio_bound(g, 2);
  const ColoringResult chi = distance_chromatic_number(g, 2);
  const Certificate cert = certify(g, 2);
  const double ms = elapsed_ms(t0);
  require(o, r.applicable && std::abs(r.raw_value - 10.0) <= 1e-6, "ratio value " + fmt("%.9f", r.raw_value));
  require(o, chi.chi == 10, "chi_2 = " + std::to_string(chi.chi));
  require(o, cert.certified && cert.quantum_value == 10, "not certified at 10");
  require(o, ms < 1000.0, "runtime " + fmt("%.1f ms", ms));
  if (o.pass) o.detail = "ratio " + fmt("%.9f", r.raw_value) + ", chi_2 = 10, chi_2q = 10, " + fmt("%.1f ms", ms);
  return o;
}

// 5. Second inertial bound equals chi_2 on the tight families.
Outcome criterion5() {
  Outcome o;
  const char* specs[] = {"generalized_petersen:5,2", "prism:3", "prism:4", "prism:5", "prism:7", "prism:8",
                         "generalized_petersen:8,3", "generalized_petersen:10,2"};
  std::string summary;
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* spec : specs) {
    const Graph g = generate_from_spec(spec);
    const BoundReport r = inertial2_bound(g, 2);
    const ColoringResult chi = distance_chromatic_number(g, 2);
    require(o, r.applicable && !chi.timed_out && r.integer_bound == chi.chi,
            std::string(spec) + ": bound " + std::to_string(r.integer_bound) + " vs chi_2 " + std::to_string(chi.chi));
    summary += std::string(summary.empty() ? "" : ", ") + spec + "=" + std::to_string(chi.chi);
  }
  const double ms = elapsed_ms(t0);
  require(o, ms < 60000.0, "runtime " + fmt("%.0f ms", ms));
  if (o.pass) o.detail = "tight on " + summary + ", " + fmt("%.1f ms", ms);
  return o;
}

// 6. Soundness on all connected graphs with n <= 7, k in {1,2,3}.
Outcome criterion6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t graphs = 0, checks = 0, violations = 0;
  std::string first;
  for (int n = 1; n <= 7; ++n)
    for (const testsupport::SmallGraph& sg : testsupport::connected_graphs(n)) {
      const Graph g = testsupport::to_graph(sg);
      ++graphs;
      for (int k = 1; k <= 3; ++k) {
        const ColoringResult chi = distance_chromatic_number(g, k);
        for (BoundMethod m : kAllMethods) {
          BoundReport r;
          try {
            r = compute_bound(g, k, m);
          } catch (const std::exception& e) {
            throw std::runtime_error(encode_graph6(g) + " k=" + std::to_string(k) + " " + to_string(m) + ": " +
                                     e.what());
          }
          if (!r.applicable) continue;
          ++checks;
          if (r.integer_bound > chi.chi) {
            ++violations;
            if (first.empty()) {
              first = encode_graph6(g) + " k=" + std::to_string(k) + " " + to_string(m) + " bound " +
                      fmt("%.6f", r.raw_value) + " > chi_k " + std::to_string(chi.chi);
            }
          }
        }
      }
    }
  const double ms = elapsed_ms(t0);
  require(o, graphs == 996, "enumerated " + std::to_string(graphs) + " graphs, expected 996");
  require(o, violations == 0, std::to_string(violations) + " violations; first: " + first);
  require(o, ms < 600000.0, "runtime " + fmt("%.0f ms", ms));
  if (o.pass) {
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(checks) + " bounds, 0 violations, " +
               fmt("%.1f s", ms / 1000.0);
  }
  return o;
}

// 7. Inertia and Hoffman bounds below chi on 200 random graphs.
Outcome criterion7() {
  Outcome o;
  std::mt19937 rng(20241016);
  std::size_t violations = 0;
  std::string first;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const Graph g = random_graph(rng, n, p);
    const int chi = chromatic_number_exact(g).chi;
    const double inertia = inertia_k1_bound(g).raw_value;
    const double hoffman = hoffman_bound(eigendecompose(g));
    if (integer_bound_from(inertia) > chi || integer_bound_from(hoffman) > chi) {
      ++violations;
      if (first.empty()) first = encode_graph6(g);
    }
  }
  require(o, violations == 0, std::to_string(violations) + " violations; first " + first);
  if (o.pass) o.detail = "200 random graphs (n <= 12), 0 violations";
  return o;
}

// 8. Quantum identities on lifted classical colorings.
Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(8);
  const auto t0 = std::chrono::steady_clock::now();
  double worst_literal = 0.0, worst_offdiag = 0.0, worst_diag = 0.0, worst_unitary = 0.0;
  std::size_t literal_failures = 0, samples_k_ge_2 = 0;
  std::string first_literal;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 9;
    const int k = 1 + static_cast<int>(rng() % 3);
    const Graph g = random_graph(rng, n, 0.35);
    const ColoringResult col = distance_chromatic_number(g, k);
    const QuantumColoring qc = lift_classical(col.coloring, static_cast<std::size_t>(col.chi));
    const Verdict verdict = verify_quantum_coloring(qc, g, k);
    require(o, verdict.pass, "lifted coloring rejected");
    const PinchingFamily f = build_pinching(qc);
    if (k >= 2) ++samples_k_ge_2;
    for (int l = 1; l <= k; ++l) {
      const double lit = annihilation_residual(f, g, l);
      worst_literal = std::max(worst_literal, lit);
      if (lit >= 1e-9) {
        ++literal_failures;
        if (first_literal.empty()) {
          first_literal = encode_graph6(g) + " k=" + std::to_string(k) + " l=" + std::to_string(l) +
                          " residual " + fmt("%g", lit);
        }
      }
      worst_offdiag = std::max(worst_offdiag, offdiagonal_annihilation_residual(f, g, l));
    }
    std::vector<double> diag(n);
    for (auto& x : diag) x = std::uniform_real_distribution<double>(-3, 3)(rng);
    worst_diag = std::max(worst_diag, diagonal_fix_residual(f, diag));
    const auto u = pinching_unitary_identity(f, lift(adjacency_matrix(g), 1));
    worst_unitary = std::max({worst_unitary, u.identity_residual, u.unitarity_residual});
    const QuantumColoring back = pinching_to_coloring(
        PinchingFamily{f.n, f.d, f.projectors}, g, k);
    for (std::size_t i = 0; i < qc.projectors.size(); ++i)
      require(o, (back.projectors[i] - qc.projectors[i]).max_abs() == 0.0, "round trip not exact");
  }
  const double ms = elapsed_ms(t0);
  require(o, worst_offdiag < 1e-9, "off-diagonal annihilation residual " + fmt("%g", worst_offdiag));
  require(o, worst_diag < 1e-9, "diagonal fix residual " + fmt("%g", worst_diag));
  require(o, worst_unitary < 1e-8, "unitary identity residual " + fmt("%g", worst_unitary));
  require(o, ms < 30000.0, "runtime " + fmt("%.0f ms", ms));
  // Literal form: C_P(A^l (x) I) = 0 for every l <= k.
  require(o, literal_failures == 0,
          "literal annihilation of A^l (x) I fails in " + std::to_string(literal_failures) +
              " (sample, l) cases over " + std::to_string(samples_k_ge_2) +
              " samples with k >= 2 (pinching keeps Diag(A^l) for l >= 2); first: " + first_literal +
              "; corrected off-diagonal form holds, worst " + fmt("%.1e", worst_offdiag));
  if (o.pass) o.detail = "100 samples, all identities within tolerance, " + fmt("%.1f ms", ms);
  return o;
}

// 9. Second inertial optimum on C6, k = 2 is 3, witness satisfies the program.
Outcome criterion9() {
  Outcome o;
  const Graph c6 = generate_from_spec("cycle:6");
  const BoundReport r = inertial2_bound(c6, 2);
  require(o, r.applicable && std::abs(r.raw_value - 3.0) < 1e-9, "value " + fmt("%g", r.raw_value));
  const Spectrum s = eigendecompose(c6);
  double trace = 0.0;
  for (std::size_t j = 0; j < s.distinct.size(); ++j) {
    const double v = r.witness(s.distinct[j]);
    trace += static_cast<double>(s.multiplicities[j]) * v;
    switch (r.pattern[j]) {
      case Sign::Pos:
        require(o, v >= 1.0 - 1e-7, "Pos entry violated");
        break;
      case Sign::Neg:
        require(o, v <= -1.0 + 1e-7, "Neg entry violated");
        break;
      case Sign::Zero:
        require(o, std::abs(v) <= 1e-7, "Zero entry violated");
        break;
      case Sign::Free:
        break;
    }
  }
  require(o, std::abs(trace) < 1e-7, "trace " + fmt("%g", trace));
  const auto check = evaluate_witness(r, c6);
  require(o, check && std::abs(*check - 3.0) < 1e-9, "re-evaluation differs");
  if (o.pass) o.detail = "value 3 with pattern " + to_string(r.pattern);
  return o;
}

// 10. Simplex against exact Fourier-Motzkin on 500 random LPs.
Outcome criterion10() {
  Outcome o;
  std::mt19937 rng(10);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::size_t agree = 0, opt = 0, inf = 0, unb = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t vars = 1 + rng() % 4;
    const std::size_t rows = 1 + rng() % 6;
    LinearProgram lp(vars, rng() % 2 ? Sense::Maximize : Sense::Minimize);
    testsupport::FmProblem fm;
    fm.vars = vars;
    for (std::size_t i = 0; i < vars; ++i) {
      const int c = coef(rng);
      lp.objective[i] = c;
      fm.objective.push_back(lp.sense == Sense::Maximize ? c : -c);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<double> a(vars);
      std::vector<testsupport::Rational> ar(vars);
      for (std::size_t i = 0; i < vars; ++i) {
        a[i] = coef(rng);
        ar[i] = static_cast<int>(a[i]);
      }
      const int b = coef(rng);
      switch (rng() % 5) {
        case 0:
        case 1:
          lp.add(a, Relation::LessEqual, b);
          fm.rows.push_back({ar, b});
          break;
        case 2:
        case 3:
          lp.add(a, Relation::GreaterEqual, b);
          for (auto& x : ar) x = -x;
          fm.rows.push_back({ar, -b});
          break;
        default:
          lp.add(a, Relation::Equal, b);
          fm.rows.push_back({ar, b});
          for (auto& x : ar) x = -x;
          fm.rows.push_back({ar, -b});
      }
    }
    const testsupport::FmResult ref = testsupport::fm_solve(fm);
    const LpSolution s = solve_lp(lp);
    bool ok = false;
    switch (ref.status) {
      case testsupport::FmStatus::Optimal: {
        ++opt;
        const double want = ref.value.convert_to<double>() * (lp.sense == Sense::Maximize ? 1 : -1);
        ok = s.status == LpStatus::Optimal && std::abs(s.value - want) <= 1e-6;
        break;
      }
      case testsupport::FmStatus::Infeasible:
        ++inf;
        ok = s.status == LpStatus::Infeasible;
        break;
      case testsupport::FmStatus::Unbounded:
        ++unb;
        ok = s.status == LpStatus::Unbounded;
        break;
    }
    if (ok) ++agree;
    require(o, ok, "disagreement on LP #" + std::to_string(t) + ":\n" + format_lp(lp));
  }
  if (o.pass) {
    o.detail = std::to_string(agree) + "/500 agree (optimal " + std::to_string(opt) + ", infeasible " +
               std::to_string(inf) + ", unbounded " + std::to_string(unb) + ")";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10};
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "criterion must be in 1..%zu\n", criteria.size());
    return 2;
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %zu: %s - %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
