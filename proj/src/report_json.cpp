#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "spectrachrome/json_io.hpp"

namespace spectrachrome {

using nlohmann::json;

double stable_number(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json spectrum_to_json(const Spectrum& s) {
  json distinct = json::array();
  json mult = json::array();
  for (std::size_t j = 0; j < s.distinct.size(); ++j) {
    distinct.push_back(stable_number(s.distinct[j]));
    mult.push_back(s.multiplicities[j]);
  }
  return json{{"distinct", distinct}, {"mult", mult}};
}

json bound_report_to_json(const BoundReport& r, const Graph& g) {
  json out;
  out["graph"] = g.name();
  out["n"] = g.order();
  out["k"] = r.k;
  out["method"] = to_string(r.method);
  out["applicable"] = r.applicable;
  if (r.applicable) {
    out["raw_value"] = stable_number(r.raw_value);
    out["integer_bound"] = r.integer_bound;
    json coeffs = json::array();
    double scale = 0.0;
    for (double a : r.witness.coeffs()) scale = std::max(scale, std::abs(a));
    // round-off residue in the solver output
    for (double a : r.witness.coeffs()) coeffs.push_back(stable_number(std::abs(a) <= 1e-12 * scale ? 0.0 : a));
    out["witness_poly"] = coeffs;
  } else {
    out["raw_value"] = nullptr;
    out["integer_bound"] = nullptr;
    out["witness_poly"] = nullptr;
  }
  out["notes"] = r.notes;
  return out;
}

json certificate_to_json(const Certificate& c, const Graph& g, int k) {
  json out;
  out["graph"] = g.name();
  out["n"] = g.order();
  out["k"] = k;
  out["chi_k"] = c.chi_k_exact;
  out["exact_timed_out"] = c.exact_timed_out;
  if (c.best_bound.applicable) {
    out["best_bound"] = json{{"method", to_string(c.best_bound.method)},
                             {"raw_value", stable_number(c.best_bound.raw_value)},
                             {"integer_bound", c.best_bound.integer_bound}};
  } else {
    out["best_bound"] = nullptr;
  }
  json bounds = json::array();
  for (const BoundReport& r : c.bounds) bounds.push_back(bound_report_to_json(r, g));
  out["bounds"] = bounds;
  out["certified"] = c.certified;
  out["chi_kq"] = c.quantum_value ? json(*c.quantum_value) : json(nullptr);
  out["notes"] = c.notes;
  return out;
}

json verdict_to_json(const Verdict& v) {
  json violations = json::array();
  for (const Violation& x : v.violations) {
    violations.push_back(json{{"kind", to_string(x.kind)},
                              {"v", x.v},
                              {"w", x.w},
                              {"h", x.h < 0 ? json(nullptr) : json(x.h)},
                              {"residual", stable_number(x.residual)}});
  }
  return json{{"pass", v.pass}, {"max_residual", stable_number(v.max_residual)}, {"violations", violations}};
}

}  // namespace spectrachrome
