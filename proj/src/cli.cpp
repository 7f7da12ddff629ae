#include "spectrachrome/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "spectrachrome/bounds.hpp"
#include "spectrachrome/errors.hpp"
#include "spectrachrome/exact.hpp"
#include "spectrachrome/json_io.hpp"
#include "spectrachrome/quantum.hpp"

namespace spectrachrome {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string family;
  std::string input;
  std::string projectors;
  int k = 1;
  std::string method = "all";
  std::string format = "json";
  std::uint64_t budget = kDefaultNodeBudget;
  double eig_tol = SpectralOptions{}.grouping_factor;
  double lp_tol = LpOptions{}.feasibility_tol;
  double qtol = kQuantumTol;
};

// An error together with the exit code it maps to.
struct Failure {
  int code;
  std::string message;
};

Failure classify(const std::exception& e) {
  if (dynamic_cast<const ResourceError*>(&e)) return {kExitResource, e.what()};
  if (dynamic_cast<const NumericalError*>(&e) || dynamic_cast<const TheoremViolation*>(&e)) {
    return {kExitNumerical, e.what()};
  }
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
      dynamic_cast<const StructuralError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e)) {
    return {kExitInput, e.what()};
  }
  return {kExitNumerical, e.what()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const RunConfig& cfg) {
  if (cfg.family.empty() == cfg.input.empty()) throw DomainError("give exactly one of --family or --input");
  if (!cfg.family.empty()) return generate_from_spec(cfg.family);
  return parse_graph_text(read_file(cfg.input)).renamed(cfg.input);
}

BoundOptions bound_options(const RunConfig& cfg) {
  BoundOptions o;
  o.spectral.grouping_factor = cfg.eig_tol;
  o.lp.feasibility_tol = cfg.lp_tol;
  return o;
}

std::vector<BoundMethod> selected_methods(const RunConfig& cfg) {
  if (cfg.method == "all") return {std::begin(kAllMethods), std::end(kAllMethods)};
  const auto m = parse_method(cfg.method);
  if (!m) throw DomainError("unknown method '" + cfg.method + "'");
  return {*m};
}

void check_k(const RunConfig& cfg) {
  if (cfg.k < 1) throw DomainError("--k must be >= 1");
}

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, stable_number(x));
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void print_bound_table(std::ostream& out, const std::vector<BoundReport>& reports) {
  out << pad("method", 11) << pad("k", 4) << pad("raw", 14) << pad("bound", 7) << "notes\n";
  for (const BoundReport& r : reports) {
    out << pad(to_string(r.method), 11) << pad(std::to_string(r.k), 4)
        << pad(r.applicable ? fixed(r.raw_value) : "-", 14)
        << pad(r.applicable ? std::to_string(r.integer_bound) : "-", 7)
        << (r.notes.empty() ? "" : r.notes.front()) << '\n';
  }
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  SpectralOptions o;
  o.grouping_factor = cfg.eig_tol;
  const Spectrum s = eigendecompose(g, o);
  if (cfg.format == "table") {
    out << pad("eigenvalue", 22) << "multiplicity\n";
    for (std::size_t j = 0; j < s.distinct.size(); ++j)
      out << pad(fixed(s.distinct[j], 12), 22) << s.multiplicities[j] << '\n';
  } else {
    out << spectrum_to_json(s).dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  check_k(cfg);
  const Graph g = load_graph(cfg);
  const BoundOptions o = bound_options(cfg);
  std::vector<BoundReport> reports;
  for (BoundMethod m : selected_methods(cfg)) reports.push_back(compute_bound(g, cfg.k, m, o));
  if (cfg.format == "table") {
    out << g.name() << "  n=" << g.order() << '\n';
    print_bound_table(out, reports);
  } else {
    json arr = json::array();
    for (const BoundReport& r : reports) arr.push_back(bound_report_to_json(r, g));
    out << arr.dump(2) << '\n';
  }
  return kExitOk;
}

CertifyOptions certify_options(const RunConfig& cfg) {
  CertifyOptions o;
  o.bounds = bound_options(cfg);
  o.node_budget = cfg.budget;
  o.methods = selected_methods(cfg);
  return o;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  check_k(cfg);
  const Graph g = load_graph(cfg);
  const Certificate c = certify(g, cfg.k, certify_options(cfg));
  if (cfg.format == "table") {
    out << g.name() << "  n=" << g.order() << "  k=" << cfg.k << '\n';
    print_bound_table(out, c.bounds);
    out << "chi_k = " << c.chi_k_exact << (c.exact_timed_out ? " (budget exhausted, upper bound)" : "") << '\n';
    out << "certified: " << (c.certified ? "yes, chi_kq = " + std::to_string(*c.quantum_value) : std::string("no"))
        << '\n';
  } else {
    out << certificate_to_json(c, g, cfg.k).dump(2) << '\n';
  }
  return c.exact_timed_out ? kExitResource : kExitOk;
}

int cmd_verify_qc(const RunConfig& cfg, std::ostream& out) {
  check_k(cfg);
  const Graph g = load_graph(cfg);
  if (cfg.projectors.empty()) throw DomainError("--projectors is required");
  const QuantumColoring qc = parse_quantum_coloring(read_file(cfg.projectors), g.order());
  const Verdict v = verify_quantum_coloring(qc, g, cfg.k, cfg.qtol);
  if (cfg.format == "table") {
    out << (v.pass ? "PASS" : "FAIL") << "  max residual " << v.max_residual << '\n';
    for (const Violation& x : v.violations) {
      out << "  " << pad(to_string(x.kind), 14) << "v=" << x.v << " w=" << x.w
          << " h=" << (x.h < 0 ? std::string("-") : std::to_string(x.h)) << " residual " << x.residual << '\n';
    }
  } else {
    out << verdict_to_json(v).dump(2) << '\n';
  }
  return kExitOk;
}

std::size_t worker_count(std::size_t jobs) {
  std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPECTRACHROME_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) cap = static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::min(cap, jobs));
}

int cmd_batch(const RunConfig& cfg, std::ostream& out) {
  check_k(cfg);
  if (cfg.input.empty()) throw DomainError("batch needs --input PATH (one graph6 string per line)");
  const std::string text = read_file(cfg.input);
  const CertifyOptions options = certify_options(cfg);

  struct Row {
    std::size_t line;
    std::string g6;
  };
  std::vector<Row> rows;
  std::istringstream lines(text);
  std::string line;
  for (std::size_t no = 1; std::getline(lines, line); ++no) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (!line.empty()) rows.push_back({no, line});
  }

  std::vector<json> results(rows.size());
  std::vector<int> codes(rows.size(), kExitOk);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      json row;
      row["line"] = rows[i].line;
      try {
        const Graph g = parse_graph6(rows[i].g6).renamed(rows[i].g6);
        const Certificate c = certify(g, cfg.k, options);
        row.update(certificate_to_json(c, g, cfg.k));
        if (c.exact_timed_out) codes[i] = kExitResource;
      } catch (const std::exception& e) {
        const Failure f = classify(e);
        row["graph"] = rows[i].g6;
        row["error"] = f.message;
        codes[i] = f.code;
      }
      results[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t workers = worker_count(rows.size());
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  if (cfg.format == "table") {
    out << pad("line", 6) << pad("graph", 24) << pad("chi_k", 7) << pad("bound", 7) << "certified\n";
    for (const json& r : results) {
      out << pad(std::to_string(r["line"].get<std::size_t>()), 6) << pad(r["graph"].get<std::string>(), 24);
      if (r.contains("error")) {
        out << "error: " << r["error"].get<std::string>() << '\n';
        continue;
      }
      out << pad(std::to_string(r["chi_k"].get<int>()), 7)
          << pad(r["best_bound"].is_null() ? "-" : std::to_string(r["best_bound"]["integer_bound"].get<int>()), 7)
          << (r["certified"].get<bool>() ? "yes" : "no") << '\n';
    }
  } else {
    out << json(results).dump(2) << '\n';
  }
  // Input errors take precedence, then numerical failures, then budget exhaustion.
  int code = kExitOk;
  for (int c : codes) {
    if (c == kExitInput) return kExitInput;
    if (c == kExitNumerical) code = kExitNumerical;
    if (c == kExitResource && code == kExitOk) code = kExitResource;
  }
  return code;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool graph_source, bool methods) {
  if (graph_source) {
    sub->add_option("--family", cfg.family, "graph family spec, e.g. cycle:6, prism:5, generalized_petersen:8,3");
  }
  sub->add_option("--input", cfg.input, graph_source ? "graph file (graph6 or edge list)" : "file of graph6 lines");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--eig-tol", cfg.eig_tol, "relative eigenvalue grouping tolerance")->check(CLI::PositiveNumber);
  if (methods) {
    sub->add_option("--k", cfg.k, "distance parameter k >= 1");
    sub->add_option("--method", cfg.method, "bound method")
        ->check(CLI::IsMember({"inertial1", "inertial2", "ratio", "inertia1q", "all"}));
    sub->add_option("--lp-tol", cfg.lp_tol, "LP feasibility tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "node budget of the exact colouring search");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral lower bounds on quantum distance-k chromatic numbers"};
  app.name("spectrachrome");
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* spectrum = app.add_subcommand("spectrum", "distinct adjacency eigenvalues with multiplicities");
  add_common(spectrum, cfg, true, false);
  CLI::App* bound = app.add_subcommand("bound", "spectral lower bounds on chi_kq");
  add_common(bound, cfg, true, true);
  CLI::App* cert = app.add_subcommand("certify", "compare the best bound with the exact chi_k");
  add_common(cert, cfg, true, true);
  CLI::App* verify = app.add_subcommand("verify-qc", "check a projector family against the distance-k conditions");
  add_common(verify, cfg, true, false);
  verify->add_option("--k", cfg.k, "distance parameter k >= 1");
  verify->add_option("--projectors", cfg.projectors, "JSON array of {v, h, matrix}")->required();
  verify->add_option("--qtol", cfg.qtol, "residual tolerance")->check(CLI::PositiveNumber);
  CLI::App* batch = app.add_subcommand("batch", "certify every graph6 line of a file");
  add_common(batch, cfg, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*spectrum) return cmd_spectrum(cfg, out);
    if (*bound) return cmd_bound(cfg, out);
    if (*cert) return cmd_certify(cfg, out);
    if (*verify) return cmd_verify_qc(cfg, out);
    return cmd_batch(cfg, out);
  } catch (const std::exception& e) {
    const Failure f = classify(e);
    err << "spectrachrome: " << f.message << '\n';
    return f.code;
  }
}

}  // namespace spectrachrome
