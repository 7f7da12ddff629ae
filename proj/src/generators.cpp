#include <algorithm>
#include <charconv>
#include <map>

#include "spectrachrome/errors.hpp"
#include "spectrachrome/graph.hpp"

namespace spectrachrome {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void require_arity(std::span<const int> params, std::size_t arity, const char* family) {
  require(params.size() == arity, std::string(family) + " takes " + std::to_string(arity) +
                                      " parameter(s), got " + std::to_string(params.size()));
}

std::string label(const char* family, std::span<const int> params) {
  std::string out = family;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += std::to_string(params[i]);
  }
  return out;
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph hypercube(int dim) {
  require(dim >= 0 && dim <= 9, "hypercube dimension must be in [0, 9]");
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (const int w = v ^ (1 << b); v < w) edges.emplace_back(v, w);
  return Graph::from_edges(n, edges);
}

// Outer cycle 0..n-1, spokes i -- n+i, inner star polygon n+i -- n+(i+s)%n.
Graph generalized_petersen(int n, int s) {
  require(n >= 3, "generalized_petersen needs n >= 3");
  require(s >= 1 && 2 * s < n, "generalized_petersen needs 1 <= s < n/2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + s) % n);
  }
  return Graph::from_edges(2 * static_cast<std::size_t>(n), edges);
}

// Vertices are the s-subsets of {0..n-1} in lexicographic order, as bitmasks.
Graph kneser(int n, int s) {
  require(s >= 1 && n >= 2 * s, "kneser(n,s) needs s >= 1 and n >= 2s");
  require(n <= 30, "kneser ground set too large");
  std::vector<std::uint32_t> subsets;
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << i;
    subsets.push_back(mask);
    require(subsets.size() <= kMaxVertices, "kneser graph exceeds the supported order");
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b)
      if ((subsets[a] & subsets[b]) == 0) edges.emplace_back(a, b);
  return Graph::from_edges(subsets.size(), edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs both parts non-empty");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::from_edges(static_cast<std::size_t>(a + b), edges);
}

const std::map<std::string, Family, std::less<>>& family_names() {
  static const std::map<std::string, Family, std::less<>> names = {
      {"cycle", Family::Cycle},
      {"complete", Family::Complete},
      {"path", Family::Path},
      {"hypercube", Family::Hypercube},
      {"prism", Family::Prism},
      {"generalized_petersen", Family::GeneralizedPetersen},
      {"kneser", Family::Kneser},
      {"petersen", Family::Petersen},
      {"empty", Family::Empty},
      {"complete_bipartite", Family::CompleteBipartite},
  };
  return names;
}

const char* family_name(Family f) {
  for (const auto& [name, family] : family_names())
    if (family == f) return name.c_str();
  return "?";
}

}  // namespace

Graph generate(Family family, std::span<const int> params) {
  const char* name = family_name(family);
  auto check_order = [](long long n) {
    require(n >= 1 && n <= static_cast<long long>(kMaxVertices),
            "requested graph exceeds the supported order " + std::to_string(kMaxVertices));
  };
  Graph g = [&]() -> Graph {
    switch (family) {
      case Family::Cycle:
        require_arity(params, 1, name);
        check_order(params[0]);
        return cycle(params[0]);
      case Family::Complete:
        require_arity(params, 1, name);
        check_order(params[0]);
        return complete(params[0]);
      case Family::Path:
        require_arity(params, 1, name);
        check_order(params[0]);
        return path(params[0]);
      case Family::Hypercube:
        require_arity(params, 1, name);
        return hypercube(params[0]);
      case Family::Prism:
        require_arity(params, 1, name);
        check_order(2LL * params[0]);
        return generalized_petersen(params[0], 1);
      case Family::GeneralizedPetersen:
        require_arity(params, 2, name);
        check_order(2LL * params[0]);
        return generalized_petersen(params[0], params[1]);
      case Family::Kneser:
        require_arity(params, 2, name);
        return kneser(params[0], params[1]);
      case Family::Petersen:
        require_arity(params, 0, name);
        return generalized_petersen(5, 2);
      case Family::Empty:
        require_arity(params, 1, name);
        check_order(params[0]);
        return Graph(static_cast<std::size_t>(params[0]));
      case Family::CompleteBipartite:
        require_arity(params, 2, name);
        check_order(static_cast<long long>(params[0]) + params[1]);
        return complete_bipartite(params[0], params[1]);
    }
    throw DomainError("unknown graph family");
  }();
  return g.renamed(label(name, params));
}

Graph generate_from_spec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const auto it = family_names().find(name);
  if (it == family_names().end()) {
    throw DomainError("unknown graph family '" + std::string(name) + "'");
  }
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (true) {
      const std::size_t comma = rest.find(',');
      const std::string_view token = rest.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw DomainError("bad family parameter '" + std::string(token) + "' in '" +
                          std::string(spec) + "'");
      }
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return generate(it->second, params);
}

}  // namespace spectrachrome
