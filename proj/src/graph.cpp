#include "spectrachrome/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "spectrachrome/errors.hpp"

namespace spectrachrome {

Graph::Graph(std::size_t n, std::string name) : n_(n), rows_(n), name_(std::move(name)) {
  if (n == 0 || n > kMaxVertices) {
    throw DomainError("graph order must be in [1, " + std::to_string(kMaxVertices) + "], got " +
                      std::to_string(n));
  }
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::string name) {
  Graph g(n, std::move(name));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (rows_[u][v]) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edge_count_;
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (rows_[u][v]) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph g(vertices.size(), name_);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (rows_[vertices[i]][vertices[j]]) g.add_edge(i, j);
  return g;
}

Graph Graph::complement() const {
  Graph g(n_, name_.empty() ? name_ : name_ + "-complement");
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!rows_[u][v]) g.add_edge(u, v);
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.edge_count_ != b.edge_count_) return false;
  return a.rows_ == b.rows_;
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int x : d_) best = std::max(best, x);
  return best;
}

DistanceMatrix distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    dist.at(s, s) = 0;
    while (head < tail) {
      const Vertex x = queue[head++];
      const int next = dist.at(s, x) + 1;
      const VertexSet& nb = g.neighbors(x);
      for (Vertex y = nb._Find_first(); y < n; y = nb._Find_next(y)) {
        if (dist.at(s, y) == DistanceMatrix::kUnreachable) {
          dist.at(s, y) = next;
          queue[tail++] = y;
        }
      }
    }
  }
  return dist;
}

Graph power_graph(const Graph& g, int k) {
  if (k < 1) throw DomainError("power_graph needs k >= 1, got " + std::to_string(k));
  if (k == 1) return g;
  const DistanceMatrix dist = distances(g);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const int d = dist.at(u, v);
      if (d != DistanceMatrix::kUnreachable && d <= k) edges.emplace_back(u, v);
    }
  std::string name = g.name().empty() ? std::string{} : g.name() + "^" + std::to_string(k);
  return Graph::from_edges(g.order(), edges, std::move(name));
}

bool is_regular(const Graph& g) {
  const std::size_t d0 = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d0) return false;
  return true;
}

bool is_k_partially_walk_regular(const Graph& g, int k) {
  if (k <= 1) return true;
  if (!is_regular(g)) return false;
  // Closed-walk counts are computed row by row: walks[v] holds row v of A^l.
  // Counts stay exact in double up to 2^53, far beyond desk-scale n and k.
  const std::size_t n = g.order();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (Vertex v = 0; v < n; ++v) rows[v][v] = 1.0;
  std::vector<double> next(n);
  for (int l = 1; l <= k; ++l) {
    for (Vertex v = 0; v < n; ++v) {
      std::fill(next.begin(), next.end(), 0.0);
      for (Vertex x = 0; x < n; ++x) {
        const double w = rows[v][x];
        if (w == 0.0) continue;
        const VertexSet& nb = g.neighbors(x);
        for (Vertex y = nb._Find_first(); y < n; y = nb._Find_next(y)) next[y] += w;
      }
      rows[v].swap(next);
    }
    const double ref = rows[0][0];
    for (Vertex v = 1; v < n; ++v)
      if (std::abs(rows[v][v] - ref) > 1e-9 * std::max(1.0, std::abs(ref))) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<Vertex> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      out.back().push_back(x);
      const VertexSet& nb = g.neighbors(x);
      for (Vertex y = nb._Find_first(); y < n; y = nb._Find_next(y)) {
        if (comp[y] < 0) {
          comp[y] = id;
          queue.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

}  // namespace spectrachrome
