#include "spectrachrome/exact.hpp"

#include <algorithm>

#include "spectrachrome/errors.hpp"

namespace spectrachrome {

namespace {

std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Vertex> clique;
  for (Vertex v : order) {
    if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.adjacent(u, v); })) clique.push_back(v);
  }
  return clique;
}

class Dsatur {
 public:
  Dsatur(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.order()), budget_(budget), colors_(n_, -1), counts_(n_, std::vector<int>(n_ + 1, 0)),
        saturation_(n_, 0) {}

  ColoringResult run() {
    ColoringResult res;
    res.coloring = greedy();
    res.chi = 1 + *std::max_element(res.coloring.begin(), res.coloring.end());
    const std::vector<Vertex> clique = greedy_clique(g_);
    res.lower_bound = static_cast<int>(clique.size());
    best_ = res.chi;
    best_coloring_ = res.coloring;
    lower_ = res.lower_bound;

    if (lower_ < best_) {
      int used = 0;
      for (Vertex v : clique) assign(v, used++);
      search(used, n_ - clique.size());
    }
    res.chi = best_;
    res.coloring = best_coloring_;
    res.nodes_explored = nodes_;
    res.timed_out = timed_out_;
    if (!timed_out_) res.lower_bound = best_;
    return res;
  }

 private:
  // Plain DSATUR without backtracking; the initial upper bound.
  std::vector<int> greedy() {
    std::vector<int> out;
    std::size_t remaining = n_;
    while (remaining-- > 0) {
      const Vertex v = pick();
      int c = 0;
      while (counts_[v][static_cast<std::size_t>(c)] > 0) ++c;
      assign(v, c);
    }
    out = colors_;
    for (Vertex v = 0; v < n_; ++v) unassign(v);
    return out;
  }

  Vertex pick() const {
    Vertex best = n_;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors_[v] >= 0) continue;
      if (best == n_ || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  void assign(Vertex v, int c) {
    colors_[v] = c;
    const VertexSet& nb = g_.neighbors(v);
    for (Vertex w = nb._Find_first(); w < kMaxVertices; w = nb._Find_next(w)) {
      if (counts_[w][static_cast<std::size_t>(c)]++ == 0) ++saturation_[w];
    }
  }

  void unassign(Vertex v) {
    const int c = colors_[v];
    if (c < 0) return;
    colors_[v] = -1;
    const VertexSet& nb = g_.neighbors(v);
    for (Vertex w = nb._Find_first(); w < kMaxVertices; w = nb._Find_next(w)) {
      if (--counts_[w][static_cast<std::size_t>(c)] == 0) --saturation_[w];
    }
  }

  void search(int used, std::size_t uncolored) {
    if (timed_out_ || best_ == lower_) return;
    if (uncolored == 0) {
      best_ = used;
      best_coloring_ = colors_;
      return;
    }
    const Vertex v = pick();
    // Only colours that keep the total strictly below the incumbent.
    const int limit = std::min(used, best_ - 2);
    for (int c = 0; c <= limit; ++c) {
      if (counts_[v][static_cast<std::size_t>(c)] > 0) continue;
      if (++nodes_ > budget_) {
        timed_out_ = true;
        return;
      }
      assign(v, c);
      search(std::max(used, c + 1), uncolored - 1);
      unassign(v);
      if (timed_out_ || best_ == lower_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::vector<int> colors_;
  std::vector<std::vector<int>> counts_;
  std::vector<int> saturation_;
  std::vector<int> best_coloring_;
  int best_ = 0;
  int lower_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

class MaxClique {
 public:
  MaxClique(std::vector<VertexSet> adj, std::size_t n, std::uint64_t budget)
      : adj_(std::move(adj)), n_(n), budget_(budget) {}

  IndependenceResult run() {
    VertexSet all;
    for (Vertex v = 0; v < n_; ++v) all.set(v);
    std::vector<Vertex> order;
    std::vector<int> bound;
    color_sort(all, order, bound);
    initial_bound_ = bound.empty() ? 0 : bound.back();
    expand(all);
    IndependenceResult res;
    res.alpha = static_cast<int>(best_.size());
    res.witness_set = best_;
    std::sort(res.witness_set.begin(), res.witness_set.end());
    res.nodes_explored = nodes_;
    res.timed_out = timed_out_;
    res.upper_bound = timed_out_ ? initial_bound_ : res.alpha;
    return res;
  }

 private:
  // Greedy colouring of P; bound[i] is the number of classes used up to order[i].
  void color_sort(const VertexSet& p, std::vector<Vertex>& order, std::vector<int>& bound) const {
    VertexSet uncolored = p;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      VertexSet q = uncolored;
      while (q.any()) {
        const Vertex v = q._Find_first();
        q.reset(v);
        q &= ~adj_[v];
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  void expand(VertexSet p) {
    if (timed_out_) return;
    if (++nodes_ > budget_) {
      timed_out_ = true;
      return;
    }
    std::vector<Vertex> order;
    std::vector<int> bound;
    color_sort(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      const VertexSet next = p & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      p.reset(v);
      if (timed_out_) return;
    }
  }

  std::vector<VertexSet> adj_;
  std::size_t n_;
  std::uint64_t budget_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  int initial_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

ColoringResult chromatic_number_exact(const Graph& g, std::uint64_t node_budget) {
  return Dsatur(g, node_budget).run();
}

IndependenceResult independence_number_exact(const Graph& g, std::uint64_t node_budget) {
  const std::size_t n = g.order();
  std::vector<VertexSet> comp(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) comp[u].set(v);
  return MaxClique(std::move(comp), n, node_budget).run();
}

ColoringResult distance_chromatic_number(const Graph& g, int k, std::uint64_t node_budget) {
  if (k < 1) throw DomainError("distance parameter k must be >= 1, got " + std::to_string(k));
  return chromatic_number_exact(power_graph(g, k), node_budget);
}

IndependenceResult distance_independence_number(const Graph& g, int k, std::uint64_t node_budget) {
  if (k < 1) throw DomainError("distance parameter k must be >= 1, got " + std::to_string(k));
  return independence_number_exact(power_graph(g, k), node_budget);
}

bool is_proper_coloring(const Graph& g, std::span<const int> coloring) {
  if (coloring.size() != g.order()) return false;
  for (int c : coloring)
    if (c < 0) return false;
  for (const Edge& e : g.edges())
    if (coloring[e.first] == coloring[e.second]) return false;
  return true;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
  }
  return true;
}

}  // namespace spectrachrome
