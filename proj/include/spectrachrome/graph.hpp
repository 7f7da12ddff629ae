#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectrachrome {

inline constexpr std::size_t kMaxVertices = 512;

using Vertex = std::size_t;
using VertexSet = std::bitset<kMaxVertices>;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1, stored as dense adjacency rows.
/// Values are immutable once built.
class Graph {
 public:
  /// Edgeless graph on n vertices. Throws DomainError unless 1 <= n <= kMaxVertices.
  explicit Graph(std::size_t n, std::string name = {});

  /// Throws DomainError on self-loops or out-of-range endpoints. Repeated edges collapse.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::string name = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }
  const std::string& name() const noexcept { return name_; }
  Graph renamed(std::string name) const;

  bool adjacent(Vertex u, Vertex v) const { return rows_[u][v]; }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices`, relabelled 0..|vertices|-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;
  Graph complement() const;

  /// Adjacency equality; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph() = default;
  void add_edge(Vertex u, Vertex v);

  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet> rows_;
  std::string name_;
};

/// All-pairs hop distances; `kUnreachable` marks pairs in different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t order() const noexcept { return n_; }
  int at(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  int& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }
  /// Largest finite distance.
  int diameter() const;

 private:
  std::size_t n_;
  std::vector<int> d_;
};

DistanceMatrix distances(const Graph& g);

/// vw is an edge iff 1 <= dist(v,w) <= k. Throws DomainError for k < 1.
Graph power_graph(const Graph& g, int k);

/// True iff diag(A^l) is constant for every l in 0..k. Always true for k <= 1.
bool is_k_partially_walk_regular(const Graph& g, int k);

bool is_regular(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// graph6 / edge-list interchange -------------------------------------------------

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// One "u v" pair per line, 0-based; '#' starts a comment. The vertex count is
/// max id + 1 unless a "# n N" header line fixes it.
Graph parse_edge_list(std::string_view text);

/// Reads a graph file: edge list when any line contains whitespace-separated
/// integers, graph6 otherwise (first non-empty line).
Graph parse_graph_text(std::string_view text);

// Generators ---------------------------------------------------------------------

enum class Family {
  Cycle,
  Complete,
  Path,
  Hypercube,
  Prism,
  GeneralizedPetersen,
  Kneser,
  Petersen,
  Empty,
  CompleteBipartite,
};

Graph generate(Family family, std::span<const int> params);

/// "name:p1,p2" e.g. "cycle:6", "generalized_petersen:8,3", "petersen".
Graph generate_from_spec(std::string_view spec);

}  // namespace spectrachrome
