#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spectrachrome/graph.hpp"

namespace spectrachrome {

struct ColoringResult {
  int chi = 0;  // best (upper) value found; exact unless timed_out
  int lower_bound = 0;
  std::vector<int> coloring;  // colour of each vertex, 0-based
  std::uint64_t nodes_explored = 0;
  bool timed_out = false;
};

struct IndependenceResult {
  int alpha = 0;  // best (lower) value found; exact unless timed_out
  int upper_bound = 0;
  std::vector<Vertex> witness_set;
  std::uint64_t nodes_explored = 0;
  bool timed_out = false;
};

/// DSATUR branch and bound. Vertices are tie-broken by degree (descending)
/// then id, and a vertex may only open colour (max used) + 1, so node counts
/// are reproducible.
ColoringResult chromatic_number_exact(const Graph& g, std::uint64_t node_budget = 10'000'000);

/// Maximum independent set as a maximum clique of the complement, with
/// greedy-colouring bounds.
IndependenceResult independence_number_exact(const Graph& g, std::uint64_t node_budget = 10'000'000);

/// chi_k(G) = chi(G^k).
ColoringResult distance_chromatic_number(const Graph& g, int k, std::uint64_t node_budget = 10'000'000);
/// alpha_k(G) = alpha(G^k).
IndependenceResult distance_independence_number(const Graph& g, int k,
                                                std::uint64_t node_budget = 10'000'000);

bool is_proper_coloring(const Graph& g, std::span<const int> coloring);
bool is_independent_set(const Graph& g, std::span<const Vertex> vertices);

}  // namespace spectrachrome
