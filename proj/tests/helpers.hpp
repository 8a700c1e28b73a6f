#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "grt/colouring.hpp"
#include "grt/graph.hpp"

namespace grt::testing {

using Rng = std::mt19937;

/// Join of K_y with (K_x + isolated vertices): X = [0,x), Y = [x, x+y).
inline Graph clique_cone(int n, int x, int y) {
  Graph g(n);
  for (int u = 0; u < x; ++u)
    for (int v = u + 1; v < x; ++v) g.add_edge(u, v);
  for (int u = x; u < x + y; ++u)
    for (int v = 0; v < n; ++v)
      if (v != u) g.add_edge(u, v);
  return g;
}

inline Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Disjoint union of odd cliques covering all n vertices, in random order.
inline Graph random_odd_clique_union(Rng& rng, int n, std::vector<std::vector<int>>* parts = nullptr) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph g(n);
  std::size_t at = 0;
  while (at < perm.size()) {
    int remaining = static_cast<int>(perm.size() - at);
    std::uniform_int_distribution<int> pick(0, (remaining - 1) / 2);
    int size = 2 * pick(rng) + 1;
    std::vector<int> part(perm.begin() + static_cast<long>(at),
                          perm.begin() + static_cast<long>(at) + size);
    std::sort(part.begin(), part.end());
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j) g.add_edge(part[i], part[j]);
    if (parts) parts->push_back(part);
    at += static_cast<std::size_t>(size);
  }
  return g;
}

/// Random colouring with empty uncoloured layer in which colour j has no
/// matching of size thresholds[j-1]: edges are added greedily and reverted
/// whenever they would push a colour past its cap.
inline ColouredGraph random_free_colouring(Rng& rng, int n, const std::vector<int>& thresholds) {
  const int q = static_cast<int>(thresholds.size());
  std::vector<Graph> layers(static_cast<std::size_t>(q) + 1, Graph(n));
  int attempts = 3 * n * n;
  for (int i = 0; i < attempts; ++i) {
    int u = static_cast<int>(rng() % static_cast<unsigned>(n));
    int v = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (u == v) continue;
    int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(q));
    Graph& layer = layers[static_cast<std::size_t>(j)];
    if (layer.has_edge(u, v)) continue;
    layer.add_edge(u, v);
    if (matching_number(layer) > thresholds[static_cast<std::size_t>(j - 1)] - 1)
      layer.remove_edge(u, v);
  }
  return ColouredGraph(std::move(layers));
}

/// All graphs on n vertices, by edge subsets of K_n. Feasible for n <= 5.
template <typename F>
void for_each_graph(int n, F&& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint32_t total = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    f(g);
  }
}

}  // namespace grt::testing
