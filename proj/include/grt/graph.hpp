#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "grt/bitset.hpp"
#include "grt/error.hpp"

namespace grt {

inline constexpr int kMaxVertices = 4096;

/// Simple undirected graph on vertices 0..n-1 with bit-set adjacency.
/// No self-loops; adjacency kept symmetric by construction.
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    detail::require(n >= 0 && n <= kMaxVertices, "Graph: vertex count out of range");
    adj_.assign(static_cast<std::size_t>(n), Bitset(n));
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  static Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }

  static Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
  }

  int order() const { return n_; }

  bool has_edge(int u, int v) const {
    assert(valid(u) && valid(v));
    return u != v && adj_[static_cast<std::size_t>(u)].test(v);
  }

  void add_edge(int u, int v) {
    detail::require(valid(u) && valid(v) && u != v, "Graph: invalid edge");
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
  }

  void remove_edge(int u, int v) {
    detail::require(valid(u) && valid(v), "Graph: invalid edge");
    adj_[static_cast<std::size_t>(u)].reset(v);
    adj_[static_cast<std::size_t>(v)].reset(u);
  }

  const Bitset& neighbours(int v) const {
    assert(valid(v));
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return neighbours(v).count(); }

  long long edge_count() const {
    long long twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  bool has_any_edge() const {
    for (const auto& row : adj_)
      if (row.any()) return true;
    return false;
  }

  /// Edges as (u, v) pairs with u < v, ascending.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  /// Induced subgraph on `keep` (ascending vertex list); vertex i of the
  /// result is keep[i].
  Graph induced(const std::vector<int>& keep) const {
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
  }

  bool operator==(const Graph&) const = default;

private:
  bool valid(int v) const { return v >= 0 && v < n_; }

  int n_ = 0;
  std::vector<Bitset> adj_;
};

/// A matching: pairwise-disjoint edges of a host graph.
struct Matching {
  std::vector<std::pair<int, int>> edges;  // u < v, ascending

  int size() const { return static_cast<int>(edges.size()); }

  std::vector<int> covered() const {
    std::vector<int> out;
    out.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
      out.push_back(u);
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Gallai-Edmonds decomposition (C, A, D) plus the components of G[D].
/// D = inessential vertices, A = N(D) \ D, C = the rest.
struct GEDecomposition {
  std::vector<int> c, a, d;
  std::vector<std::vector<int>> d_components;

  bool operator==(const GEDecomposition&) const = default;
};

namespace detail {

/// Maximum-cardinality matching via augmenting paths with blossom
/// contraction. `active` limits the search to a vertex subset.
class BlossomMatcher {
public:
  BlossomMatcher(const Graph& g, Bitset active)
      : g_(g),
        n_(g.order()),
        active_(std::move(active)),
        mate_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0),
        used_(static_cast<std::size_t>(n_), 0),
        blossom_(static_cast<std::size_t>(n_), 0) {}

  std::vector<int> run() {
    greedy_seed();
    for (int v = 0; v < n_; ++v)
      if (active_.test(v) && mate_[static_cast<std::size_t>(v)] == -1) try_augment(v);
    return mate_;
  }

private:
  void greedy_seed() {
    for (int v = 0; v < n_; ++v) {
      if (!active_.test(v) || mate_[static_cast<std::size_t>(v)] != -1) continue;
      int pick = -1;
      g_.neighbours(v).for_each([&](int u) {
        if (pick == -1 && active_.test(u) && mate_[static_cast<std::size_t>(u)] == -1) pick = u;
      });
      if (pick != -1) {
        mate_[static_cast<std::size_t>(v)] = pick;
        mate_[static_cast<std::size_t>(pick)] = v;
      }
    }
  }

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    int cur = a;
    while (true) {
      cur = base_[static_cast<std::size_t>(cur)];
      seen[static_cast<std::size_t>(cur)] = 1;
      if (mate_[static_cast<std::size_t>(cur)] == -1) break;
      cur = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(cur)])];
    }
    cur = b;
    while (true) {
      cur = base_[static_cast<std::size_t>(cur)];
      if (seen[static_cast<std::size_t>(cur)]) return cur;
      cur = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(cur)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(v)])])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mate_[static_cast<std::size_t>(v)];
      v = parent_[static_cast<std::size_t>(child)];
    }
  }

  bool try_augment(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;

    used_[static_cast<std::size_t>(root)] = 1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      std::vector<int> nbrs;
      g_.neighbours(v).for_each([&](int u) {
        if (active_.test(u)) nbrs.push_back(u);
      });
      for (int to : nbrs) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            mate_[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (mate_[static_cast<std::size_t>(to)] != -1 &&
             parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(to)])] != -1)) {
          // Odd cycle: contract the blossom around the common base.
          int cur_base = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (!active_.test(i)) continue;
            if (blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = cur_base;
              if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[static_cast<std::size_t>(to)] == -1) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (mate_[static_cast<std::size_t>(to)] == -1) {
            augment_along(to);
            return true;
          }
          int m = mate_[static_cast<std::size_t>(to)];
          used_[static_cast<std::size_t>(m)] = 1;
          queue.push_back(m);
        }
      }
    }
    return false;
  }

  void augment_along(int v) {
    while (v != -1) {
      int pv = parent_[static_cast<std::size_t>(v)];
      int next = mate_[static_cast<std::size_t>(pv)];
      mate_[static_cast<std::size_t>(v)] = pv;
      mate_[static_cast<std::size_t>(pv)] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  Bitset active_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, blossom_;
};

inline std::vector<int> matching_mates(const Graph& g, const Bitset& active) {
  return BlossomMatcher(g, active).run();
}

inline int matching_size(const Graph& g, const Bitset& active) {
  auto mate = matching_mates(g, active);
  int covered = 0;
  for (int m : mate) covered += (m != -1);
  return covered / 2;
}

}  // namespace detail

/// Maximum matching of g; deterministic for a fixed input.
inline Matching max_matching(const Graph& g) {
  auto mate = detail::matching_mates(g, Bitset::full(g.order()));
  Matching m;
  for (int v = 0; v < g.order(); ++v)
    if (mate[static_cast<std::size_t>(v)] > v)
      m.edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
  return m;
}

/// Matching number nu(g).
inline int matching_number(const Graph& g) {
  return detail::matching_size(g, Bitset::full(g.order()));
}

/// nu(g - v): maximum matching avoiding a vertex.
inline int matching_number_without(const Graph& g, int v) {
  Bitset active = Bitset::full(g.order());
  active.reset(v);
  return detail::matching_size(g, active);
}

/// Connected components of the induced subgraph g[u]. Each component is
/// ascending; components ordered by minimum element.
inline std::vector<std::vector<int>> components(const Graph& g, const std::vector<int>& u) {
  Bitset in = Bitset::of(g.order(), u);
  Bitset todo = in;
  std::vector<std::vector<int>> out;
  for (int s = todo.first(); s != -1; s = todo.first()) {
    Bitset comp(g.order());
    std::vector<int> stack{s};
    comp.set(s);
    todo.reset(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      Bitset fresh = g.neighbours(v) & todo;
      fresh.for_each([&](int w) {
        comp.set(w);
        todo.reset(w);
        stack.push_back(w);
      });
    }
    out.push_back(comp.to_vector());
  }
  return out;
}

/// Gallai-Edmonds decomposition by the definitional test: v is inessential
/// iff nu(g - v) = nu(g).
inline GEDecomposition ge_decompose(const Graph& g) {
  const int n = g.order();
  const int nu = matching_number(g);
  GEDecomposition ge;
  Bitset d(n);
  for (int v = 0; v < n; ++v)
    if (matching_number_without(g, v) == nu) d.set(v);
  Bitset a(n);
  for (int v = 0; v < n; ++v)
    if (!d.test(v) && g.neighbours(v).intersects(d)) a.set(v);
  for (int v = 0; v < n; ++v) {
    if (d.test(v))
      ge.d.push_back(v);
    else if (a.test(v))
      ge.a.push_back(v);
    else
      ge.c.push_back(v);
  }
  ge.d_components = components(g, ge.d);
  return ge;
}

/// True iff removing any one vertex leaves a perfectly matchable graph.
/// False for every graph of even order >= 2; true for K_1.
inline bool is_factor_critical(const Graph& g) {
  const int n = g.order();
  if (n % 2 == 0) return n == 0;
  for (int v = 0; v < n; ++v)
    if (matching_number_without(g, v) != (n - 1) / 2) return false;
  return true;
}

namespace detail {

inline void count_cliques_rec(const Graph& g, const Bitset& candidates, int depth, int target,
                              std::uint64_t& acc) {
  if (depth == target) {
    ++acc;
    return;
  }
  if (candidates.count() < target - depth) return;
  candidates.for_each([&](int v) {
    // Extend only by vertices above v: each clique counted once.
    Bitset rest = candidates & g.neighbours(v);
    for (int w = rest.first(); w != -1 && w <= v; w = rest.first()) rest.reset(w);
    count_cliques_rec(g, rest, depth + 1, target, acc);
  });
}

}  // namespace detail

/// Number of complete subgraphs on exactly `ell` vertices.
inline std::uint64_t count_cliques(const Graph& g, int ell) {
  detail::require(ell >= 1, "count_cliques: ell must be positive");
  if (ell == 1) return static_cast<std::uint64_t>(g.order());
  if (ell == 2) return static_cast<std::uint64_t>(g.edge_count());
  std::uint64_t acc = 0;
  detail::count_cliques_rec(g, Bitset::full(g.order()), 0, ell, acc);
  return acc;
}

}  // namespace grt
