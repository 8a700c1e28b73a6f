#pragma once

#include <cstdint>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "grt/bitset.hpp"
#include "grt/error.hpp"
#include "grt/formulas.hpp"
#include "grt/graph.hpp"
#include "grt/sigma.hpp"

namespace grt::oracle {

namespace detail {

inline int brute_nu_rec(const Graph& g, Bitset avail) {
  int v = -1;
  for (int u = avail.first(); u != -1; u = avail.next(u)) {
    if (g.neighbours(u).intersects(avail)) {
      v = u;
      break;
    }
  }
  if (v == -1) return 0;
  avail.reset(v);
  int best = brute_nu_rec(g, avail);  // v unmatched
  Bitset nbrs = g.neighbours(v) & avail;
  nbrs.for_each([&](int u) {
    Bitset rest = avail;
    rest.reset(u);
    int got = 1 + brute_nu_rec(g, rest);
    if (got > best) best = got;
  });
  return best;
}

inline int brute_nu_edge_subsets(const Graph& g) {
  auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    Bitset used(g.order());
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      auto [u, v] = edges[static_cast<std::size_t>(i)];
      if (used.test(u) || used.test(v)) ok = false;
      used.set(u);
      used.set(v);
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace detail

/// Exhaustive maximum-matching size, independent of the augmenting-path
/// implementation. Works for n <= 12 (recursive search) or |E| <= 24
/// (edge-subset enumeration).
inline int brute_nu(const Graph& g) {
  if (g.order() <= 12) return detail::brute_nu_rec(g, Bitset::full(g.order()));
  if (g.edge_count() <= 24) return detail::brute_nu_edge_subsets(g);
  throw budget_error("brute_nu: graph too large (need n <= 12 or |E| <= 24)");
}

namespace detail {

struct MaxMatchingScan {
  const Graph& g;
  int nu;
  Bitset missed;  // vertices missed by some maximum matching

  void rec(const Bitset& free, Bitset active, int size) {
    int v = -1;
    for (int u = active.first(); u != -1; u = active.next(u)) {
      if (g.neighbours(u).intersects(active)) {
        v = u;
        break;
      }
    }
    if (v == -1) {
      if (size == nu) missed |= free;
      return;
    }
    // Upper bound on how far this branch can still extend.
    int extendable = 0;
    for (int u = active.first(); u != -1; u = active.next(u))
      if (g.neighbours(u).intersects(active)) ++extendable;
    if (size + extendable / 2 < nu) return;

    Bitset skipped = active;
    skipped.reset(v);
    rec(free, skipped, size);  // v stays uncovered
    Bitset nbrs = g.neighbours(v) & active;
    nbrs.for_each([&](int u) {
      Bitset f2 = free, a2 = active;
      f2.reset(v);
      f2.reset(u);
      a2.reset(v);
      a2.reset(u);
      rec(f2, a2, size + 1);
    });
  }
};

}  // namespace detail

/// Gallai-Edmonds decomposition from the definition: enumerate every
/// maximum matching and collect the vertices each one misses.
inline GEDecomposition brute_ge(const Graph& g) {
  const int n = g.order();
  detail::MaxMatchingScan scan{g, brute_nu(g), Bitset(n)};
  scan.rec(Bitset::full(n), Bitset::full(n), 0);
  GEDecomposition ge;
  Bitset d = scan.missed;
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

struct SigmaSweep {
  int max_value = 0;
  std::vector<std::vector<int>> maximisers;  // every argmax, lexicographic
};

/// Exhaustive sigma evaluation over all subsets of the sub-universe
/// (vertices appearing in some X or Y set). Cap: sub-universe <= 20.
inline SigmaSweep brute_sigma_maximal(const SigmaProblem& p) {
  Bitset seen(p.universe);
  for (const auto& x : p.x_edges)
    for (int v : x) seen.set(v);
  for (const auto& y : p.y_edges)
    for (int v : y) seen.set(v);
  std::vector<int> sub = seen.to_vector();
  if (sub.size() > 20) throw budget_error("brute_sigma_maximal: sub-universe larger than 20");

  SigmaSweep out;
  out.max_value = 0;  // sigma(empty) = 0
  const std::uint32_t total = std::uint32_t{1} << sub.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<int> t;
    for (std::size_t i = 0; i < sub.size(); ++i)
      if ((mask >> i) & 1) t.push_back(sub[i]);
    int value = sigma_value(p, t);
    if (value > out.max_value) {
      out.max_value = value;
      out.maximisers.clear();
    }
    if (value == out.max_value) out.maximisers.push_back(std::move(t));
  }
  std::sort(out.maximisers.begin(), out.maximisers.end());
  return out;
}

/// Assignment cap for colouring enumeration; GRT_BUDGET overrides.
inline unsigned long long default_budget() {
  if (const char* env = std::getenv("GRT_BUDGET")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
    throw parse_error("GRT_BUDGET must be a positive integer");
  }
  return 1ull << 26;
}

struct GrtSearchResult {
  std::uint64_t value = 0;
  ColouredGraph witness;  // first maximiser in enumeration order
};

namespace detail {

struct GrtEnumerator {
  int ell, n, q;
  std::vector<int> caps;  // t_j - 1 per colour
  std::vector<std::pair<int, int>> pairs;
  std::vector<Graph> layers;  // colours 1..q at indices 0..q-1
  Graph joined;
  std::vector<int> assignment;
  bool found = false;
  std::uint64_t best = 0;
  std::vector<int> best_assignment;

  GrtEnumerator(int ell_, int n_, const MatchingProfile& t)
      : ell(ell_), n(n_), q(t.q()), joined(n_) {
    for (int x : t.thresholds) caps.push_back(x - 1);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    layers.assign(static_cast<std::size_t>(q), Graph(n));
    assignment.assign(pairs.size(), 0);
  }

  // Applies one pair assignment; false when the colour cap breaks.
  bool apply(std::size_t i, int c) {
    assignment[i] = c;
    if (c == 0) return true;
    auto [u, v] = pairs[i];
    Graph& layer = layers[static_cast<std::size_t>(c - 1)];
    layer.add_edge(u, v);
    joined.add_edge(u, v);
    return matching_number(layer) <= caps[static_cast<std::size_t>(c - 1)];
  }

  void unapply(std::size_t i) {
    int c = assignment[i];
    assignment[i] = 0;
    if (c == 0) return;
    auto [u, v] = pairs[i];
    layers[static_cast<std::size_t>(c - 1)].remove_edge(u, v);
    joined.remove_edge(u, v);
  }

  void dfs(std::size_t i) {
    if (i == pairs.size()) {
      std::uint64_t m = count_cliques(joined, ell);
      if (!found || m > best) {
        found = true;
        best = m;
        best_assignment = assignment;
      }
      return;
    }
    for (int c = 0; c <= q; ++c) {
      if (apply(i, c)) dfs(i + 1);
      unapply(i);
    }
  }

  ColouredGraph witness() const {
    std::vector<Graph> out(static_cast<std::size_t>(q) + 1, Graph(n));
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (best_assignment[i] >= 1)
        out[static_cast<std::size_t>(best_assignment[i])].add_edge(pairs[i].first,
                                                                   pairs[i].second);
    return ColouredGraph(std::move(out));
  }
};

struct GrtPartial {
  bool found = false;
  std::uint64_t best = 0;
  std::vector<int> best_assignment;
};

/// Runs the tail search below every prefix in [lo, hi); prefixes fixing
/// the first `depth` pairs, encoded in mixed radix with pair 0 most
/// significant so that ascending code means lexicographic order.
inline GrtPartial run_prefix_range(int ell, int n, const MatchingProfile& t, std::size_t depth,
                                   unsigned long long lo, unsigned long long hi) {
  GrtEnumerator e(ell, n, t);
  GrtPartial out;
  const unsigned long long base = static_cast<unsigned long long>(t.q()) + 1;
  for (unsigned long long code = lo; code < hi; ++code) {
    unsigned long long rest = code;
    std::size_t applied = 0;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      unsigned long long scale = 1;
      for (std::size_t k = i + 1; k < depth; ++k) scale *= base;
      int c = static_cast<int>((rest / scale) % base);
      ok = e.apply(i, c);
      ++applied;
    }
    if (ok) {
      e.found = false;
      e.dfs(depth);
      if (e.found && (!out.found || e.best > out.best)) {
        out.found = true;
        out.best = e.best;
        out.best_assignment = e.best_assignment;
      }
    }
    while (applied > 0) e.unapply(--applied);
  }
  return out;
}

}  // namespace detail

/// Exhaustive GRT: every assignment of each vertex pair to a colour or to
/// absence, keeping the colourings below every threshold, maximising the
/// clique count of the underlying graph. The witness is the first
/// maximiser in lexicographic order. The assignment space (q+1)^C(n,2)
/// must fit the budget. Partitions by the leading pairs are searched in
/// parallel and combined by value then enumeration order.
inline GrtSearchResult brute_grt(int ell, int n, const MatchingProfile& t,
                                 unsigned long long budget = 0) {
  grt::detail::require(ell >= 1 && n >= 1, "brute_grt: need ell >= 1 and n >= 1");
  if (budget == 0) budget = default_budget();
  const unsigned long long base = static_cast<unsigned long long>(t.q()) + 1;
  const std::size_t m = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
  unsigned long long total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > budget / base)
      throw budget_error("brute_grt: (q+1)^C(n,2) exceeds the assignment budget");
    total *= base;
  }

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t depth = 0;
  unsigned long long prefixes = 1;
  while (depth < m && prefixes < 8ull * hw) {
    prefixes *= base;
    ++depth;
  }

  detail::GrtPartial combined;
  if (hw == 1 || prefixes <= 1) {
    combined = detail::run_prefix_range(ell, n, t, depth, 0, prefixes);
  } else {
    std::vector<std::future<detail::GrtPartial>> futures;
    unsigned long long chunk = (prefixes + hw - 1) / hw;
    for (unsigned long long lo = 0; lo < prefixes; lo += chunk) {
      unsigned long long hi = std::min(prefixes, lo + chunk);
      futures.push_back(std::async(std::launch::async, detail::run_prefix_range, ell, n,
                                   std::cref(t), depth, lo, hi));
    }
    for (auto& f : futures) {
      detail::GrtPartial part = f.get();
      // Earlier ranges take precedence on ties: enumeration order.
      if (part.found && (!combined.found || part.best > combined.best)) combined = part;
    }
  }

  grt::detail::require(combined.found, "brute_grt: enumeration found no valid colouring");
  detail::GrtEnumerator e(ell, n, t);
  e.best_assignment = combined.best_assignment;
  return {combined.best, e.witness()};
}

/// Smallest n whose maximum below-threshold clique count falls short of
/// the complete graph: the Ramsey number of the matching profile.
inline int ramsey_search(const MatchingProfile& t, unsigned long long budget = 0) {
  for (int n = 1;; ++n) {
    GrtSearchResult r = brute_grt(2, n, t, budget);
    unsigned long long complete =
        static_cast<unsigned long long>(n) * (static_cast<unsigned long long>(n) - 1) / 2;
    if (r.value < complete) return n;
  }
}

}  // namespace grt::oracle
