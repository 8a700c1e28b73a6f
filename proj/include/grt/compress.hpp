#pragma once

#include <algorithm>
#include <vector>

#include "grt/graph.hpp"

namespace grt {

/// True iff g is a disjoint union of odd cliques, i.e. GE(g) = (0, 0, V).
inline bool is_d_complete(const Graph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  for (const auto& comp : components(g, all)) {
    if (comp.size() % 2 == 0) return false;
    for (int v : comp)
      if (g.neighbours(v).count() != static_cast<int>(comp.size()) - 1) return false;
  }
  return true;
}

/// Saturates g with every edge allowed by its GE-decomposition: all edges
/// within C, all edges incident to A, all edges inside each component of
/// G[D]. Preserves GE and nu; idempotent.
inline Graph cad_complete(const Graph& g) {
  GEDecomposition ge = ge_decompose(g);
  Graph out = g;
  for (std::size_t i = 0; i < ge.c.size(); ++i)
    for (std::size_t j = i + 1; j < ge.c.size(); ++j) out.add_edge(ge.c[i], ge.c[j]);
  for (int u : ge.a)
    for (int v = 0; v < g.order(); ++v)
      if (v != u) out.add_edge(u, v);
  for (const auto& comp : ge.d_components)
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j) out.add_edge(comp[i], comp[j]);
  return out;
}

inline bool is_cad_complete(const Graph& g) { return cad_complete(g) == g; }

/// True iff g is CAD-complete with C empty.
inline bool is_ad_complete(const Graph& g) {
  return ge_decompose(g).c.empty() && is_cad_complete(g);
}

/// Adds the single edge {u, v} with u in C and v in D of a CAD-complete
/// graph. The result has C' empty and A' = A + u, with nu unchanged.
inline Graph ca_transfer(const Graph& g, int u, int v) {
  GEDecomposition ge = ge_decompose(g);
  detail::require(std::binary_search(ge.c.begin(), ge.c.end(), u), "ca_transfer: u not in C");
  detail::require(std::binary_search(ge.d.begin(), ge.d.end(), v), "ca_transfer: v not in D");
  detail::require(is_cad_complete(g), "ca_transfer: input not CAD-complete");
  Graph out = g;
  out.add_edge(u, v);
  return out;
}

/// CAD-completes, then empties C by a single CA-transfer followed by
/// another CAD-completion. Requires nu(g) < n/2.
inline Graph ad_complete(const Graph& g) {
  detail::require(2 * matching_number(g) < g.order(),
                  "ad_complete: input has a perfect matching");
  Graph cur = cad_complete(g);
  GEDecomposition ge = ge_decompose(cur);
  if (ge.c.empty() || ge.d.empty()) return cur;
  cur = ca_transfer(cur, ge.c.front(), ge.d.front());
  return cad_complete(cur);
}

/// Breaks up the maximal clique L of a D-complete graph: removes E(L),
/// then joins S (a half-sized subset of L) to itself and to the scattered
/// set K. The result has GE = (0, S, D - S) and unchanged nu.
inline Graph d_isolate(const Graph& g, std::vector<int> l, std::vector<int> s,
                       std::vector<int> k) {
  std::sort(l.begin(), l.end());
  std::sort(s.begin(), s.end());
  std::sort(k.begin(), k.end());
  GEDecomposition ge = ge_decompose(g);
  detail::require(ge.c.empty() && ge.a.empty(), "d_isolate: C and A must be empty");
  detail::require(is_d_complete(g), "d_isolate: input not a disjoint union of odd cliques");

  const auto comps = ge.d_components;
  detail::require(std::find(comps.begin(), comps.end(), l) != comps.end(),
                  "d_isolate: L is not a maximal clique of g");
  detail::require(l.size() % 2 == 1 && l.size() >= 3, "d_isolate: |L| must be odd and >= 3");
  const int kappa = (static_cast<int>(l.size()) - 1) / 2;

  detail::require(std::includes(l.begin(), l.end(), s.begin(), s.end()),
                  "d_isolate: S must be a subset of L");
  Bitset s_bits = Bitset::of(g.order(), s);
  for (int v : k)
    detail::require(!s_bits.test(v), "d_isolate: K must avoid S");
  detail::require(static_cast<int>(s.size()) == kappa, "d_isolate: |S| must equal kappa");
  detail::require(static_cast<int>(k.size()) > kappa, "d_isolate: need |K| > kappa");

  // Scattered: the vertices of K lie in pairwise distinct cliques.
  std::vector<char> hit(comps.size(), 0);
  for (int v : k) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (std::binary_search(comps[i].begin(), comps[i].end(), v)) {
        detail::require(!hit[i], "d_isolate: K is not scattered");
        hit[i] = 1;
        break;
      }
    }
  }

  Graph out = g;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) out.remove_edge(l[i], l[j]);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) out.add_edge(s[i], s[j]);
  for (int u : s)
    for (int v : k) out.add_edge(u, v);
  return out;
}

/// Merges the maximal clique L minus one vertex w into the maximal clique
/// K of a D-complete graph; w becomes isolated. GE, k(D) and nu are all
/// unchanged and the result is again D-complete.
inline Graph d_merge(const Graph& g, std::vector<int> l, int w, std::vector<int> k) {
  std::sort(l.begin(), l.end());
  std::sort(k.begin(), k.end());
  detail::require(is_d_complete(g), "d_merge: input not a disjoint union of odd cliques");
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  const auto comps = components(g, all);
  detail::require(std::find(comps.begin(), comps.end(), l) != comps.end(),
                  "d_merge: L is not a maximal clique of g");
  detail::require(std::find(comps.begin(), comps.end(), k) != comps.end(),
                  "d_merge: K is not a maximal clique of g");
  detail::require(l != k, "d_merge: L and K must be distinct");
  detail::require(l.size() >= 2 && k.size() >= 2, "d_merge: cliques must be nontrivial");
  detail::require(std::binary_search(l.begin(), l.end(), w), "d_merge: w not in L");
  for (int v : k)
    detail::require(v == w || !std::binary_search(l.begin(), l.end(), v),
                    "d_merge: L minus w must avoid K");

  Graph out = g;
  for (int v : l)
    if (v != w) out.remove_edge(w, v);
  for (int u : l) {
    if (u == w) continue;
    for (int v : k) out.add_edge(u, v);
  }
  return out;
}

}  // namespace grt
