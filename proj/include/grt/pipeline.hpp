#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grt/colouring.hpp"
#include "grt/compress.hpp"
#include "grt/sigma.hpp"

namespace grt {

/// Invariant snapshot: clique counts of the underlying graph for
/// ell = 2..5, the per-colour matching numbers, their sum, and Theta.
struct TraceSnapshot {
  std::array<std::uint64_t, 4> clique_counts{};
  std::vector<int> nu;
  int matching_sum = 0;
  std::vector<int> theta;

  bool operator==(const TraceSnapshot&) const = default;
};

inline TraceSnapshot take_snapshot(const ColouredGraph& cg) {
  TraceSnapshot s;
  Graph u = cg.underlying();
  for (int ell = 2; ell <= 5; ++ell)
    s.clique_counts[static_cast<std::size_t>(ell - 2)] = count_cliques(u, ell);
  s.nu = nu_vector(cg);
  for (int x : s.nu) s.matching_sum += x;
  s.theta = cg.theta();
  return s;
}

struct TraceRecord {
  std::string kind;  // ad_complete | decycle | dissolve | merge | recolour
  int colour = 0;    // 0 when the step is not colour-specific
  std::vector<std::pair<std::string, std::vector<int>>> sets;
  TraceSnapshot before, after;
};

/// Ordered log of compression steps with before/after snapshots.
struct DistilTrace {
  std::vector<TraceRecord> records;
};

/// Along the log, every clique count is non-decreasing and the nu-vector
/// is pointwise non-increasing. A recolouring record is exempt from the
/// nu comparison: it restores colours on an unchanged underlying graph.
inline bool trace_is_monotone(const DistilTrace& t) {
  auto cliques_ok = [](const TraceSnapshot& a, const TraceSnapshot& b) {
    for (std::size_t k = 0; k < 4; ++k)
      if (b.clique_counts[k] < a.clique_counts[k]) return false;
    return true;
  };
  auto nu_ok = [](const TraceSnapshot& a, const TraceSnapshot& b) {
    if (a.nu.size() != b.nu.size()) return false;
    for (std::size_t j = 0; j < a.nu.size(); ++j)
      if (b.nu[j] > a.nu[j]) return false;
    return true;
  };
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const TraceRecord& r = t.records[i];
    if (!cliques_ok(r.before, r.after)) return false;
    if (r.kind != "recolour" && !nu_ok(r.before, r.after)) return false;
    if (i > 0) {
      const TraceRecord& prev = t.records[i - 1];
      if (!cliques_ok(prev.after, r.before) || !nu_ok(prev.after, r.before)) return false;
    }
  }
  return true;
}

namespace detail {

inline void record_step(DistilTrace* trace, TraceRecord record) {
  if (trace) trace->records.push_back(std::move(record));
}

inline std::vector<int> complement(int n, const std::vector<int>& s) {
  Bitset b = Bitset::of(n, s);
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!b.test(v)) out.push_back(v);
  return out;
}

}  // namespace detail

/// Uncolours a sigma-maximal set of the GE-surplus problem. The input must
/// be proper and Theta-complete; the output is proper and D-acyclic, with
/// the matching-number sum dropping by at least |T|.
inline std::pair<ColouredGraph, std::vector<int>> decycle(const ColouredGraph& cg,
                                                          DistilTrace* trace = nullptr) {
  ColouringPredicates ps = predicates(cg);
  detail::require(ps.proper, "decycle: input colouring is not proper");
  detail::require(ps.theta_complete, "decycle: input colouring is not Theta-complete");

  SigmaProblem problem = SigmaProblem::ge_surplus(clique_hypergraph(cg));
  std::vector<int> t = sigma_maximal(problem);
  TraceSnapshot before = trace ? take_snapshot(cg) : TraceSnapshot{};
  ColouredGraph out = uncolour(cg, t);
  if (trace)
    detail::record_step(trace, {"decycle", 0, {{"T", t}}, before, take_snapshot(out)});
  return {std::move(out), std::move(t)};
}

/// Removes the leaf clique `leaf` by isolation against the larger clique
/// `other` of a different colour, restores Theta-completeness of the
/// touched colour, and decycles. Returns the uncoloured set, which equals
/// the chosen half of the leaf.
inline std::pair<ColouredGraph, std::vector<int>> dissolve(const ColouredGraph& cg,
                                                           const KEdge& leaf, const KEdge& other,
                                                           DistilTrace* trace = nullptr) {
  ColouringPredicates ps = predicates(cg);
  detail::require(ps.proper, "dissolve: input colouring is not proper");
  detail::require(ps.d_acyclic, "dissolve: input colouring is not D-acyclic");

  CliqueHypergraph h = clique_hypergraph(cg);
  std::size_t leaf_index = h.k_edges.size();
  for (std::size_t i = 0; i < h.k_edges.size(); ++i)
    if (h.k_edges[i] == leaf) leaf_index = i;
  detail::require(leaf_index < h.k_edges.size(), "dissolve: L is not a clique of the colouring");
  detail::require(leaf.colour >= 1, "dissolve: L must be a coloured clique");

  int link = -1;
  for (const Leaf& l : leaves(h))
    if (l.edge_index == leaf_index) link = l.link;
  detail::require(link != -1, "dissolve: L is not a leaf of the clique hypergraph");

  bool other_found = false;
  for (const auto& e : h.k_edges) other_found = other_found || e == other;
  detail::require(other_found, "dissolve: K is not a clique of the colouring");
  detail::require(other.colour != leaf.colour, "dissolve: L and K must have distinct colours");
  detail::require(other.vertices.size() >= leaf.vertices.size(), "dissolve: need |K| >= |L|");

  const int kappa = (static_cast<int>(leaf.vertices.size()) - 1) / 2;
  std::vector<int> shrunk(other.vertices.begin(),
                          other.vertices.begin() + (2 * kappa + 1));  // K'
  std::vector<int> half;                                              // S
  for (int v : leaf.vertices) {
    if (v == link) continue;
    half.push_back(v);
    if (static_cast<int>(half.size()) == kappa) break;
  }

  TraceSnapshot before = trace ? take_snapshot(cg) : TraceSnapshot{};

  Graph layer = d_isolate(cg.layer(leaf.colour), leaf.vertices, half, shrunk);
  std::vector<int> rest = detail::complement(cg.order(), cg.theta());
  Graph completed = cad_complete(layer.induced(rest));
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j)
      if (completed.has_edge(static_cast<int>(i), static_cast<int>(j)))
        layer.add_edge(rest[i], rest[j]);

  auto [out, t] = decycle(cg.with_layer(leaf.colour, std::move(layer)), nullptr);
  detail::require(t == half, "dissolve: decycling set differs from the isolated half");
  if (trace)
    detail::record_step(trace, {"dissolve",
                                leaf.colour,
                                {{"L", leaf.vertices}, {"K", other.vertices}, {"T", t}},
                                before,
                                take_snapshot(out)});
  return {std::move(out), std::move(t)};
}

/// Repeatedly removes a minimum-size leaf clique, dissolving against a
/// no-smaller clique of another colour when one exists and merging into a
/// same-colour leaf otherwise, until at most one clique remains. Returns
/// the union of the dissolved halves.
inline std::pair<ColouredGraph, std::vector<int>> peel(const ColouredGraph& cg,
                                                       DistilTrace* trace = nullptr) {
  ColouringPredicates ps = predicates(cg);
  detail::require(ps.proper, "peel: input colouring is not proper");
  detail::require(ps.d_acyclic, "peel: input colouring is not D-acyclic");

  ColouredGraph cur = cg;
  std::vector<int> cone;
  std::size_t previous = clique_hypergraph(cur).k_edges.size() + 1;
  while (true) {
    CliqueHypergraph h = clique_hypergraph(cur);
    if (h.is_fallback() || h.k_edges.size() <= 1) break;
    detail::require(h.k_edges.size() < previous, "peel: clique count failed to decrease");
    previous = h.k_edges.size();

    auto order_key = [&](const KEdge& e) {
      return std::tuple<std::size_t, int, int>(e.vertices.size(), e.colour, e.vertices.front());
    };
    std::vector<Leaf> ls = leaves(h);
    std::size_t pick = 0;
    for (std::size_t i = 1; i < ls.size(); ++i)
      if (order_key(h.k_edges[ls[i].edge_index]) < order_key(h.k_edges[ls[pick].edge_index]))
        pick = i;
    const KEdge leaf_edge = h.k_edges[ls[pick].edge_index];
    const int link = ls[pick].link;

    const KEdge* partner = nullptr;
    for (const auto& e : h.k_edges) {
      if (e.colour == leaf_edge.colour || e.vertices.size() < leaf_edge.vertices.size()) continue;
      if (!partner || order_key(e) < order_key(*partner)) partner = &e;
    }
    if (partner) {
      auto [next, t] = dissolve(cur, leaf_edge, *partner, trace);
      cone.insert(cone.end(), t.begin(), t.end());
      cur = std::move(next);
      continue;
    }

    // No other colour can absorb the leaf; merge it into a same-colour
    // leaf, which must exist and be no smaller.
    const Leaf* target = nullptr;
    for (const Leaf& l : ls) {
      const KEdge& e = h.k_edges[l.edge_index];
      if (l.edge_index == ls[pick].edge_index || e.colour != leaf_edge.colour ||
          e.vertices.size() < leaf_edge.vertices.size())
        continue;
      if (!target || order_key(e) < order_key(h.k_edges[target->edge_index])) target = &l;
    }
    detail::require(target != nullptr, "peel: no merge partner for a same-colour leaf");
    const KEdge& into = h.k_edges[target->edge_index];

    TraceSnapshot before = trace ? take_snapshot(cur) : TraceSnapshot{};
    Graph merged = d_merge(cur.layer(leaf_edge.colour), leaf_edge.vertices, link, into.vertices);
    cur = cur.with_layer(leaf_edge.colour, std::move(merged));
    if (trace)
      detail::record_step(trace, {"merge",
                                  leaf_edge.colour,
                                  {{"L", leaf_edge.vertices}, {"K", into.vertices}, {"w", {link}}},
                                  before,
                                  take_snapshot(cur)});
  }
  std::sort(cone.begin(), cone.end());
  return {std::move(cur), std::move(cone)};
}

struct DistilResult {
  ColouredGraph graph;
  std::vector<int> cone;    // S: designated cover of the uncoloured layer
  int kappa = 0;            // surviving clique has size 2*kappa + 1
  int clique_colour = 0;    // 0 when every colour ends up empty
  std::vector<int> clique;  // K: the clique set of the final clique-cone graph
  DistilTrace trace;
};

/// The full compression pipeline: per-colour AD-completion, decycling,
/// peeling. Requires an empty uncoloured layer, no colour with a perfect
/// matching, and matching-number sum below n. The result's underlying
/// graph is the clique-cone graph over (clique, cone).
inline DistilResult distil(const ColouredGraph& cg) {
  const int n = cg.order();
  detail::require(!cg.layer(0).has_any_edge(), "distil: uncoloured layer must be empty");
  detail::require(n <= 1 || cg.theta().empty(),
                  "distil: Theta must be empty when no edge is uncoloured");
  int sum = 0;
  for (int j = 1; j <= cg.colours(); ++j) {
    int nu = matching_number(cg.layer(j));
    detail::require(2 * nu < n, "distil: a colour class has a perfect matching");
    sum += nu;
  }
  detail::require(sum < n, "distil: matching-number sum must be below the vertex count");

  DistilResult result{cg, {}, 0, 0, {}, {}};
  for (int j = 1; j <= cg.colours(); ++j) {
    TraceSnapshot before = take_snapshot(result.graph);
    result.graph = result.graph.with_layer(j, ad_complete(result.graph.layer(j)));
    detail::record_step(&result.trace,
                        {"ad_complete", j, {}, before, take_snapshot(result.graph)});
  }

  auto [decycled, t] = decycle(result.graph, &result.trace);
  auto [peeled, extra] = peel(decycled, &result.trace);
  result.graph = std::move(peeled);
  result.cone = t;
  result.cone.insert(result.cone.end(), extra.begin(), extra.end());
  std::sort(result.cone.begin(), result.cone.end());

  CliqueHypergraph h = clique_hypergraph(result.graph);
  if (!h.is_fallback()) {
    detail::require(h.k_edges.size() == 1, "distil: more than one clique survived peeling");
    result.clique = h.k_edges.front().vertices;
    result.clique_colour = h.k_edges.front().colour;
    result.kappa = (static_cast<int>(result.clique.size()) - 1) / 2;
  } else {
    Bitset cone_bits = Bitset::of(n, result.cone);
    for (int v = 0; v < n; ++v)
      if (!cone_bits.test(v)) {
        result.clique = {v};
        break;
      }
    detail::require(!result.clique.empty(), "distil: cone set swallowed every vertex");
  }
  return result;
}

/// Per-item verification of the distilling contract against an input.
struct DistilChecks {
  bool single_colour = false;      // at most one coloured layer keeps edges
  bool clique_shape = false;       // that layer is an odd clique plus isolated vertices, off the cone
  bool clique_counts_up = false;   // m_ell non-decreasing for ell = 2..5
  bool nu_dominated = false;       // nu(out) = kappa at one colour, pointwise <= nu(in)
  bool mns_drop = false;           // mns(in) >= kappa + |S|
  bool cone_covers = false;        // S covers the uncoloured layer
  bool clique_cone_shape = false;  // underlying graph equals G_{n, 2kappa+1, |S|}

  bool all() const {
    return single_colour && clique_shape && clique_counts_up && nu_dominated && mns_drop &&
           cone_covers && clique_cone_shape;
  }
};

inline DistilChecks check_distilled(const ColouredGraph& input, const DistilResult& r) {
  DistilChecks out;
  const int n = r.graph.order();

  int nonempty = 0;
  for (int j = 1; j <= r.graph.colours(); ++j)
    if (r.graph.layer(j).has_any_edge()) ++nonempty;
  out.single_colour = nonempty <= 1;

  Bitset cone_bits = Bitset::of(n, r.cone);
  out.clique_shape = static_cast<int>(r.clique.size()) == 2 * r.kappa + 1;
  for (int v : r.clique)
    if (cone_bits.test(v)) out.clique_shape = false;
  if (nonempty == 1) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    for (const auto& comp : components(r.graph.layer(r.clique_colour), all)) {
      if (comp.size() == 1) continue;
      if (comp != r.clique) out.clique_shape = false;
      for (int v : comp)
        if (r.graph.layer(r.clique_colour).degree(v) != static_cast<int>(comp.size()) - 1)
          out.clique_shape = false;
    }
  } else if (r.kappa != 0) {
    out.clique_shape = false;
  }

  Graph in_u = input.underlying(), out_u = r.graph.underlying();
  out.clique_counts_up = true;
  for (int ell = 2; ell <= 5; ++ell)
    if (count_cliques(out_u, ell) < count_cliques(in_u, ell)) out.clique_counts_up = false;

  std::vector<int> nu_in = nu_vector(input), nu_out = nu_vector(r.graph);
  out.nu_dominated = nu_in.size() == nu_out.size();
  int out_sum = 0;
  for (std::size_t j = 0; j < nu_out.size(); ++j) {
    out_sum += nu_out[j];
    if (out.nu_dominated && nu_out[j] > nu_in[static_cast<std::size_t>(j)])
      out.nu_dominated = false;
  }
  if (out_sum != r.kappa) out.nu_dominated = false;

  out.mns_drop = mns(input) >= r.kappa + static_cast<int>(r.cone.size());

  out.cone_covers = true;
  for (auto [u, v] : r.graph.layer(0).edges())
    if (!cone_bits.test(u) && !cone_bits.test(v)) out.cone_covers = false;

  Graph expected(n);
  for (std::size_t i = 0; i < r.clique.size(); ++i)
    for (std::size_t j = i + 1; j < r.clique.size(); ++j)
      expected.add_edge(r.clique[i], r.clique[j]);
  for (int y : r.cone)
    for (int v = 0; v < n; ++v)
      if (v != y) expected.add_edge(y, v);
  out.clique_cone_shape = out_u == expected;

  return out;
}

/// Colours every uncoloured edge of a distilled graph: the cone set is
/// split greedily into colour classes S_j, sized so that colour j can
/// still absorb a star at each vertex of S_j, and every edge meeting S_j
/// takes colour j.
inline ColouredGraph recolour(const ColouredGraph& cg, const std::vector<int>& cone, int kappa,
                              const std::vector<int>& thresholds, DistilTrace* trace = nullptr) {
  const int n = cg.order();
  const int q = cg.colours();
  detail::require(static_cast<int>(thresholds.size()) == q, "recolour: threshold count != q");
  for (int t : thresholds) detail::require(t >= 1, "recolour: thresholds must be positive");

  Bitset cone_bits = Bitset::of(n, cone);
  for (auto [u, v] : cg.layer(0).edges())
    detail::require(cone_bits.test(u) || cone_bits.test(v),
                    "recolour: cone set does not cover the uncoloured layer");

  int survivor = 0;
  for (int j = 1; j <= q; ++j) {
    if (!cg.layer(j).has_any_edge()) continue;
    detail::require(survivor == 0, "recolour: more than one coloured layer is nonempty");
    survivor = j;
  }
  if (survivor != 0)
    detail::require(matching_number(cg.layer(survivor)) == kappa,
                    "recolour: kappa does not match the surviving clique");
  else
    detail::require(kappa == 0, "recolour: kappa positive but no coloured layer is nonempty");

  std::vector<int> capacity(static_cast<std::size_t>(q));
  long long total = 0;
  for (int j = 1; j <= q; ++j) {
    int c = thresholds[static_cast<std::size_t>(j - 1)] - 1 - (j == survivor ? kappa : 0);
    detail::require(c >= 0, "recolour: kappa exceeds the surviving colour's threshold");
    capacity[static_cast<std::size_t>(j - 1)] = c;
    total += c;
  }
  detail::require(total >= static_cast<long long>(cone.size()),
                  "recolour: colour capacities cannot absorb the cone set");

  TraceSnapshot before = trace ? take_snapshot(cg) : TraceSnapshot{};

  // Greedy fill in ascending colour order.
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(q));
  std::size_t at = 0;
  for (int j = 1; j <= q && at < cone.size(); ++j) {
    while (static_cast<int>(parts[static_cast<std::size_t>(j - 1)].size()) <
               capacity[static_cast<std::size_t>(j - 1)] &&
           at < cone.size())
      parts[static_cast<std::size_t>(j - 1)].push_back(cone[at++]);
  }

  std::vector<Graph> layers = cg.layers();
  for (int j = 1; j <= q; ++j) {
    Bitset part = Bitset::of(n, parts[static_cast<std::size_t>(j - 1)]);
    for (auto [u, v] : cg.layer(0).edges())
      if (part.test(u) || part.test(v)) layers[static_cast<std::size_t>(j)].add_edge(u, v);
  }
  layers[0] = Graph(n);
  ColouredGraph out(std::move(layers));
  if (trace) {
    TraceRecord record{"recolour", 0, {}, before, take_snapshot(out)};
    for (int j = 1; j <= q; ++j)
      record.sets.emplace_back("S_" + std::to_string(j), parts[static_cast<std::size_t>(j - 1)]);
    detail::record_step(trace, std::move(record));
  }
  return out;
}

}  // namespace grt
