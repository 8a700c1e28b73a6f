#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "grt/compress.hpp"
#include "grt/graph.hpp"

namespace grt {

/// A q-multi-colouring (G_0, ..., G_q) on a shared vertex set, index 0
/// being the uncoloured class, together with the designated cover set
/// Theta. An edge may carry several colours. Theta is recomputed from the
/// degree definition only here, at construction; pipeline steps thread the
/// designated set through explicitly.
class ColouredGraph {
public:
  explicit ColouredGraph(std::vector<Graph> layers) : layers_(std::move(layers)) {
    detail::require(layers_.size() >= 2, "ColouredGraph: need layers G_0..G_q with q >= 1");
    n_ = layers_.front().order();
    for (const auto& g : layers_)
      detail::require(g.order() == n_, "ColouredGraph: layers on different vertex sets");
    for (int v = 0; v < n_; ++v)
      if (layers_.front().degree(v) == n_ - 1) theta_.push_back(v);
  }

  static ColouredGraph empty(int n, int q) {
    return ColouredGraph(std::vector<Graph>(static_cast<std::size_t>(q) + 1, Graph(n)));
  }

  /// Keeps an explicitly designated Theta instead of the degree rule.
  static ColouredGraph with_designated_theta(std::vector<Graph> layers, std::vector<int> theta) {
    ColouredGraph cg(std::move(layers));
    std::sort(theta.begin(), theta.end());
    theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
    cg.theta_ = std::move(theta);
    return cg;
  }

  int order() const { return n_; }
  int colours() const { return static_cast<int>(layers_.size()) - 1; }

  const Graph& layer(int j) const {
    detail::require(j >= 0 && j <= colours(), "ColouredGraph: bad layer index");
    return layers_[static_cast<std::size_t>(j)];
  }

  const std::vector<Graph>& layers() const { return layers_; }
  const std::vector<int>& theta() const { return theta_; }

  Graph underlying() const {
    Graph u(n_);
    for (const auto& g : layers_)
      for (auto [a, b] : g.edges()) u.add_edge(a, b);
    return u;
  }

  ColouredGraph with_layer(int j, Graph g) const {
    detail::require(j >= 0 && j <= colours(), "ColouredGraph: bad layer index");
    detail::require(g.order() == n_, "ColouredGraph: layer order mismatch");
    ColouredGraph out = *this;
    out.layers_[static_cast<std::size_t>(j)] = std::move(g);
    return out;
  }

  /// Induced colouring on `keep` (ascending); Theta recomputed.
  ColouredGraph induced(const std::vector<int>& keep) const {
    std::vector<Graph> sub;
    sub.reserve(layers_.size());
    for (const auto& g : layers_) sub.push_back(g.induced(keep));
    return ColouredGraph(std::move(sub));
  }

  bool operator==(const ColouredGraph&) const = default;

private:
  int n_ = 0;
  std::vector<Graph> layers_;
  std::vector<int> theta_;
};

/// Per-colour matching numbers (nu(G_1), ..., nu(G_q)).
inline std::vector<int> nu_vector(const ColouredGraph& cg) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cg.colours()));
  for (int j = 1; j <= cg.colours(); ++j) out.push_back(matching_number(cg.layer(j)));
  return out;
}

/// Sum of per-colour matching numbers.
inline int mns(const ColouredGraph& cg) {
  int total = 0;
  for (int nu : nu_vector(cg)) total += nu;
  return total;
}

struct KEdge {
  int colour = 0;  // 0 marks the designated singleton fallback
  std::vector<int> vertices;

  bool operator==(const KEdge&) const = default;
};

struct ASet {
  int colour = 0;
  std::vector<int> vertices;

  bool operator==(const ASet&) const = default;
};

/// The hypergraph of nontrivial D-cliques per colour plus the family of
/// nonempty A-sets.
struct CliqueHypergraph {
  int n = 0;
  std::vector<KEdge> k_edges;
  std::vector<ASet> a_sets;

  bool is_fallback() const { return k_edges.size() == 1 && k_edges.front().colour == 0; }

  bool operator==(const CliqueHypergraph&) const = default;
};

/// Collects the components of each G_j[D_j], which must all be cliques.
/// Components of size >= 2 become hyperedges; if none exists in any colour
/// the designated singleton {0} stands in.
inline CliqueHypergraph clique_hypergraph(const ColouredGraph& cg) {
  detail::require(cg.order() >= 1, "clique_hypergraph: empty vertex set");
  CliqueHypergraph h;
  h.n = cg.order();
  for (int j = 1; j <= cg.colours(); ++j) {
    const Graph& g = cg.layer(j);
    GEDecomposition ge = ge_decompose(g);
    for (const auto& comp : ge.d_components) {
      for (int v : comp)
        detail::require(g.neighbours(v).intersection_count(Bitset::of(cg.order(), comp)) ==
                            static_cast<int>(comp.size()) - 1,
                        "clique_hypergraph: a D-component is not a clique");
      if (comp.size() >= 2) h.k_edges.push_back({j, comp});
    }
    if (!ge.a.empty()) h.a_sets.push_back({j, ge.a});
  }
  if (h.k_edges.empty()) h.k_edges.push_back({0, {0}});
  return h;
}

namespace detail {

/// Union-find cycle test over the bipartite vertex/hyperedge incidence
/// graph.
class IncidenceForest {
public:
  explicit IncidenceForest(int nodes) : parent_(static_cast<std::size_t>(nodes)) {
    for (int i = 0; i < nodes; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  /// False if u and v were already connected (an incidence cycle).
  bool link(int u, int v) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent_[static_cast<std::size_t>(ru)] = rv;
    return true;
  }

private:
  std::vector<int> parent_;
};

}  // namespace detail

/// A loose hyperforest: the incidence graph is acyclic.
inline bool is_hyperforest(const CliqueHypergraph& h) {
  detail::IncidenceForest forest(h.n + static_cast<int>(h.k_edges.size()));
  for (std::size_t i = 0; i < h.k_edges.size(); ++i)
    for (int v : h.k_edges[i].vertices)
      if (!forest.link(v, h.n + static_cast<int>(i))) return false;
  return true;
}

struct Leaf {
  std::size_t edge_index = 0;  // position in k_edges
  int link = -1;               // unique non-leaf vertex, or min vertex of the edge

  bool operator==(const Leaf&) const = default;
};

/// Every leaf-edge of a hyperforest: an edge all but at most one of whose
/// vertices lie in no other edge. The link is the exceptional vertex when
/// it exists, otherwise the edge's lowest vertex.
inline std::vector<Leaf> leaves(const CliqueHypergraph& h) {
  detail::require(is_hyperforest(h), "leaves: hypergraph is not a hyperforest");
  std::vector<int> membership(static_cast<std::size_t>(h.n), 0);
  for (const auto& e : h.k_edges)
    for (int v : e.vertices) ++membership[static_cast<std::size_t>(v)];
  std::vector<Leaf> out;
  for (std::size_t i = 0; i < h.k_edges.size(); ++i) {
    const auto& verts = h.k_edges[i].vertices;
    int shared = -1;
    bool leaf = true;
    for (int v : verts) {
      if (membership[static_cast<std::size_t>(v)] >= 2) {
        if (shared != -1) {
          leaf = false;
          break;
        }
        shared = v;
      }
    }
    if (leaf) out.push_back({i, shared != -1 ? shared : verts.front()});
  }
  return out;
}

struct ColouringPredicates {
  bool proper = false;
  bool ad_complete = false;
  bool d_complete = false;
  bool d_acyclic = false;
  bool theta_complete = false;
};

inline ColouringPredicates predicates(const ColouredGraph& cg) {
  ColouringPredicates out;
  const Graph& g0 = cg.layer(0);
  const auto& theta = cg.theta();

  out.proper = true;
  for (int j = 1; j <= cg.colours() && out.proper; ++j)
    for (auto [u, v] : cg.layer(j).edges())
      if (g0.has_edge(u, v)) {
        out.proper = false;
        break;
      }
  if (out.proper) {
    Bitset th = Bitset::of(cg.order(), theta);
    for (auto [u, v] : g0.edges())
      if (!th.test(u) && !th.test(v)) {
        out.proper = false;
        break;
      }
  }

  out.ad_complete = true;
  out.d_complete = true;
  for (int j = 1; j <= cg.colours(); ++j) {
    if (out.ad_complete && !is_ad_complete(cg.layer(j))) out.ad_complete = false;
    if (out.d_complete && !is_d_complete(cg.layer(j))) out.d_complete = false;
  }

  out.d_acyclic = out.d_complete && is_hyperforest(clique_hypergraph(cg));

  std::vector<int> rest;
  Bitset th = Bitset::of(cg.order(), theta);
  for (int v = 0; v < cg.order(); ++v)
    if (!th.test(v)) rest.push_back(v);
  out.theta_complete = true;
  for (int j = 1; j <= cg.colours() && out.theta_complete; ++j)
    if (!is_ad_complete(cg.layer(j).induced(rest))) out.theta_complete = false;

  return out;
}

/// Uncolouring at T: every pair meeting T becomes an uncoloured edge and
/// leaves all colour classes; Theta grows by T. When the uncoloured layer
/// ends up complete the designated Theta must have size >= n-1.
inline ColouredGraph uncolour(const ColouredGraph& cg, const std::vector<int>& t) {
  const int n = cg.order();
  std::vector<Graph> layers = cg.layers();
  for (int v : t) {
    detail::require(v >= 0 && v < n, "uncolour: vertex out of range");
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      layers[0].add_edge(u, v);
      for (int j = 1; j <= cg.colours(); ++j) layers[static_cast<std::size_t>(j)].remove_edge(u, v);
    }
  }
  std::vector<int> theta = cg.theta();
  theta.insert(theta.end(), t.begin(), t.end());
  ColouredGraph out = ColouredGraph::with_designated_theta(std::move(layers), std::move(theta));
  if (2 * out.layer(0).edge_count() == static_cast<long long>(n) * (n - 1))
    detail::require(static_cast<int>(out.theta().size()) >= n - 1,
                    "uncolour: designated Theta too small for a complete uncoloured layer");
  return out;
}

}  // namespace grt
