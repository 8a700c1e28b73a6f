#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "grt/colouring.hpp"
#include "helpers.hpp"

using namespace grt;
using grt::testing::Rng;

namespace {

ColouredGraph two_layer(int n, const std::vector<std::pair<int, int>>& e1,
                        const std::vector<std::pair<int, int>>& e2) {
  return ColouredGraph({Graph(n), Graph::from_edges(n, e1), Graph::from_edges(n, e2)});
}

// Cycle detection on the bipartite incidence graph, independent of the
// union-find route.
bool incidence_acyclic_dfs(const CliqueHypergraph& h) {
  int m = static_cast<int>(h.k_edges.size());
  int total = h.n + m;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  for (int i = 0; i < m; ++i)
    for (int v : h.k_edges[static_cast<std::size_t>(i)].vertices) {
      adj[static_cast<std::size_t>(v)].push_back(h.n + i);
      adj[static_cast<std::size_t>(h.n + i)].push_back(v);
    }
  std::vector<int> state(static_cast<std::size_t>(total), 0);
  for (int s = 0; s < total; ++s) {
    if (state[static_cast<std::size_t>(s)]) continue;
    std::vector<std::pair<int, int>> stack{{s, -1}};
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      if (state[static_cast<std::size_t>(v)]) return false;
      state[static_cast<std::size_t>(v)] = 1;
      for (int w : adj[static_cast<std::size_t>(v)])
        if (w != parent) stack.emplace_back(w, v);
    }
  }
  return true;
}

}  // namespace

TEST_CASE("nu_vector and mns", "[colouring]") {
  CHECK(nu_vector(ColouredGraph::empty(4, 3)) == std::vector<int>{0, 0, 0});
  CHECK(mns(ColouredGraph::empty(4, 3)) == 0);

  ColouredGraph cg = two_layer(5, {{0, 1}, {0, 2}, {1, 2}}, {{3, 4}});
  CHECK(nu_vector(cg) == std::vector<int>{1, 1});
  CHECK(mns(cg) == 2);

  // Sparse-style colouring of G_{6,1,3}: colour 1 at cone vertex 1, colour
  // 2 at cone vertices {2, 3}.
  Graph g1(6), g2(6);
  for (int v = 0; v < 6; ++v) {
    if (v != 1) g1.add_edge(1, v);
    if (v != 2) g2.add_edge(2, v);
    if (v != 3) g2.add_edge(3, v);
  }
  ColouredGraph sparse({Graph(6), g1, g2});
  CHECK(nu_vector(sparse) == std::vector<int>{1, 2});
  CHECK(mns(sparse) == 3);
}

TEST_CASE("theta follows the degree rule at construction", "[colouring]") {
  CHECK(ColouredGraph::empty(4, 1).theta().empty());

  Graph g0(3);
  g0.add_edge(0, 1);
  g0.add_edge(0, 2);
  ColouredGraph cg({g0, Graph(3)});
  CHECK(cg.theta() == std::vector<int>{0});

  ColouredGraph complete({Graph::complete(3), Graph(3)});
  CHECK(complete.theta() == std::vector<int>{0, 1, 2});
}

TEST_CASE("clique_hypergraph", "[colouring]") {
  SECTION("fallback on empty colouring") {
    CliqueHypergraph h = clique_hypergraph(ColouredGraph::empty(3, 2));
    CHECK(h.is_fallback());
    CHECK(h.k_edges == std::vector<KEdge>{{0, {0}}});
    CHECK(h.a_sets.empty());
  }
  SECTION("one coloured triangle") {
    ColouredGraph cg = two_layer(5, {{0, 1}, {0, 2}, {1, 2}}, {});
    CliqueHypergraph h = clique_hypergraph(cg);
    CHECK(h.k_edges == std::vector<KEdge>{{1, {0, 1, 2}}});
    CHECK(h.a_sets.empty());
  }
  SECTION("two triangles of different colours") {
    ColouredGraph apart = two_layer(6, {{0, 1}, {0, 2}, {1, 2}}, {{3, 4}, {3, 5}, {4, 5}});
    CHECK(clique_hypergraph(apart).k_edges.size() == 2);
    CHECK(is_hyperforest(clique_hypergraph(apart)));

    ColouredGraph share1 = two_layer(5, {{0, 1}, {0, 2}, {1, 2}}, {{2, 3}, {2, 4}, {3, 4}});
    CHECK(is_hyperforest(clique_hypergraph(share1)));

    ColouredGraph share2 = two_layer(4, {{0, 1}, {0, 2}, {1, 2}}, {{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(is_hyperforest(clique_hypergraph(share2)));
  }
  SECTION("A-sets are collected per colour") {
    ColouredGraph cg = two_layer(3, {{0, 1}, {1, 2}}, {});
    CliqueHypergraph h = clique_hypergraph(cg);
    CHECK(h.a_sets == std::vector<ASet>{{1, {1}}});
  }
}

TEST_CASE("is_hyperforest basics", "[colouring]") {
  CliqueHypergraph single{6, {{1, {0, 1, 2}}}, {}};
  CHECK(is_hyperforest(single));

  CliqueHypergraph sharing_two{6, {{1, {0, 1, 2}}, {2, {1, 2, 3}}}, {}};
  CHECK_FALSE(is_hyperforest(sharing_two));

  CliqueHypergraph sharing_one{6, {{1, {0, 1, 2}}, {2, {2, 3, 4}}}, {}};
  CHECK(is_hyperforest(sharing_one));
}

TEST_CASE("is_hyperforest agrees with a direct cycle search", "[colouring]") {
  Rng rng(606);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 3 + static_cast<int>(rng() % 10);
    int m = 1 + static_cast<int>(rng() % 6);
    CliqueHypergraph h;
    h.n = n;
    for (int i = 0; i < m; ++i) {
      int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(4, n)));
      std::vector<int> verts;
      while (static_cast<int>(verts.size()) < size) {
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
      }
      std::sort(verts.begin(), verts.end());
      h.k_edges.push_back({1 + i % 2, verts});
    }
    REQUIRE(is_hyperforest(h) == incidence_acyclic_dfs(h));
  }
}

TEST_CASE("leaves", "[colouring]") {
  SECTION("single edge links to its lowest vertex") {
    CliqueHypergraph h{5, {{1, {1, 2, 3}}}, {}};
    auto ls = leaves(h);
    REQUIRE(ls.size() == 1);
    CHECK(ls[0].link == 1);
  }
  SECTION("two edges sharing a vertex") {
    CliqueHypergraph h{7, {{1, {0, 1, 2}}, {2, {2, 3, 4}}}, {}};
    auto ls = leaves(h);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].link == 2);
    CHECK(ls[1].link == 2);
  }
  SECTION("star of three edges through one vertex") {
    CliqueHypergraph h{10, {{1, {0, 1, 4}}, {2, {2, 3, 4}}, {1, {4, 5, 6}}}, {}};
    auto ls = leaves(h);
    REQUIRE(ls.size() == 3);
    for (const auto& l : ls) CHECK(l.link == 4);
  }
  SECTION("a hyperforest with >= 2 edges has >= 2 leaves") {
    Rng rng(123);
    int seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
      int n = 4 + static_cast<int>(rng() % 9);
      CliqueHypergraph h;
      h.n = n;
      int m = 2 + static_cast<int>(rng() % 4);
      for (int i = 0; i < m; ++i) {
        int size = 2 + static_cast<int>(rng() % 3);
        std::vector<int> verts;
        while (static_cast<int>(verts.size()) < size) {
          int v = static_cast<int>(rng() % static_cast<unsigned>(n));
          if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        h.k_edges.push_back({1, verts});
      }
      if (!is_hyperforest(h)) continue;
      ++seen;
      REQUIRE(leaves(h).size() >= 2);
    }
    CHECK(seen > 40);
  }
  SECTION("rejects cyclic input") {
    CliqueHypergraph h{6, {{1, {0, 1, 2}}, {2, {1, 2, 3}}}, {}};
    CHECK_THROWS_AS(leaves(h), precondition_error);
  }
}

TEST_CASE("predicates", "[colouring]") {
  SECTION("empty colouring satisfies everything") {
    ColouringPredicates p = predicates(ColouredGraph::empty(4, 2));
    CHECK(p.proper);
    CHECK(p.ad_complete);
    CHECK(p.d_complete);
    CHECK(p.d_acyclic);
    CHECK(p.theta_complete);
  }
  SECTION("a path in one colour is not D-complete") {
    ColouredGraph cg = two_layer(3, {{0, 1}, {1, 2}}, {});
    ColouringPredicates p = predicates(cg);
    CHECK(p.proper);
    CHECK_FALSE(p.d_complete);
    CHECK_FALSE(p.d_acyclic);
  }
  SECTION("triangles sharing an edge: D-complete but cyclic") {
    ColouredGraph cg = two_layer(4, {{0, 1}, {0, 2}, {1, 2}}, {{1, 2}, {1, 3}, {2, 3}});
    ColouringPredicates p = predicates(cg);
    CHECK(p.d_complete);
    CHECK_FALSE(p.d_acyclic);
  }
  SECTION("uncovered uncoloured edge breaks properness") {
    Graph g0(4);
    g0.add_edge(2, 3);
    ColouredGraph cg({g0, Graph(4)});
    CHECK_FALSE(predicates(cg).proper);
  }
}

TEST_CASE("uncolour", "[colouring]") {
  ColouredGraph cg = two_layer(5, {{0, 1}, {0, 2}, {1, 2}}, {{3, 4}});

  SECTION("empty T is the identity") { CHECK(uncolour(cg, {}) == cg); }

  SECTION("T = V empties every colour") {
    std::vector<int> all{0, 1, 2, 3, 4};
    ColouredGraph out = uncolour(cg, all);
    CHECK(out.layer(0) == Graph::complete(5));
    for (int j = 1; j <= 2; ++j) CHECK_FALSE(out.layer(j).has_any_edge());
    CHECK(static_cast<int>(out.theta().size()) >= 4);
    CHECK(out.theta() == all);
  }

  SECTION("single vertex becomes universal and colour-isolated") {
    ColouredGraph out = uncolour(cg, {0});
    CHECK(out.layer(0).degree(0) == 4);
    CHECK(out.layer(1).degree(0) == 0);
    CHECK(out.layer(1).has_edge(1, 2));
    CHECK(out.theta() == std::vector<int>{0});
  }
}

TEST_CASE("uncolour monotonicity properties", "[colouring]") {
  Rng rng(31415);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    ColouredGraph cg({Graph(n), grt::testing::random_graph(rng, n, 0.4),
                      grt::testing::random_graph(rng, n, 0.3)});
    std::vector<int> t;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) t.push_back(v);
    ColouredGraph out = uncolour(cg, t);

    Graph before = cg.underlying(), after = out.underlying();
    for (auto [u, v] : before.edges()) REQUIRE(after.has_edge(u, v));
    for (int ell = 2; ell <= 4; ++ell)
      REQUIRE(count_cliques(after, ell) >= count_cliques(before, ell));

    auto nu_before = nu_vector(cg), nu_after = nu_vector(out);
    for (std::size_t j = 0; j < nu_before.size(); ++j) REQUIRE(nu_after[j] <= nu_before[j]);

    if (predicates(cg).proper) REQUIRE(predicates(out).proper);
  }
}

TEST_CASE("uncolour keeps properness", "[colouring]") {
  // Proper input: colour edges away from theta, uncoloured edges at a
  // universal vertex.
  Graph g0(5);
  for (int v = 1; v < 5; ++v) g0.add_edge(0, v);
  ColouredGraph cg({g0, Graph::from_edges(5, {{1, 2}, {3, 4}}), Graph(5)});
  REQUIRE(cg.theta() == std::vector<int>{0});
  REQUIRE(predicates(cg).proper);
  ColouredGraph out = uncolour(cg, {1});
  CHECK(predicates(out).proper);
  CHECK(out.theta() == std::vector<int>{0, 1});
}
