#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "grt/formulas.hpp"
#include "helpers.hpp"

using namespace grt;

namespace {

// Direct form of the dense rate, undefined at x = 3.
double dense_rate_direct(double x, double alpha) {
  double den = x * x - 2.0 * x - 3.0;
  return (x - 1.0 - std::sqrt(1.0 - 2.0 * x + x * x - alpha * den)) / den;
}

// Richardson extrapolation of the x -> 3 limit from symmetric samples.
double dense_rate_limit_at_3(double alpha) {
  auto avg = [&](double eps) {
    return 0.5 * (dense_rate_direct(3.0 + eps, alpha) + dense_rate_direct(3.0 - eps, alpha));
  };
  double coarse = avg(1e-3), fine = avg(5e-4);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

TEST_CASE("binomial", "[formulas]") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(40, 20) == 137846528820LL);
  // Above 64 bits: value pinned from an independent computation.
  CHECK(binomial(151, 20) == BigInt("4185827140054456641268755"));
}

TEST_CASE("phi", "[formulas]") {
  CHECK(phi(3, 5, 3, 2) == binomial(5, 3));  // x + y = n
  CHECK(phi(2, 10, 1, 2) == 17);
  CHECK(phi(3, 8, 3, 2) == 13);
  CHECK_THROWS_AS(phi(2, 4, 3, 2), precondition_error);
}

TEST_CASE("phi equals the clique count of the clique-cone graph", "[formulas]") {
  for (int n = 1; n <= 12; ++n)
    for (int x = 0; x <= n; ++x)
      for (int y = 0; x + y <= n; ++y) {
        if (x + y < 1) continue;
        Graph g = grt::testing::clique_cone(n, x, y);
        for (int ell = 1; ell <= 6; ++ell)
          REQUIRE(phi(ell, n, x, y) == count_cliques(g, ell));
      }
}

TEST_CASE("grt_number examples", "[formulas]") {
  SECTION("single colour, t = 3, n = 10: the sparse side wins") {
    GrtValue v = grt_number(2, 10, MatchingProfile({3}));
    CHECK(v.value == 17);
    CHECK(v.regime == GrtRegime::sparse);
    CHECK(*v.dense_candidate == 10);
  }
  SECTION("two colours t = (2,2), n = 5: both candidates tie at 7") {
    GrtValue v = grt_number(2, 5, MatchingProfile({2, 2}));
    CHECK(v.value == 7);
    CHECK(v.regime == GrtRegime::sparse);
    CHECK(*v.sparse_candidate == 7);
    CHECK(*v.dense_candidate == 7);
  }
  SECTION("below the Ramsey threshold the complete graph survives") {
    GrtValue v = grt_number(2, 4, MatchingProfile({2, 2}));
    CHECK(v.value == 6);
    CHECK(v.regime == GrtRegime::complete);
  }
  SECTION("fewer vertices than the clique size") {
    GrtValue v = grt_number(4, 3, MatchingProfile({2}));
    CHECK(v.value == 0);
    CHECK(v.regime == GrtRegime::trivial_zero);
  }
}

TEST_CASE("grt_number equals the admissible-boundary maximum", "[formulas]") {
  for (int top = 1; top <= 5; ++top) {
    for (int lambda = top - 1; lambda <= 8; ++lambda) {
      // Realise (top, lambda) as a profile: one threshold top, the rest 2s.
      // top = 1 forces every threshold to 1, so only lambda = 0 exists.
      if (top == 1 && lambda > 0) continue;
      std::vector<int> t{top};
      for (int extra = lambda - (top - 1); extra > 0; --extra) t.push_back(2);
      MatchingProfile profile(t);
      REQUIRE(profile.max_threshold() == top);
      REQUIRE(profile.lambda() == lambda);
      for (int ell = 2; ell <= 5; ++ell) {
        for (long long n = std::max(ell, top + lambda); n <= 30; ++n) {
          BigInt best = 0;
          for (int x = 1; x <= 2 * top - 1; x += 2) {
            long long y = lambda - x / 2;
            if (y < 0 || x + y > n) continue;
            best = std::max(best, phi(ell, n, x, y));
          }
          REQUIRE(grt_number(ell, n, profile).value == best);
        }
      }
    }
  }
}

TEST_CASE("phi is monotone in each argument", "[formulas]") {
  for (int ell = 1; ell <= 5; ++ell)
    for (long long n = 1; n <= 14; ++n)
      for (long long x = 0; x <= n; ++x)
        for (long long y = 0; x + y <= n; ++y) {
          if (x + y + 1 <= n) {
            REQUIRE(phi(ell, n, x + 1, y) >= phi(ell, n, x, y));
            REQUIRE(phi(ell, n, x, y + 1) >= phi(ell, n, x, y));
          }
        }
}

TEST_CASE("admissible", "[formulas]") {
  MatchingProfile t({3, 2});  // top 3, lambda 3
  CHECK(admissible(1, t.lambda(), t));
  CHECK(admissible(2 * t.max_threshold() - 1, t.lambda() - t.max_threshold() + 1, t));
  CHECK_FALSE(admissible(1, t.lambda() + 1, t));
}

namespace {

// Does the fixed graph admit a colouring below every threshold? Single
// colours per edge suffice.
bool admits_free_colouring(const Graph& g, const MatchingProfile& t) {
  auto edges = g.edges();
  std::vector<Graph> layers(static_cast<std::size_t>(t.q()), Graph(g.order()));
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == edges.size()) return true;
    auto [u, v] = edges[i];
    for (int c = 1; c <= t.q(); ++c) {
      Graph& layer = layers[static_cast<std::size_t>(c - 1)];
      layer.add_edge(u, v);
      bool fits = matching_number(layer) <= t.thresholds[static_cast<std::size_t>(c - 1)] - 1;
      if (fits && rec(i + 1)) return true;
      layer.remove_edge(u, v);
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("free colourings of clique-cone graphs force admissibility", "[formulas]") {
  // Only above the Ramsey threshold: at n = t_max + Lambda the complete
  // graph itself is still colourable while (1, n-1) sits outside the
  // region, because nu(G_{n,x,y}) caps at floor(n/2).
  for (const auto& spec : {std::vector<int>{2, 2}, {3}}) {
    MatchingProfile t(spec);
    for (int n = t.max_threshold() + t.lambda() + 1; n <= 6; ++n) {
      for (int x = 1; x <= n; ++x) {
        for (int y = 0; x + y <= n; ++y) {
          Graph g = grt::testing::clique_cone(n, x, y);
          bool colourable = admits_free_colouring(g, t);
          // The converse fails (e.g. K_5 for t = (2,2)).
          if (colourable) REQUIRE(admissible(x, y, t));
          REQUIRE(matching_number(g) == std::min<long long>(n / 2, y + x / 2));
        }
      }
    }
  }
}

TEST_CASE("g_kappa endpoints and convexity sample", "[formulas]") {
  MatchingProfile t({4, 3});  // top 4, lambda 5
  const int ell = 3, n = 12;
  CHECK(g_kappa(ell, n, t, 0) == phi(ell, n, 1, t.lambda()));
  CHECK(g_kappa(ell, n, t, t.max_threshold() - 1) ==
        phi(ell, n, 2 * t.max_threshold() - 1, t.lambda() - t.max_threshold() + 1));
  CHECK(delta_g(ell, n, t, 0) <= delta_g(ell, n, t, 1));
  CHECK(delta_g(ell, n, t, 1) <= delta_g(ell, n, t, 2));
  CHECK_THROWS_AS(g_kappa(ell, n, t, 4), precondition_error);
  CHECK_THROWS_AS(delta_g(ell, n, t, 3), precondition_error);
}

TEST_CASE("sparse_construction", "[formulas]") {
  SECTION("t = (2), n = 3 is a two-leaf star") {
    ColouredGraph cg = sparse_construction(3, MatchingProfile({2}));
    CHECK(nu_vector(cg) == std::vector<int>{1});
    CHECK(cg.underlying() == grt::testing::clique_cone(3, 1, 1));
  }
  SECTION("t = (2,3), n = 7") {
    ColouredGraph cg = sparse_construction(7, MatchingProfile({2, 3}));
    CHECK(nu_vector(cg) == std::vector<int>{1, 2});
  }
  SECTION("clique counts match phi(1, Lambda)") {
    for (int n = 4; n <= 9; ++n) {
      MatchingProfile t({2, 3});
      ColouredGraph cg = sparse_construction(n, t);
      for (int ell = 2; ell <= 4; ++ell)
        REQUIRE(BigInt(count_cliques(cg.underlying(), ell)) == phi(ell, n, 1, t.lambda()));
    }
  }
  SECTION("too few vertices") {
    CHECK_THROWS_AS(sparse_construction(3, MatchingProfile({2, 3})), precondition_error);
  }
}

TEST_CASE("dense_construction", "[formulas]") {
  SECTION("t = (2,2), n = 6: colour 2 owns the 3-clique, colour 1 one cone vertex") {
    ColouredGraph cg = dense_construction(6, MatchingProfile({2, 2}));
    CHECK(nu_vector(cg) == std::vector<int>{1, 1});
    CHECK(cg.layer(2).edge_count() == 3);
    CHECK(cg.layer(1).degree(3) == 5);
    CHECK(cg.underlying() == grt::testing::clique_cone(6, 3, 1));
  }
  SECTION("single colour t = (3), n = 10 is the K_5 extremal graph") {
    ColouredGraph cg = dense_construction(10, MatchingProfile({3}));
    CHECK(nu_vector(cg) == std::vector<int>{2});
    CHECK(cg.underlying() == grt::testing::clique_cone(10, 5, 0));
  }
  SECTION("n at the Ramsey threshold colours the complete graph") {
    MatchingProfile t({3, 2});
    int n = t.max_threshold() + t.lambda();
    ColouredGraph cg = dense_construction(n, t);
    CHECK(cg.underlying() == Graph::complete(n));
    auto nu = nu_vector(cg);
    for (std::size_t j = 0; j < nu.size(); ++j)
      CHECK(nu[j] <= t.thresholds[j] - 1);
  }
  SECTION("clique counts match the dense phi value") {
    for (int n = 6; n <= 9; ++n) {
      MatchingProfile t({2, 3});
      ColouredGraph cg = dense_construction(n, t);
      for (int ell = 2; ell <= 4; ++ell)
        REQUIRE(BigInt(count_cliques(cg.underlying(), ell)) ==
                phi(ell, n, 2 * t.max_threshold() - 1, t.lambda() - t.max_threshold() + 1));
    }
  }
  SECTION("too few vertices") {
    CHECK_THROWS_AS(dense_construction(4, MatchingProfile({3, 2})), precondition_error);
  }
}

TEST_CASE("construction matchings never reach the thresholds", "[formulas]") {
  for (int n = 6; n <= 10; ++n) {
    for (const auto& t : {std::vector<int>{2}, {3}, {2, 2}, {3, 2}, {2, 2, 2}}) {
      MatchingProfile profile(t);
      if (n < 1 + profile.lambda()) continue;
      auto nu_s = nu_vector(sparse_construction(n, profile));
      for (std::size_t j = 0; j < nu_s.size(); ++j) REQUIRE(nu_s[j] <= t[j] - 1);
      if (n < profile.max_threshold() + profile.lambda()) continue;
      auto nu_d = nu_vector(dense_construction(n, profile));
      for (std::size_t j = 0; j < nu_d.size(); ++j) REQUIRE(nu_d[j] <= t[j] - 1);
    }
  }
}

TEST_CASE("asymptotic rates", "[formulas]") {
  CHECK(sparse_rate(3, 0.0) == 0.0);
  CHECK(asymptotics(3, 0.0).bound == 0.0);
  CHECK(sparse_rate(2, 0.75) == Catch::Approx(0.25));
  CHECK(crossover_density(1) == Catch::Approx(0.64));

  SECTION("sparse and dense rates cross at M(q)") {
    for (int q = 1; q <= 10; ++q) {
      double m = crossover_density(q);
      AsymptoticRates r = asymptotics(q, m);
      REQUIRE(std::abs(r.sparse - r.dense) < 1e-9);
    }
  }
  SECTION("closed form is continuous at x = 3") {
    // The rate is differentiable with slope about alpha(2-alpha)/16 at
    // x = 3, so one-sided steps of 1e-5 stay below 1e-6 and the symmetric
    // average kills the linear term.
    for (double alpha : {0.1, 0.25, 0.5, 0.64, 0.9, 1.0}) {
      double at3 = dense_rate_at(3.0, alpha);
      CHECK(std::abs(dense_rate_direct(3.0 + 1e-5, alpha) - at3) < 1e-6);
      CHECK(std::abs(dense_rate_direct(3.0 - 1e-5, alpha) - at3) < 1e-6);
      double symmetric =
          0.5 * (dense_rate_direct(3.0 + 1e-4, alpha) + dense_rate_direct(3.0 - 1e-4, alpha));
      CHECK(std::abs(symmetric - at3) < 1e-6);
      CHECK(std::abs(dense_rate_limit_at_3(alpha) - at3) < 1e-9);
    }
  }
  SECTION("closed form matches the direct expression away from 3") {
    for (double x : {1.0, 1.5, 2.0, 2.9, 3.2, 4.0, 7.0}) {
      for (double alpha : {0.2, 0.6, 1.0})
        CHECK(std::abs(dense_rate_at(x, alpha) - dense_rate_direct(x, alpha)) < 1e-12);
    }
  }
  SECTION("alpha domain") {
    CHECK_THROWS_AS(sparse_rate(2, 1.2), std::domain_error);
    CHECK_THROWS_AS(dense_rate_at(2.0, -0.1), std::domain_error);
  }
}
