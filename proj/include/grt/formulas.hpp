#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "grt/colouring.hpp"
#include "grt/error.hpp"

namespace grt {

using BigInt = boost::multiprecision::cpp_int;

/// Forbidden-matching thresholds t = (t_1, ..., t_q).
struct MatchingProfile {
  std::vector<int> thresholds;

  explicit MatchingProfile(std::vector<int> t) : thresholds(std::move(t)) {
    detail::require(!thresholds.empty(), "MatchingProfile: need at least one threshold");
    for (int x : thresholds) detail::require(x >= 1, "MatchingProfile: thresholds must be >= 1");
  }

  int q() const { return static_cast<int>(thresholds.size()); }

  int max_threshold() const {
    return *std::max_element(thresholds.begin(), thresholds.end());
  }

  int lambda() const {
    int sum = 0;
    for (int x : thresholds) sum += x - 1;
    return sum;
  }
};

/// Binomial coefficient in arbitrary precision; 0 outside 0 <= b <= a.
inline BigInt binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt num = 1;
  for (long long i = 1; i <= b; ++i) {
    num *= a - b + i;
    num /= i;
  }
  return num;
}

/// Clique count of the clique-cone graph: C(x+y, ell) + C(y, ell-1)(n-x-y).
inline BigInt phi(int ell, long long n, long long x, long long y) {
  detail::require(ell >= 1, "phi: ell must be positive");
  detail::require(x >= 0 && y >= 0, "phi: x and y must be nonnegative");
  detail::require(x + y <= n, "phi: clique and cone sets exceed the vertex count");
  return binomial(x + y, ell) + binomial(y, ell - 1) * (n - x - y);
}

enum class GrtRegime { trivial_zero, complete, sparse, dense };

inline const char* to_string(GrtRegime r) {
  switch (r) {
    case GrtRegime::trivial_zero: return "trivial_zero";
    case GrtRegime::complete: return "complete";
    case GrtRegime::sparse: return "sparse";
    case GrtRegime::dense: return "dense";
  }
  return "?";
}

struct GrtValue {
  BigInt value;
  GrtRegime regime = GrtRegime::trivial_zero;
  std::optional<BigInt> sparse_candidate;  // phi(1, Lambda), when it fits in n
  std::optional<BigInt> dense_candidate;   // phi(2T-1, Lambda-T+1), likewise
};

/// The closed-form maximum clique count over n-vertex graphs admitting a
/// colouring with no t_j-matching in colour j: zero below ell vertices,
/// C(n, ell) up to the Ramsey threshold, then the better of the sparse and
/// the dense extremal values (ties reported as sparse).
inline GrtValue grt_number(int ell, long long n, const MatchingProfile& t) {
  detail::require(ell >= 1, "grt_number: ell must be positive");
  detail::require(n >= 0, "grt_number: n must be nonnegative");
  const long long top = t.max_threshold(), lambda = t.lambda();
  GrtValue out;
  if (1 + lambda <= n) out.sparse_candidate = phi(ell, n, 1, lambda);
  if (top + lambda <= n) out.dense_candidate = phi(ell, n, 2 * top - 1, lambda - top + 1);
  if (n < ell) {
    out.value = 0;
    out.regime = GrtRegime::trivial_zero;
  } else if (n <= top + lambda) {
    out.value = binomial(n, ell);
    out.regime = GrtRegime::complete;
  } else {
    const BigInt& sparse = *out.sparse_candidate;
    const BigInt& dense = *out.dense_candidate;
    out.value = std::max(sparse, dense);
    out.regime = sparse >= dense ? GrtRegime::sparse : GrtRegime::dense;
  }
  return out;
}

/// Membership in the admissible region: y <= Lambda - floor(x/2).
inline bool admissible(long long x, long long y, const MatchingProfile& t) {
  detail::require(x >= 0 && y >= 0, "admissible: x and y must be nonnegative");
  return y <= t.lambda() - x / 2;
}

/// phi along the admissible boundary at odd clique sizes:
/// g(kappa) = phi(2*kappa + 1, Lambda - kappa).
inline BigInt g_kappa(int ell, long long n, const MatchingProfile& t, int kappa) {
  detail::require(kappa >= 0 && kappa <= t.max_threshold() - 1, "g_kappa: kappa out of range");
  return phi(ell, n, 2 * kappa + 1, t.lambda() - kappa);
}

inline BigInt delta_g(int ell, long long n, const MatchingProfile& t, int kappa) {
  detail::require(kappa >= 0 && kappa <= t.max_threshold() - 2, "delta_g: kappa out of range");
  return g_kappa(ell, n, t, kappa + 1) - g_kappa(ell, n, t, kappa);
}

/// The sparse extremal colouring of G_{n,1,Lambda}: the cone set splits
/// into blocks Y_i of size t_i - 1 and colour i takes every edge at Y_i.
inline ColouredGraph sparse_construction(int n, const MatchingProfile& t) {
  const int lambda = t.lambda();
  detail::require(n >= 1 + lambda, "sparse_construction: need n >= 1 + Lambda");
  std::vector<Graph> layers(static_cast<std::size_t>(t.q()) + 1, Graph(n));
  int at = 1;  // cone vertices follow the singleton clique set {0}
  for (int i = 1; i <= t.q(); ++i) {
    int size = t.thresholds[static_cast<std::size_t>(i - 1)] - 1;
    for (int y = at; y < at + size; ++y)
      for (int v = 0; v < n; ++v)
        if (v != y) layers[static_cast<std::size_t>(i)].add_edge(y, v);
    at += size;
  }
  return ColouredGraph(std::move(layers));
}

/// The dense extremal colouring of G_{n,2T-1,Lambda-T+1}: the colour with
/// the highest threshold owns the clique set, every other colour a cone
/// block of size t_j - 1.
inline ColouredGraph dense_construction(int n, const MatchingProfile& t) {
  const int top = t.max_threshold(), lambda = t.lambda();
  detail::require(n >= top + lambda, "dense_construction: need n >= ||t|| + Lambda");
  int star = t.q();
  while (t.thresholds[static_cast<std::size_t>(star - 1)] != top) --star;
  std::vector<Graph> layers(static_cast<std::size_t>(t.q()) + 1, Graph(n));
  const int x = 2 * top - 1;
  for (int u = 0; u < x; ++u)
    for (int v = u + 1; v < x; ++v) layers[static_cast<std::size_t>(star)].add_edge(u, v);
  int at = x;
  for (int j = 1; j <= t.q(); ++j) {
    if (j == star) continue;
    int size = t.thresholds[static_cast<std::size_t>(j - 1)] - 1;
    for (int y = at; y < at + size; ++y)
      for (int v = 0; v < n; ++v)
        if (v != y) layers[static_cast<std::size_t>(j)].add_edge(y, v);
    at += size;
  }
  return ColouredGraph(std::move(layers));
}

/// Normalised guaranteed matching size of the sparse construction at edge
/// density alpha, split over q colours.
inline double sparse_rate(int q, double alpha) {
  detail::require(q >= 1, "sparse_rate: q must be positive");
  if (alpha < 0.0 || alpha > 1.0) throw std::domain_error("sparse_rate: alpha outside [0, 1]");
  return (1.0 - std::sqrt(1.0 - alpha)) / q;
}

/// Closed form of the dense-construction rate at real parameter x; the
/// removable singularity at x = 3 is cancelled by conjugate
/// rationalisation, using (x^2 - 2x - 3) = (x-1)^2 - 4.
inline double dense_rate_at(double x, double alpha) {
  detail::require(x >= 1.0, "dense_rate_at: x must be at least 1");
  if (alpha < 0.0 || alpha > 1.0) throw std::domain_error("dense_rate_at: alpha outside [0, 1]");
  if (alpha == 0.0) return 0.0;
  double shifted = x - 1.0;
  return alpha / (shifted + std::sqrt((1.0 - alpha) * shifted * shifted + 4.0 * alpha));
}

/// M(q): the density where the sparse and dense rates cross.
inline double crossover_density(int q) {
  detail::require(q >= 1, "crossover_density: q must be positive");
  double qq = q;
  return 4.0 * (qq * qq + 3.0 * qq) / ((2.0 * qq + 3.0) * (2.0 * qq + 3.0));
}

struct AsymptoticRates {
  double sparse = 0.0;
  double dense = 0.0;
  double crossover = 0.0;  // M(q)
  double bound = 0.0;      // min(sparse, dense)
};

inline AsymptoticRates asymptotics(int q, double alpha) {
  AsymptoticRates out;
  out.sparse = sparse_rate(q, alpha);
  out.dense = dense_rate_at(static_cast<double>(q), alpha);
  out.crossover = crossover_density(q);
  out.bound = std::min(out.sparse, out.dense);
  return out;
}

}  // namespace grt
