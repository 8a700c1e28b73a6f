#pragma once

#include <algorithm>
#include <vector>

#include "grt/bitset.hpp"
#include "grt/colouring.hpp"
#include "grt/error.hpp"

namespace grt {

/// Subset optimisation instance over a vertex universe:
///   sigma(T) = sum_X floor(|T cap X|/2) + sum_Y |T cap Y| - |T|.
/// The GE-surplus of a coloured graph instantiates X with the D-clique
/// family and Y with the A-set family.
struct SigmaProblem {
  int universe = 0;
  std::vector<std::vector<int>> x_edges;
  std::vector<std::vector<int>> y_edges;

  static SigmaProblem ge_surplus(const CliqueHypergraph& h) {
    SigmaProblem p;
    p.universe = h.n;
    for (const auto& e : h.k_edges) p.x_edges.push_back(e.vertices);
    for (const auto& a : h.a_sets) p.y_edges.push_back(a.vertices);
    return p;
  }
};

inline int sigma_value(const SigmaProblem& p, const std::vector<int>& t) {
  Bitset tb = Bitset::of(p.universe, t);
  int r = 0;
  for (const auto& x : p.x_edges) r += Bitset::of(p.universe, x).intersection_count(tb) / 2;
  for (const auto& y : p.y_edges) r += Bitset::of(p.universe, y).intersection_count(tb);
  return r - tb.count();
}

namespace detail {

/// Branch-and-bound search for the maximum-cardinality global maximiser of
/// sigma, ties resolved to the lexicographically smallest vertex set.
class SigmaSearch {
public:
  explicit SigmaSearch(const SigmaProblem& p) : p_(p) {
    Bitset seen(p.universe);
    for (const auto& x : p.x_edges)
      for (int v : x) seen.set(v);
    for (const auto& y : p.y_edges)
      for (int v : y) seen.set(v);
    // Vertices outside every X and Y strictly decrease sigma, so the
    // search space is the sub-universe.
    sub_ = seen.to_vector();
    x_bits_.reserve(p.x_edges.size());
    for (const auto& x : p.x_edges) x_bits_.push_back(Bitset::of(p.universe, x));
    y_bits_.reserve(p.y_edges.size());
    for (const auto& y : p.y_edges) y_bits_.push_back(Bitset::of(p.universe, y));
  }

  std::vector<int> run() {
    best_value_ = 0;  // sigma(empty) = 0
    best_card_ = 0;
    best_.clear();
    x_count_.assign(x_bits_.size(), 0);
    y_count_.assign(y_bits_.size(), 0);
    current_.clear();
    dfs(0, 0);
    return best_;
  }

private:
  // r(T u R) - |T| bounds sigma of every T' with T <= T' <= T u R.
  int optimistic_bound(std::size_t at) const {
    Bitset rest(p_.universe);
    for (std::size_t i = at; i < sub_.size(); ++i) rest.set(sub_[i]);
    int r = 0;
    for (std::size_t i = 0; i < x_bits_.size(); ++i)
      r += (x_count_[i] + x_bits_[i].intersection_count(rest)) / 2;
    for (std::size_t i = 0; i < y_bits_.size(); ++i)
      r += y_count_[i] + y_bits_[i].intersection_count(rest);
    return r - static_cast<int>(current_.size());
  }

  void dfs(std::size_t at, int r_value) {
    if (at == sub_.size()) {
      int value = r_value - static_cast<int>(current_.size());
      int card = static_cast<int>(current_.size());
      // Strict improvement keeps the first (lexicographically smallest)
      // witness among ties.
      if (value > best_value_ || (value == best_value_ && card > best_card_)) {
        best_value_ = value;
        best_card_ = card;
        best_ = current_;
      }
      return;
    }
    int bound = optimistic_bound(at);
    int max_card = static_cast<int>(current_.size() + (sub_.size() - at));
    if (bound < best_value_ || (bound == best_value_ && max_card <= best_card_)) return;

    int v = sub_[at];
    // Include first: enumeration order is lexicographic.
    int gain = 0;
    for (std::size_t i = 0; i < x_bits_.size(); ++i)
      if (x_bits_[i].test(v)) {
        ++x_count_[i];
        if (x_count_[i] % 2 == 0) ++gain;
      }
    for (std::size_t i = 0; i < y_bits_.size(); ++i)
      if (y_bits_[i].test(v)) {
        ++y_count_[i];
        ++gain;
      }
    current_.push_back(v);
    dfs(at + 1, r_value + gain);
    current_.pop_back();
    for (std::size_t i = 0; i < x_bits_.size(); ++i)
      if (x_bits_[i].test(v)) --x_count_[i];
    for (std::size_t i = 0; i < y_bits_.size(); ++i)
      if (y_bits_[i].test(v)) --y_count_[i];

    dfs(at + 1, r_value);
  }

  const SigmaProblem& p_;
  std::vector<int> sub_;
  std::vector<Bitset> x_bits_, y_bits_;
  std::vector<int> x_count_, y_count_;
  std::vector<int> current_, best_;
  int best_value_ = 0, best_card_ = 0;
};

}  // namespace detail

/// Maximum-cardinality global maximiser of sigma (which is sigma-maximal:
/// no strict superset can tie a maximum). Ascending vertex order.
inline std::vector<int> sigma_maximal(const SigmaProblem& p) {
  return detail::SigmaSearch(p).run();
}

}  // namespace grt
