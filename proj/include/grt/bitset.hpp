#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace grt {

/// Bit set over [0, width). Width is fixed at construction; used for
/// adjacency rows and vertex sets throughout.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int width) : width_(width), words_(word_count(width), 0) {}

  static Bitset full(int width) {
    Bitset b(width);
    for (int i = 0; i < width; ++i) b.set(i);
    return b;
  }

  static Bitset of(int width, const std::vector<int>& members) {
    Bitset b(width);
    for (int v : members) b.set(v);
    return b;
  }

  int width() const { return width_; }

  bool test(int i) const {
    assert(i >= 0 && i < width_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < width_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < width_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  /// Set difference: removes every member of `o`.
  Bitset& operator-=(const Bitset& o) {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  int intersection_count(const Bitset& o) const {
    assert(width_ == o.width_);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool intersects(const Bitset& o) const {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool contains(const Bitset& o) const {
    assert(width_ == o.width_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (o.words_[i] & ~words_[i]) return false;
    return true;
  }

  /// Lowest set bit, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  /// Lowest set bit strictly greater than `i`, or -1.
  int next(int i) const {
    ++i;
    if (i >= width_) return -1;
    std::size_t w = static_cast<std::size_t>(i) >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
      if (++w >= words_.size()) return -1;
      cur = words_[w];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const Bitset&) const = default;

private:
  static std::size_t word_count(int width) {
    return static_cast<std::size_t>((width + 63) / 64);
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace grt
