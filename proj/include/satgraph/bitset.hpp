#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace satgraph {

// Fixed-capacity set of vertex ids packed into 64-bit words.  Iteration is
// always in ascending id order; the deterministic contracts upstream
// (clique witnesses, edge scans) lean on that.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet full(int capacity) {
    VertexSet s(capacity);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  int capacity() const { return capacity_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

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

  // Smallest member, or -1 when empty.
  int first() const { return scan(0); }

  // Smallest member strictly greater than i, or -1.
  int next_after(int i) const { return scan(i + 1); }

  // Number of members in the half-open range [lo, hi).
  int count_range(int lo, int hi) const {
    if (lo >= hi) return 0;
    int wlo = lo >> 6, whi = (hi - 1) >> 6;
    std::uint64_t head = ~std::uint64_t{0} << (lo & 63);
    std::uint64_t tail =
        (hi & 63) ? (std::uint64_t{1} << (hi & 63)) - 1 : ~std::uint64_t{0};
    if (wlo == whi) return std::popcount(words_[wlo] & head & tail);
    int c = std::popcount(words_[wlo] & head);
    for (int w = wlo + 1; w < whi; ++w) c += std::popcount(words_[w]);
    return c + std::popcount(words_[whi] & tail);
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) {
    a &= b;
    return a;
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool operator==(const VertexSet&) const = default;

private:
  int scan(int from) const {
    if (from >= capacity_ || from < 0) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  void trim() {
    int rem = capacity_ & 63;
    if (rem && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace satgraph
