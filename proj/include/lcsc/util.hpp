#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace lcsc {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the least index as representative
    parent_[b] = a;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }

  int count_classes() {
    int c = 0;
    for (int i = 0; i < (int)parent_.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }

  // Blocks sorted by least member; members ascending.
  std::vector<std::vector<int>> blocks() {
    std::vector<std::vector<int>> out;
    std::vector<int> index(parent_.size(), -1);
    for (int i = 0; i < (int)parent_.size(); ++i) {
      int r = find(i);
      if (index[r] < 0) {
        index[r] = (int)out.size();
        out.emplace_back();
      }
      out[index[r]].push_back(i);
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

// Fixed-capacity bitset over dynamically chosen universe size.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // true if every bit of *this is also set in o
  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace lcsc
