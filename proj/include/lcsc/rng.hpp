#pragma once

#include <cstdint>
#include <vector>

namespace lcsc {

// Deterministic splitmix64-based generator. We avoid std distributions so that
// fixture streams are identical across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  int below(int n) { return n <= 1 ? 0 : (int)(next() % (uint64_t)n); }

  // uniform in [lo, hi] inclusive
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) { return (double)(next() >> 11) * 0x1.0p-53 < p; }

  Rng fork() { return Rng(next()); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = (int)v.size() - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below((int)v.size())];
  }

 private:
  uint64_t state_;
};

}  // namespace lcsc
