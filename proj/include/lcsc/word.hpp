#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcsc {

// A word over a generator alphabet. Letter k>0 means generator k-1, letter
// -k means its inverse. Reduced means no adjacent cancelling pair.
using Word = std::vector<int32_t>;

inline void free_reduce(Word& w) {
  Word out;
  for (int32_t x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  w = std::move(out);
}

inline Word word_inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

inline Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  free_reduce(out);
  return out;
}

// Exponent sum per generator (abelianized image).
inline std::vector<int64_t> exponent_sums(const Word& w, int ngens) {
  std::vector<int64_t> e(ngens, 0);
  for (int32_t x : w) {
    if (x > 0)
      e[x - 1] += 1;
    else
      e[-x - 1] -= 1;
  }
  return e;
}

std::string render_word(const Word& w, const std::vector<std::string>& names);

}  // namespace lcsc
