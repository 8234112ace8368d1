#include "lcsc/fpgroup.hpp"

#include <algorithm>
#include <map>

#include "lcsc/errors.hpp"

namespace lcsc {

std::string FpGroup::render() const {
  std::string s = "⟨ ";
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ", ";
    s += generators[i];
  }
  s += " | ";
  for (size_t i = 0; i < relators.size(); ++i) {
    if (i) s += ", ";
    s += render_word(relators[i], generators);
  }
  s += " ⟩";
  return s;
}

namespace {

Word cyclic_normal_form(Word w) {
  free_reduce(w);
  // cyclically reduce
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  if (w.empty()) return w;
  auto least_rotation = [](const Word& u) {
    Word best = u;
    Word cur = u;
    for (size_t i = 1; i < u.size(); ++i) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    return best;
  };
  Word a = least_rotation(w), b = least_rotation(word_inverse(w));
  return a < b ? a : b;
}

// substitute generator g (1-based letter) by word rep everywhere in w
Word substitute(const Word& w, int32_t g, const Word& rep) {
  Word out;
  Word repinv = word_inverse(rep);
  for (int32_t x : w) {
    if (x == g)
      out.insert(out.end(), rep.begin(), rep.end());
    else if (x == -g)
      out.insert(out.end(), repinv.begin(), repinv.end());
    else
      out.push_back(x);
  }
  free_reduce(out);
  return out;
}

}  // namespace

FpGroup tietze_simplify(FpGroup p, int max_passes, size_t growth_cap) {
  for (auto& r : p.relators) free_reduce(r);

  for (int pass = 0; pass < max_passes; ++pass) {
    // drop empty relators and duplicates up to rotation/inversion
    std::vector<Word> kept;
    std::vector<Word> seen;
    for (auto& r : p.relators) {
      if (r.empty()) continue;
      Word nf = cyclic_normal_form(r);
      if (nf.empty()) continue;
      if (std::find(seen.begin(), seen.end(), nf) != seen.end()) continue;
      seen.push_back(nf);
      kept.push_back(r);
    }
    p.relators = std::move(kept);

    // pick the shortest relator containing some generator exactly once
    int best_r = -1, best_pos = -1;
    for (int ri = 0; ri < (int)p.relators.size(); ++ri) {
      const Word& r = p.relators[ri];
      if (best_r >= 0 && r.size() >= p.relators[best_r].size()) continue;
      std::map<int32_t, int> count;
      for (int32_t x : r) ++count[std::abs(x)];
      for (int pos = 0; pos < (int)r.size(); ++pos)
        if (count[std::abs(r[pos])] == 1) {
          best_r = ri;
          best_pos = pos;
          break;
        }
    }
    if (best_r < 0) break;

    Word r = p.relators[best_r];
    int32_t letter = r[best_pos];
    int32_t g = std::abs(letter);
    // r = u letter v = 1  =>  g = u^-1 v^-1 (letter positive) or v u (negative)
    Word u(r.begin(), r.begin() + best_pos), v(r.begin() + best_pos + 1, r.end());
    Word rep = letter > 0 ? word_concat(word_inverse(u), word_inverse(v)) : word_concat(v, u);

    p.relators.erase(p.relators.begin() + best_r);
    size_t total = 0;
    for (auto& w : p.relators) {
      w = substitute(w, g, rep);
      total += w.size();
    }
    if (total > growth_cap) fail(Errc::SearchBudgetExceeded, "Tietze substitution grew past the cap");

    // remove generator g (letters shift down)
    p.generators.erase(p.generators.begin() + (g - 1));
    for (auto& w : p.relators)
      for (auto& x : w) {
        if (x > g) --x;
        if (x < -g) ++x;
      }
  }
  return p;
}

std::vector<int64_t> abelianization(const FpGroup& p) {
  int n = (int)p.generators.size();
  std::vector<std::vector<int64_t>> m;
  for (auto& r : p.relators) m.push_back(exponent_sums(r, n));
  int rows = (int)m.size();

  auto guard = [](int64_t v) {
    if (v > (int64_t(1) << 40) || v < -(int64_t(1) << 40))
      fail(Errc::SearchBudgetExceeded, "abelianization entries grew past the cap");
    return v;
  };

  std::vector<int64_t> diag;
  int top = 0, left = 0;
  while (top < rows && left < n) {
    // find the entry of least nonzero magnitude
    int pr = -1, pc = -1;
    int64_t best = 0;
    for (int i = top; i < rows; ++i)
      for (int j = left; j < n; ++j) {
        int64_t v = std::abs(m[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    std::swap(m[top], m[pr]);
    for (int i = top; i < rows; ++i) std::swap(m[i][left], m[i][pc]);

    bool clean = true;
    for (int i = top + 1; i < rows; ++i) {
      int64_t q = m[i][left] / m[top][left];
      if (q != 0)
        for (int j = left; j < n; ++j) m[i][j] = guard(m[i][j] - q * m[top][j]);
      if (m[i][left] != 0) clean = false;
    }
    for (int j = left + 1; j < n; ++j) {
      int64_t q = m[top][j] / m[top][left];
      if (q != 0)
        for (int i = top; i < rows; ++i) m[i][j] = guard(m[i][j] - q * m[i][left]);
      if (m[top][j] != 0) clean = false;
    }
    if (!clean) continue;

    // pivot must divide the rest of the matrix for the divisibility chain
    int64_t d = std::abs(m[top][left]);
    bool divides = true;
    for (int i = top + 1; i < rows && divides; ++i)
      for (int j = left + 1; j < n && divides; ++j)
        if (m[i][j] % d != 0) {
          for (int jj = left; jj < n; ++jj) m[top][jj] = guard(m[top][jj] + m[i][jj]);
          divides = false;
        }
    if (!divides) continue;

    diag.push_back(d);
    ++top;
    ++left;
  }

  std::vector<int64_t> out;
  for (int64_t d : diag)
    if (d > 1) out.push_back(d);
  std::sort(out.begin(), out.end());
  int zero_count = n - (int)diag.size();
  for (int i = 0; i < zero_count; ++i) out.push_back(0);
  return out;
}

uint64_t hom_count(const FpGroup& p, const Group& k, uint64_t bound) {
  int n = (int)p.generators.size();
  uint64_t order = (uint64_t)k.order();
  if (p.relators.empty()) {
    uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
      if (total > UINT64_MAX / order) fail(Errc::BatteryTooLarge, "hom count overflows");
      total *= order;
    }
    return total;
  }
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > bound / order + 1) fail(Errc::BatteryTooLarge, "assignment space exceeds the bound");
    total *= order;
    if (total > bound) fail(Errc::BatteryTooLarge, "assignment space exceeds the bound");
  }
  std::vector<int> image(n, 0);
  uint64_t count = 0;
  for (uint64_t t = 0; t < total; ++t) {
    uint64_t x = t;
    for (int i = 0; i < n; ++i) {
      image[i] = (int)(x % order);
      x /= order;
    }
    bool ok = true;
    for (auto& r : p.relators) {
      int v = k.unit();
      for (int32_t l : r) v = k.mul(v, l > 0 ? image[l - 1] : k.inv(image[-l - 1]));
      if (v != k.unit()) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

const std::vector<Group>& fp_battery() {
  static const std::vector<Group> battery = {Group::cyclic(2),     Group::cyclic(3),
                                             Group::symmetric3(),  Group::cyclic(4),
                                             Group::direct_product(Group::cyclic(2), Group::cyclic(2)),
                                             Group::dihedral(4)};
  return battery;
}

const std::vector<std::string>& fp_battery_names() {
  static const std::vector<std::string> names = {"Z2", "Z3", "S3", "Z4", "Z2xZ2", "D4"};
  return names;
}

FpInvariants fp_invariants(const FpGroup& p, uint64_t bound) {
  FpGroup q = tietze_simplify(p);
  FpInvariants inv;
  inv.abelian = abelianization(q);
  for (auto& k : fp_battery()) inv.hom_counts.push_back(hom_count(q, k, bound));
  return inv;
}

FpGroup fp_free_product(const FpGroup& a, const FpGroup& b) {
  FpGroup out = a;
  for (auto& g : b.generators) {
    std::string name = g;
    while (std::find(out.generators.begin(), out.generators.end(), name) != out.generators.end())
      name += "'";
    out.generators.push_back(name);
  }
  int32_t shift = (int32_t)a.generators.size();
  for (auto r : b.relators) {
    for (auto& x : r) x = x > 0 ? x + shift : x - shift;
    out.relators.push_back(std::move(r));
  }
  return out;
}

FpGroup fp_of_table_group(const Group& g) {
  if (!g.is_finite()) fail(Errc::ValidationError, "table group expected");
  int n = g.order();
  FpGroup p;
  std::vector<int32_t> letter(n, 0);  // element -> generator letter (unit stays 0)
  for (int a = 1; a < n; ++a) {
    p.generators.push_back(g.elem_name(a));
    letter[a] = (int32_t)p.generators.size();
  }
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      Word r = {letter[a], letter[b]};
      int ab = g.mul(a, b);
      if (ab != 0) r.push_back(-letter[ab]);
      free_reduce(r);
      if (!r.empty()) p.relators.push_back(std::move(r));
    }
  return p;
}

}  // namespace lcsc
