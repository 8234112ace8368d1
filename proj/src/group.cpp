#include "lcsc/group.hpp"

#include <algorithm>

namespace lcsc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::MissingComposite: return "MissingComposite";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::NotFunctorial: return "NotFunctorial";
    case Errc::VertexNotUnit: return "VertexNotUnit";
    case Errc::BudgetedUnsupported: return "BudgetedUnsupported";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::FNotAtVertex: return "FNotAtVertex";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::NotAction: return "NotAction";
    case Errc::NotFree: return "NotFree";
    case Errc::NotACategory: return "NotACategory";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotAFunctor: return "NotAFunctor";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotGroupoid: return "NotGroupoid";
    case Errc::NotConnectedBase: return "NotConnectedBase";
    case Errc::Degenerate: return "Degenerate";
    case Errc::ZeroColumn: return "ZeroColumn";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BatteryTooLarge: return "BatteryTooLarge";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size();) {
    int32_t x = w[i];
    size_t j = i;
    while (j < w.size() && w[j] == x) ++j;
    int exp = (int)(j - i) * (x > 0 ? 1 : -1);
    if (!out.empty()) out += " ";
    out += names[std::abs(x) - 1];
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

Group Group::table(std::vector<std::string> names, const std::vector<std::vector<int>>& mul) {
  int n = (int)names.size();
  if (n == 0) fail(Errc::ValidationError, "group table must be nonempty");
  if ((int)mul.size() != n) fail(Errc::ValidationError, "group table is not square");
  for (auto& row : mul) {
    if ((int)row.size() != n) fail(Errc::ValidationError, "group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) fail(Errc::ValidationError, "group table entry out of range");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j]) fail(Errc::DuplicateId, "group element '" + names[i] + "'");

  // locate the unit
  int unit = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul[e][x] == x && mul[x][e] == x;
    if (ok) {
      unit = e;
      break;
    }
  }
  if (unit < 0) fail(Errc::ValidationError, "group table has no unit");

  // normalize: unit becomes index 0
  std::vector<int> perm(n);  // old -> new
  for (int i = 0; i < n; ++i) perm[i] = i == unit ? 0 : (i < unit ? i + 1 : i);
  Group g;
  g.kind_ = Kind::Table;
  g.names_.resize(n);
  g.mul_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) g.names_[perm[i]] = names[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.mul_[perm[i]][perm[j]] = perm[mul[i][j]];

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul_[g.mul_[a][b]][c] != g.mul_[a][g.mul_[b][c]])
          fail(Errc::ValidationError, "group table not associative at (" + g.names_[a] + "," +
                                          g.names_[b] + "," + g.names_[c] + ")");

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul_[a][b] == 0 && g.mul_[b][a] == 0) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0) fail(Errc::ValidationError, "group element '" + g.names_[a] + "' has no inverse");
  }
  return g;
}

Group Group::free_group(int rank) {
  if (rank < 0) fail(Errc::ValidationError, "free group rank must be nonnegative");
  Group g;
  g.kind_ = Kind::Free;
  g.rank_ = rank;
  g.words_.push_back({});
  g.intern_[{}] = 0;
  g.free_names_.push_back("1");
  return g;
}

Group Group::cyclic(int n) {
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return table(std::move(names), mul);
}

Group Group::symmetric3() { return dihedral(3); }

Group Group::dihedral(int n) {
  // elements r^i s^j, 0<=i<n, j in {0,1}; index = i + n*j
  int m = 2 * n;
  std::vector<std::string> names(m);
  for (int i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : (i == 1 ? "r" : "r" + std::to_string(i));
    names[i + n] = i == 0 ? "s" : (i == 1 ? "rs" : "r" + std::to_string(i) + "s");
  }
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  auto idx = [&](int i, int j) { return ((i % n) + n) % n + n * (j % 2); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l)
          mul[idx(i, j)][idx(k, l)] = idx(j == 0 ? i + k : i - k, j + l);
  return table(std::move(names), mul);
}

Group Group::quaternion8() {
  // 1,-1,i,-i,j,-j,k,-k encoded as (axis, sign): 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto enc = [](int axis, int neg) { return axis == 0 ? neg : 2 * axis + neg; };
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  // multiplication over axes {1,i,j,k}; sign_fix[a][b] is the extra -1
  // (i*j=k, j*i=-k, i*i=-1, ...)
  static const int axis_tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_fix[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  for (int a = 0; a < 4; ++a)
    for (int sa = 0; sa < 2; ++sa)
      for (int b = 0; b < 4; ++b)
        for (int sb = 0; sb < 2; ++sb) {
          int axis = axis_tab[a][b];
          int sign = (sa + sb + sign_fix[a][b]) % 2;
          mul[enc(a, sa)][enc(b, sb)] = enc(axis, sign);
        }
  return table(std::move(names), mul);
}

Group Group::direct_product(const Group& a, const Group& b) {
  if (!a.is_finite() || !b.is_finite()) fail(Errc::ValidationError, "direct product needs table groups");
  int na = a.order(), nb = b.order();
  std::vector<std::string> names(na * nb);
  std::vector<std::vector<int>> mul(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) names[i * nb + j] = "(" + a.elem_name(i) + "," + b.elem_name(j) + ")";
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      mul[i][j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  return table(std::move(names), mul);
}

Group Group::subgroup(const Group& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  int n = (int)elems.size();
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < n; ++i) pos[elems[i]] = i;
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) names[i] = g.elem_name(elems[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = pos[g.mul(elems[i], elems[j])];
      if (p < 0) fail(Errc::ValidationError, "element set is not closed under multiplication");
      mul[i][j] = p;
    }
  return table(std::move(names), mul);
}

int Group::order() const {
  if (kind_ == Kind::Free) {
    if (rank_ == 0) return 1;
    fail(Errc::ValidationError, "free group of positive rank is infinite");
  }
  return (int)names_.size();
}

int Group::rank() const {
  if (kind_ != Kind::Free) fail(Errc::ValidationError, "rank is defined for free groups only");
  return rank_;
}

int Group::mul(int a, int b) const {
  if (kind_ == Kind::Table) return mul_[a][b];
  return intern(word_concat(words_[a], words_[b]));
}

int Group::inv(int a) const {
  if (kind_ == Kind::Table) return inv_[a];
  return intern(word_inverse(words_[a]));
}

int Group::pow(int a, int n) const {
  int r = unit();
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  for (int i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

bool Group::is_abelian() const {
  if (kind_ == Kind::Free) return rank_ <= 1;
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

const std::string& Group::elem_name(int a) const {
  if (kind_ == Kind::Table) return names_[a];
  if ((int)free_names_.size() <= a) free_names_.resize(a + 1);
  if (free_names_[a].empty()) {
    std::vector<std::string> letters(rank_);
    for (int i = 0; i < rank_; ++i)
      letters[i] = rank_ <= 26 ? std::string(1, (char)('a' + i)) : "x" + std::to_string(i);
    free_names_[a] = render_word(words_[a], letters);
  }
  return free_names_[a];
}

int Group::elem_by_name(const std::string& name) const {
  if (kind_ == Kind::Table) {
    for (int i = 0; i < (int)names_.size(); ++i)
      if (names_[i] == name) return i;
  }
  return -1;
}

int Group::intern(Word w) const {
  free_reduce(w);
  for (int32_t x : w)
    if (x == 0 || std::abs(x) > rank_) fail(Errc::ValidationError, "word letter out of range");
  auto it = intern_.find(w);
  if (it != intern_.end()) return it->second;
  int id = (int)words_.size();
  intern_.emplace(w, id);
  words_.push_back(std::move(w));
  return id;
}

const Word& Group::word(int a) const {
  if (kind_ != Kind::Free) fail(Errc::ValidationError, "word() is for free groups");
  return words_[a];
}

int Group::free_generator(int i) const { return intern({(int32_t)(i + 1)}); }

std::vector<int> Group::closure(const std::vector<int>& gens) const {
  if (kind_ != Kind::Table) fail(Errc::BudgetedUnsupported, "subgroup closure needs a finite group");
  int n = order();
  std::vector<char> in(n, 0);
  std::vector<int> stack = {unit()};
  in[unit()] = 1;
  for (int g : gens)
    if (!in[g]) {
      in[g] = 1;
      stack.push_back(g);
    }
  for (size_t i = 0; i < stack.size(); ++i) {
    int a = stack[i];
    int b = inv_[a];
    if (!in[b]) {
      in[b] = 1;
      stack.push_back(b);
    }
    for (size_t j = 0; j < stack.size(); ++j) {
      int c = mul_[a][stack[j]];
      if (!in[c]) {
        in[c] = 1;
        stack.push_back(c);
      }
      c = mul_[stack[j]][a];
      if (!in[c]) {
        in[c] = 1;
        stack.push_back(c);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

bool Group::same_table(const Group& o) const {
  return kind_ == Kind::Table && o.kind_ == Kind::Table && names_ == o.names_ && mul_ == o.mul_;
}

std::vector<std::vector<int>> Group::all_homomorphisms(const Group& target) const {
  if (kind_ != Kind::Table || target.kind() != Kind::Table)
    fail(Errc::BudgetedUnsupported, "homomorphism enumeration needs table groups");
  int n = order(), m = target.order();

  // small generating set by greedy closure
  std::vector<int> gens;
  std::vector<int> cl = {unit()};
  while ((int)cl.size() < n) {
    for (int x = 0; x < n; ++x)
      if (!std::binary_search(cl.begin(), cl.end(), x)) {
        gens.push_back(x);
        break;
      }
    cl = closure(gens);
  }

  // express every element as a word in gens via BFS
  std::vector<std::vector<int>> expr(n);  // element -> list of generator indices
  std::vector<char> seen(n, 0);
  std::vector<int> queue = {unit()};
  seen[unit()] = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    int a = queue[i];
    for (int gi = 0; gi < (int)gens.size(); ++gi) {
      int b = mul_[a][gens[gi]];
      if (!seen[b]) {
        seen[b] = 1;
        expr[b] = expr[a];
        expr[b].push_back(gi);
        queue.push_back(b);
      }
    }
  }

  std::vector<std::vector<int>> homs;
  std::vector<int> image(gens.size(), 0);
  auto emit = [&]() {
    std::vector<int> h(n);
    for (int a = 0; a < n; ++a) {
      int v = target.unit();
      for (int gi : expr[a]) v = target.mul(v, image[gi]);
      h[a] = v;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (h[mul_[a][b]] != target.mul(h[a], h[b])) return;
    homs.push_back(std::move(h));
  };
  // odometer over |target|^|gens|
  long long total = 1;
  for (size_t i = 0; i < gens.size(); ++i) {
    total *= m;
    if (total > 2000000) fail(Errc::SearchBudgetExceeded, "homomorphism enumeration too large");
  }
  for (long long t = 0; t < total; ++t) {
    long long x = t;
    for (size_t i = 0; i < gens.size(); ++i) {
      image[i] = (int)(x % m);
      x /= m;
    }
    emit();
  }
  return homs;
}

}  // namespace lcsc
