#include "lcsc/category.hpp"

#include <algorithm>

namespace lcsc {

int Category::vertex_by_name(const std::string& s) const {
  auto it = vindex_.find(s);
  return it == vindex_.end() ? -1 : it->second;
}

int Category::morphism_by_name(const std::string& s) const {
  auto it = mindex_.find(s);
  return it == mindex_.end() ? -1 : it->second;
}

UnionFind Category::vertex_components() const {
  UnionFind uf(nv_);
  for (int m = nv_; m < num_morphisms(); ++m) uf.unite(rng_[m], src_[m]);
  return uf;
}

std::vector<std::vector<int>> Category::connected_components() const {
  return vertex_components().blocks();
}

bool Category::is_connected() const { return vertex_components().count_classes() == 1; }

int CategoryTable::add_vertex(const std::string& vertex_name, const std::string& identity_name) {
  if (!mnames_.empty()) fail(Errc::ValidationError, "all vertices must be added before morphisms");
  vnames_.push_back(vertex_name);
  idnames_.push_back(identity_name.empty() ? vertex_name : identity_name);
  return (int)vnames_.size() - 1;
}

int CategoryTable::add_morphism(const std::string& name, int src, int rng) {
  mnames_.push_back(name);
  src_.push_back(src);
  rng_.push_back(rng);
  return (int)vnames_.size() + (int)mnames_.size() - 1;
}

void CategoryTable::set_compose(int f, int g, int fg) { comp_[{f, g}] = fg; }
void CategoryTable::set_over_budget(int f, int g) { comp_[{f, g}] = Category::kOverBudget; }

void CategoryTable::make_graded(int budget, std::vector<int> grades_nonid,
                                std::vector<int> generators, bool prefix_decidable) {
  flavor_ = Category::Flavor::Graded;
  budget_ = budget;
  grade_ = std::move(grades_nonid);
  generators_ = std::move(generators);
  prefix_decidable_ = prefix_decidable;
}

Category CategoryTable::finalize(bool imply_identity_composites) && {
  Category c;
  c.nv_ = (int)vnames_.size();
  int n = c.nv_ + (int)mnames_.size();
  if (n > 4096)
    fail(Errc::SearchBudgetExceeded,
         "category too large to materialize (" + std::to_string(n) + " morphisms)");
  c.vnames_ = std::move(vnames_);
  c.mnames_ = std::move(idnames_);
  c.mnames_.insert(c.mnames_.end(), mnames_.begin(), mnames_.end());
  c.src_.resize(n);
  c.rng_.resize(n);
  for (int v = 0; v < c.nv_; ++v) c.src_[v] = c.rng_[v] = v;
  for (int i = 0; i < (int)src_.size(); ++i) {
    c.src_[c.nv_ + i] = src_[i];
    c.rng_[c.nv_ + i] = rng_[i];
  }
  c.flavor_ = flavor_;
  c.budget_ = budget_;
  c.prefix_decidable_ = prefix_decidable_;
  c.generators_ = std::move(generators_);
  if (flavor_ == Category::Flavor::Graded) {
    c.grade_.assign(n, 0);
    for (int i = 0; i < (int)grade_.size(); ++i) c.grade_[c.nv_ + i] = grade_[i];
  }

  for (int v = 0; v < c.nv_; ++v)
    if (!c.vindex_.emplace(c.vnames_[v], v).second)
      fail(Errc::DuplicateId, "vertex '" + c.vnames_[v] + "'");
  for (int m = 0; m < n; ++m) {
    if (!c.mindex_.emplace(c.mnames_[m], m).second)
      fail(Errc::DuplicateId, "morphism '" + c.mnames_[m] + "'");
    if (c.src_[m] < 0 || c.src_[m] >= c.nv_ || c.rng_[m] < 0 || c.rng_[m] >= c.nv_)
      fail(Errc::ValidationError, "morphism '" + c.mnames_[m] + "' has invalid endpoints");
  }

  c.comp_.assign((size_t)n * n, Category::kNotComposable);
  auto at = [&](int f, int g) -> int32_t& { return c.comp_[(size_t)f * n + g]; };
  if (imply_identity_composites)
    for (int m = 0; m < n; ++m) {
      at(c.rng_[m], m) = m;
      at(m, c.src_[m]) = m;
    }
  auto mn = [&](int m) { return c.mnames_[m]; };
  for (auto& [key, fg] : comp_) {
    auto [f, g] = key;
    int32_t& cell = at(f, g);
    if (cell != Category::kNotComposable && cell != fg)
      fail(Errc::AxiomViolation, "ambiguous composite for (" + mn(f) + ", " + mn(g) + ")");
    cell = fg;
  }

  // completeness, endpoint laws, grading
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      int32_t r = at(f, g);
      if (c.src_[f] != c.rng_[g]) {
        if (r != Category::kNotComposable)
          fail(Errc::AxiomViolation,
               "composite given for non-composable pair (" + mn(f) + ", " + mn(g) + ")");
        continue;
      }
      if (c.flavor_ == Category::Flavor::Graded) {
        bool fits = c.grade_[f] + c.grade_[g] <= c.budget_;
        if (!fits) {
          if (r >= 0)
            fail(Errc::AxiomViolation, "composite (" + mn(f) + ", " + mn(g) + ") exceeds the budget");
          at(f, g) = Category::kOverBudget;
          continue;
        }
      }
      if (r < 0) fail(Errc::MissingComposite, "(" + mn(f) + ", " + mn(g) + ")");
      if (c.rng_[r] != c.rng_[f])
        fail(Errc::AxiomViolation, "r(" + mn(f) + "*" + mn(g) + ") != r(" + mn(f) + ")");
      if (c.src_[r] != c.src_[g])
        fail(Errc::AxiomViolation, "s(" + mn(f) + "*" + mn(g) + ") != s(" + mn(g) + ")");
      if (c.flavor_ == Category::Flavor::Graded && c.grade_[r] != c.grade_[f] + c.grade_[g])
        fail(Errc::AxiomViolation, "grade of (" + mn(f) + "*" + mn(g) + ") is not additive");
    }

  // identity laws
  for (int v = 0; v < c.nv_; ++v)
    for (int g = 0; g < n; ++g) {
      if (c.rng_[g] == v && at(v, g) != g)
        fail(Errc::AxiomViolation, "id(" + c.vnames_[v] + ")*" + mn(g) + " != " + mn(g));
      if (c.src_[g] == v && at(g, v) != g)
        fail(Errc::AxiomViolation, mn(g) + "*id(" + c.vnames_[v] + ") != " + mn(g));
    }

  // associativity wherever the window defines all composites
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      if (c.src_[f] != c.rng_[g]) continue;
      int32_t fg = at(f, g);
      for (int k = 0; k < n; ++k) {
        if (c.src_[g] != c.rng_[k]) continue;
        int32_t gk = at(g, k);
        if (fg == Category::kOverBudget || gk == Category::kOverBudget) continue;
        int32_t lhs = at(fg, k), rhs = at(f, gk);
        if (lhs == Category::kOverBudget || rhs == Category::kOverBudget) continue;
        if (lhs != rhs)
          fail(Errc::AxiomViolation,
               "associativity fails at (" + mn(f) + ", " + mn(g) + ", " + mn(k) + ")");
      }
    }

  c.in_.assign(c.nv_, {});
  c.out_.assign(c.nv_, {});
  for (int m = 0; m < n; ++m) {
    c.in_[c.rng_[m]].push_back(m);
    c.out_[c.src_[m]].push_back(m);
  }
  return c;
}

Category validate_category(const CategorySpec& spec) {
  std::map<std::string, int> vat;
  for (int i = 0; i < (int)spec.vertices.size(); ++i)
    if (!vat.emplace(spec.vertices[i], i).second)
      fail(Errc::DuplicateId, "vertex '" + spec.vertices[i] + "'");

  std::map<std::string, int> mat;  // morphism name -> position in spec list
  for (int i = 0; i < (int)spec.morphisms.size(); ++i)
    if (!mat.emplace(spec.morphisms[i].id, i).second)
      fail(Errc::DuplicateId, "morphism '" + spec.morphisms[i].id + "'");

  auto vertex_of = [&](const std::string& s, const std::string& what) {
    auto it = vat.find(s);
    if (it == vat.end()) fail(Errc::ParseError, what + " references unknown vertex '" + s + "'");
    return it->second;
  };
  auto morph_of = [&](const std::string& s) {
    auto it = mat.find(s);
    if (it == mat.end()) fail(Errc::ParseError, "compose references unknown morphism '" + s + "'");
    return it->second;
  };

  int nm = (int)spec.morphisms.size();
  std::vector<int> src(nm), rng(nm);
  for (int i = 0; i < nm; ++i) {
    src[i] = vertex_of(spec.morphisms[i].src, "morphism '" + spec.morphisms[i].id + "'");
    rng[i] = vertex_of(spec.morphisms[i].rng, "morphism '" + spec.morphisms[i].id + "'");
  }

  std::vector<int32_t> raw((size_t)nm * nm, Category::kNotComposable);
  for (auto& t : spec.compose) {
    int f = morph_of(t[0]), g = morph_of(t[1]), fg = morph_of(t[2]);
    int32_t& cell = raw[(size_t)f * nm + g];
    if (cell != Category::kNotComposable && cell != fg)
      fail(Errc::AxiomViolation, "ambiguous composite for (" + t[0] + ", " + t[1] + ")");
    cell = fg;
  }

  // Identities: declared, or inferred. Inference tolerates missing table
  // entries so that an incomplete table is reported as MissingComposite by
  // the full validation rather than as a missing identity here.
  std::vector<int> idm(spec.vertices.size(), -1);
  for (auto& [vname, mname] : spec.identities) {
    int v = vertex_of(vname, "identities");
    auto it = mat.find(mname);
    if (it == mat.end())
      fail(Errc::ParseError, "identities references unknown morphism '" + mname + "'");
    idm[v] = it->second;
    if (src[it->second] != v || rng[it->second] != v)
      fail(Errc::AxiomViolation,
           "declared identity '" + mname + "' is not an endomorphism of '" + vname + "'");
  }
  for (int v = 0; v < (int)spec.vertices.size(); ++v) {
    if (idm[v] >= 0) continue;
    std::vector<int> weak;
    for (int e = 0; e < nm; ++e) {
      if (src[e] != v || rng[e] != v) continue;
      if (raw[(size_t)e * nm + e] != e && raw[(size_t)e * nm + e] != Category::kNotComposable)
        continue;
      bool ok = true;
      for (int g = 0; g < nm && ok; ++g) {
        int32_t l = raw[(size_t)e * nm + g], r = raw[(size_t)g * nm + e];
        if (rng[g] == v && l != g && l != Category::kNotComposable) ok = false;
        if (src[g] == v && r != g && r != Category::kNotComposable) ok = false;
      }
      if (ok) weak.push_back(e);
    }
    if (weak.empty())
      fail(Errc::AxiomViolation, "no identity morphism found at vertex '" + spec.vertices[v] + "'");
    // prefer a candidate whose identity laws are complete in the table
    int chosen = -1;
    for (int e : weak) {
      bool complete = raw[(size_t)e * nm + e] == e;
      for (int g = 0; g < nm && complete; ++g) {
        if (rng[g] == v && raw[(size_t)e * nm + g] != g) complete = false;
        if (src[g] == v && raw[(size_t)g * nm + e] != g) complete = false;
      }
      if (complete) {
        chosen = e;
        break;
      }
    }
    idm[v] = chosen >= 0 ? chosen : weak.front();
  }
  {
    std::vector<int> sorted = idm;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Errc::AxiomViolation, "distinct vertices share an identity morphism");
  }

  // reorder: identities first (in vertex order), then remaining morphisms in file order
  int nv = (int)spec.vertices.size();
  std::vector<int> newindex(nm, -1);
  std::vector<char> is_id(nm, 0);
  for (int v = 0; v < nv; ++v) {
    newindex[idm[v]] = v;
    is_id[idm[v]] = 1;
  }
  CategoryTable t;
  for (int v = 0; v < nv; ++v) t.add_vertex(spec.vertices[v], spec.morphisms[idm[v]].id);
  {
    int next = nv;
    for (int i = 0; i < nm; ++i) {
      if (is_id[i]) continue;
      newindex[i] = next++;
      t.add_morphism(spec.morphisms[i].id, src[i], rng[i]);
    }
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      int32_t fg = raw[(size_t)f * nm + g];
      if (fg >= 0) t.set_compose(newindex[f], newindex[g], newindex[fg]);
    }
  return std::move(t).finalize(/*imply_identity_composites=*/false);
}

CategorySpec to_spec(const Category& c) {
  CategorySpec s;
  for (int v = 0; v < c.num_vertices(); ++v) s.vertices.push_back(c.vertex_name(v));
  for (int m = 0; m < c.num_morphisms(); ++m)
    s.morphisms.push_back({c.morphism_name(m), c.vertex_name(c.src(m)), c.vertex_name(c.rng(m))});
  for (int v = 0; v < c.num_vertices(); ++v)
    s.identities[c.vertex_name(v)] = c.morphism_name(c.identity(v));
  int n = c.num_morphisms();
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      if (auto fg = c.compose(f, g))
        s.compose.push_back({c.morphism_name(f), c.morphism_name(g), c.morphism_name(*fg)});
  return s;
}

LcResult is_left_cancellative(const Category& c) {
  int n = c.num_morphisms();
  std::vector<int> seen_by(n, -1);  // product -> beta that produced it, for the current alpha
  for (int a = 0; a < n; ++a) {
    const auto& betas = c.with_rng(c.src(a));
    for (int b : betas) {
      int32_t p = c.compose_raw(a, b);
      if (p < 0) continue;
      if (seen_by[p] >= 0) {
        LcResult r;
        r.left_cancellative = false;
        r.witness = {{a, seen_by[p], b}};
        return r;
      }
      seen_by[p] = b;
    }
    for (int b : betas) {
      int32_t p = c.compose_raw(a, b);
      if (p >= 0) seen_by[p] = -1;
    }
  }
  return {true, std::nullopt};
}

void require_left_cancellative(const Category& c) {
  auto r = is_left_cancellative(c);
  if (!r.left_cancellative) {
    auto [a, b, g] = *r.witness;
    fail(Errc::ValidationError, "category is not left cancellative: " + c.morphism_name(a) + "*" +
                                    c.morphism_name(b) + " == " + c.morphism_name(a) + "*" +
                                    c.morphism_name(g));
  }
}

InvertiblesResult invertibles_and_equivalence(const Category& c) {
  if (!c.is_explicit())
    fail(Errc::BudgetedUnsupported, "invertibles need full enumeration; the view is budgeted");
  int n = c.num_morphisms();
  InvertiblesResult r;
  r.inverse.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int d : c.with_rng(c.src(g))) {
      if (c.src(d) != c.rng(g)) continue;
      if (c.compose_raw(g, d) == c.identity(c.rng(g)) &&
          c.compose_raw(d, g) == c.identity(c.src(g))) {
        r.inverse[g] = d;
        break;
      }
    }
    if (r.inverse[g] >= 0) r.invertibles.push_back(g);
  }
  UnionFind uf(n);
  for (int g : r.invertibles)
    for (int b : c.with_src(c.rng(g))) uf.unite(b, *c.compose(b, g));
  r.classes = uf.blocks();
  r.class_of.assign(n, -1);
  for (int i = 0; i < (int)r.classes.size(); ++i)
    for (int m : r.classes[i]) r.class_of[m] = i;
  return r;
}

Relabeled relabel(const Category& c, const std::vector<int>& nonid_order) {
  if (!c.is_explicit()) fail(Errc::BudgetedUnsupported, "relabel expects an explicit category");
  int nv = c.num_vertices(), n = c.num_morphisms();
  Relabeled out;
  out.vmap.resize(nv);
  out.mmap.assign(n, -1);
  for (int v = 0; v < nv; ++v) {
    out.vmap[v] = v;
    out.mmap[v] = v;
  }
  for (int i = 0; i < (int)nonid_order.size(); ++i) out.mmap[nonid_order[i]] = nv + i;

  CategoryTable t;
  for (int v = 0; v < nv; ++v) t.add_vertex("v" + std::to_string(v));
  for (int i = 0; i < (int)nonid_order.size(); ++i) {
    int m = nonid_order[i];
    t.add_morphism("m" + std::to_string(i), c.src(m), c.rng(m));
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      if (auto fg = c.compose(f, g)) t.set_compose(out.mmap[f], out.mmap[g], out.mmap[*fg]);
  out.cat = std::move(t).finalize();
  return out;
}

}  // namespace lcsc
