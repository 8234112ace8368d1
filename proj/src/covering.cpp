#include "lcsc/covering.hpp"

#include <algorithm>
#include <map>

namespace lcsc {

CoveringCheck is_covering(const Category& d, const Category& c, const CatFunctor& p) {
  require_functor(d, c, p);
  std::vector<char> vhit(c.num_vertices(), 0), mhit(c.num_morphisms(), 0);
  for (int v : p.vmap) vhit[v] = 1;
  for (int m : p.mmap) mhit[m] = 1;
  if (std::find(vhit.begin(), vhit.end(), 0) != vhit.end())
    return {false, "not surjective on vertices"};
  if (std::find(mhit.begin(), mhit.end(), 0) != mhit.end())
    return {false, "not surjective on morphisms"};

  for (int v = 0; v < d.num_vertices(); ++v) {
    int pv = p.vmap[v];
    {  // outgoing: Dv -> Cp(v)
      std::vector<char> hit(c.num_morphisms(), 0);
      for (int m : d.with_src(v)) {
        if (hit[p.mmap[m]]) return {false, "Dv -> Cp(v) not injective at '" + d.vertex_name(v) + "'"};
        hit[p.mmap[m]] = 1;
      }
      for (int m : c.with_src(pv))
        if (!hit[m]) return {false, "Dv -> Cp(v) not surjective at '" + d.vertex_name(v) + "'"};
    }
    {  // incoming: vD -> p(v)C
      std::vector<char> hit(c.num_morphisms(), 0);
      for (int m : d.with_rng(v)) {
        if (hit[p.mmap[m]]) return {false, "vD -> p(v)C not injective at '" + d.vertex_name(v) + "'"};
        hit[p.mmap[m]] = 1;
      }
      for (int m : c.with_rng(pv))
        if (!hit[m]) return {false, "vD -> p(v)C not surjective at '" + d.vertex_name(v) + "'"};
    }
  }
  return {true, ""};
}

void validate_cat_action(const Category& c, const CatAction& a) {
  int np = (int)a.point_names.size();
  if ((int)a.fiber_of.size() != np || (int)a.act.size() != c.num_morphisms())
    fail(Errc::NotAnAction, "table sizes do not match");
  for (int v : a.fiber_of)
    if (v < 0 || v >= c.num_vertices()) fail(Errc::NotAnAction, "fiber vertex out of range");
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if ((int)a.act[m].size() != np) fail(Errc::NotAnAction, "action row has wrong size");
    std::vector<char> hit(np, 0);
    for (int i = 0; i < np; ++i) {
      int j = a.act[m][i];
      if (a.fiber_of[i] != c.src(m)) {
        if (j != -1) fail(Errc::NotAnAction, "morphism acts outside its source fiber");
        continue;
      }
      if (j < 0 || j >= np || a.fiber_of[j] != c.rng(m))
        fail(Errc::NotAnAction,
             "morphism '" + c.morphism_name(m) + "' does not map its fiber into the range fiber");
      if (hit[j]) fail(Errc::NotAnAction, "morphism '" + c.morphism_name(m) + "' is not injective on its fiber");
      hit[j] = 1;
    }
    // bijectivity: count source and range fibers
    int ns = 0, nr = 0;
    for (int i = 0; i < np; ++i) {
      if (a.fiber_of[i] == c.src(m)) ++ns;
      if (a.fiber_of[i] == c.rng(m)) ++nr;
    }
    if (ns != nr)
      fail(Errc::NotAnAction, "fibers of '" + c.morphism_name(m) + "' have different sizes");
  }
  for (int v = 0; v < c.num_vertices(); ++v)
    for (int i = 0; i < np; ++i)
      if (a.fiber_of[i] == v && a.act[c.identity(v)][i] != i)
        fail(Errc::NotAnAction, "identity of '" + c.vertex_name(v) + "' does not act trivially");
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = 0; g < c.num_morphisms(); ++g) {
      int32_t fg = c.compose_raw(f, g);
      if (fg < 0) continue;
      for (int i = 0; i < np; ++i) {
        if (a.fiber_of[i] != c.src(g)) continue;
        if (a.act[f][a.act[g][i]] != a.act[fg][i])
          fail(Errc::NotAnAction, "action is not functorial at (" + c.morphism_name(f) + ", " +
                                      c.morphism_name(g) + ")");
      }
    }
}

TransformationCategory transformation_category(const Category& c, const CatAction& a) {
  validate_cat_action(c, a);
  int np = (int)a.point_names.size();
  TransformationCategory tc;
  tc.morph_of_pair.assign((size_t)c.num_morphisms() * np, -1);

  CategoryTable t;
  // vertices (v, point in V_v)
  std::vector<int> vertex_of_point(np, -1);
  {
    int next = 0;
    for (int v = 0; v < c.num_vertices(); ++v)
      for (int i = 0; i < np; ++i) {
        if (a.fiber_of[i] != v) continue;
        vertex_of_point[i] = next++;
        t.add_vertex(c.vertex_name(v) + "*" + a.point_names[i],
                     c.morphism_name(c.identity(v)) + "*" + a.point_names[i]);
        tc.morph_of_pair[(size_t)c.identity(v) * np + i] = vertex_of_point[i];
        tc.base.push_back(c.identity(v));
        tc.point.push_back(i);
      }
  }
  for (int m = c.num_vertices(); m < c.num_morphisms(); ++m)
    for (int i = 0; i < np; ++i) {
      if (a.fiber_of[i] != c.src(m)) continue;
      int made = t.add_morphism(c.morphism_name(m) + "*" + a.point_names[i],
                                vertex_of_point[i], vertex_of_point[a.act[m][i]]);
      tc.morph_of_pair[(size_t)m * np + i] = made;
      tc.base.push_back(m);
      tc.point.push_back(i);
    }
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int g = 0; g < c.num_morphisms(); ++g) {
      int32_t fg = c.compose_raw(f, g);
      if (fg == Category::kNotComposable) continue;
      for (int i = 0; i < np; ++i) {
        if (a.fiber_of[i] != c.src(g)) continue;
        int fpair = tc.morph_of_pair[(size_t)f * np + a.act[g][i]];
        int gpair = tc.morph_of_pair[(size_t)g * np + i];
        if (fg == Category::kOverBudget)
          t.set_over_budget(fpair, gpair);
        else
          t.set_compose(fpair, gpair, tc.morph_of_pair[(size_t)fg * np + i]);
      }
    }
  if (!c.is_explicit()) {
    std::vector<int> grades, gens;
    for (int m = c.num_vertices(); m < c.num_morphisms(); ++m)
      for (int i = 0; i < np; ++i)
        if (a.fiber_of[i] == c.src(m)) grades.push_back(c.grade(m));
    for (int e : c.generators())
      for (int i = 0; i < np; ++i)
        if (a.fiber_of[i] == c.src(e)) gens.push_back(tc.morph_of_pair[(size_t)e * np + i]);
    t.make_graded(c.budget(), std::move(grades), std::move(gens), c.prefix_decidable());
  }
  tc.cat = std::move(t).finalize();
  return tc;
}

CatAction cocycle_action(const Category& c, const Cocycle& eta) {
  if (!eta.target.is_finite()) fail(Errc::BudgetedUnsupported, "cocycle actions need a finite group");
  const Group& g = eta.target;
  int ng = g.order();
  CatAction a;
  for (int v = 0; v < c.num_vertices(); ++v)
    for (int x = 0; x < ng; ++x) {
      a.point_names.push_back("(" + c.vertex_name(v) + "," + g.elem_name(x) + ")");
      a.fiber_of.push_back(v);
    }
  a.act.assign(c.num_morphisms(), std::vector<int>(a.point_names.size(), -1));
  for (int m = 0; m < c.num_morphisms(); ++m)
    for (int x = 0; x < ng; ++x)
      a.act[m][c.src(m) * ng + x] = c.rng(m) * ng + g.mul(eta(m), x);
  return a;
}

OrbitsResult orbits_and_stabilizers(const Category& c, const CatAction& a) {
  validate_cat_action(c, a);
  int np = (int)a.point_names.size();
  UnionFind uf(np);
  for (int m = 0; m < c.num_morphisms(); ++m)
    for (int i = 0; i < np; ++i)
      if (a.act[m][i] >= 0) uf.unite(i, a.act[m][i]);
  OrbitsResult r;
  r.orbits = uf.blocks();
  r.transitive = r.orbits.size() == 1;
  if (is_groupoid(c)) {
    r.stabilizers.assign(np, {});
    for (int i = 0; i < np; ++i) {
      int v = a.fiber_of[i];
      for (int m : c.with_src(v))
        if (c.rng(m) == v && a.act[m][i] == i) r.stabilizers[i].push_back(m);
    }
  }
  return r;
}

DeckGroup deck_transformations(const Category& d, const Category& c, const CatFunctor& p,
                               long long budget) {
  auto cov = is_covering(d, c, p);
  if (!cov.covering) fail(Errc::ValidationError, "not a covering: " + cov.witness);

  auto comps = d.connected_components();
  std::vector<int> roots;
  long long combos = 1;
  for (auto& blk : comps) {
    roots.push_back(blk[0]);
    // candidate images: vertices in the same p-fiber
    int count = 0;
    for (int w = 0; w < d.num_vertices(); ++w)
      if (p.vmap[w] == p.vmap[blk[0]]) ++count;
    combos *= count;
    if (combos > budget) fail(Errc::SearchBudgetExceeded, "deck search space exceeds the budget");
  }

  // propagate a choice of root images across each component using the
  // bijections Dv -> Cp(v) and vD -> p(v)C
  std::vector<std::vector<std::vector<int>>> out_by_image, in_by_image;
  out_by_image.assign(d.num_vertices(), std::vector<std::vector<int>>(c.num_morphisms()));
  in_by_image.assign(d.num_vertices(), std::vector<std::vector<int>>(c.num_morphisms()));
  for (int v = 0; v < d.num_vertices(); ++v) {
    for (int m : d.with_src(v)) out_by_image[v][p.mmap[m]].push_back(m);
    for (int m : d.with_rng(v)) in_by_image[v][p.mmap[m]].push_back(m);
  }

  auto try_extend = [&](const std::vector<int>& root_images) -> std::optional<CatFunctor> {
    CatFunctor f;
    f.vmap.assign(d.num_vertices(), -1);
    f.mmap.assign(d.num_morphisms(), -1);
    std::vector<int> queue;
    for (size_t i = 0; i < roots.size(); ++i) {
      f.vmap[roots[i]] = root_images[i];
      queue.push_back(roots[i]);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int m : d.with_src(v)) {
        auto& cand = out_by_image[f.vmap[v]][p.mmap[m]];
        if (cand.size() != 1) return std::nullopt;
        if (f.mmap[m] >= 0 && f.mmap[m] != cand[0]) return std::nullopt;
        f.mmap[m] = cand[0];
        int w = d.rng(m), iw = d.rng(cand[0]);
        if (f.vmap[w] < 0) {
          f.vmap[w] = iw;
          queue.push_back(w);
        } else if (f.vmap[w] != iw) {
          return std::nullopt;
        }
      }
      for (int m : d.with_rng(v)) {
        auto& cand = in_by_image[f.vmap[v]][p.mmap[m]];
        if (cand.size() != 1) return std::nullopt;
        if (f.mmap[m] >= 0 && f.mmap[m] != cand[0]) return std::nullopt;
        f.mmap[m] = cand[0];
        int w = d.src(m), iw = d.src(cand[0]);
        if (f.vmap[w] < 0) {
          f.vmap[w] = iw;
          queue.push_back(w);
        } else if (f.vmap[w] != iw) {
          return std::nullopt;
        }
      }
    }
    if (!is_bijective(d, d, f) || !is_functor(d, d, f)) return std::nullopt;
    for (int m = 0; m < d.num_morphisms(); ++m)
      if (p.mmap[f.mmap[m]] != p.mmap[m]) return std::nullopt;
    return f;
  };

  DeckGroup deck;
  std::vector<std::vector<int>> fiber_candidates(roots.size());
  for (size_t i = 0; i < roots.size(); ++i)
    for (int w = 0; w < d.num_vertices(); ++w)
      if (p.vmap[w] == p.vmap[roots[i]]) fiber_candidates[i].push_back(w);
  std::vector<size_t> idx(roots.size(), 0);
  while (true) {
    std::vector<int> root_images;
    for (size_t i = 0; i < roots.size(); ++i) root_images.push_back(fiber_candidates[i][idx[i]]);
    if (auto f = try_extend(root_images)) deck.elements.push_back(std::move(*f));
    // odometer
    size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < fiber_candidates[i].size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }

  // the identity comes first; order the rest deterministically by their maps
  std::sort(deck.elements.begin(), deck.elements.end(),
            [](const CatFunctor& a, const CatFunctor& b) { return a.mmap < b.mmap; });
  auto ident = identity_functor(d);
  auto it = std::find_if(deck.elements.begin(), deck.elements.end(),
                         [&](const CatFunctor& f) { return f.mmap == ident.mmap; });
  if (it == deck.elements.end()) fail(Errc::VerificationFailed, "identity is not a deck transformation");
  std::rotate(deck.elements.begin(), it, it + 1);

  int n = (int)deck.elements.size();
  std::vector<std::string> names(n);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) names[i] = "d" + std::to_string(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CatFunctor comp = compose_functors(d, deck.elements[j], deck.elements[i]);
      for (int k = 0; k < n; ++k)
        if (deck.elements[k].mmap == comp.mmap) {
          mul[i][j] = k;
          break;
        }
      if (mul[i][j] < 0)
        fail(Errc::VerificationFailed, "deck transformations are not closed under composition");
    }
  deck.group = Group::table(std::move(names), mul);
  return deck;
}

}  // namespace lcsc
