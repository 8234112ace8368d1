#include "lcsc/zappa.hpp"

#include <algorithm>
#include <map>

namespace lcsc {

void validate_category_system(const CategorySystem& sys) {
  const Category& c = sys.cat;
  const Group& h = sys.group;
  if (!h.is_finite()) fail(Errc::BudgetedUnsupported, "category systems need a finite group");
  int nh = h.order(), n = c.num_morphisms();
  if ((int)sys.act.size() != nh || (int)sys.phi.size() != nh)
    fail(Errc::ValidationError, "action/cocycle tables do not match the group order");
  for (int x = 0; x < nh; ++x) {
    if ((int)sys.act[x].size() != n || (int)sys.phi[x].size() != n)
      fail(Errc::ValidationError, "action/cocycle tables do not match the category");
    std::vector<char> hit(n, 0);
    for (int m = 0; m < n; ++m) {
      int im = sys.act[x][m];
      if (im < 0 || im >= n || hit[im])
        fail(Errc::NotAnAction, "element '" + h.elem_name(x) + "' does not act by a permutation");
      hit[im] = 1;
      if (c.is_identity(m) != c.is_identity(im))
        fail(Errc::NotAnAction, "element '" + h.elem_name(x) + "' does not preserve identities");
      int p = sys.phi[x][m];
      if (p < 0 || p >= nh) fail(Errc::ValidationError, "cocycle entry out of range");
      if (c.is_identity(m) && p != x)
        fail(Errc::NotAnAction,
             "phi(" + h.elem_name(x) + ", " + c.morphism_name(m) + ") must equal " + h.elem_name(x));
    }
  }
  for (int m = 0; m < n; ++m)
    if (sys.act[h.unit()][m] != m)
      fail(Errc::NotAnAction, "the unit does not act trivially on '" + c.morphism_name(m) + "'");
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y) {
      int xy = h.mul(x, y);
      for (int m = 0; m < n; ++m)
        if (sys.act[x][sys.act[y][m]] != sys.act[xy][m])
          fail(Errc::NotAnAction, "action is not multiplicative at (" + h.elem_name(x) + ", " +
                                      h.elem_name(y) + ", " + c.morphism_name(m) + ")");
    }
  for (int x = 0; x < nh; ++x)
    for (int m = 0; m < n; ++m) {
      int im = sys.act[x][m];
      if (sys.act[x][c.identity(c.rng(m))] != c.identity(c.rng(im)))
        fail(Errc::NotAnAction, "r(h.m) != h.r(m) at (" + h.elem_name(x) + ", " + c.morphism_name(m) + ")");
      if (sys.act[x][c.identity(c.src(m))] != c.identity(c.src(im)))
        fail(Errc::NotAnAction, "s(h.m) != h.s(m) at (" + h.elem_name(x) + ", " + c.morphism_name(m) + ")");
      if (!c.is_explicit() && c.grade(im) != c.grade(m))
        fail(Errc::NotAnAction, "the action does not preserve grades");
    }
}

ZsProduct zs_product(const CategorySystem& sys) {
  validate_category_system(sys);
  const Category& c = sys.cat;
  const Group& h = sys.group;
  int nh = h.order(), n = c.num_morphisms(), nv = c.num_vertices();

  auto vertex_act = [&](int x, int v) { return sys.act[x][c.identity(v)]; };

  ZsProduct zp;
  zp.pair_index.assign(n, std::vector<int>(nh, -1));
  CategoryTable t;
  for (int v = 0; v < nv; ++v) {
    t.add_vertex(c.vertex_name(v), c.morphism_name(c.identity(v)) + "⋊" + h.elem_name(h.unit()));
    zp.pair_index[c.identity(v)][h.unit()] = v;
    zp.base.push_back(c.identity(v));
    zp.elem.push_back(h.unit());
  }
  std::vector<int> grades;
  for (int m = 0; m < n; ++m)
    for (int x = 0; x < nh; ++x) {
      if (c.is_identity(m) && x == h.unit()) continue;
      int sv = c.src(vertex_act(h.inv(x), c.src(m)));
      int made = t.add_morphism(c.morphism_name(m) + "⋊" + h.elem_name(x), sv, c.rng(m));
      zp.pair_index[m][x] = made;
      zp.base.push_back(m);
      zp.elem.push_back(x);
      grades.push_back(c.grade(m));
    }

  try {
    for (int m = 0; m < n; ++m)
      for (int x = 0; x < nh; ++x) {
        int sv = c.src(vertex_act(h.inv(x), c.src(m)));
        for (int k : c.with_rng(sv)) {
          int hk = sys.act[x][k];
          int32_t prod = c.compose_raw(m, hk);
          if (prod == Category::kNotComposable)
            fail(Errc::NotACategory, "action is inconsistent with composition at (" +
                                         c.morphism_name(m) + ", " + c.morphism_name(k) + ")");
          for (int y = 0; y < nh; ++y) {
            if (prod == Category::kOverBudget)
              t.set_over_budget(zp.pair_index[m][x], zp.pair_index[k][y]);
            else
              t.set_compose(zp.pair_index[m][x], zp.pair_index[k][y],
                            zp.pair_index[prod][h.mul(sys.phi[x][k], y)]);
          }
        }
      }
    if (!c.is_explicit()) {
      std::vector<int> gens;
      for (int e : c.generators())
        for (int x = 0; x < nh; ++x) gens.push_back(zp.pair_index[e][x]);
      t.make_graded(c.budget(), std::move(grades), std::move(gens), c.prefix_decidable());
    }
    zp.cat = std::move(t).finalize();
  } catch (const Error& e) {
    if (e.code() == Errc::NotACategory) throw;
    fail(Errc::NotACategory, std::string("the Zappa-Szep data does not form a category: ") + e.what());
  }
  return zp;
}

Cocycle promote_invariant_cocycle(const CategorySystem& sys, const Cocycle& psi,
                                  const ZsProduct& zs) {
  const Category& c = sys.cat;
  int nh = sys.group.order();
  for (int x = 0; x < nh; ++x)
    for (int m = 0; m < c.num_morphisms(); ++m)
      if (psi.values[sys.act[x][m]] != psi.values[m])
        fail(Errc::NotInvariant,
             "(" + sys.group.elem_name(x) + ", " + c.morphism_name(m) + ")");
  std::vector<int> values(zs.cat.num_morphisms());
  for (int p = 0; p < zs.cat.num_morphisms(); ++p) values[p] = psi.values[zs.base_of(p)];
  try {
    return validate_cocycle(zs.cat, psi.target, std::move(values));
  } catch (const Error& e) {
    fail(Errc::VerificationFailed, std::string("promoted cocycle failed validation: ") + e.what());
  }
}

ExchangeResult exchange_isomorphism_check(const CategorySystem& sys, const Cocycle& psi) {
  if (!psi.target.is_finite())
    fail(Errc::BudgetedUnsupported, "the exchange check enumerates G and needs it finite");
  ExchangeResult r;
  ZsProduct z = zs_product(sys);
  Cocycle eta = promote_invariant_cocycle(sys, psi, z);
  r.lhs = skew_product(z.cat, eta);

  SkewProduct k = skew_product(sys.cat, psi);
  int nh = sys.group.order();
  CategorySystem sys2;
  sys2.cat = k.cat;
  sys2.group = sys.group;
  sys2.act.assign(nh, std::vector<int>(k.cat.num_morphisms()));
  sys2.phi.assign(nh, std::vector<int>(k.cat.num_morphisms()));
  for (int x = 0; x < nh; ++x)
    for (int m = 0; m < k.cat.num_morphisms(); ++m) {
      sys2.act[x][m] = k.pair(sys.act[x][k.base_of(m)], k.elem_of(m));
      sys2.phi[x][m] = sys.phi[x][k.base_of(m)];
    }
  r.rhs = zs_product(sys2);

  CatFunctor ex;
  ex.vmap.resize(r.lhs.cat.num_vertices());
  ex.mmap.resize(r.lhs.cat.num_morphisms());
  for (int p = 0; p < r.lhs.cat.num_morphisms(); ++p) {
    int zpair = r.lhs.base_of(p), g = r.lhs.elem_of(p);
    int m = z.base_of(zpair), x = z.elem_of(zpair);
    ex.mmap[p] = r.rhs.pair(k.pair(m, g), x);
  }
  for (int v = 0; v < r.lhs.cat.num_vertices(); ++v) {
    int im = ex.mmap[v];
    if (!r.rhs.cat.is_identity(im))
      fail(Errc::VerificationFailed, "exchange map does not send vertices to vertices");
    ex.vmap[v] = im;
  }
  if (!is_bijective(r.lhs.cat, r.rhs.cat, ex))
    fail(Errc::VerificationFailed, "exchange map is not bijective");
  try {
    require_functor(r.lhs.cat, r.rhs.cat, ex);
  } catch (const Error& e) {
    fail(Errc::VerificationFailed, std::string("exchange map is not a functor: ") + e.what());
  }
  r.exchange = std::move(ex);
  return r;
}

PathCategory path_category(const Graph& e, int budget) {
  if (budget < 0) fail(Errc::ValidationError, "budget must be nonnegative");
  std::map<std::string, int> vat;
  for (int i = 0; i < (int)e.vertices.size(); ++i)
    if (!vat.emplace(e.vertices[i], i).second) fail(Errc::DuplicateId, "vertex '" + e.vertices[i] + "'");
  std::map<std::string, int> eat;
  std::vector<int> esrc, erng;
  bool single_char = true;
  for (int i = 0; i < (int)e.edges.size(); ++i) {
    const auto& ed = e.edges[i];
    if (!eat.emplace(ed.id, i).second) fail(Errc::DuplicateId, "edge '" + ed.id + "'");
    auto s = vat.find(ed.src), r = vat.find(ed.rng);
    if (s == vat.end() || r == vat.end())
      fail(Errc::ParseError, "edge '" + ed.id + "' references an unknown vertex");
    esrc.push_back(s->second);
    erng.push_back(r->second);
    if (ed.id.size() != 1) single_char = false;
  }
  const std::string sep = single_char ? "" : "·";

  PathCategory pc;
  CategoryTable t;
  for (auto& v : e.vertices) t.add_vertex(v);
  pc.path_edges.assign(e.vertices.size(), {});
  std::map<std::vector<int>, int> index;  // edge sequence -> morphism index

  std::vector<std::vector<int>> frontier;  // paths of current length
  std::vector<int> grades;
  auto path_name = [&](const std::vector<int>& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) s += sep;
      s += e.edges[p[i]].id;
    }
    return s;
  };
  auto add_path = [&](const std::vector<int>& p) {
    int m = t.add_morphism(path_name(p), esrc[p.back()], erng[p.front()]);
    index[p] = m;
    pc.path_edges.push_back(p);
    grades.push_back((int)p.size());
    return m;
  };
  pc.edge_morphism.assign(e.edges.size(), -1);
  for (int len = 1; len <= budget; ++len) {
    std::vector<std::vector<int>> next;
    if (len == 1) {
      for (int i = 0; i < (int)e.edges.size(); ++i) {
        next.push_back({i});
        pc.edge_morphism[i] = add_path(next.back());
      }
    } else {
      for (auto& p : frontier)
        for (int i = 0; i < (int)e.edges.size(); ++i)
          if (erng[i] == esrc[p.back()]) {
            next.push_back(p);
            next.back().push_back(i);
            add_path(next.back());
          }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  for (auto& [p, m] : index)
    for (auto& [q, k] : index) {
      if (esrc[p.back()] != erng[q.front()]) continue;
      if ((int)(p.size() + q.size()) > budget) {
        t.set_over_budget(m, k);
        continue;
      }
      std::vector<int> pq = p;
      pq.insert(pq.end(), q.begin(), q.end());
      t.set_compose(m, k, index.at(pq));
    }
  std::vector<int> gens = pc.edge_morphism;
  t.make_graded(budget, std::move(grades), std::move(gens), /*prefix_decidable=*/true);
  pc.cat = std::move(t).finalize();
  return pc;
}

ExelPardoSystem build_exel_pardo(Graph g, Group h, std::vector<std::vector<int>> vact,
                                 std::vector<std::vector<int>> eact,
                                 std::vector<std::vector<int>> phi) {
  ExelPardoSystem ep{std::move(g), std::move(h), std::move(vact), std::move(eact), std::move(phi)};
  const Group& grp = ep.group;
  if (!grp.is_finite()) fail(Errc::BudgetedUnsupported, "Exel-Pardo systems need a finite acting group");
  int nh = grp.order(), nv = (int)ep.graph.vertices.size(), ne = (int)ep.graph.edges.size();
  if ((int)ep.vact.size() != nh || (int)ep.eact.size() != nh || (int)ep.phi.size() != nh)
    fail(Errc::ValidationError, "action/cocycle tables do not match the group order");

  std::map<std::string, int> vat;
  for (int i = 0; i < nv; ++i) vat[ep.graph.vertices[i]] = i;
  std::vector<int> esrc(ne), erng(ne);
  for (int i = 0; i < ne; ++i) {
    esrc[i] = vat.at(ep.graph.edges[i].src);
    erng[i] = vat.at(ep.graph.edges[i].rng);
  }

  auto check_perm = [&](const std::vector<int>& p, int n, const std::string& what) {
    if ((int)p.size() != n) fail(Errc::ValidationError, what + " table has wrong size");
    std::vector<char> hit(n, 0);
    for (int x : p) {
      if (x < 0 || x >= n || hit[x]) fail(Errc::NotAnAction, what + " is not a permutation");
      hit[x] = 1;
    }
  };
  for (int x = 0; x < nh; ++x) {
    check_perm(ep.vact[x], nv, "vertex action of '" + grp.elem_name(x) + "'");
    check_perm(ep.eact[x], ne, "edge action of '" + grp.elem_name(x) + "'");
    if ((int)ep.phi[x].size() != ne) fail(Errc::ValidationError, "phi table has wrong size");
    for (int p : ep.phi[x])
      if (p < 0 || p >= nh) fail(Errc::ValidationError, "phi entry out of range");
  }
  for (int v = 0; v < nv; ++v)
    if (ep.vact[grp.unit()][v] != v) fail(Errc::NotAnAction, "the unit does not fix the vertices");
  for (int e = 0; e < ne; ++e)
    if (ep.eact[grp.unit()][e] != e) fail(Errc::NotAnAction, "the unit does not fix the edges");
  for (int x = 0; x < nh; ++x)
    for (int y = 0; y < nh; ++y) {
      int xy = grp.mul(x, y);
      for (int v = 0; v < nv; ++v)
        if (ep.vact[x][ep.vact[y][v]] != ep.vact[xy][v])
          fail(Errc::NotAnAction, "vertex action is not multiplicative");
      for (int e = 0; e < ne; ++e)
        if (ep.eact[x][ep.eact[y][e]] != ep.eact[xy][e])
          fail(Errc::NotAnAction, "edge action is not multiplicative");
    }
  for (int x = 0; x < nh; ++x)
    for (int e = 0; e < ne; ++e) {
      int ie = ep.eact[x][e];
      if (erng[ie] != ep.vact[x][erng[e]] || esrc[ie] != ep.vact[x][esrc[e]])
        fail(Errc::NotAnAction, "edge action does not commute with r,s at edge '" +
                                    ep.graph.edges[e].id + "'");
    }
  return ep;
}

EpWindow ep_category_system(const ExelPardoSystem& ep, int budget) {
  EpWindow w;
  w.paths = path_category(ep.graph, budget);
  const Category& c = w.paths.cat;
  const Group& h = ep.group;
  int nh = h.order();

  std::map<std::vector<int>, int> index;
  for (int m = c.num_vertices(); m < c.num_morphisms(); ++m) index[w.paths.path_edges[m]] = m;

  w.sys.cat = c;
  w.sys.group = h;
  w.sys.act.assign(nh, std::vector<int>(c.num_morphisms()));
  w.sys.phi.assign(nh, std::vector<int>(c.num_morphisms()));
  for (int x = 0; x < nh; ++x)
    for (int m = 0; m < c.num_morphisms(); ++m) {
      if (c.is_identity(m)) {
        w.sys.act[x][m] = c.identity(ep.vact[x][c.src(m)]);
        w.sys.phi[x][m] = x;
        continue;
      }
      std::vector<int> image;
      int cur = x;
      for (int e : w.paths.path_edges[m]) {
        image.push_back(ep.eact[cur][e]);
        cur = ep.phi[cur][e];
      }
      auto it = index.find(image);
      if (it == index.end())
        fail(Errc::VerificationFailed, "path image escaped the window");  // cannot happen: same length
      w.sys.act[x][m] = it->second;
      w.sys.phi[x][m] = cur;
    }
  validate_category_system(w.sys);
  return w;
}

Cocycle edge_cocycle(const PathCategory& pc, const Group& g, const std::vector<int>& edge_values) {
  if (edge_values.size() != pc.edge_morphism.size())
    fail(Errc::ValidationError, "one value per edge expected");
  std::vector<int> values(pc.cat.num_morphisms(), g.unit());
  for (int m = pc.cat.num_vertices(); m < pc.cat.num_morphisms(); ++m) {
    int v = g.unit();
    for (int e : pc.path_edges[m]) v = g.mul(v, edge_values[e]);
    values[m] = v;
  }
  return validate_cocycle(pc.cat, g, std::move(values));
}

ExelPardoSystem katsura_system(const std::vector<std::vector<long long>>& a,
                               const std::vector<std::vector<long long>>& b, int m) {
  size_t n = a.size();
  if (n == 0 || b.size() != n) fail(Errc::ShapeMismatch, "A and B must be nonempty and equal-shaped");
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n || b[i].size() != n)
      fail(Errc::ShapeMismatch, "A and B must be square of the same size");
    for (long long x : a[i])
      if (x < 0) fail(Errc::ValidationError, "A must be nonnegative");
  }
  for (size_t j = 0; j < n; ++j) {
    long long col = 0;
    for (size_t i = 0; i < n; ++i) col += a[i][j];
    if (col == 0) fail(Errc::ZeroColumn, "column " + std::to_string(j) + " of A is zero");
  }
  if (m < 1) fail(Errc::ValidationError, "the cyclic surrogate order must be positive");

  Graph g;
  for (size_t i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
  struct E {
    int i, j, k;
  };
  std::vector<E> edges;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (long long k = 0; k < a[i][j]; ++k) {
        g.edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k),
                           g.vertices[j], g.vertices[i]});
        edges.push_back({(int)i, (int)j, (int)k});
      }

  Group zm = Group::cyclic(m);
  int ne = (int)edges.size();
  std::vector<std::vector<int>> vact(m, std::vector<int>((int)n));
  std::vector<std::vector<int>> eact(m, std::vector<int>(ne)), phi(m, std::vector<int>(ne));
  std::map<std::tuple<int, int, int>, int> eix;
  for (int e = 0; e < ne; ++e) eix[{edges[e].i, edges[e].j, edges[e].k}] = e;
  auto floordiv = [](long long x, long long y) {
    long long q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
  };
  for (int x = 0; x < m; ++x) {
    for (size_t v = 0; v < n; ++v) vact[x][v] = (int)v;  // Z fixes all vertices
    for (int e = 0; e < ne; ++e) {
      auto [i, j, k] = std::tuple{edges[e].i, edges[e].j, edges[e].k};
      long long val = (long long)x * b[i][j] + k;
      long long q = floordiv(val, a[i][j]);
      long long r = val - q * a[i][j];
      eact[x][e] = eix.at({i, j, (int)r});
      phi[x][e] = (int)(((q % m) + m) % m);
    }
  }
  return build_exel_pardo(std::move(g), std::move(zm), std::move(vact), std::move(eact),
                          std::move(phi));
}

}  // namespace lcsc
