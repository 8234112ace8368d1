#include "lcsc/fixtures.hpp"

#include <algorithm>
#include <map>

#include "lcsc/alignment.hpp"
#include "lcsc/skew.hpp"

namespace lcsc {

const std::vector<Group>& group_catalog() {
  static const std::vector<Group> catalog = [] {
    std::vector<Group> g;
    for (int n = 1; n <= 8; ++n) g.push_back(Group::cyclic(n));
    g.push_back(Group::direct_product(Group::cyclic(2), Group::cyclic(2)));
    g.push_back(Group::direct_product(Group::cyclic(2), Group::cyclic(4)));
    g.push_back(Group::direct_product(Group::cyclic(2),
                                      Group::direct_product(Group::cyclic(2), Group::cyclic(2))));
    g.push_back(Group::symmetric3());
    g.push_back(Group::dihedral(4));
    g.push_back(Group::quaternion8());
    return g;
  }();
  return catalog;
}

Group random_group(Rng& rng, int max_order) {
  std::vector<int> ok;
  const auto& cat = group_catalog();
  for (int i = 0; i < (int)cat.size(); ++i)
    if (cat[i].order() <= max_order) ok.push_back(i);
  return cat[ok[rng.below((int)ok.size())]];
}

Cocycle restrict_to_image(const Category& c, const Cocycle& eta) {
  auto sub = eta.target.closure(eta.image);
  Group g = Group::subgroup(eta.target, sub);
  std::vector<int> values(c.num_morphisms());
  for (int m = 0; m < c.num_morphisms(); ++m) {
    values[m] = g.elem_by_name(eta.target.elem_name(eta(m)));
    if (values[m] < 0) fail(Errc::VerificationFailed, "image element missing from subgroup");
  }
  return validate_cocycle(c, g, std::move(values));
}

Category pair_groupoid() {
  CategoryTable t;
  int x = t.add_vertex("x"), y = t.add_vertex("y");
  int a = t.add_morphism("a", x, y), abar = t.add_morphism("abar", y, x);
  t.set_compose(a, abar, y);
  t.set_compose(abar, a, x);
  return std::move(t).finalize();
}

Category arrow_category() {
  CategoryTable t;
  int u = t.add_vertex("u"), v = t.add_vertex("v");
  t.add_morphism("e", v, u);
  return std::move(t).finalize();
}

Category parallel_arrows() {
  CategoryTable t;
  int u = t.add_vertex("u"), v = t.add_vertex("v");
  t.add_morphism("e", v, u);
  t.add_morphism("f", v, u);
  return std::move(t).finalize();
}

Category one_object_group(const Group& g, const std::string& vertex) {
  CategoryTable t;
  int v = t.add_vertex(vertex, "g:" + g.elem_name(0));
  std::vector<int> of(g.order());
  of[0] = v;
  for (int i = 1; i < g.order(); ++i) of[i] = t.add_morphism("g:" + g.elem_name(i), v, v);
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) t.set_compose(of[i], of[j], of[g.mul(i, j)]);
  return std::move(t).finalize();
}

Category pair_times_group(int k, const Group& h) {
  CategoryTable t;
  int nh = h.order();
  auto name = [&](int i, int j, int x) {
    return "p" + std::to_string(i) + "." + std::to_string(j) + "." + h.elem_name(x);
  };
  for (int i = 0; i < k; ++i) t.add_vertex("w" + std::to_string(i), name(i, i, 0));
  std::vector<int> index(k * k * nh, -1);
  auto at = [&](int i, int j, int x) -> int& { return index[(i * k + j) * nh + x]; };
  for (int i = 0; i < k; ++i) at(i, i, 0) = i;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int x = 0; x < nh; ++x) {
        if (i == j && x == 0) continue;
        at(i, j, x) = t.add_morphism(name(i, j, x), j, i);
      }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        for (int x = 0; x < nh; ++x)
          for (int y = 0; y < nh; ++y)
            t.set_compose(at(i, j, x), at(j, l, y), at(i, l, h.mul(x, y)));
  return std::move(t).finalize();
}

Graph one_loop_graph() {
  Graph g;
  g.vertices = {"v"};
  g.edges = {{"s", "v", "v"}};
  return g;
}

Graph two_loop_graph() {
  Graph g;
  g.vertices = {"v"};
  g.edges = {{"a", "v", "v"}, {"b", "v", "v"}};
  return g;
}

ExelPardoSystem two_loop_swap_system() {
  Group z2 = Group::cyclic(2);
  std::vector<std::vector<int>> vact = {{0}, {0}};
  std::vector<std::vector<int>> eact = {{0, 1}, {1, 0}};
  std::vector<std::vector<int>> phi = {{0, 0}, {1, 1}};  // phi(h, e) = h
  return build_exel_pardo(two_loop_graph(), z2, vact, eact, phi);
}

GroupoidCocycleFixture dihedral_surrogate() {
  GroupoidCocycleFixture f;
  Group z4 = Group::cyclic(4);
  f.groupoid = as_groupoid(pair_times_group(2, z4));
  Group d4 = Group::dihedral(4);
  int rot = d4.elem_by_name("r"), refl = d4.elem_by_name("s");
  const Category& c = f.groupoid.cat;
  std::vector<int> tau = {d4.unit(), refl};  // vertex 0 -> e, vertex 1 -> s
  std::vector<int> values(c.num_morphisms());
  for (int m = 0; m < c.num_morphisms(); ++m) {
    // recover (i, j, n) from the name p{i}.{j}.{n}
    const std::string& nm = c.morphism_name(m);
    int i = nm[1] - '0', j = nm[3] - '0', n = nm[5] - '0';
    values[m] = d4.mul(tau[i], d4.mul(d4.pow(rot, n), d4.inv(tau[j])));
  }
  f.psi = validate_cocycle(c, d4, std::move(values));
  return f;
}

namespace {

struct Builder {
  Rng& rng;
  int max_morphisms;

  LcFixture path_dag(bool require_connected, bool allow_glue) {
    // Edge conventions: edge e = {src, rng} with src > rng, so every
    // composite strictly raises the source and the graph is acyclic. A path
    // is an edge sequence (e1,...,en) standing for e1 o ... o en, valid when
    // src(e_i) == rng(e_{i+1}); its source is src(e_n), its range rng(e1).
    for (int attempt = 0; attempt < 60; ++attempt) {
      int nv = rng.range(2, 5);
      std::vector<std::array<int, 2>> edges;
      for (int v = 1; v < nv; ++v) edges.push_back({v, rng.below(v)});  // spanning chain
      int extra = rng.range(0, nv);
      for (int i = 0; i < extra; ++i) {
        int a = rng.range(1, nv - 1), b = rng.below(a);
        edges.push_back({a, b});
      }
      rng.shuffle(edges);
      auto esrc = [&](int e) { return edges[e][0]; };
      auto erng = [&](int e) { return edges[e][1]; };
      auto psrc = [&](const std::vector<int>& p) { return esrc(p.back()); };
      auto prng = [&](const std::vector<int>& p) { return erng(p.front()); };

      std::vector<std::vector<int>> by_rng(nv);  // edges indexed by range
      for (int e = 0; e < (int)edges.size(); ++e) by_rng[erng(e)].push_back(e);

      std::vector<std::vector<int>> paths;
      std::vector<std::vector<int>> frontier;
      for (int e = 0; e < (int)edges.size(); ++e) frontier.push_back({e});
      while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& p : frontier) {
          paths.push_back(p);
          for (int e : by_rng[psrc(p)]) {  // p o e
            auto q = p;
            q.push_back(e);
            next.push_back(std::move(q));
          }
        }
        frontier = std::move(next);
        if (paths.size() > 300) break;
      }
      if ((int)paths.size() + nv > max_morphisms || paths.size() > 300) continue;

      std::map<std::vector<int>, int> pindex;
      for (int i = 0; i < (int)paths.size(); ++i) pindex[paths[i]] = i;

      // optional gluing of a parallel path pair, then congruence closure
      UnionFind uf((int)paths.size());
      bool glued = false;
      if (allow_glue && rng.chance(0.35)) {
        std::vector<std::pair<int, int>> parallel;
        for (int i = 0; i < (int)paths.size(); ++i)
          for (int j = i + 1; j < (int)paths.size(); ++j) {
            if (paths[i].size() < 2 && paths[j].size() < 2) continue;
            if (psrc(paths[i]) == psrc(paths[j]) && prng(paths[i]) == prng(paths[j]))
              parallel.push_back({i, j});
          }
        if (!parallel.empty()) {
          auto [i, j] = parallel[rng.below((int)parallel.size())];
          uf.unite(i, j);
          glued = true;
          bool changed = true;
          while (changed) {
            changed = false;
            for (int a = 0; a < (int)paths.size(); ++a) {
              int b = uf.find(a);
              if (a == b) continue;
              for (int e = 0; e < (int)edges.size(); ++e) {
                if (erng(e) == psrc(paths[a])) {  // right extension a o e
                  auto ea = paths[a];
                  auto eb = paths[b];
                  ea.push_back(e);
                  eb.push_back(e);
                  auto ia = pindex.find(ea), ib = pindex.find(eb);
                  if (ia != pindex.end() && ib != pindex.end())
                    changed = uf.unite(ia->second, ib->second) || changed;
                }
                if (esrc(e) == prng(paths[a])) {  // left extension e o a
                  std::vector<int> ea = {e}, eb = {e};
                  ea.insert(ea.end(), paths[a].begin(), paths[a].end());
                  eb.insert(eb.end(), paths[b].begin(), paths[b].end());
                  auto ia = pindex.find(ea), ib = pindex.find(eb);
                  if (ia != pindex.end() && ib != pindex.end())
                    changed = uf.unite(ia->second, ib->second) || changed;
                }
              }
            }
          }
        }
      }

      auto blocks = uf.blocks();
      std::vector<int> block_of((int)paths.size());
      for (int b = 0; b < (int)blocks.size(); ++b)
        for (int p : blocks[b]) block_of[p] = b;

      CategoryTable t;
      for (int v = 0; v < nv; ++v) t.add_vertex("v" + std::to_string(v));
      std::vector<int> morph_of_block(blocks.size(), -1);
      for (int b = 0; b < (int)blocks.size(); ++b) {
        auto& p = paths[blocks[b][0]];
        std::string nm = "q";
        for (int e : p) nm += std::to_string(e) + ".";
        morph_of_block[b] = t.add_morphism(nm, psrc(p), prng(p));
      }
      bool ok = true;
      for (int i = 0; i < (int)paths.size() && ok; ++i)
        for (int j = 0; j < (int)paths.size() && ok; ++j) {
          if (psrc(paths[i]) != prng(paths[j])) continue;  // i o j
          auto pq = paths[i];
          pq.insert(pq.end(), paths[j].begin(), paths[j].end());
          auto it = pindex.find(pq);
          if (it == pindex.end()) {
            ok = false;
            break;
          }
          t.set_compose(morph_of_block[block_of[i]], morph_of_block[block_of[j]],
                        morph_of_block[block_of[it->second]]);
        }
      if (!ok) continue;

      LcFixture f;
      try {
        f.cat = std::move(t).finalize();
      } catch (const Error&) {
        continue;  // gluing produced an invalid table
      }
      if (!is_left_cancellative(f.cat).left_cancellative) continue;
      if (require_connected && !f.cat.is_connected()) continue;
      f.connected = f.cat.is_connected();

      if (glued) {
        // coboundaries are always functorial on the quotient
        Category cat_copy = f.cat;
        f.make_cocycle = [cat_copy](Rng& r, const Group& g) {
          std::vector<int> tau(cat_copy.num_vertices());
          for (auto& x : tau) x = r.below(g.order());
          return coboundary(cat_copy, g, tau);
        };
      } else {
        // free assignment on edges, extended along paths
        Category cat_copy = f.cat;
        std::vector<std::vector<int>> path_of_morphism(f.cat.num_morphisms());
        for (int b = 0; b < (int)blocks.size(); ++b)
          path_of_morphism[morph_of_block[b]] = paths[blocks[b][0]];
        int ne = (int)edges.size();
        f.make_cocycle = [cat_copy, path_of_morphism, ne](Rng& r, const Group& g) {
          std::vector<int> ev(ne);
          for (auto& x : ev) x = r.below(g.order());
          std::vector<int> values(cat_copy.num_morphisms(), g.unit());
          for (int m = 0; m < cat_copy.num_morphisms(); ++m) {
            int v = g.unit();
            for (int e : path_of_morphism[m]) v = g.mul(v, ev[e]);
            values[m] = v;
          }
          return validate_cocycle(cat_copy, g, std::move(values));
        };
      }
      return f;
    }
    // fallback: the arrow category
    LcFixture f;
    f.cat = arrow_category();
    f.connected = true;
    Category cat_copy = f.cat;
    f.make_cocycle = [cat_copy](Rng& r, const Group& g) {
      std::vector<int> tau(cat_copy.num_vertices());
      for (auto& x : tau) x = r.below(g.order());
      return coboundary(cat_copy, g, tau);
    };
    return f;
  }

  LcFixture groupoid_fixture() {
    for (int attempt = 0; attempt < 40; ++attempt) {
      int k = rng.range(1, 3);
      Group h = random_group(rng, std::max(2, max_morphisms / (k * k)));
      if (k * k * h.order() > max_morphisms) continue;
      LcFixture f;
      f.cat = pair_times_group(k, h);
      f.connected = true;
      Category cat_copy = f.cat;
      Group h_copy = h;
      int kk = k;
      f.make_cocycle = [cat_copy, h_copy, kk](Rng& r, const Group& g) {
        auto homs = h_copy.all_homomorphisms(g);
        auto& hom = homs[r.below((int)homs.size())];
        std::vector<int> tau(kk);
        bool trivial_tau = r.chance(0.4);
        for (auto& x : tau) x = trivial_tau ? g.unit() : r.below(g.order());
        std::vector<int> values(cat_copy.num_morphisms());
        for (int m = 0; m < cat_copy.num_morphisms(); ++m) {
          const std::string& nm = cat_copy.morphism_name(m);
          int i = nm[1] - '0', j = nm[3] - '0';
          int x = h_copy.elem_by_name(nm.substr(5));
          values[m] = g.mul(tau[i], g.mul(hom[x], g.inv(tau[j])));
        }
        return validate_cocycle(cat_copy, g, std::move(values));
      };
      return f;
    }
    LcFixture f;
    f.cat = pair_groupoid();
    f.connected = true;
    Category cat_copy = f.cat;
    f.make_cocycle = [cat_copy](Rng& r, const Group& g) {
      std::vector<int> tau(2);
      for (auto& x : tau) x = r.below(g.order());
      return coboundary(cat_copy, g, tau);
    };
    return f;
  }

  LcFixture disjoint_union(LcFixture a, LcFixture b) {
    CategoryTable t;
    int nva = a.cat.num_vertices();
    for (int v = 0; v < nva; ++v) t.add_vertex("A." + a.cat.vertex_name(v));
    for (int v = 0; v < b.cat.num_vertices(); ++v) t.add_vertex("B." + b.cat.vertex_name(v));
    std::vector<int> ma(a.cat.num_morphisms()), mb(b.cat.num_morphisms());
    for (int v = 0; v < nva; ++v) ma[v] = v;
    for (int v = 0; v < b.cat.num_vertices(); ++v) mb[v] = nva + v;
    for (int m = nva; m < a.cat.num_morphisms(); ++m)
      ma[m] = t.add_morphism("A." + a.cat.morphism_name(m), a.cat.src(m), a.cat.rng(m));
    for (int m = b.cat.num_vertices(); m < b.cat.num_morphisms(); ++m)
      mb[m] = t.add_morphism("B." + b.cat.morphism_name(m), nva + b.cat.src(m), nva + b.cat.rng(m));
    for (int f = 0; f < a.cat.num_morphisms(); ++f)
      for (int g = 0; g < a.cat.num_morphisms(); ++g)
        if (auto fg = a.cat.compose(f, g)) t.set_compose(ma[f], ma[g], ma[*fg]);
    for (int f = 0; f < b.cat.num_morphisms(); ++f)
      for (int g = 0; g < b.cat.num_morphisms(); ++g)
        if (auto fg = b.cat.compose(f, g)) t.set_compose(mb[f], mb[g], mb[*fg]);
    LcFixture f;
    f.cat = std::move(t).finalize();
    f.connected = false;
    auto amake = a.make_cocycle, bmake = b.make_cocycle;
    Category cat_copy = f.cat;
    f.make_cocycle = [cat_copy, amake, bmake, ma, mb](Rng& r, const Group& g) {
      Cocycle ca = amake(r, g), cb = bmake(r, g);
      std::vector<int> values(cat_copy.num_morphisms());
      for (int m = 0; m < (int)ma.size(); ++m) values[ma[m]] = ca.values[m];
      for (int m = 0; m < (int)mb.size(); ++m) values[mb[m]] = cb.values[m];
      return validate_cocycle(cat_copy, g, std::move(values));
    };
    return f;
  }

  LcFixture skew_fixture(LcFixture base) {
    Group g = random_group(rng, std::max(2, max_morphisms / base.cat.num_morphisms()));
    if (base.cat.num_morphisms() * g.order() > max_morphisms) return base;
    Cocycle eta = base.make_cocycle(rng, g);
    SkewProduct sp = skew_product(base.cat, eta);
    LcFixture f;
    f.cat = sp.cat;
    f.connected = f.cat.is_connected();
    auto bmake = base.make_cocycle;
    Category cat_copy = f.cat;
    int ng = g.order();
    f.make_cocycle = [cat_copy, bmake, ng](Rng& r, const Group& k) {
      Cocycle cb = bmake(r, k);
      std::vector<int> values(cat_copy.num_morphisms());
      for (int m = 0; m < cat_copy.num_morphisms(); ++m) values[m] = cb.values[m / ng];
      return validate_cocycle(cat_copy, k, std::move(values));
    };
    return f;
  }
};

LcFixture relabel_fixture(Rng& rng, LcFixture f) {
  int nv = f.cat.num_vertices(), n = f.cat.num_morphisms();
  std::vector<int> order;
  for (int m = nv; m < n; ++m) order.push_back(m);
  rng.shuffle(order);
  Relabeled rel = relabel(f.cat, order);
  LcFixture out;
  out.cat = rel.cat;
  out.connected = f.connected;
  auto base_make = f.make_cocycle;
  auto mmap = rel.mmap;
  Category cat_copy = out.cat;
  out.make_cocycle = [cat_copy, base_make, mmap](Rng& r, const Group& g) {
    Cocycle c0 = base_make(r, g);
    std::vector<int> values(cat_copy.num_morphisms());
    for (int m = 0; m < (int)mmap.size(); ++m) values[mmap[m]] = c0.values[m];
    return validate_cocycle(cat_copy, g, std::move(values));
  };
  return out;
}

}  // namespace

LcFixture random_lc_category(Rng& rng, int max_morphisms, bool require_connected) {
  Builder b{rng, max_morphisms};
  LcFixture f;
  int kind = rng.below(require_connected ? 7 : 10);
  if (kind < 4) {
    f = b.path_dag(require_connected, /*allow_glue=*/true);
  } else if (kind < 6) {
    f = b.groupoid_fixture();
  } else if (kind < 7) {
    LcFixture base = rng.chance(0.5) ? b.path_dag(true, false) : b.groupoid_fixture();
    f = b.skew_fixture(std::move(base));
    if (require_connected && !f.connected) f = b.groupoid_fixture();
  } else {
    Builder half{rng, std::max(4, max_morphisms / 2)};
    LcFixture a = rng.chance(0.5) ? half.path_dag(false, true) : half.groupoid_fixture();
    LcFixture c = rng.chance(0.5) ? half.path_dag(false, true) : half.groupoid_fixture();
    if (a.cat.num_morphisms() + c.cat.num_morphisms() <= max_morphisms)
      f = b.disjoint_union(std::move(a), std::move(c));
    else
      f = std::move(a);
  }
  return relabel_fixture(rng, std::move(f));
}

FreeActionFixture random_free_action(Rng& rng, int max_morphisms, int max_group_order) {
  Group g = random_group(rng, max_group_order);
  LcFixture base = random_lc_category(rng, std::max(2, max_morphisms / g.order()), false);
  Cocycle eta = rng.chance(0.25) ? trivial_cocycle(base.cat, g) : base.make_cocycle(rng, g);
  SkewProduct sp = skew_product(base.cat, eta);
  GroupAction act = skew_group_action(sp);

  // relabel the total category and transport the action tables
  int nv = sp.cat.num_vertices(), n = sp.cat.num_morphisms();
  std::vector<int> order;
  for (int m = nv; m < n; ++m) order.push_back(m);
  rng.shuffle(order);
  Relabeled rel = relabel(sp.cat, order);
  FreeActionFixture f;
  f.d = rel.cat;
  std::vector<std::vector<int>> tables(act.group.order(), std::vector<int>(n));
  for (int x = 0; x < act.group.order(); ++x)
    for (int m = 0; m < n; ++m) tables[x][rel.mmap[m]] = rel.mmap[act.act[x][m]];
  f.action = validate_action(f.d, act.group, std::move(tables));
  return f;
}

GroupoidCocycleFixture random_groupoid_with_cocycle(Rng& rng, int max_vertices, int max_isotropy,
                                                    int max_group_order) {
  int k = rng.range(1, max_vertices);
  Group h = random_group(rng, max_isotropy);
  while (k * k * h.order() > 400) {
    if (k > 1)
      --k;
    else
      h = Group::trivial();
  }
  GroupoidCocycleFixture f;
  f.groupoid = as_groupoid(pair_times_group(k, h));
  const Category& c = f.groupoid.cat;

  Group target = random_group(rng, max_group_order);
  auto homs = h.all_homomorphisms(target);
  auto& hom = homs[rng.below((int)homs.size())];
  std::vector<int> tau(k);
  bool trivial_tau = rng.chance(0.4);
  for (auto& x : tau) x = trivial_tau ? target.unit() : rng.below(target.order());
  std::vector<int> values(c.num_morphisms());
  for (int m = 0; m < c.num_morphisms(); ++m) {
    const std::string& nm = c.morphism_name(m);
    int i = nm[1] - '0', j = nm[3] - '0';
    int x = h.elem_by_name(nm.substr(5));
    values[m] = target.mul(tau[i], target.mul(hom[x], target.inv(tau[j])));
  }
  f.psi = restrict_to_image(c, validate_cocycle(c, target, std::move(values)));
  return f;
}

}  // namespace lcsc
