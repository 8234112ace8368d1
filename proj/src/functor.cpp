#include "lcsc/functor.hpp"

#include <algorithm>
#include <map>

namespace lcsc {

void require_functor(const Category& dom, const Category& cod, const CatFunctor& f) {
  if ((int)f.vmap.size() != dom.num_vertices() || (int)f.mmap.size() != dom.num_morphisms())
    fail(Errc::NotAFunctor, "map sizes do not match the domain");
  for (int v = 0; v < dom.num_vertices(); ++v) {
    if (f.vmap[v] < 0 || f.vmap[v] >= cod.num_vertices())
      fail(Errc::NotAFunctor, "vertex image out of range");
    if (f.mmap[dom.identity(v)] != cod.identity(f.vmap[v]))
      fail(Errc::NotAFunctor, "identity of '" + dom.vertex_name(v) + "' is not preserved");
  }
  for (int m = 0; m < dom.num_morphisms(); ++m) {
    int fm = f.mmap[m];
    if (fm < 0 || fm >= cod.num_morphisms()) fail(Errc::NotAFunctor, "morphism image out of range");
    if (cod.src(fm) != f.vmap[dom.src(m)] || cod.rng(fm) != f.vmap[dom.rng(m)])
      fail(Errc::NotAFunctor, "endpoints of '" + dom.morphism_name(m) + "' are not preserved");
  }
  int n = dom.num_morphisms();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int32_t ab = dom.compose_raw(a, b);
      if (ab < 0) continue;
      int32_t im = cod.compose_raw(f.mmap[a], f.mmap[b]);
      if (im != f.mmap[ab])
        fail(Errc::NotAFunctor, "composition of (" + dom.morphism_name(a) + ", " +
                                    dom.morphism_name(b) + ") is not preserved");
    }
}

bool is_functor(const Category& dom, const Category& cod, const CatFunctor& f) {
  try {
    require_functor(dom, cod, f);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_bijective(const Category& dom, const Category& cod, const CatFunctor& f) {
  if (dom.num_vertices() != cod.num_vertices() || dom.num_morphisms() != cod.num_morphisms())
    return false;
  std::vector<char> vhit(cod.num_vertices(), 0), mhit(cod.num_morphisms(), 0);
  for (int v : f.vmap) {
    if (vhit[v]) return false;
    vhit[v] = 1;
  }
  for (int m : f.mmap) {
    if (mhit[m]) return false;
    mhit[m] = 1;
  }
  return true;
}

CatFunctor identity_functor(const Category& c) {
  CatFunctor f;
  f.vmap.resize(c.num_vertices());
  f.mmap.resize(c.num_morphisms());
  for (int v = 0; v < c.num_vertices(); ++v) f.vmap[v] = v;
  for (int m = 0; m < c.num_morphisms(); ++m) f.mmap[m] = m;
  return f;
}

CatFunctor compose_functors(const Category& a, const CatFunctor& f, const CatFunctor& g) {
  // g after f, with f defined on a
  CatFunctor h;
  h.vmap.resize(a.num_vertices());
  h.mmap.resize(a.num_morphisms());
  for (int v = 0; v < a.num_vertices(); ++v) h.vmap[v] = g.vmap[f.vmap[v]];
  for (int m = 0; m < a.num_morphisms(); ++m) h.mmap[m] = g.mmap[f.mmap[m]];
  return h;
}

CatFunctor inverse_functor(const Category& dom, const Category& cod, const CatFunctor& f) {
  if (!is_bijective(dom, cod, f)) fail(Errc::VerificationFailed, "functor is not bijective");
  CatFunctor g;
  g.vmap.assign(cod.num_vertices(), -1);
  g.mmap.assign(cod.num_morphisms(), -1);
  for (int v = 0; v < dom.num_vertices(); ++v) g.vmap[f.vmap[v]] = v;
  for (int m = 0; m < dom.num_morphisms(); ++m) g.mmap[f.mmap[m]] = m;
  return g;
}

namespace {

// per-vertex fingerprint that any isomorphism must preserve
struct VertexProfile {
  int out_deg, in_deg, loops;
  std::vector<int> out_fiber, in_fiber;  // sorted sizes of hom-sets to/from each vertex
  bool operator<(const VertexProfile& o) const {
    return std::tie(out_deg, in_deg, loops, out_fiber, in_fiber) <
           std::tie(o.out_deg, o.in_deg, o.loops, o.out_fiber, o.in_fiber);
  }
  bool operator==(const VertexProfile& o) const {
    return out_deg == o.out_deg && in_deg == o.in_deg && loops == o.loops &&
           out_fiber == o.out_fiber && in_fiber == o.in_fiber;
  }
};

VertexProfile profile(const Category& c, int v) {
  VertexProfile p;
  p.out_deg = (int)c.with_src(v).size();
  p.in_deg = (int)c.with_rng(v).size();
  p.loops = 0;
  std::vector<int> out_count(c.num_vertices(), 0), in_count(c.num_vertices(), 0);
  for (int m : c.with_src(v)) {
    ++out_count[c.rng(m)];
    if (c.rng(m) == v && !c.is_identity(m)) ++p.loops;
  }
  for (int m : c.with_rng(v)) ++in_count[c.src(m)];
  p.out_fiber = out_count;
  p.in_fiber = in_count;
  std::sort(p.out_fiber.begin(), p.out_fiber.end());
  std::sort(p.in_fiber.begin(), p.in_fiber.end());
  return p;
}

struct IsoSearch {
  const Category &a, &b;
  std::vector<int> vmap, mmap, vused, mused;
  std::vector<VertexProfile> pa, pb;

  IsoSearch(const Category& a_, const Category& b_) : a(a_), b(b_) {
    vmap.assign(a.num_vertices(), -1);
    mmap.assign(a.num_morphisms(), -1);
    vused.assign(b.num_vertices(), 0);
    mused.assign(b.num_morphisms(), 0);
    for (int v = 0; v < a.num_vertices(); ++v) pa.push_back(profile(a, v));
    for (int v = 0; v < b.num_vertices(); ++v) pb.push_back(profile(b, v));
  }

  bool assign_vertices(int v) {
    if (v == a.num_vertices()) return assign_morphisms();
    for (int w = 0; w < b.num_vertices(); ++w) {
      if (vused[w] || !(pa[v] == pb[w])) continue;
      vmap[v] = w;
      vused[w] = 1;
      mmap[v] = w;  // identity to identity
      mused[w] = 1;
      if (assign_vertices(v + 1)) return true;
      vmap[v] = -1;
      vused[w] = 0;
      mmap[v] = -1;
      mused[w] = 0;
    }
    return false;
  }

  bool assign_morphisms() { return extend(a.num_vertices()); }

  bool consistent_at(int m) {
    // check compositions involving m whose result is already assigned
    for (int x = 0; x < a.num_morphisms(); ++x) {
      if (mmap[x] < 0) continue;
      int32_t mx = a.compose_raw(m, x);
      if (mx >= 0 && mmap[mx] >= 0 && b.compose_raw(mmap[m], mmap[x]) != mmap[mx]) return false;
      int32_t xm = a.compose_raw(x, m);
      if (xm >= 0 && mmap[xm] >= 0 && b.compose_raw(mmap[x], mmap[m]) != mmap[xm]) return false;
    }
    return true;
  }

  // results assigned after both factors are not caught incrementally
  bool full_check() {
    for (int x = 0; x < a.num_morphisms(); ++x)
      for (int y = 0; y < a.num_morphisms(); ++y) {
        int32_t xy = a.compose_raw(x, y);
        if (xy >= 0 && b.compose_raw(mmap[x], mmap[y]) != mmap[xy]) return false;
      }
    return true;
  }

  bool extend(int m) {
    if (m == a.num_morphisms()) return full_check();
    int sv = vmap[a.src(m)], rv = vmap[a.rng(m)];
    for (int n : b.with_src(sv)) {
      if (mused[n] || b.rng(n) != rv || b.is_identity(n)) continue;
      mmap[m] = n;
      mused[n] = 1;
      if (consistent_at(m) && extend(m + 1)) return true;
      mmap[m] = -1;
      mused[n] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<CatFunctor> find_isomorphism(const Category& a, const Category& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_morphisms() != b.num_morphisms())
    return std::nullopt;
  IsoSearch s(a, b);
  if (!s.assign_vertices(0)) return std::nullopt;
  CatFunctor f{std::move(s.vmap), std::move(s.mmap)};
  require_functor(a, b, f);  // sanity; search already enforced this
  return f;
}

}  // namespace lcsc
