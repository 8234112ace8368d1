#include "lcsc/actions.hpp"

#include <algorithm>
#include <map>

#include "lcsc/alignment.hpp"
#include "lcsc/testing.hpp"

namespace lcsc {

GroupAction validate_action(const Category& d, Group g, std::vector<std::vector<int>> act) {
  if (!g.is_finite()) fail(Errc::BudgetedUnsupported, "group actions need a finite group");
  int ng = g.order(), n = d.num_morphisms();
  if ((int)act.size() != ng) fail(Errc::ValidationError, "one action table per group element expected");
  for (int x = 0; x < ng; ++x) {
    if ((int)act[x].size() != n) fail(Errc::ValidationError, "action table has wrong size");
    std::vector<char> hit(n, 0);
    for (int m : act[x]) {
      if (m < 0 || m >= n || hit[m])
        fail(Errc::NotAutomorphism, "element '" + g.elem_name(x) + "' does not act by a permutation");
      hit[m] = 1;
    }
    // functor laws for the permutation
    for (int m = 0; m < n; ++m) {
      if (d.is_identity(m) != d.is_identity(act[x][m]))
        fail(Errc::NotAutomorphism, "element '" + g.elem_name(x) + "' does not preserve identities");
    }
    for (int m = 0; m < n; ++m) {
      int im = act[x][m];
      if (act[x][d.identity(d.src(m))] != d.identity(d.src(im)) ||
          act[x][d.identity(d.rng(m))] != d.identity(d.rng(im)))
        fail(Errc::NotAutomorphism, "element '" + g.elem_name(x) + "' does not preserve endpoints of '" +
                                        d.morphism_name(m) + "'");
    }
    for (int f = 0; f < n; ++f)
      for (int k = 0; k < n; ++k) {
        int32_t fk = d.compose_raw(f, k);
        if (fk < 0) continue;
        int32_t im = d.compose_raw(act[x][f], act[x][k]);
        if (im != act[x][fk])
          fail(Errc::NotAutomorphism, "element '" + g.elem_name(x) + "' does not preserve composition of (" +
                                          d.morphism_name(f) + ", " + d.morphism_name(k) + ")");
      }
  }
  for (int m = 0; m < n; ++m)
    if (act[g.unit()][m] != m)
      fail(Errc::NotAction, "the unit does not act trivially on '" + d.morphism_name(m) + "'");
  for (int x = 0; x < ng; ++x)
    for (int y = 0; y < ng; ++y) {
      int xy = g.mul(x, y);
      for (int m = 0; m < n; ++m)
        if (act[x][act[y][m]] != act[xy][m])
          fail(Errc::NotAction, "tables are not multiplicative at (" + g.elem_name(x) + ", " +
                                    g.elem_name(y) + ")");
    }
  return {std::move(g), std::move(act)};
}

FreenessResult freeness(const Category& d, const GroupAction& a) {
  for (int x = 0; x < a.group.order(); ++x) {
    if (x == a.group.unit()) continue;
    for (int m = 0; m < d.num_morphisms(); ++m)
      if (a.act[x][m] == m) return {false, {{x, m}}};
  }
  return {true, std::nullopt};
}

QuotientResult quotient_category(const Category& d, const GroupAction& a) {
  if (testing::active_mutant() != testing::Mutant::FreenessCheckDropped) {
    auto fr = freeness(d, a);
    if (!fr.free)
      fail(Errc::NotFree, "element '" + a.group.elem_name(fr.witness->first) + "' fixes '" +
                              d.morphism_name(fr.witness->second) + "'");
  }
  int n = d.num_morphisms(), ng = a.group.order();

  UnionFind uf(n);
  for (int x = 0; x < ng; ++x)
    for (int m = 0; m < n; ++m) uf.unite(m, a.act[x][m]);
  auto blocks = uf.blocks();  // identity orbits come first (least member is an identity)

  std::vector<int> class_of(n, -1);
  for (int i = 0; i < (int)blocks.size(); ++i)
    for (int m : blocks[i]) class_of[m] = i;

  QuotientResult q;
  CategoryTable t;
  int nclasses = (int)blocks.size();
  std::vector<int> qvertex(nclasses, -1);
  int nqv = 0;
  for (int i = 0; i < nclasses; ++i)
    if (d.is_identity(blocks[i][0])) qvertex[i] = nqv++;
  for (int i = 0; i < nclasses; ++i) {
    if (qvertex[i] < 0) continue;
    t.add_vertex("[" + d.vertex_name(blocks[i][0]) + "]",
                 "[" + d.morphism_name(blocks[i][0]) + "]");
    q.vertex_section.push_back(blocks[i][0]);
    q.morphism_rep.push_back(blocks[i][0]);
  }
  for (int i = 0; i < nclasses; ++i) {
    if (qvertex[i] >= 0) continue;
    int rep = blocks[i][0];
    int made = t.add_morphism("[" + d.morphism_name(rep) + "]",
                              qvertex[class_of[d.identity(d.src(rep))]],
                              qvertex[class_of[d.identity(d.rng(rep))]]);
    qvertex[i] = made;
    q.morphism_rep.push_back(rep);
  }

  // composition: [l][m] = [l (g.m)] for the unique g with s(l) = r(g.m)
  for (int ci = 0; ci < nclasses; ++ci) {
    int lam = blocks[ci][0];
    for (int cj = 0; cj < nclasses; ++cj) {
      int mu = blocks[cj][0];
      bool set = false;
      for (int x = 0; x < ng && !set; ++x) {
        int gm = a.act[x][mu];
        if (d.src(lam) != d.rng(gm)) continue;
        int32_t prod = d.compose_raw(lam, gm);
        if (prod < 0) continue;
        t.set_compose(qvertex[ci], qvertex[cj], qvertex[class_of[prod]]);
        set = true;
      }
    }
  }

  try {
    q.quotient = std::move(t).finalize();
  } catch (const Error& e) {
    fail(Errc::NotFree, std::string("quotient is not a category (is the action free?): ") + e.what());
  }
  if (is_left_cancellative(d).left_cancellative) require_left_cancellative(q.quotient);

  q.qmap.vmap.resize(d.num_vertices());
  q.qmap.mmap.resize(n);
  for (int m = 0; m < n; ++m) q.qmap.mmap[m] = qvertex[class_of[m]];
  for (int v = 0; v < d.num_vertices(); ++v) q.qmap.vmap[v] = q.qmap.mmap[d.identity(v)];
  require_functor(d, q.quotient, q.qmap);
  return q;
}

std::vector<int> quotient_ideal_intersection(const Category& d, const GroupAction& a,
                                             const QuotientResult& q, int lam, int mu) {
  const Category& dq = q.quotient;
  int ql = q.qmap.mmap[lam], qm = q.qmap.mmap[mu];

  // direct side, inside D/G
  Bitset direct = principal_ideal_bits(dq, ql) & principal_ideal_bits(dq, qm);

  // pushforward side: union over t of q(lD n (t.mu)D)
  Bitset pushed(dq.num_morphisms());
  Bitset lamD = principal_ideal_bits(d, lam);
  for (int x = 0; x < a.group.order(); ++x) {
    Bitset both = lamD & principal_ideal_bits(d, a.act[x][mu]);
    for (int m = 0; m < d.num_morphisms(); ++m)
      if (both.test(m)) pushed.set(q.qmap.mmap[m]);
  }
  if (!(direct == pushed))
    fail(Errc::VerificationFailed, "quotient ideal-intersection identity failed at ([" +
                                       d.morphism_name(lam) + "], [" + d.morphism_name(mu) + "])");
  return direct.to_vector();
}

GrossTucker gross_tucker(const Category& d, const GroupAction& a,
                         const std::optional<std::vector<int>>& section) {
  {
    auto fr = freeness(d, a);
    if (!fr.free) fail(Errc::NotFree, "gross_tucker needs a free action");
  }
  GrossTucker out;
  out.quotient = quotient_category(d, a);
  const Category& dq = out.quotient.quotient;
  const Group& g = a.group;
  int ng = g.order();

  // vertex section: least representative by default, caller-chosen otherwise
  std::vector<int> vsec = out.quotient.vertex_section;
  if (section) {
    if ((int)section->size() != dq.num_vertices())
      fail(Errc::ValidationError, "section must choose one vertex per quotient vertex");
    for (int w = 0; w < dq.num_vertices(); ++w) {
      int v = (*section)[w];
      if (v < 0 || v >= d.num_vertices() || out.quotient.qmap.vmap[v] != w)
        fail(Errc::ValidationError, "section entry does not lie over its quotient vertex");
    }
    vsec = *section;
  }

  // lambda_alpha: the unique orbit representative with r(lambda) = v_{r(alpha)}
  std::vector<int> lam(dq.num_morphisms(), -1);
  std::vector<int> eta_values(dq.num_morphisms(), -1);
  for (int m = 0; m < d.num_morphisms(); ++m) {
    int alpha = out.quotient.qmap.mmap[m];
    if (d.rng(m) == vsec[dq.rng(alpha)]) {
      if (lam[alpha] >= 0 && lam[alpha] != m)
        fail(Errc::VerificationFailed, "orbit representative is not unique");
      lam[alpha] = m;
    }
  }
  for (int alpha = 0; alpha < dq.num_morphisms(); ++alpha) {
    if (lam[alpha] < 0) fail(Errc::VerificationFailed, "no orbit representative found");
    // eta(alpha): the unique g with s(lambda_alpha) = g . v_{s(alpha)}
    int target_vertex = d.src(lam[alpha]);
    for (int x = 0; x < ng; ++x)
      if (a.vertex_image(d, x, vsec[dq.src(alpha)]) == d.identity(target_vertex)) {
        if (eta_values[alpha] >= 0) fail(Errc::VerificationFailed, "eta is not unique (action not free)");
        eta_values[alpha] = x;
      }
    if (eta_values[alpha] < 0) fail(Errc::VerificationFailed, "eta value not found");
  }
  try {
    out.eta = validate_cocycle(dq, g, std::move(eta_values));
  } catch (const Error& e) {
    fail(Errc::VerificationFailed, std::string("reconstructed eta is not a cocycle: ") + e.what());
  }

  out.skew = skew_product(dq, out.eta);

  // rho(alpha, x) = (eta(alpha) x)^-1 . lambda_alpha
  out.rho.mmap.assign(out.skew.cat.num_morphisms(), -1);
  out.rho.vmap.assign(out.skew.cat.num_vertices(), -1);
  for (int alpha = 0; alpha < dq.num_morphisms(); ++alpha)
    for (int x = 0; x < ng; ++x) {
      int gx = g.inv(g.mul(out.eta(alpha), x));
      out.rho.mmap[out.skew.pair(alpha, x)] = a.act[gx][lam[alpha]];
    }
  for (int w = 0; w < dq.num_vertices(); ++w)
    for (int x = 0; x < ng; ++x) {
      int im = out.rho.mmap[out.skew.pair(dq.identity(w), x)];
      if (!d.is_identity(im)) fail(Errc::VerificationFailed, "rho does not send vertices to vertices");
      out.rho.vmap[out.skew.pair(dq.identity(w), x)] = d.src(im);
    }

  if (!is_bijective(out.skew.cat, d, out.rho))
    fail(Errc::VerificationFailed, "rho is not bijective");
  try {
    require_functor(out.skew.cat, d, out.rho);
  } catch (const Error& e) {
    fail(Errc::VerificationFailed, std::string("rho is not a functor: ") + e.what());
  }
  // equivariance: rho(x . p) = x . rho(p), with x.(beta, h) = (beta, h x^-1)
  for (int p = 0; p < out.skew.cat.num_morphisms(); ++p)
    for (int x = 0; x < ng; ++x) {
      int left = out.rho.mmap[out.skew.pair(out.skew.base_of(p),
                                            g.mul(out.skew.elem_of(p), g.inv(x)))];
      if (left != a.act[x][out.rho.mmap[p]])
        fail(Errc::VerificationFailed, "rho is not equivariant");
    }
  return out;
}

}  // namespace lcsc
