#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcsc/category.hpp"
#include "lcsc/cocycle.hpp"
#include "lcsc/functor.hpp"
#include "lcsc/skew.hpp"

namespace lcsc {

// A category system (C, H, phi): H acts on the morphism set by permutations
// with r(h.m) = h.r(m) and s(h.m) = h.s(m), and phi: H x C -> H is a category
// cocycle for the action. phi's abstract axioms are not hardcoded; validity
// is certified operationally when the product below passes the category
// axioms. On vertices phi(h, v) = h is forced and filled in automatically.
struct CategorySystem {
  Category cat;
  Group group;                        // H, a table group
  std::vector<std::vector<int>> act;  // [h][morphism] -> morphism
  std::vector<std::vector<int>> phi;  // [h][morphism] -> element of H
};

// Checks the permutation/action laws and the r,s equivariance.
void validate_category_system(const CategorySystem& sys);

// The Zappa-Szep product C x|^phi H on pairs (m, h):
//   (m,h)(k,h') = (m.(h k), phi(h,k) h')  iff  h^-1 s(m) = r(k),
//   s(m,h) = h^-1 s(m), r(m,h) = r(m); vertices are those of C.
struct ZsProduct {
  Category cat;
  int pair(int m, int h) const { return pair_index[m][h]; }
  int base_of(int p) const { return base[p]; }
  int elem_of(int p) const { return elem[p]; }
  std::vector<std::vector<int>> pair_index;
  std::vector<int> base, elem;
};
ZsProduct zs_product(const CategorySystem& sys);

// eta_psi(m, h) = psi(m) for an H-invariant cocycle psi on C.
Cocycle promote_invariant_cocycle(const CategorySystem& sys, const Cocycle& psi,
                                  const ZsProduct& zs);

// Builds (C x|^phi H) x_{eta_psi} G and (C x_psi G) x|^phi~ H and verifies
// that ((m,h),g) -> ((m,g),h) is a bijective functor between them.
struct ExchangeResult {
  SkewProduct lhs;      // (C x| H) x_eta G
  ZsProduct rhs;        // (C x G) x| H
  CatFunctor exchange;  // lhs.cat -> rhs.cat
};
ExchangeResult exchange_isomorphism_check(const CategorySystem& sys, const Cocycle& psi);

struct Graph {
  std::vector<std::string> vertices;
  struct Edge {
    std::string id, src, rng;
  };
  std::vector<Edge> edges;
};

// The category of paths of length <= budget, as a graded view. Morphism
// names concatenate edge ids (with a separator unless all ids are single
// characters); the edges are the declared generators.
struct PathCategory {
  Category cat;
  std::vector<std::vector<int>> path_edges;  // per morphism, edge indices (empty for vertices)
  std::vector<int> edge_morphism;            // edge index -> morphism index
};
PathCategory path_category(const Graph& e, int budget);

// An Exel-Pardo system (E, H, phi): H acts on the graph, phi is an edge
// cocycle. The induced category system on paths extends the action by
//   h.(e1 e2 ... ) = (h.e1)(phi(h,e1).e2)... and phi(h, e1...) recursively.
struct ExelPardoSystem {
  Graph graph;
  Group group;                         // H
  std::vector<std::vector<int>> vact;  // [h][vertex] -> vertex
  std::vector<std::vector<int>> eact;  // [h][edge] -> edge
  std::vector<std::vector<int>> phi;   // [h][edge] -> element of H
};
ExelPardoSystem build_exel_pardo(Graph g, Group h, std::vector<std::vector<int>> vact,
                                 std::vector<std::vector<int>> eact,
                                 std::vector<std::vector<int>> phi);

struct EpWindow {
  PathCategory paths;
  CategorySystem sys;
};
EpWindow ep_category_system(const ExelPardoSystem& ep, int budget);

// Multiplicative extension of an edge map f: E^1 -> G over paths.
Cocycle edge_cocycle(const PathCategory& pc, const Group& g, const std::vector<int>& edge_values);

// Katsura data: A nonnegative with no zero columns, B integral, same shape.
// Edge e_{i,j,k} (k-th edge from v_j to v_i) exists when A[i][j] > 0. The
// acting group is the finite surrogate Z_m; the default rule is the
// division-with-remainder rule from the Exel-Pardo/Katsura literature:
//   n.e_{i,j,k} = e_{i,j,k'} and phi(n,e) = q  where  n*B[i][j] + k = A[i][j]*q + k'.
// The rule is external input as far as this library is concerned and the
// result is always validated operationally; surrogate reductions that do not
// factor through Z_m are reported by that validation.
ExelPardoSystem katsura_system(const std::vector<std::vector<long long>>& a,
                               const std::vector<std::vector<long long>>& b, int m);

}  // namespace lcsc
