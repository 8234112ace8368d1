#pragma once

#include <functional>
#include <vector>

#include "lcsc/actions.hpp"
#include "lcsc/category.hpp"
#include "lcsc/cocycle.hpp"
#include "lcsc/groupoid.hpp"
#include "lcsc/rng.hpp"
#include "lcsc/zappa.hpp"

namespace lcsc {

// Seeded fixture generators. A fixture's cocycle maker always yields a valid
// cocycle into the requested finite group. Fixtures are relabeled with
// machine names so tests cannot lean on constructor naming.
struct LcFixture {
  Category cat;
  bool connected = false;
  std::function<Cocycle(Rng&, const Group&)> make_cocycle;
};

const std::vector<Group>& group_catalog();  // assorted table groups of order <= 8
Group random_group(Rng& rng, int max_order);

// Grown from path categories of random acyclic graphs (optionally glued along
// parallel paths and rejection-sampled for left cancellativity), finite
// groupoids, disjoint unions, and skew products of smaller fixtures.
LcFixture random_lc_category(Rng& rng, int max_morphisms, bool require_connected);

struct FreeActionFixture {
  Category d;
  GroupAction action;
};
FreeActionFixture random_free_action(Rng& rng, int max_morphisms, int max_group_order);

struct GroupoidCocycleFixture {
  Groupoid groupoid;
  Cocycle psi;  // nondegenerate by construction
};
GroupoidCocycleFixture random_groupoid_with_cocycle(Rng& rng, int max_vertices, int max_isotropy,
                                                    int max_group_order);

// Replaces the target with the subgroup generated by the image, making the
// cocycle nondegenerate.
Cocycle restrict_to_image(const Category& c, const Cocycle& eta);

// Named builders used across tests.
Category pair_groupoid();
Category arrow_category();
Category parallel_arrows();
Category one_object_group(const Group& g, const std::string& vertex = "*");
Category pair_times_group(int k, const Group& h);  // full equivalence on k vertices, times h
Graph one_loop_graph();
Graph two_loop_graph();
ExelPardoSystem two_loop_swap_system();  // Z2 swaps the loops, phi(h, e) = h
GroupoidCocycleFixture dihedral_surrogate();  // pair groupoid with Z4 isotropy into D4

}  // namespace lcsc
