#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lcsc/category.hpp"
#include "lcsc/cocycle.hpp"
#include "lcsc/fpgroup.hpp"

namespace lcsc {

struct Groupoid {
  Category cat;
  std::vector<int> inv;  // per morphism, the two-sided inverse
};

// Certifies that every morphism has a two-sided inverse.
Groupoid as_groupoid(const Category& c);
bool is_groupoid(const Category& c);

// The isotropy group x G x as a table group; elem_to_morph maps its element
// indices back to morphisms.
Group isotropy_group(const Groupoid& g, int vertex, std::vector<int>* elem_to_morph = nullptr);

// A maximal tree rooted at x: a choice t_y in y G x for every vertex, with
// t_x the identity.
struct MaximalTree {
  int root = -1;
  std::vector<int> t;  // per vertex, a morphism y <- x
};
MaximalTree maximal_tree(const Groupoid& g, int root);

// The retraction cocycle eta(a) = t_z^-1 a t_y for a in z G y, landing in the
// isotropy group at the root; restricts to the identity there.
struct Retraction {
  int root = -1;
  Group isotropy;
  std::vector<int> elem_to_morph;
  Cocycle cocycle;  // on the groupoid's category, into `isotropy`
};
Retraction retraction_from_tree(const Groupoid& g, const MaximalTree& tree);

// Recovers the unique tree with t_y = a eta(a)^-1; verifies independence of
// the choice of a.
MaximalTree tree_from_retraction(const Groupoid& g, const Retraction& r);

// theta(a) = ((z,y), t_z^-1 a t_y) onto (G0 x G0) x G_x; exhaustive check.
bool decomposition_is_isomorphism(const Groupoid& g, const MaximalTree& tree);

// Presentation of the vertex group of the enveloping groupoid at `root`:
// one generator per morphism (or per declared generator on graded views),
// vertex and composition relators, spanning-tree generators killed, then
// Tietze simplification.
FpGroup fundamental_group(const Category& c, int root);

enum class UniversalMode { Raw, Connected, Components };

// Presentations of the universal group U(C). Raw mode takes the defining
// presentation on all morphisms; Connected mode the free product
// F(C0 \ {root}) * pi(C, root); Components mode (groupoids only) the free
// product over connected components.
FpGroup universal_group(const Category& c, UniversalMode mode, int root = 0);

struct ConnectivityReport {
  bool direct = false;   // the skew product's vertex set is one component
  bool via_pi = false;   // the pi-image subgroup equals G
  bool nondegenerate = false;
};
// For connected explicit C and a cocycle into a finite group; asserts the two
// verdicts agree when the cocycle is nondegenerate.
ConnectivityReport skew_connectivity_report(const Category& c, const Cocycle& eta);

// Number of connected components of the skew product's vertex set, computed
// without materializing the product.
int skew_component_count(const Category& c, const Cocycle& eta);

struct SevenCriteria {
  std::array<bool, 7> criteria{};
  bool agree = false;
};
// Theorem-style independent evaluation of the seven connectedness criteria
// for a nondegenerate cocycle on a finite connected groupoid.
SevenCriteria seven_criteria_check(const Groupoid& g, const Cocycle& psi);

}  // namespace lcsc
