#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcsc/errors.hpp"
#include "lcsc/group.hpp"
#include "lcsc/util.hpp"

namespace lcsc {

// A finite small category given by tables, or a budget-truncated window of a
// graded (length-filtered) category such as the path category of a graph.
//
// Invariants established by validation:
//  - morphisms 0..num_vertices-1 are the identities, identity(v) == v;
//  - composition is stored as a full matrix: entry >= 0 is the composite,
//    kNotComposable means src/rng mismatch, and kOverBudget (graded views
//    only) means the composite exists in the underlying category but its
//    grade exceeds the window budget;
//  - all category axioms hold wherever the window defines the composite.
//
// Vertices and morphisms are addressed by dense indices; names are kept for
// reports and serialization. Instances are immutable after validation.
class Category {
 public:
  enum class Flavor { Explicit, Graded };
  static constexpr int32_t kNotComposable = -1;
  static constexpr int32_t kOverBudget = -2;

  int num_vertices() const { return nv_; }
  int num_morphisms() const { return (int)src_.size(); }

  const std::string& vertex_name(int v) const { return vnames_[v]; }
  const std::string& morphism_name(int m) const { return mnames_[m]; }
  int vertex_by_name(const std::string& s) const;
  int morphism_by_name(const std::string& s) const;

  int src(int m) const { return src_[m]; }
  int rng(int m) const { return rng_[m]; }
  int identity(int v) const { return v; }
  bool is_identity(int m) const { return m < nv_; }

  bool composable(int f, int g) const { return src_[f] == rng_[g]; }
  int32_t compose_raw(int f, int g) const { return comp_[(size_t)f * src_.size() + g]; }
  std::optional<int> compose(int f, int g) const {
    int32_t r = compose_raw(f, g);
    return r >= 0 ? std::optional<int>(r) : std::nullopt;
  }

  // morphisms with the given range / source (identity included)
  const std::vector<int>& with_rng(int v) const { return in_[v]; }
  const std::vector<int>& with_src(int v) const { return out_[v]; }

  Flavor flavor() const { return flavor_; }
  bool is_explicit() const { return flavor_ == Flavor::Explicit; }
  int budget() const { return budget_; }
  int grade(int m) const { return flavor_ == Flavor::Explicit ? 0 : grade_[m]; }
  bool prefix_decidable() const { return prefix_decidable_; }
  // declared generators of a graded view (e.g. the edges of a path category)
  const std::vector<int>& generators() const { return generators_; }

  // underlying-graph connectivity on vertices
  UnionFind vertex_components() const;
  std::vector<std::vector<int>> connected_components() const;
  bool is_connected() const;

  Category() = default;  // empty; assign from a finalized table

 private:
  friend class CategoryTable;

  int nv_ = 0;
  std::vector<std::string> vnames_, mnames_;
  std::vector<int> src_, rng_;
  std::vector<int32_t> comp_;
  std::vector<std::vector<int>> in_, out_;
  std::map<std::string, int> vindex_, mindex_;
  Flavor flavor_ = Flavor::Explicit;
  int budget_ = -1;
  std::vector<int> grade_;
  std::vector<int> generators_;
  bool prefix_decidable_ = false;
};

// Mutable staging area for building a category table in code. All vertices
// must be added before any non-identity morphism. `finalize` checks every
// axiom and returns the immutable Category; with `imply_identity_composites`
// the trivial products id*f and f*id need not be set explicitly.
class CategoryTable {
 public:
  // creates vertex v together with its identity morphism (index v)
  int add_vertex(const std::string& vertex_name, const std::string& identity_name = "");
  // non-identity morphism; returns its morphism index
  int add_morphism(const std::string& name, int src, int rng);
  void set_compose(int f, int g, int fg);
  void set_over_budget(int f, int g);

  void make_graded(int budget, std::vector<int> grades_nonid, std::vector<int> generators,
                   bool prefix_decidable);

  int num_vertices() const { return (int)vnames_.size(); }

  Category finalize(bool imply_identity_composites = true) &&;

 private:
  std::vector<std::string> vnames_, idnames_, mnames_;
  std::vector<int> src_, rng_;
  std::map<std::pair<int, int>, int32_t> comp_;
  Category::Flavor flavor_ = Category::Flavor::Explicit;
  int budget_ = -1;
  std::vector<int> grade_;
  std::vector<int> generators_;
  bool prefix_decidable_ = false;
};

// Raw, name-level category description as it appears in input files.
struct CategorySpec {
  std::vector<std::string> vertices;
  struct Morphism {
    std::string id, src, rng;
  };
  std::vector<Morphism> morphisms;                       // identities may be included
  std::vector<std::array<std::string, 3>> compose;       // (f, g, fg)
  std::map<std::string, std::string> identities;         // vertex -> morphism id (optional)
};

// Validates the axioms and returns the category, or throws lcsc::Error naming
// the first violated axiom with a witness.
Category validate_category(const CategorySpec& spec);

CategorySpec to_spec(const Category& c);

struct LcResult {
  bool left_cancellative = true;
  // witness (alpha, beta, gamma) with alpha*beta == alpha*gamma, beta != gamma
  std::optional<std::array<int, 3>> witness;
};
LcResult is_left_cancellative(const Category& c);
void require_left_cancellative(const Category& c);

struct InvertiblesResult {
  std::vector<int> invertibles;          // sorted morphism indices
  std::vector<int> inverse;              // per morphism: two-sided inverse or -1
  std::vector<std::vector<int>> classes; // ~ classes, each sorted, ordered by least member
  std::vector<int> class_of;             // morphism -> class index
};
InvertiblesResult invertibles_and_equivalence(const Category& c);

// Relabel with fresh machine names ("v0..", "m0..") and a shuffled order of
// the non-identity morphisms; returns the new category plus index maps.
struct Relabeled {
  Category cat;
  std::vector<int> vmap;  // old vertex -> new vertex
  std::vector<int> mmap;  // old morphism -> new morphism
};
Relabeled relabel(const Category& c, const std::vector<int>& nonid_order);

}  // namespace lcsc
