#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcsc/errors.hpp"
#include "lcsc/word.hpp"

namespace lcsc {

// A group in one of two forms:
//  - Table: finite, given by a validated multiplication table; elements are
//    indices 0..order-1 and the unit is always index 0 after normalization.
//  - Free: the free group on `rank` letters; elements are interned reduced
//    words, with element 0 the empty word. Interning is cached, so element
//    handles are plain ints in both cases. The intern cache mutates lazily:
//    table groups are freely shareable across threads, free groups are not.
class Group {
 public:
  enum class Kind { Table, Free };

  static Group table(std::vector<std::string> names, const std::vector<std::vector<int>>& mul);
  static Group free_group(int rank);
  static Group trivial() { return cyclic(1); }
  static Group cyclic(int n);
  static Group symmetric3();
  static Group dihedral(int n);  // order 2n, elements r^i s^j
  static Group quaternion8();
  static Group direct_product(const Group& a, const Group& b);
  // Subgroup of a table group on the given (closed) element set; element 0 of
  // the result is the unit. `elems` need not be sorted.
  static Group subgroup(const Group& g, std::vector<int> elems);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Table; }
  int order() const;
  int rank() const;  // Free only
  int unit() const { return 0; }

  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, int n) const;
  bool is_abelian() const;

  const std::string& elem_name(int a) const;
  int elem_by_name(const std::string& name) const;  // -1 if absent

  // Free-group access.
  int intern(Word w) const;
  const Word& word(int a) const;
  int free_generator(int i) const;

  // Closure of a subset under mul and inv (Table only), sorted ascending.
  std::vector<int> closure(const std::vector<int>& gens) const;
  bool is_whole(const std::vector<int>& subset) const { return (int)subset.size() == order(); }

  bool same_table(const Group& o) const;

  // All homomorphisms *this -> target, each as a full image table (Table only,
  // intended for small orders).
  std::vector<std::vector<int>> all_homomorphisms(const Group& target) const;

  Group() : names_{"e"}, mul_{{0}}, inv_{0} {}  // the trivial group

 private:
  Kind kind_ = Kind::Table;
  // table form
  std::vector<std::string> names_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  // free form
  int rank_ = 0;
  mutable std::vector<Word> words_;
  mutable std::map<Word, int> intern_;
  mutable std::vector<std::string> free_names_;
};

}  // namespace lcsc
