#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcsc/group.hpp"
#include "lcsc/word.hpp"

namespace lcsc {

// A finitely presented group: generators plus freely reduced relator words.
// An empty relator list presents a free group.
struct FpGroup {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string render() const;  // < a, b | a^2, ... >
};

// Tietze simplification: deletes trivial relators, eliminates generators that
// occur exactly once in some relator, removes duplicate relators up to
// rotation and inversion. Bounded; stops early if words grow past the cap.
FpGroup tietze_simplify(FpGroup p, int max_passes = 200, size_t growth_cap = 200000);

// Invariant factors of the abelianization: torsion factors (each > 1, each
// dividing the next) followed by one 0 per free rank.
std::vector<int64_t> abelianization(const FpGroup& p);

// Number of group homomorphisms into a finite table group, by exhaustive
// assignment; relator-free presentations use the closed form |K|^n.
// Throws BatteryTooLarge if |K|^generators exceeds the bound.
uint64_t hom_count(const FpGroup& p, const Group& k, uint64_t bound = 50000000);

// The fixed comparison battery: Z2, Z3, S3, Z4, Z2xZ2, D4.
const std::vector<Group>& fp_battery();
const std::vector<std::string>& fp_battery_names();

struct FpInvariants {
  std::vector<int64_t> abelian;    // invariant factors
  std::vector<uint64_t> hom_counts;  // into the battery, same order
  bool operator==(const FpInvariants& o) const = default;
};
FpInvariants fp_invariants(const FpGroup& p, uint64_t bound = 50000000);

// Free product: disjoint union of generators (renamed on clash) and relators.
FpGroup fp_free_product(const FpGroup& a, const FpGroup& b);

// Presentation of a finite table group on its non-unit elements with the
// full multiplication table as relators.
FpGroup fp_of_table_group(const Group& g);

}  // namespace lcsc
