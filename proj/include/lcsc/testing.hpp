#pragma once

namespace lcsc::testing {

// Seeded fault injection for the mutation-sensitivity suite. Exactly one
// mutant may be active; production behaviour is Mutant::None.
enum class Mutant {
  None,
  SkewComposabilityFlipped,  // skew multiplication demands g = eta(alpha)h instead of g = eta(beta)h
  FreenessCheckDropped,      // quotient construction skips the freeness precondition
  TreeSearchOutsideKernel,   // criteria (4)/(5) accept tree candidates outside ker psi
};

Mutant active_mutant();
void set_mutant(Mutant m);

struct ScopedMutant {
  explicit ScopedMutant(Mutant m) { set_mutant(m); }
  ~ScopedMutant() { set_mutant(Mutant::None); }
};

}  // namespace lcsc::testing
