#pragma once

#include <optional>
#include <vector>

#include "lcsc/category.hpp"

namespace lcsc {

// A functor between two categories, by index maps. The categories themselves
// are passed alongside at call sites; a functor object does not own them.
struct CatFunctor {
  std::vector<int> vmap;  // domain vertex -> codomain vertex
  std::vector<int> mmap;  // domain morphism -> codomain morphism
};

// Throws NotAFunctor naming the violated law and a witness.
void require_functor(const Category& dom, const Category& cod, const CatFunctor& f);
bool is_functor(const Category& dom, const Category& cod, const CatFunctor& f);

bool is_bijective(const Category& dom, const Category& cod, const CatFunctor& f);

CatFunctor identity_functor(const Category& c);
CatFunctor compose_functors(const Category& a, const CatFunctor& f, const CatFunctor& g);
CatFunctor inverse_functor(const Category& dom, const Category& cod, const CatFunctor& f);

// Exhaustive isomorphism search with degree-profile pruning. Returns an
// isomorphism if one exists.
std::optional<CatFunctor> find_isomorphism(const Category& a, const Category& b);

}  // namespace lcsc
