#pragma once

#include <string>

#include "lcsc/actions.hpp"
#include "lcsc/category.hpp"
#include "lcsc/cocycle.hpp"
#include "lcsc/covering.hpp"
#include "lcsc/fpgroup.hpp"
#include "lcsc/functor.hpp"
#include "lcsc/group.hpp"
#include "lcsc/zappa.hpp"

// File formats (JSON):
//   Category  {"vertices":[...], "morphisms":[{"id","src","rng"},...],
//              "compose":[[f,g,fg],...], "identities":{vertex: morphism}}
//   Group     {"kind":"table","elements":[...],"mul":[[...]]}
//             {"kind":"free","rank":n}
//             {"kind":"presented","generators":[...],"relators":[...]}   (FpGroup contexts)
//   Cocycle   {"target": <group>, "values": {morphism: element}}  (target optional
//             when the group is supplied separately)
//   Action    {"group": <group>, "act": {element: {morphism: morphism}}}
//   Graph     {"vertices":[...], "edges":[{"id","src","rng"},...]}
//   EP system {"graph": <graph>, "group": <group>, "vact": {element:{vertex:vertex}},
//              "eact": {element:{edge:edge}}, "phi": {element:{edge:element}}}
//   Functor   {"vmap": {vertex: vertex}, "mmap": {morphism: morphism}}
//   FpGroup   {"generators":[...], "relators":[...], "rendering": "< ... >"}
// Table-group elements are names (or indices); free-group elements are arrays
// of signed generator numbers, or a plain integer for rank one.

namespace lcsc {

Category category_from_json(const std::string& text);
std::string category_to_json(const Category& c);

Group group_from_json(const std::string& text);
std::string group_to_json(const Group& g);

FpGroup fpgroup_from_json(const std::string& text);
std::string fpgroup_to_json(const FpGroup& p);

// The group argument wins over an inline "target" when both are present.
Cocycle cocycle_from_json(const Category& c, const std::string& text,
                          const Group* group = nullptr);
std::string cocycle_to_json(const Category& c, const Cocycle& eta);

GroupAction action_from_json(const Category& d, const std::string& text,
                             const Group* group = nullptr);
std::string action_to_json(const Category& d, const GroupAction& a);

Graph graph_from_json(const std::string& text);
ExelPardoSystem ep_from_json(const std::string& text);

// {"category": <category>, "group": <group>, "act": {element: {morphism:
// morphism}}, "phi": {element: {morphism: element}}}; phi entries for
// identities default to the acting element.
CategorySystem system_from_json(const std::string& text);

CatFunctor functor_from_json(const Category& dom, const Category& cod, const std::string& text);
std::string functor_to_json(const Category& dom, const Category& cod, const CatFunctor& f);

std::string export_dot(const Category& c);
std::string export_dot_covering(const Category& d, const Category& c, const CatFunctor& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace lcsc
