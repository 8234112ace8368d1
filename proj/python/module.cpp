#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcsc/alignment.hpp"
#include "lcsc/covering.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/groupoid.hpp"
#include "lcsc/io.hpp"
#include "lcsc/skew.hpp"
#include "lcsc/suite.hpp"
#include "lcsc/zappa.hpp"

namespace py = pybind11;
using namespace lcsc;

namespace {

std::vector<std::string> morphism_names(const Category& c) {
  std::vector<std::string> out;
  for (int m = 0; m < c.num_morphisms(); ++m) out.push_back(c.morphism_name(m));
  return out;
}

std::vector<std::string> vertex_names(const Category& c) {
  std::vector<std::string> out;
  for (int v = 0; v < c.num_vertices(); ++v) out.push_back(c.vertex_name(v));
  return out;
}

Cocycle load_cocycle(const Category& c, const std::string& cocycle_json,
                     const std::string& group_json) {
  if (group_json.empty()) return cocycle_from_json(c, cocycle_json);
  Group g = group_from_json(group_json);
  return cocycle_from_json(c, cocycle_json, &g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite left cancellative small categories: skew products, quotients, coverings";

  py::register_exception<Error>(m, "LcscError");

  py::class_<Category>(m, "Category")
      .def_static("from_json", &category_from_json, py::arg("text"))
      .def("to_json", &category_to_json)
      .def_property_readonly("num_vertices", &Category::num_vertices)
      .def_property_readonly("num_morphisms", &Category::num_morphisms)
      .def("vertices", &vertex_names)
      .def("morphisms", &morphism_names)
      .def("src", [](const Category& c, const std::string& m_) {
        int m = c.morphism_by_name(m_);
        if (m < 0) fail(Errc::ParseError, "unknown morphism '" + m_ + "'");
        return c.vertex_name(c.src(m));
      })
      .def("rng", [](const Category& c, const std::string& m_) {
        int m = c.morphism_by_name(m_);
        if (m < 0) fail(Errc::ParseError, "unknown morphism '" + m_ + "'");
        return c.vertex_name(c.rng(m));
      })
      .def("compose", [](const Category& c, const std::string& f_, const std::string& g_)
               -> std::optional<std::string> {
        int f = c.morphism_by_name(f_), g = c.morphism_by_name(g_);
        if (f < 0 || g < 0) fail(Errc::ParseError, "unknown morphism");
        auto fg = c.compose(f, g);
        if (!fg) return std::nullopt;
        return c.morphism_name(*fg);
      })
      .def("is_left_cancellative",
           [](const Category& c) { return is_left_cancellative(c).left_cancellative; })
      .def("is_connected", &Category::is_connected)
      .def("connected_components", [](const Category& c) {
        std::vector<std::vector<std::string>> out;
        for (auto& blk : c.connected_components()) {
          std::vector<std::string> names;
          for (int v : blk) names.push_back(c.vertex_name(v));
          out.push_back(std::move(names));
        }
        return out;
      })
      .def("invertibles", [](const Category& c) {
        std::vector<std::string> out;
        for (int m : invertibles_and_equivalence(c).invertibles) out.push_back(c.morphism_name(m));
        return out;
      })
      .def("equivalence_classes", [](const Category& c) {
        std::vector<std::vector<std::string>> out;
        for (auto& cls : invertibles_and_equivalence(c).classes) {
          std::vector<std::string> names;
          for (int m : cls) names.push_back(c.morphism_name(m));
          out.push_back(std::move(names));
        }
        return out;
      })
      .def("__repr__", [](const Category& c) {
        return "<Category: " + std::to_string(c.num_vertices()) + " vertices, " +
               std::to_string(c.num_morphisms()) + " morphisms>";
      });

  m.def("principal_ideal",
        [](const Category& c, const std::string& a) {
          int m = c.morphism_by_name(a);
          if (m < 0) fail(Errc::ParseError, "unknown morphism '" + a + "'");
          std::vector<std::string> out;
          for (int x : principal_ideal(c, m)) out.push_back(c.morphism_name(x));
          return out;
        },
        py::arg("category"), py::arg("morphism"));

  m.def("join",
        [](const Category& c, const std::string& a, const std::string& b) {
          int x = c.morphism_by_name(a), y = c.morphism_by_name(b);
          if (x < 0 || y < 0) fail(Errc::ParseError, "unknown morphism");
          std::vector<std::string> out;
          for (int j : join(c, x, y)) out.push_back(c.morphism_name(j));
          return out;
        },
        py::arg("category"), py::arg("a"), py::arg("b"));

  m.def("skew_product",
        [](const Category& c, const std::string& cocycle_json, const std::string& group_json) {
          SkewProduct sp = skew_product(c, load_cocycle(c, cocycle_json, group_json));
          return py::make_tuple(sp.cat, functor_to_json(sp.cat, sp.base, sp.projection));
        },
        py::arg("category"), py::arg("cocycle_json"), py::arg("group_json") = "");

  m.def("quotient",
        [](const Category& d, const std::string& action_json) {
          GroupAction a = action_from_json(d, action_json);
          QuotientResult q = quotient_category(d, a);
          return py::make_tuple(q.quotient, functor_to_json(d, q.quotient, q.qmap));
        },
        py::arg("category"), py::arg("action_json"));

  m.def("gross_tucker",
        [](const Category& d, const std::string& action_json) {
          GroupAction a = action_from_json(d, action_json);
          GrossTucker g = gross_tucker(d, a);
          py::dict out;
          out["quotient"] = g.quotient.quotient;
          out["eta"] = cocycle_to_json(g.quotient.quotient, g.eta);
          out["skew"] = g.skew.cat;
          out["rho"] = functor_to_json(g.skew.cat, d, g.rho);
          return out;
        },
        py::arg("category"), py::arg("action_json"));

  m.def("path_category",
        [](const std::string& graph_json, int budget) {
          return path_category(graph_from_json(graph_json), budget).cat;
        },
        py::arg("graph_json"), py::arg("budget"));

  m.def("zs_product",
        [](const std::string& system_json) { return zs_product(system_from_json(system_json)).cat; },
        py::arg("system_json"));

  m.def("ep_product",
        [](const std::string& ep_json, int budget) {
          EpWindow w = ep_category_system(ep_from_json(ep_json), budget);
          return zs_product(w.sys).cat;
        },
        py::arg("ep_json"), py::arg("budget"));

  m.def("katsura",
        [](const std::vector<std::vector<long long>>& a,
           const std::vector<std::vector<long long>>& b, int zm, int budget) {
          EpWindow w = ep_category_system(katsura_system(a, b, zm), budget);
          return zs_product(w.sys).cat;
        },
        py::arg("A"), py::arg("B"), py::arg("m"), py::arg("budget"));

  auto fp_dict = [](const FpGroup& p) {
    FpInvariants inv = fp_invariants(p);
    py::dict out;
    out["generators"] = p.generators;
    py::list rel;
    for (auto& r : p.relators) {
      py::list w;
      for (int32_t x : r) w.append(x);
      rel.append(w);
    }
    out["relators"] = rel;
    out["rendering"] = p.render();
    out["abelianization"] = inv.abelian;
    py::dict homs;
    for (size_t i = 0; i < inv.hom_counts.size(); ++i)
      homs[py::str(fp_battery_names()[i])] = inv.hom_counts[i];
    out["hom_counts"] = homs;
    return out;
  };

  m.def("pi1",
        [fp_dict](const Category& c, const std::string& root) {
          int r = root.empty() ? 0 : c.vertex_by_name(root);
          if (r < 0) fail(Errc::ParseError, "unknown vertex '" + root + "'");
          return fp_dict(fundamental_group(c, r));
        },
        py::arg("category"), py::arg("root") = "");

  m.def("universal_group",
        [fp_dict](const Category& c, const std::string& mode, const std::string& root) {
          UniversalMode um = mode == "raw"         ? UniversalMode::Raw
                             : mode == "connected" ? UniversalMode::Connected
                             : mode == "components"
                                 ? UniversalMode::Components
                                 : (fail(Errc::ParseError, "unknown mode '" + mode + "'"),
                                    UniversalMode::Raw);
          int r = root.empty() ? 0 : c.vertex_by_name(root);
          if (r < 0) fail(Errc::ParseError, "unknown vertex '" + root + "'");
          return fp_dict(universal_group(c, um, r));
        },
        py::arg("category"), py::arg("mode") = "raw", py::arg("root") = "");

  m.def("connectivity",
        [](const Category& c, const std::string& cocycle_json, const std::string& group_json) {
          ConnectivityReport r = skew_connectivity_report(c, load_cocycle(c, cocycle_json, group_json));
          py::dict out;
          out["direct"] = r.direct;
          out["via_pi"] = r.via_pi;
          out["nondegenerate"] = r.nondegenerate;
          return out;
        },
        py::arg("category"), py::arg("cocycle_json"), py::arg("group_json") = "");

  m.def("seven_criteria",
        [](const Category& c, const std::string& cocycle_json, const std::string& group_json) {
          SevenCriteria sc =
              seven_criteria_check(as_groupoid(c), load_cocycle(c, cocycle_json, group_json));
          std::vector<bool> crit(sc.criteria.begin(), sc.criteria.end());
          return py::make_tuple(crit, sc.agree);
        },
        py::arg("category"), py::arg("cocycle_json"), py::arg("group_json") = "");

  m.def("is_covering",
        [](const Category& d, const Category& c, const std::string& map_json) {
          auto r = is_covering(d, c, functor_from_json(d, c, map_json));
          return py::make_tuple(r.covering, r.witness);
        },
        py::arg("total"), py::arg("base"), py::arg("map_json"));

  m.def("deck_group_order",
        [](const Category& d, const Category& c, const std::string& map_json) {
          return (int)deck_transformations(d, c, functor_from_json(d, c, map_json)).elements.size();
        },
        py::arg("total"), py::arg("base"), py::arg("map_json"));

  m.def("export_dot", [](const Category& c) { return export_dot(c); }, py::arg("category"));

  m.def("run_suites",
        [](uint64_t seed, int scale, int max_morphisms, int max_group_order) {
          SuiteConfig cfg;
          cfg.seed = seed;
          cfg.scale = scale;
          cfg.max_morphisms = max_morphisms;
          cfg.max_group_order = max_group_order;
          return report_to_json(cfg, run_all_suites(cfg));
        },
        py::arg("seed") = 1, py::arg("scale") = 5, py::arg("max_morphisms") = 40,
        py::arg("max_group_order") = 8);

  m.def("pair_groupoid", &pair_groupoid);
  m.def("arrow_category", &arrow_category);
}
