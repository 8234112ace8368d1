// lcsc: validation, alignment, skew products, quotients, Gross-Tucker
// reconstruction, Zappa-Szep and Exel-Pardo products, fundamental and
// universal groups, connectivity criteria, coverings, DOT export, and the
// seeded property-suite runner. All inputs and reports are JSON.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lcsc/alignment.hpp"
#include "lcsc/covering.hpp"
#include "lcsc/fixtures.hpp"
#include "lcsc/groupoid.hpp"
#include "lcsc/io.hpp"
#include "lcsc/skew.hpp"
#include "lcsc/suite.hpp"
#include "lcsc/zappa.hpp"

using namespace lcsc;
using json = nlohmann::ordered_json;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

int resolve_morphism(const Category& c, const std::string& name) {
  int m = c.morphism_by_name(name);
  if (m < 0) fail(Errc::ParseError, "unknown morphism '" + name + "'");
  return m;
}

std::vector<int> resolve_morphisms(const Category& c, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (auto& n : names) out.push_back(resolve_morphism(c, n));
  return out;
}

json fp_report(const FpGroup& p, bool with_invariants, uint64_t bound) {
  json j = json::parse(fpgroup_to_json(p));
  if (with_invariants) {
    FpInvariants inv = fp_invariants(p, bound);
    json ab = json::array();
    for (auto x : inv.abelian) ab.push_back(x);
    j["abelianization"] = ab;
    json homs = json::object();
    for (size_t i = 0; i < inv.hom_counts.size(); ++i)
      homs[fp_battery_names()[i]] = inv.hom_counts[i];
    j["hom_counts"] = homs;
  }
  return j;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("LCSC_SEED")) return std::strtoull(env, nullptr, 10);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite left cancellative small categories: skew products, quotients, coverings"};
  app.require_subcommand(1);

  std::string category_path, group_path, cocycle_path, action_path, out_path, dot_path;
  std::string system_path, graph_path, map_path, base_path, total_path;

  // ---- validate
  auto* validate = app.add_subcommand("validate", "validate a category/group/cocycle file");
  validate->add_option("--category", category_path);
  validate->add_option("--group", group_path);
  validate->add_option("--cocycle", cocycle_path);
  validate->add_option("--out", out_path);
  validate->callback([&] {
    json report = json::object();
    std::optional<Category> cat;
    if (!category_path.empty()) {
      cat = category_from_json(read_file(category_path));
      report["category"] = {{"vertices", cat->num_vertices()},
                            {"morphisms", cat->num_morphisms()},
                            {"connected", cat->is_connected()},
                            {"left_cancellative", is_left_cancellative(*cat).left_cancellative}};
    }
    std::optional<Group> grp;
    if (!group_path.empty()) {
      grp = group_from_json(read_file(group_path));
      report["group"] = {{"finite", grp->is_finite()},
                         {"order", grp->is_finite() ? grp->order() : -1}};
    }
    if (!cocycle_path.empty()) {
      if (!cat) fail(Errc::ParseError, "--cocycle needs --category");
      Cocycle eta = cocycle_from_json(*cat, read_file(cocycle_path), grp ? &*grp : nullptr);
      json c = {{"values", (int)eta.values.size()}};
      if (eta.nondegenerate) c["nondegenerate"] = *eta.nondegenerate;
      report["cocycle"] = c;
    }
    report["ok"] = true;
    emit(report.dump(2) + "\n", out_path);
  });

  // ---- align
  auto* align = app.add_subcommand("align", "principal ideals, joins, exhaustive sets");
  std::string ideal_of;
  std::vector<std::string> join_pair, family, indep;
  std::string exhaustive_vertex;
  std::vector<std::string> exhaustive_set;
  align->add_option("--category", category_path)->required();
  align->add_option("--ideal", ideal_of, "principal ideal of a morphism");
  align->add_option("--join", join_pair, "join of two morphisms")->expected(2);
  align->add_option("--family", family, "join of a family");
  align->add_option("--independent", indep, "independence check");
  align->add_option("--exhaustive-at", exhaustive_vertex, "vertex for --set");
  align->add_option("--set", exhaustive_set, "candidate exhaustive set");
  align->add_option("--out", out_path);
  align->callback([&] {
    Category c = category_from_json(read_file(category_path));
    json report;
    auto names = [&](const std::vector<int>& ms) {
      json a = json::array();
      for (int m : ms) a.push_back(c.morphism_name(m));
      return a;
    };
    if (!ideal_of.empty())
      report["ideal"] = names(principal_ideal(c, resolve_morphism(c, ideal_of)));
    if (!join_pair.empty()) {
      auto j = join(c, resolve_morphism(c, join_pair[0]), resolve_morphism(c, join_pair[1]));
      report["join"] = names(j);
    }
    if (!family.empty()) report["join_family"] = names(join_family(c, resolve_morphisms(c, family)));
    if (!indep.empty()) {
      auto r = is_independent(c, resolve_morphisms(c, indep));
      json jr = {{"independent", r.independent}};
      if (r.witness)
        jr["witness"] = {c.morphism_name(r.witness->first), c.morphism_name(r.witness->second)};
      report["independent"] = jr;
    }
    if (!exhaustive_vertex.empty()) {
      int v = c.vertex_by_name(exhaustive_vertex);
      if (v < 0) fail(Errc::ParseError, "unknown vertex '" + exhaustive_vertex + "'");
      auto r = is_exhaustive(c, v, resolve_morphisms(c, exhaustive_set));
      json jr = {{"exhaustive", r.exhaustive}};
      if (r.witness) jr["witness"] = c.morphism_name(*r.witness);
      report["exhaustive"] = jr;
    }
    emit(report.dump(2) + "\n", out_path);
  });

  // ---- skew
  auto* skew = app.add_subcommand("skew", "skew product C x_eta G");
  skew->add_option("--category", category_path)->required();
  skew->add_option("--cocycle", cocycle_path)->required();
  skew->add_option("--group", group_path);
  skew->add_option("--out", out_path);
  skew->add_option("--dot", dot_path);
  skew->callback([&] {
    Category c = category_from_json(read_file(category_path));
    std::optional<Group> grp;
    if (!group_path.empty()) grp = group_from_json(read_file(group_path));
    Cocycle eta = cocycle_from_json(c, read_file(cocycle_path), grp ? &*grp : nullptr);
    SkewProduct sp = skew_product(c, eta);
    if (!dot_path.empty()) write_file(dot_path, export_dot(sp.cat));
    emit(category_to_json(sp.cat), out_path);
  });

  // ---- quotient
  auto* quot = app.add_subcommand("quotient", "quotient by a free action");
  quot->add_option("--category", category_path)->required();
  quot->add_option("--action", action_path)->required();
  quot->add_option("--out", out_path);
  quot->callback([&] {
    Category d = category_from_json(read_file(category_path));
    GroupAction a = action_from_json(d, read_file(action_path));
    QuotientResult q = quotient_category(d, a);
    json j;
    j["quotient"] = json::parse(category_to_json(q.quotient));
    j["qmap"] = json::parse(functor_to_json(d, q.quotient, q.qmap));
    json section = json::object();
    for (int w = 0; w < q.quotient.num_vertices(); ++w)
      section[q.quotient.vertex_name(w)] = d.vertex_name(q.vertex_section[w]);
    j["section"] = section;
    emit(j.dump(2) + "\n", out_path);
  });

  // ---- gross-tucker
  auto* gt = app.add_subcommand("gross-tucker", "reconstruct a free action as a skew product");
  gt->add_option("--category", category_path)->required();
  gt->add_option("--action", action_path)->required();
  gt->add_option("--out", out_path);
  gt->callback([&] {
    Category d = category_from_json(read_file(category_path));
    GroupAction a = action_from_json(d, read_file(action_path));
    GrossTucker g = gross_tucker(d, a);
    json j;
    j["quotient"] = json::parse(category_to_json(g.quotient.quotient));
    j["eta"] = json::parse(cocycle_to_json(g.quotient.quotient, g.eta));
    j["skew"] = json::parse(category_to_json(g.skew.cat));
    j["rho"] = json::parse(functor_to_json(g.skew.cat, d, g.rho));
    j["verified"] = true;
    emit(j.dump(2) + "\n", out_path);
  });

  // ---- zs
  auto* zs = app.add_subcommand("zs", "Zappa-Szep product of a category system");
  zs->add_option("--system", system_path)->required();
  zs->add_option("--out", out_path);
  zs->add_option("--dot", dot_path);
  zs->callback([&] {
    CategorySystem sys = system_from_json(read_file(system_path));
    ZsProduct z = zs_product(sys);
    if (!dot_path.empty()) write_file(dot_path, export_dot(z.cat));
    emit(category_to_json(z.cat), out_path);
  });

  // ---- ep
  auto* ep = app.add_subcommand("ep", "Exel-Pardo path-category system at a budget");
  int budget = 3;
  ep->add_option("--system", system_path)->required();
  ep->add_option("--budget", budget)->required();
  ep->add_option("--out", out_path);
  ep->callback([&] {
    ExelPardoSystem sys = ep_from_json(read_file(system_path));
    EpWindow w = ep_category_system(sys, budget);
    ZsProduct z = zs_product(w.sys);
    emit(category_to_json(z.cat), out_path);
  });

  // ---- katsura
  auto* kat = app.add_subcommand("katsura", "Katsura system K_{A,B} over the Z_m surrogate");
  std::string a_text, b_text;
  int zm = 2;
  kat->add_option("--A", a_text)->required();
  kat->add_option("--B", b_text)->required();
  kat->add_option("--m", zm, "order of the cyclic surrogate");
  kat->add_option("--budget", budget);
  kat->add_option("--out", out_path);
  kat->callback([&] {
    auto parse_matrix = [](const std::string& text) {
      json j = json::parse(text, nullptr, false);
      if (j.is_discarded()) fail(Errc::ParseError, "matrix must be JSON, e.g. [[2]]");
      std::vector<std::vector<long long>> m;
      for (auto& row : j) {
        std::vector<long long> r;
        for (auto& x : row) r.push_back(x.get<long long>());
        m.push_back(std::move(r));
      }
      return m;
    };
    ExelPardoSystem sys = katsura_system(parse_matrix(a_text), parse_matrix(b_text), zm);
    EpWindow w = ep_category_system(sys, budget);
    ZsProduct z = zs_product(w.sys);
    emit(category_to_json(z.cat), out_path);
  });

  // ---- pi1
  auto* pi1 = app.add_subcommand("pi1", "fundamental group presentation");
  std::string root;
  bool with_invariants = false;
  uint64_t battery_bound = 50000000;
  pi1->add_option("--category", category_path);
  pi1->add_option("--graph", graph_path);
  pi1->add_option("--budget", budget);
  pi1->add_option("--root", root);
  pi1->add_flag("--invariants", with_invariants);
  pi1->add_option("--out", out_path);
  pi1->callback([&] {
    Category c;
    if (!category_path.empty())
      c = category_from_json(read_file(category_path));
    else if (!graph_path.empty())
      c = path_category(graph_from_json(read_file(graph_path)), budget).cat;
    else
      fail(Errc::ParseError, "pi1 needs --category or --graph");
    int r = root.empty() ? 0 : c.vertex_by_name(root);
    if (r < 0) fail(Errc::ParseError, "unknown vertex '" + root + "'");
    emit(fp_report(fundamental_group(c, r), with_invariants, battery_bound).dump(2) + "\n",
         out_path);
  });

  // ---- universal-group
  auto* ug = app.add_subcommand("universal-group", "universal group presentation");
  std::string mode = "raw";
  ug->add_option("--category", category_path);
  ug->add_option("--graph", graph_path);
  ug->add_option("--budget", budget);
  ug->add_option("--mode", mode)->check(CLI::IsMember({"raw", "connected", "components"}));
  ug->add_option("--root", root);
  ug->add_flag("--invariants", with_invariants);
  ug->add_option("--out", out_path);
  ug->callback([&] {
    Category c;
    if (!category_path.empty())
      c = category_from_json(read_file(category_path));
    else if (!graph_path.empty())
      c = path_category(graph_from_json(read_file(graph_path)), budget).cat;
    else
      fail(Errc::ParseError, "universal-group needs --category or --graph");
    UniversalMode m = mode == "raw"         ? UniversalMode::Raw
                      : mode == "connected" ? UniversalMode::Connected
                                            : UniversalMode::Components;
    int r = root.empty() ? 0 : c.vertex_by_name(root);
    if (r < 0) fail(Errc::ParseError, "unknown vertex '" + root + "'");
    emit(fp_report(universal_group(c, m, r), with_invariants, battery_bound).dump(2) + "\n",
         out_path);
  });

  // ---- connectivity
  auto* conn = app.add_subcommand("connectivity", "skew-product connectedness report");
  conn->add_option("--category", category_path)->required();
  conn->add_option("--cocycle", cocycle_path)->required();
  conn->add_option("--group", group_path);
  conn->add_option("--out", out_path);
  conn->callback([&] {
    Category c = category_from_json(read_file(category_path));
    std::optional<Group> grp;
    if (!group_path.empty()) grp = group_from_json(read_file(group_path));
    Cocycle eta = cocycle_from_json(c, read_file(cocycle_path), grp ? &*grp : nullptr);
    ConnectivityReport r = skew_connectivity_report(c, eta);
    json j = {{"direct", r.direct}, {"via_pi", r.via_pi}, {"nondegenerate", r.nondegenerate}};
    emit(j.dump(2) + "\n", out_path);
  });

  // ---- seven
  auto* seven = app.add_subcommand("seven", "the seven connectedness criteria on a groupoid");
  seven->add_option("--category", category_path)->required();
  seven->add_option("--cocycle", cocycle_path)->required();
  seven->add_option("--group", group_path);
  seven->add_option("--out", out_path);
  seven->callback([&] {
    Category c = category_from_json(read_file(category_path));
    std::optional<Group> grp;
    if (!group_path.empty()) grp = group_from_json(read_file(group_path));
    Cocycle psi = cocycle_from_json(c, read_file(cocycle_path), grp ? &*grp : nullptr);
    SevenCriteria sc = seven_criteria_check(as_groupoid(c), psi);
    json arr = json::array();
    for (bool b : sc.criteria) arr.push_back(b);
    json j = {{"criteria", arr}, {"agree", sc.agree}};
    emit(j.dump(2) + "\n", out_path);
  });

  // ---- covering
  auto* cov = app.add_subcommand("covering", "covering checks, deck groups, orbit reports");
  cov->require_subcommand(1);
  auto* cov_check = cov->add_subcommand("check", "verify the covering property");
  cov_check->add_option("--total", total_path)->required();
  cov_check->add_option("--base", base_path)->required();
  cov_check->add_option("--map", map_path)->required();
  cov_check->add_option("--out", out_path);
  cov_check->callback([&] {
    Category d = category_from_json(read_file(total_path));
    Category c = category_from_json(read_file(base_path));
    CatFunctor p = functor_from_json(d, c, read_file(map_path));
    auto r = is_covering(d, c, p);
    json j = {{"covering", r.covering}};
    if (!r.covering) j["witness"] = r.witness;
    emit(j.dump(2) + "\n", out_path);
  });
  auto* cov_deck = cov->add_subcommand("deck", "deck transformation group");
  cov_deck->add_option("--total", total_path)->required();
  cov_deck->add_option("--base", base_path)->required();
  cov_deck->add_option("--map", map_path)->required();
  cov_deck->add_option("--out", out_path);
  cov_deck->callback([&] {
    Category d = category_from_json(read_file(total_path));
    Category c = category_from_json(read_file(base_path));
    CatFunctor p = functor_from_json(d, c, read_file(map_path));
    DeckGroup deck = deck_transformations(d, c, p);
    json j;
    j["order"] = (int)deck.elements.size();
    j["group"] = json::parse(group_to_json(deck.group));
    json elems = json::array();
    for (auto& e : deck.elements) elems.push_back(json::parse(functor_to_json(d, d, e)));
    j["elements"] = elems;
    emit(j.dump(2) + "\n", out_path);
  });
  auto* cov_orbits = cov->add_subcommand("orbits", "orbits/stabilizers of the cocycle action");
  cov_orbits->add_option("--category", category_path)->required();
  cov_orbits->add_option("--cocycle", cocycle_path)->required();
  cov_orbits->add_option("--group", group_path);
  cov_orbits->add_option("--out", out_path);
  cov_orbits->callback([&] {
    Category c = category_from_json(read_file(category_path));
    std::optional<Group> grp;
    if (!group_path.empty()) grp = group_from_json(read_file(group_path));
    Cocycle eta = cocycle_from_json(c, read_file(cocycle_path), grp ? &*grp : nullptr);
    CatAction a = cocycle_action(c, eta);
    OrbitsResult r = orbits_and_stabilizers(c, a);
    json j;
    j["transitive"] = r.transitive;
    json orbits = json::array();
    for (auto& orb : r.orbits) {
      json o = json::array();
      for (int p : orb) o.push_back(a.point_names[p]);
      orbits.push_back(o);
    }
    j["orbits"] = orbits;
    if (!r.stabilizers.empty()) {
      json st = json::object();
      for (size_t p = 0; p < r.stabilizers.size(); ++p) {
        json s = json::array();
        for (int m : r.stabilizers[p]) s.push_back(c.morphism_name(m));
        st[a.point_names[p]] = s;
      }
      j["stabilizers"] = st;
    }
    emit(j.dump(2) + "\n", out_path);
  });

  // ---- suite
  auto* suite = app.add_subcommand("suite", "run the seeded property suites");
  SuiteConfig cfg;
  cfg.seed = default_seed();
  std::string mutant = "none";
  suite->add_option("--seed", cfg.seed);
  suite->add_option("--scale", cfg.scale, "fixture count as % of acceptance scale");
  suite->add_option("--max-morphisms", cfg.max_morphisms);
  suite->add_option("--max-group-order", cfg.max_group_order);
  suite->add_option("--battery-bound", cfg.battery_bound);
  suite->add_option("--mutant", mutant)
      ->check(CLI::IsMember({"none", "skew-composability", "freeness-check", "tree-kernel"}));
  suite->add_option("--out", out_path);
  suite->callback([&] {
    cfg.mutant = mutant == "skew-composability" ? testing::Mutant::SkewComposabilityFlipped
                 : mutant == "freeness-check"   ? testing::Mutant::FreenessCheckDropped
                 : mutant == "tree-kernel"      ? testing::Mutant::TreeSearchOutsideKernel
                                                : testing::Mutant::None;
    auto results = run_all_suites(cfg);
    emit(report_to_json(cfg, results), out_path);
  });

  // ---- export-dot
  auto* dot = app.add_subcommand("export-dot", "DOT export of a category or covering");
  dot->add_option("--category", category_path);
  dot->add_option("--total", total_path);
  dot->add_option("--base", base_path);
  dot->add_option("--map", map_path);
  dot->add_option("--out", out_path);
  dot->callback([&] {
    if (!category_path.empty()) {
      emit(export_dot(category_from_json(read_file(category_path))), out_path);
      return;
    }
    if (total_path.empty() || base_path.empty() || map_path.empty())
      fail(Errc::ParseError, "export-dot needs --category or --total/--base/--map");
    Category d = category_from_json(read_file(total_path));
    Category c = category_from_json(read_file(base_path));
    CatFunctor p = functor_from_json(d, c, read_file(map_path));
    emit(export_dot_covering(d, c, p), out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    json j = {{"error", errc_name(e.code())}, {"detail", e.what()}};
    std::cerr << j.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json j = {{"error", "InternalError"}, {"detail", e.what()}};
    std::cerr << j.dump(2) << "\n";
    return 2;
  }
  return 0;
}
