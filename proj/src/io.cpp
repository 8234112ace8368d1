#include "lcsc/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lcsc {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON");
  return j;
}

[[noreturn]] void bad(const std::string& what) { fail(Errc::ParseError, what); }

json group_to_json_obj(const Group& g) {
  json j;
  if (g.is_finite()) {
    j["kind"] = "table";
    json elems = json::array(), mul = json::array();
    for (int i = 0; i < g.order(); ++i) elems.push_back(g.elem_name(i));
    for (int i = 0; i < g.order(); ++i) {
      json row = json::array();
      for (int k = 0; k < g.order(); ++k) row.push_back(g.mul(i, k));
      mul.push_back(row);
    }
    j["elements"] = elems;
    j["mul"] = mul;
  } else {
    j["kind"] = "free";
    j["rank"] = g.rank();
  }
  return j;
}

Group group_from_json_obj(const json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("group needs a \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "table") {
    std::vector<std::string> names;
    for (auto& e : j.at("elements")) names.push_back(e.get<std::string>());
    std::vector<std::vector<int>> mul;
    for (auto& row : j.at("mul")) {
      std::vector<int> r;
      for (auto& x : row) {
        if (x.is_number_integer())
          r.push_back(x.get<int>());
        else {
          auto it = std::find(names.begin(), names.end(), x.get<std::string>());
          if (it == names.end()) bad("mul table references unknown element '" + x.get<std::string>() + "'");
          r.push_back((int)(it - names.begin()));
        }
      }
      mul.push_back(std::move(r));
    }
    return Group::table(std::move(names), mul);
  }
  if (kind == "free") return Group::free_group(j.at("rank").get<int>());
  if (kind == "presented")
    bad("presented groups are accepted only where a presentation is expected (pi1 outputs)");
  bad("unknown group kind '" + kind + "'");
}

int element_from_json(const Group& g, const json& v) {
  if (g.is_finite()) {
    if (v.is_number_integer()) {
      int x = v.get<int>();
      if (x < 0 || x >= g.order()) bad("element index out of range");
      return x;
    }
    int x = g.elem_by_name(v.get<std::string>());
    if (x < 0) bad("unknown group element '" + v.get<std::string>() + "'");
    return x;
  }
  Word w;
  if (v.is_number_integer()) {
    if (g.rank() != 1) bad("integer elements are only for free groups of rank one");
    int n = v.get<int>();
    for (int i = 0; i < std::abs(n); ++i) w.push_back(n > 0 ? 1 : -1);
  } else if (v.is_array()) {
    for (auto& x : v) w.push_back(x.get<int32_t>());
  } else {
    bad("free-group element must be an integer or an array of signed letters");
  }
  return g.intern(std::move(w));
}

json element_to_json(const Group& g, int x) {
  if (g.is_finite()) return g.elem_name(x);
  const Word& w = g.word(x);
  if (g.rank() == 1) {
    auto e = exponent_sums(w, 1);
    return (int64_t)e[0];
  }
  json arr = json::array();
  for (int32_t l : w) arr.push_back(l);
  return arr;
}

Graph graph_from_json_obj(const json& j) {
  Graph g;
  for (auto& v : j.at("vertices")) g.vertices.push_back(v.get<std::string>());
  for (auto& e : j.at("edges"))
    g.edges.push_back({e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                       e.at("rng").get<std::string>()});
  return g;
}

}  // namespace

Category category_from_json(const std::string& text) {
  json j = parse(text);
  CategorySpec spec;
  if (!j.contains("vertices") || !j.contains("morphisms")) bad("category needs vertices and morphisms");
  for (auto& v : j["vertices"]) spec.vertices.push_back(v.get<std::string>());
  for (auto& m : j["morphisms"])
    spec.morphisms.push_back({m.at("id").get<std::string>(), m.at("src").get<std::string>(),
                              m.at("rng").get<std::string>()});
  if (j.contains("compose"))
    for (auto& t : j["compose"]) {
      if (!t.is_array() || t.size() != 3) bad("compose entries are triples [f, g, fg]");
      spec.compose.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
    }
  if (j.contains("identities"))
    for (auto& [k, v] : j["identities"].items()) spec.identities[k] = v.get<std::string>();
  return validate_category(spec);
}

std::string category_to_json(const Category& c) {
  CategorySpec s = to_spec(c);
  json j;
  j["vertices"] = s.vertices;
  json ms = json::array();
  for (auto& m : s.morphisms) ms.push_back({{"id", m.id}, {"src", m.src}, {"rng", m.rng}});
  j["morphisms"] = ms;
  json ids = json::object();
  for (auto& [v, m] : s.identities) ids[v] = m;
  j["identities"] = ids;
  json comp = json::array();
  for (auto& t : s.compose) comp.push_back({t[0], t[1], t[2]});
  j["compose"] = comp;
  return j.dump(2) + "\n";
}

Group group_from_json(const std::string& text) { return group_from_json_obj(parse(text)); }
std::string group_to_json(const Group& g) { return group_to_json_obj(g).dump(2) + "\n"; }

FpGroup fpgroup_from_json(const std::string& text) {
  json j = parse(text);
  FpGroup p;
  for (auto& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
  if (j.contains("relators"))
    for (auto& r : j["relators"]) {
      Word w;
      for (auto& x : r) w.push_back(x.get<int32_t>());
      free_reduce(w);
      p.relators.push_back(std::move(w));
    }
  return p;
}

std::string fpgroup_to_json(const FpGroup& p) {
  json j;
  j["generators"] = p.generators;
  json rs = json::array();
  for (auto& r : p.relators) {
    json w = json::array();
    for (int32_t x : r) w.push_back(x);
    rs.push_back(w);
  }
  j["relators"] = rs;
  j["rendering"] = p.render();
  return j.dump(2) + "\n";
}

Cocycle cocycle_from_json(const Category& c, const std::string& text, const Group* group) {
  json j = parse(text);
  if (!group && !j.contains("target")) bad("cocycle needs a target group");
  Group target = group ? *group : group_from_json_obj(j["target"]);
  std::vector<int> values(c.num_morphisms(), target.unit());
  std::vector<char> given(c.num_morphisms(), 0);
  for (auto& [k, v] : j.at("values").items()) {
    int m = c.morphism_by_name(k);
    if (m < 0) bad("cocycle references unknown morphism '" + k + "'");
    values[m] = element_from_json(target, v);
    given[m] = 1;
  }
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (!given[m] && !c.is_identity(m))
      bad("cocycle is missing a value for morphism '" + c.morphism_name(m) + "'");
  return validate_cocycle(c, target, std::move(values));
}

std::string cocycle_to_json(const Category& c, const Cocycle& eta) {
  json j;
  j["target"] = group_to_json_obj(eta.target);
  json vals = json::object();
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (!c.is_identity(m)) vals[c.morphism_name(m)] = element_to_json(eta.target, eta(m));
  j["values"] = vals;
  if (eta.nondegenerate) j["nondegenerate"] = *eta.nondegenerate;
  return j.dump(2) + "\n";
}

GroupAction action_from_json(const Category& d, const std::string& text, const Group* group) {
  json j = parse(text);
  if (!group && !j.contains("group")) bad("action needs a group");
  Group g = group ? *group : group_from_json_obj(j["group"]);
  if (!g.is_finite()) bad("actions need a finite group");
  std::vector<std::vector<int>> act(g.order());
  for (int x = 0; x < g.order(); ++x) {
    act[x].resize(d.num_morphisms());
    for (int m = 0; m < d.num_morphisms(); ++m) act[x][m] = m;  //默认 missing rows act trivially
  }
  for (auto& [ename, row] : j.at("act").items()) {
    int x = g.elem_by_name(ename);
    if (x < 0) bad("action references unknown group element '" + ename + "'");
    std::vector<char> given(d.num_morphisms(), 0);
    for (auto& [mname, image] : row.items()) {
      int m = d.morphism_by_name(mname);
      if (m < 0) bad("action references unknown morphism '" + mname + "'");
      int im = d.morphism_by_name(image.get<std::string>());
      if (im < 0) bad("action references unknown morphism '" + image.get<std::string>() + "'");
      act[x][m] = im;
      given[m] = 1;
    }
    for (int m = 0; m < d.num_morphisms(); ++m)
      if (!given[m]) bad("action row for '" + ename + "' is missing morphism '" + d.morphism_name(m) + "'");
  }
  return validate_action(d, std::move(g), std::move(act));
}

std::string action_to_json(const Category& d, const GroupAction& a) {
  json j;
  j["group"] = group_to_json_obj(a.group);
  json act = json::object();
  for (int x = 0; x < a.group.order(); ++x) {
    json row = json::object();
    for (int m = 0; m < d.num_morphisms(); ++m)
      row[d.morphism_name(m)] = d.morphism_name(a.act[x][m]);
    act[a.group.elem_name(x)] = row;
  }
  j["act"] = act;
  return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) { return graph_from_json_obj(parse(text)); }

ExelPardoSystem ep_from_json(const std::string& text) {
  json j = parse(text);
  Graph graph = graph_from_json_obj(j.at("graph"));
  Group h = group_from_json_obj(j.at("group"));
  if (!h.is_finite()) bad("Exel-Pardo systems need a finite group");
  int nv = (int)graph.vertices.size(), ne = (int)graph.edges.size(), nh = h.order();
  auto vindex = [&](const std::string& s) {
    for (int i = 0; i < nv; ++i)
      if (graph.vertices[i] == s) return i;
    bad("unknown vertex '" + s + "'");
    return -1;
  };
  auto eindex = [&](const std::string& s) {
    for (int i = 0; i < ne; ++i)
      if (graph.edges[i].id == s) return i;
    bad("unknown edge '" + s + "'");
    return -1;
  };
  std::vector<std::vector<int>> vact(nh), eact(nh), phi(nh);
  for (int x = 0; x < nh; ++x) {
    vact[x].resize(nv);
    eact[x].resize(ne);
    phi[x].assign(ne, x == h.unit() ? h.unit() : -1);
    for (int v = 0; v < nv; ++v) vact[x][v] = v;
    for (int e = 0; e < ne; ++e) eact[x][e] = e;
  }
  if (j.contains("vact"))
    for (auto& [ename, row] : j["vact"].items()) {
      int x = h.elem_by_name(ename);
      if (x < 0) bad("unknown group element '" + ename + "'");
      for (auto& [vn, im] : row.items()) vact[x][vindex(vn)] = vindex(im.get<std::string>());
    }
  if (j.contains("eact"))
    for (auto& [ename, row] : j["eact"].items()) {
      int x = h.elem_by_name(ename);
      if (x < 0) bad("unknown group element '" + ename + "'");
      for (auto& [en, im] : row.items()) eact[x][eindex(en)] = eindex(im.get<std::string>());
    }
  for (auto& [ename, row] : j.at("phi").items()) {
    int x = h.elem_by_name(ename);
    if (x < 0) bad("unknown group element '" + ename + "'");
    for (auto& [en, val] : row.items()) phi[x][eindex(en)] = element_from_json(h, val);
  }
  for (int x = 0; x < nh; ++x)
    for (int e = 0; e < ne; ++e)
      if (phi[x][e] < 0) bad("phi is missing an entry for element '" + h.elem_name(x) + "'");
  return build_exel_pardo(std::move(graph), std::move(h), std::move(vact), std::move(eact),
                          std::move(phi));
}

CategorySystem system_from_json(const std::string& text) {
  json j = parse(text);
  CategorySystem sys;
  sys.cat = category_from_json(j.at("category").dump());
  sys.group = group_from_json_obj(j.at("group"));
  if (!sys.group.is_finite()) bad("category systems need a finite group");
  int nh = sys.group.order(), n = sys.cat.num_morphisms();
  sys.act.assign(nh, std::vector<int>(n));
  sys.phi.assign(nh, std::vector<int>(n, -1));
  for (int x = 0; x < nh; ++x) {
    for (int m = 0; m < n; ++m) sys.act[x][m] = m;
    for (int v = 0; v < sys.cat.num_vertices(); ++v) sys.phi[x][sys.cat.identity(v)] = x;
  }
  for (auto& [ename, row] : j.at("act").items()) {
    int x = sys.group.elem_by_name(ename);
    if (x < 0) bad("unknown group element '" + ename + "'");
    for (auto& [mn, im] : row.items()) {
      int m = sys.cat.morphism_by_name(mn), i = sys.cat.morphism_by_name(im.get<std::string>());
      if (m < 0 || i < 0) bad("act references an unknown morphism");
      sys.act[x][m] = i;
    }
  }
  for (auto& [ename, row] : j.at("phi").items()) {
    int x = sys.group.elem_by_name(ename);
    if (x < 0) bad("unknown group element '" + ename + "'");
    for (auto& [mn, val] : row.items()) {
      int m = sys.cat.morphism_by_name(mn);
      if (m < 0) bad("phi references an unknown morphism");
      sys.phi[x][m] = element_from_json(sys.group, val);
    }
  }
  for (int x = 0; x < nh; ++x)
    for (int m = 0; m < n; ++m)
      if (sys.phi[x][m] < 0)
        bad("phi is missing an entry for ('" + sys.group.elem_name(x) + "', '" +
            sys.cat.morphism_name(m) + "')");
  return sys;
}

CatFunctor functor_from_json(const Category& dom, const Category& cod, const std::string& text) {
  json j = parse(text);
  CatFunctor f;
  f.vmap.assign(dom.num_vertices(), -1);
  f.mmap.assign(dom.num_morphisms(), -1);
  for (auto& [k, v] : j.at("vmap").items()) {
    int a = dom.vertex_by_name(k), b = cod.vertex_by_name(v.get<std::string>());
    if (a < 0 || b < 0) bad("functor references an unknown vertex");
    f.vmap[a] = b;
  }
  for (auto& [k, v] : j.at("mmap").items()) {
    int a = dom.morphism_by_name(k), b = cod.morphism_by_name(v.get<std::string>());
    if (a < 0 || b < 0) bad("functor references an unknown morphism");
    f.mmap[a] = b;
  }
  for (int v : f.vmap)
    if (v < 0) bad("functor vmap is incomplete");
  for (int m : f.mmap)
    if (m < 0) bad("functor mmap is incomplete");
  return f;
}

std::string functor_to_json(const Category& dom, const Category& cod, const CatFunctor& f) {
  json j;
  json vm = json::object(), mm = json::object();
  for (int v = 0; v < dom.num_vertices(); ++v) vm[dom.vertex_name(v)] = cod.vertex_name(f.vmap[v]);
  for (int m = 0; m < dom.num_morphisms(); ++m)
    mm[dom.morphism_name(m)] = cod.morphism_name(f.mmap[m]);
  j["vmap"] = vm;
  j["mmap"] = mm;
  return j.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string export_dot(const Category& c) {
  std::ostringstream os;
  os << "digraph category {\n";
  for (int v = 0; v < c.num_vertices(); ++v)
    os << "  \"" << dot_escape(c.vertex_name(v)) << "\";\n";
  for (int m = c.num_vertices(); m < c.num_morphisms(); ++m)
    os << "  \"" << dot_escape(c.vertex_name(c.src(m))) << "\" -> \""
       << dot_escape(c.vertex_name(c.rng(m))) << "\" [label=\"" << dot_escape(c.morphism_name(m))
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_dot_covering(const Category& d, const Category& c, const CatFunctor& p) {
  static const char* palette[] = {"lightblue", "lightgreen", "lightsalmon", "gold",
                                  "plum",      "khaki",      "lightcyan",   "pink"};
  std::ostringstream os;
  os << "digraph covering {\n";
  os << "  subgraph cluster_total {\n    label=\"total\";\n";
  for (int v = 0; v < d.num_vertices(); ++v)
    os << "    \"D:" << dot_escape(d.vertex_name(v)) << "\" [style=filled, fillcolor=\""
       << palette[p.vmap[v] % 8] << "\"];\n";
  for (int m = d.num_vertices(); m < d.num_morphisms(); ++m)
    os << "    \"D:" << dot_escape(d.vertex_name(d.src(m))) << "\" -> \"D:"
       << dot_escape(d.vertex_name(d.rng(m))) << "\" [label=\"" << dot_escape(d.morphism_name(m))
       << "\"];\n";
  os << "  }\n  subgraph cluster_base {\n    label=\"base\";\n";
  for (int v = 0; v < c.num_vertices(); ++v)
    os << "    \"C:" << dot_escape(c.vertex_name(v)) << "\" [style=filled, fillcolor=\""
       << palette[v % 8] << "\"];\n";
  for (int m = c.num_vertices(); m < c.num_morphisms(); ++m)
    os << "    \"C:" << dot_escape(c.vertex_name(c.src(m))) << "\" -> \"C:"
       << dot_escape(c.vertex_name(c.rng(m))) << "\" [label=\"" << dot_escape(c.morphism_name(m))
       << "\"];\n";
  os << "  }\n}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
  out << text;
}

}  // namespace lcsc
