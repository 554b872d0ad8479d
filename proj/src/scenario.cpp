#include "tenstwist/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tenstwist {

using nlohmann::json;

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
  std::string out = "scenario invalid:";
  for (const std::string& e : errors) {
    out += "\n  - ";
    out += e;
  }
  return out;
}

// Line and column of a byte offset, 1-based.
std::string locate(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Scenario run() {
    json root;
    try {
      root = json::parse(text_);
    } catch (const json::parse_error& e) {
      std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
      bail("not valid JSON (" + locate(text_, byte) + "): " + e.what());
    }
    if (!root.is_object()) bail("top level must be a JSON object");
    for (const auto& [key, val] : root.items())
      if (key != "diagram" && key != "galois" && key != "hermitian" &&
          key != "anisotropy" && key != "polymer" && key != "multiplicities")
        err("unknown top-level key '" + key + "'");

    Scenario s;
    parse_diagram(root, s);
    if (!errors_.empty()) bail_all();  // everything else needs component ids
    parse_galois(root, s);
    if (!errors_.empty()) bail_all();  // flags and orbits need the action
    parse_hermitian(root, s);
    parse_anisotropy(root, s);
    parse_polymer(root, s);
    parse_multiplicities(root, s);
    if (!errors_.empty()) bail_all();
    return s;
  }

 private:
  const std::string& text_;
  std::vector<std::string> errors_;

  void err(std::string msg) { errors_.push_back(std::move(msg)); }
  [[noreturn]] void bail(std::string msg) {
    err(std::move(msg));
    bail_all();
  }
  [[noreturn]] void bail_all() { throw ScenarioError(std::move(errors_)); }

  bool expect_object(const json& j, const std::string& path) {
    if (j.is_object()) return true;
    err(path + ": expected an object");
    return false;
  }
  bool expect_array(const json& j, const std::string& path) {
    if (j.is_array()) return true;
    err(path + ": expected an array");
    return false;
  }

  std::optional<std::size_t> component_index(const Scenario& s, const json& j,
                                             const std::string& path) {
    if (!j.is_string()) {
      err(path + ": expected a component id string");
      return std::nullopt;
    }
    auto idx = s.diagram.index_of(j.get<std::string>());
    if (!idx) {
      err(path + ": unknown component id '" + j.get<std::string>() + "'");
      return std::nullopt;
    }
    return idx;
  }

  void parse_diagram(const json& root, Scenario& s) {
    if (!root.contains("diagram")) {
      err("missing required key 'diagram'");
      return;
    }
    const json& dj = root["diagram"];
    if (!expect_object(dj, "diagram")) return;
    if (!dj.contains("components")) {
      err("diagram: missing 'components'");
      return;
    }
    const json& cj = dj["components"];
    if (!expect_array(cj, "diagram.components")) return;
    if (cj.empty()) {
      err("diagram.components: at least one component is required");
      return;
    }
    std::vector<Component> comps;
    for (std::size_t i = 0; i < cj.size(); ++i) {
      std::string path = "diagram.components[" + std::to_string(i) + "]";
      const json& c = cj[i];
      if (!expect_object(c, path)) return;
      Component comp;
      if (!c.contains("id") || !c["id"].is_string()) {
        err(path + ": 'id' must be a string");
        return;
      }
      comp.id = c["id"].get<std::string>();
      if (!c.contains("family") || !c["family"].is_string()) {
        err(path + ": 'family' must be a string");
        return;
      }
      if (!c.contains("rank") || !c["rank"].is_number_integer()) {
        err(path + ": 'rank' must be an integer");
        return;
      }
      comp.rank = c["rank"].get<int>();
      try {
        comp.family = family_from_letter(c["family"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        err(path + ": " + e.what());
        return;
      }
      comps.push_back(std::move(comp));
    }
    try {
      s.diagram = DynkinDiagram(std::move(comps));
    } catch (const std::invalid_argument& e) {
      err(std::string("diagram: ") + e.what());
    }
  }

  void parse_galois(const json& root, Scenario& s) {
    std::vector<DiagramAutomorphism> gens;
    if (root.contains("galois")) {
      const json& gj = root["galois"];
      if (!expect_object(gj, "galois")) return;
      for (const auto& [key, val] : gj.items())
        if (key != "generators") err("galois: unknown key '" + key + "'");
      if (gj.contains("generators")) {
        const json& list = gj["generators"];
        if (!expect_array(list, "galois.generators")) return;
        for (std::size_t i = 0; i < list.size(); ++i)
          if (auto g = parse_generator(list[i], s,
                                       "galois.generators[" + std::to_string(i) + "]"))
            gens.push_back(std::move(*g));
      }
    }
    if (!errors_.empty()) return;
    try {
      s.action = GaloisAction::generate(s.diagram, std::move(gens));
    } catch (const std::exception& e) {
      err(std::string("galois: ") + e.what());
    }
  }

  std::optional<DiagramAutomorphism> parse_generator(const json& g, const Scenario& s,
                                                     const std::string& path) {
    if (!g.is_object()) {
      err(path + ": expected an object");
      return std::nullopt;
    }
    for (const auto& [key, val] : g.items())
      if (key != "components" && key != "vertices")
        err(path + ": unknown key '" + key + "'");
    DiagramAutomorphism a = identity_automorphism(s.diagram);
    if (g.contains("components")) {
      const json& cm = g["components"];
      if (!cm.is_object()) {
        err(path + ".components: expected an object mapping id to id");
        return std::nullopt;
      }
      for (const auto& [from, to] : cm.items()) {
        auto fi = component_index(s, json(from), path + ".components");
        auto ti = component_index(s, to, path + ".components['" + from + "']");
        if (!fi || !ti) return std::nullopt;
        a.component_permutation[*fi] = static_cast<std::uint32_t>(*ti);
      }
    }
    if (g.contains("vertices")) {
      const json& vm = g["vertices"];
      if (!vm.is_object()) {
        err(path + ".vertices: expected an object mapping id to map name");
        return std::nullopt;
      }
      for (const auto& [id, name] : vm.items()) {
        auto ci = component_index(s, json(id), path + ".vertices");
        if (!ci) return std::nullopt;
        if (!name.is_string()) {
          err(path + ".vertices['" + id + "']: expected a map name string");
          return std::nullopt;
        }
        auto kind = vertex_map_from_name(name.get<std::string>());
        if (!kind) {
          err(path + ".vertices['" + id + "']: unknown vertex map '" +
              name.get<std::string>() + "'");
          return std::nullopt;
        }
        a.vertex_maps[*ci] = *kind;
      }
    }
    try {
      a = normalize_automorphism(s.diagram, a);
      validate_automorphism(s.diagram, a);
    } catch (const std::invalid_argument& e) {
      err(path + ": " + e.what());
      return std::nullopt;
    }
    return a;
  }

  void parse_hermitian(const json& root, Scenario& s) {
    if (!root.contains("hermitian")) return;
    const json& hj = root["hermitian"];
    if (!expect_object(hj, "hermitian")) return;
    for (const auto& [key, val] : hj.items())
      if (key != "noncompact" && key != "special_vertices" && key != "underlined")
        err("hermitian: unknown key '" + key + "'");
    if (hj.contains("noncompact")) {
      const json& nc = hj["noncompact"];
      if (!expect_array(nc, "hermitian.noncompact")) return;
      for (std::size_t i = 0; i < nc.size(); ++i)
        if (auto ci = component_index(s, nc[i],
                                      "hermitian.noncompact[" + std::to_string(i) + "]"))
          s.hermitian.noncompact.insert(*ci);
    }
    if (hj.contains("special_vertices")) {
      const json& sv = hj["special_vertices"];
      if (!expect_object(sv, "hermitian.special_vertices")) return;
      for (const auto& [id, v] : sv.items()) {
        auto ci = component_index(s, json(id), "hermitian.special_vertices");
        if (!ci) continue;
        if (!v.is_number_integer()) {
          err("hermitian.special_vertices['" + id + "']: expected an integer");
          continue;
        }
        s.hermitian.special_vertices[*ci] = v.get<int>();
      }
    }
    if (hj.contains("underlined")) {
      const json& uj = hj["underlined"];
      if (!expect_array(uj, "hermitian.underlined")) return;
      for (std::size_t i = 0; i < uj.size(); ++i) {
        std::string path = "hermitian.underlined[" + std::to_string(i) + "]";
        const json& e = uj[i];
        if (!expect_object(e, path)) continue;
        if (!e.contains("family") || !e["family"].is_string() ||
            !e.contains("rank") || !e["rank"].is_number_integer() ||
            !e.contains("special_vertex") || !e["special_vertex"].is_number_integer() ||
            !e.contains("allowed") || !e["allowed"].is_array()) {
          err(path + ": needs 'family', 'rank', 'special_vertex', 'allowed'");
          continue;
        }
        HermitianData::UnderlinedKey key;
        try {
          key.family = family_from_letter(e["family"].get<std::string>());
        } catch (const std::invalid_argument& ex) {
          err(path + ": " + ex.what());
          continue;
        }
        key.rank = e["rank"].get<int>();
        key.special_vertex = e["special_vertex"].get<int>();
        std::set<int> allowed;
        for (const json& v : e["allowed"]) {
          if (!v.is_number_integer()) {
            err(path + ".allowed: expected integers");
            break;
          }
          allowed.insert(v.get<int>());
        }
        if (!s.hermitian.underlined_override.emplace(key, std::move(allowed)).second)
          err(path + ": duplicate underlined entry");
      }
    }
    if (errors_.empty()) {
      try {
        validate_hermitian(s.diagram, s.hermitian);
      } catch (const std::invalid_argument& e) {
        err(std::string("hermitian: ") + e.what());
      }
    }
  }

  void parse_anisotropy(const json& root, Scenario& s) {
    std::map<std::size_t, bool> by_member;
    if (root.contains("anisotropy")) {
      const json& aj = root["anisotropy"];
      if (!expect_object(aj, "anisotropy")) return;
      for (const auto& [id, v] : aj.items()) {
        auto ci = component_index(s, json(id), "anisotropy");
        if (!ci) continue;
        if (!v.is_boolean()) {
          err("anisotropy['" + id + "']: expected a boolean");
          continue;
        }
        by_member[*ci] = v.get<bool>();
      }
    }
    if (!errors_.empty()) return;
    try {
      s.flags = AnisotropyFlags::from_members(s.action, by_member);
    } catch (const std::invalid_argument& e) {
      err(std::string("anisotropy: ") + e.what());
    }
  }

  std::optional<Part> parse_part(const json& pj, const Scenario& s,
                                 const std::string& path) {
    if (!pj.is_array() || pj.empty()) {
      err(path + ": expected a nonempty array of \"id:vertex\" strings");
      return std::nullopt;
    }
    std::vector<VertexRef> vs;
    for (std::size_t i = 0; i < pj.size(); ++i) {
      std::string vpath = path + "[" + std::to_string(i) + "]";
      if (!pj[i].is_string()) {
        err(vpath + ": expected an \"id:vertex\" string");
        return std::nullopt;
      }
      std::string spec = pj[i].get<std::string>();
      std::size_t colon = spec.rfind(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
        err(vpath + ": '" + spec + "' is not of the form \"id:vertex\"");
        return std::nullopt;
      }
      auto ci = s.diagram.index_of(spec.substr(0, colon));
      if (!ci) {
        err(vpath + ": unknown component id '" + spec.substr(0, colon) + "'");
        return std::nullopt;
      }
      int vertex = 0;
      try {
        std::size_t used = 0;
        vertex = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        err(vpath + ": '" + spec.substr(colon + 1) + "' is not a vertex number");
        return std::nullopt;
      }
      const Component& comp = s.diagram.component(*ci);
      if (vertex < 1 || vertex > comp.rank) {
        err(vpath + ": vertex " + std::to_string(vertex) + " outside component '" +
            comp.id + "'");
        return std::nullopt;
      }
      vs.push_back(VertexRef{*ci, vertex});
    }
    try {
      return Part::from_vertices(vs);
    } catch (const std::invalid_argument& e) {
      err(path + ": " + e.what());
      return std::nullopt;
    }
  }

  void parse_polymer(const json& root, Scenario& s) {
    if (!root.contains("polymer")) {
      err("missing required key 'polymer'");
      return;
    }
    const json& pj = root["polymer"];
    if (!expect_array(pj, "polymer")) return;
    if (pj.empty()) {
      err("polymer: at least one part is required");
      return;
    }
    for (std::size_t i = 0; i < pj.size(); ++i)
      if (auto part = parse_part(pj[i], s, "polymer[" + std::to_string(i) + "]")) {
        if (s.polymer.contains(*part))
          err("polymer[" + std::to_string(i) + "]: duplicate part");
        else
          s.polymer.insert(std::move(*part));
      }
  }

  void parse_multiplicities(const json& root, Scenario& s) {
    if (!root.contains("multiplicities")) return;
    const json& mj = root["multiplicities"];
    if (!expect_array(mj, "multiplicities")) return;
    for (std::size_t i = 0; i < mj.size(); ++i) {
      std::string path = "multiplicities[" + std::to_string(i) + "]";
      const json& e = mj[i];
      if (!e.is_object() || !e.contains("part") || !e.contains("count")) {
        err(path + ": expected an object with 'part' and 'count'");
        continue;
      }
      auto part = parse_part(e["part"], s, path + ".part");
      if (!part) continue;
      if (!e["count"].is_number_integer() || e["count"].get<long long>() < 1) {
        err(path + ".count: expected a positive integer");
        continue;
      }
      s.multiplicities.emplace_back(std::move(*part),
                                    Int(static_cast<long>(e["count"].get<long long>())));
    }
  }
};

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

Scenario parse_scenario(const std::string& text) { return Parser(text).run(); }

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError({"cannot open scenario file '" + path + "'"});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string part_to_string(const DynkinDiagram& d, const Part& t) {
  std::string out = "{";
  bool first = true;
  for (const auto& [c, v] : t.vertices()) {
    if (!first) out += ", ";
    first = false;
    out += d.component(c).id;
    out += ':';
    out += std::to_string(v);
  }
  out += '}';
  return out;
}

}  // namespace tenstwist
