#include "tenstwist/report.hpp"

#include <sstream>

#include "tenstwist/nilmat.hpp"
#include "tenstwist/repdim.hpp"

namespace tenstwist {

using nlohmann::json;

namespace {

constexpr const char* kSatisfied = "potential good reduction criterion satisfied";
constexpr const char* kNotSatisfied =
    "potential good reduction criterion not satisfied";
constexpr const char* kSigmaNote =
    "the sigma witness certifies that a suitable rational prime exists; "
    "no prime is computed";
constexpr int kSchemaVersion = 1;

// Split-case witness matrices are only materialized up to this size.
constexpr unsigned long kWitnessDimLimit = 512;

json part_json(const DynkinDiagram& d, const Part& t) {
  json out = json::array();
  for (const auto& [c, v] : t.vertices())
    out.push_back(d.component(c).id + ":" + std::to_string(v));
  return out;
}

json polymer_json(const DynkinDiagram& d, const Polymer& s) {
  json out = json::array();
  for (const Part& t : s.parts()) out.push_back(part_json(d, t));
  return out;
}

json automorphism_json(const DynkinDiagram& d, const DiagramAutomorphism& a) {
  json comps = json::object();
  json verts = json::object();
  for (std::size_t c = 0; c < d.component_count(); ++c) {
    comps[d.component(c).id] = d.component(a.component_permutation[c]).id;
    verts[d.component(c).id] = std::string(vertex_map_name(a.vertex_maps[c]));
  }
  return json{{"components", comps}, {"vertices", verts}};
}

json failures_json(const DynkinDiagram& d,
                   const std::vector<ValidationFailure>& fs) {
  json out = json::array();
  for (const ValidationFailure& f : fs) {
    json e;
    e["kind"] = std::string(failure_kind_id(f.kind));
    e["part"] = f.part ? part_json(d, *f.part) : json();
    e["component"] = f.component ? json(d.component(*f.component).id) : json();
    out.push_back(e);
  }
  return out;
}

json scenario_echo(const Scenario& s) {
  const DynkinDiagram& d = s.diagram;
  json comps = json::array();
  for (const Component& c : d.components())
    comps.push_back(json{{"id", c.id},
                         {"family", std::string(1, family_letter(c.family))},
                         {"rank", c.rank}});
  json gens = json::array();
  for (const DiagramAutomorphism& g : s.action.generators())
    gens.push_back(automorphism_json(d, g));
  json nc = json::array();
  for (std::size_t c : s.hermitian.noncompact) nc.push_back(d.component(c).id);
  json sv = json::object();
  for (const auto& [c, v] : s.hermitian.special_vertices)
    sv[d.component(c).id] = v;
  json und = json::array();
  for (const auto& [key, allowed] : s.hermitian.underlined_override) {
    json e{{"family", std::string(1, family_letter(key.family))},
           {"rank", key.rank},
           {"special_vertex", key.special_vertex}};
    e["allowed"] = json::array();
    for (int v : allowed) e["allowed"].push_back(v);
    und.push_back(e);
  }
  json flags = json::object();
  for (const auto& [rep, v] : s.flags.by_rep) flags[d.component(rep).id] = v;
  json mults = json::array();
  for (const auto& [part, count] : s.multiplicities)
    mults.push_back(json{{"part", part_json(d, part)}, {"count", count.get_str()}});
  return json{{"diagram", json{{"components", comps}}},
              {"galois", json{{"generators", gens}}},
              {"hermitian", json{{"noncompact", nc},
                                 {"special_vertices", sv},
                                 {"underlined", und}}},
              {"anisotropy", flags},
              {"polymer", polymer_json(d, s.polymer)},
              {"multiplicities", mults}};
}

std::string orbit_to_string(const DynkinDiagram& d,
                            const std::vector<std::size_t>& orbit) {
  std::string out = "{";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (i) out += ", ";
    out += d.component(orbit[i]).id;
  }
  out += '}';
  return out;
}

struct Analysis {
  ValidationReport prep;
  ValidationReport drep;
  bool pel = false;
  std::optional<TwistVerdict> ptt;
  std::optional<IndexBound> bound;
  bool transitive = false;
  std::optional<DiagramAutomorphism> sigma;
  std::optional<bool> cyclic;
  std::optional<bool> mumford;
  std::vector<std::string> notes;
  std::optional<DimensionReport> dims;
  std::vector<std::size_t> inner_a;
  std::optional<bool> padic_verdict;
  std::optional<SplitWitness> witness;
  std::set<std::size_t> witness_support;
};

bool all_a1(const DynkinDiagram& d) {
  for (const Component& c : d.components())
    if (c.family != Family::A || c.rank != 1) return false;
  return true;
}

Analysis analyze(const Scenario& s, bool want_dims, bool want_extras) {
  Analysis a;
  a.prep = validate_polymer(s.polymer, s.diagram, s.action);
  a.drep = validate_deligne_polymer(s.polymer, s.diagram, s.action, s.hermitian);
  a.pel = is_pel_shaped(s.polymer);
  a.transitive = s.action.is_transitive_on_components();
  if (!a.prep.valid) return a;

  a.ptt = perfectly_tens_twisted(s.polymer, s.action, s.flags);
  a.bound = min_unipotent_index_bound(s.polymer, s.action, s.flags);
  if (a.transitive) {
    a.sigma = exists_good_sigma(s.polymer, s.action);
    a.cyclic = cyclic_criterion(s.polymer, s.action);
    a.mumford = mumford_criterion(s.polymer, s.action);
  } else {
    a.notes.push_back(
        "the action is not transitive on components: the sigma search and "
        "the cyclic and Mumford criteria do not apply");
  }
  if (want_dims) a.dims = polymer_dims(s.polymer, s.diagram, s.action,
                                       s.multiplicities);
  if (want_extras) {
    a.inner_a = inner_type_A_orbits(s.action);
    if (a.inner_a.empty())
      a.padic_verdict = padic_drop_condition2(s.polymer, s.action).satisfied;
    if (all_a1(s.diagram) && !a.bound->unbounded()) {
      unsigned long dim = 0;
      bool fits = true;
      for (const Part& t : s.polymer.parts()) {
        if (t.size() >= 32) fits = false;
        else dim += 1ul << t.size();
        if (dim > kWitnessDimLimit) fits = false;
        if (!fits) break;
      }
      if (fits) {
        a.witness_support = a.bound->support;
        a.witness = split_polymer_witness(s.polymer, s.diagram, a.witness_support);
      }
    }
  }
  return a;
}

json validation_json(const Scenario& s, const Analysis& a) {
  json deligne_failures = json::array();
  for (const ValidationFailure& f : a.drep.failures)
    if (f.kind == FailureKind::DeligneNc)
      deligne_failures.push_back(failures_json(s.diagram, {f})[0]);
  return json{
      {"polymer", json{{"valid", a.prep.valid},
                       {"failures", failures_json(s.diagram, a.prep.failures)}}},
      {"deligne", json{{"valid", a.drep.valid},
                       {"failures", deligne_failures}}}};
}

json criteria_json(const Analysis& a) {
  json c;
  c["polymer_valid"] = a.prep.valid;
  c["deligne_valid"] = a.drep.valid;
  c["pel_shaped"] = a.pel;
  c["cyclic"] = a.cyclic ? json(*a.cyclic) : json();
  c["mumford"] = a.mumford ? json(*a.mumford) : json();
  c["sigma_exists"] =
      a.ptt ? (a.transitive ? json(a.sigma.has_value()) : json()) : json();
  c["perfectly_tens_twisted"] = a.ptt ? json(a.ptt->satisfied) : json();
  if (!a.bound)
    c["index_bound"] = json();
  else if (a.bound->unbounded())
    c["index_bound"] = "unbounded";
  else
    c["index_bound"] = *a.bound->value;
  return c;
}

json twist_json(const Scenario& s, const Analysis& a) {
  const DynkinDiagram& d = s.diagram;
  json orbits = json::array();
  for (const OrbitOutcome& o : a.ptt->orbits) {
    json e;
    e["representative"] = d.component(o.representative).id;
    json members = json::array();
    for (std::size_t c : s.action.orbit_of(o.representative))
      members.push_back(d.component(c).id);
    e["members"] = members;
    switch (o.kind) {
      case OrbitOutcome::Kind::TensorWitness: e["outcome"] = "tensor-witness"; break;
      case OrbitOutcome::Kind::Anisotropic: e["outcome"] = "anisotropic"; break;
      case OrbitOutcome::Kind::Failure: e["outcome"] = "failure"; break;
    }
    e["witness"] = o.witness ? part_json(d, *o.witness) : json();
    e["cardinality"] = o.witness ? json(o.cardinality) : json();
    orbits.push_back(e);
  }
  json t;
  t["satisfied"] = a.ptt->satisfied;
  t["orbits"] = orbits;
  if (a.transitive) {
    t["sigma"] = a.sigma ? automorphism_json(d, *a.sigma) : json();
    t["sigma_note"] = a.sigma ? json(kSigmaNote) : json();
  } else {
    t["sigma"] = json();
    t["sigma_note"] = json();
  }
  return t;
}

json dimensions_json(const Scenario& s, const DimensionReport& rep) {
  json orbits = json::array();
  for (const DimensionOrbit& o : rep.orbits)
    orbits.push_back(json{{"representative", part_json(s.diagram, o.representative)},
                          {"orbit_size", o.orbit_size},
                          {"dimension", o.dimension.get_str()},
                          {"multiplicity", o.multiplicity.get_str()}});
  return json{{"orbits", orbits}, {"total", rep.total.get_str()}};
}

json padic_json(const Scenario& s, const Analysis& a) {
  json inner = json::array();
  for (std::size_t c : a.inner_a) inner.push_back(s.diagram.component(c).id);
  json p;
  p["applies"] = a.inner_a.empty();
  p["inner_type_a_orbits"] = inner;
  p["verdict_without_flags"] =
      a.padic_verdict ? json(*a.padic_verdict) : json();
  return p;
}

json witness_json(const Scenario& s, const Analysis& a) {
  if (!a.witness) return json();
  json sup = json::array();
  for (std::size_t c : a.witness_support) sup.push_back(s.diagram.component(c).id);
  return json{{"support", sup},
              {"dimension", a.witness->matrix.rows()},
              {"index", a.witness->classification.index},
              {"matches_bound",
               a.witness->classification.kind == IndexResult::Kind::Unipotent &&
                   a.witness->classification.index == *a.bound->value}};
}

json options_json(const RunOptions& o) {
  return json{
      {"format", o.format == RunOptions::Format::Machine ? "machine" : "text"},
      {"trials", o.trials},
      {"seed", o.seed},
      {"max_orbits", o.max_orbits},
      {"max_output", o.max_output}};
}

json key_lemma_json(const KeyLemmaReport& rep) {
  json failures = json::array();
  for (const KeyLemmaReport::Case& c : rep.failures) {
    const char* kind = c.actual.kind == IndexResult::Kind::Unipotent ? "unipotent"
                       : c.actual.kind == IndexResult::Kind::Nilpotent
                           ? "nilpotent"
                           : "neither";
    failures.push_back(json{{"n1", c.n1},
                            {"n2", c.n2},
                            {"dim1", c.dim1},
                            {"dim2", c.dim2},
                            {"expected", c.expected},
                            {"actual_kind", kind},
                            {"actual_index", c.actual.index}});
  }
  return json{{"exhaustive_cases", rep.exhaustive_cases},
              {"random_trials", rep.random_trials},
              {"failed", rep.failed},
              {"failures", failures}};
}

std::string invalid_polymer_message(const Scenario& s, const Analysis& a) {
  std::string msg = "the scenario polymer is invalid:";
  for (const ValidationFailure& f : a.prep.failures) {
    msg += ' ';
    msg += failure_kind_id(f.kind);
    if (f.part) msg += ' ' + part_to_string(s.diagram, *f.part);
    if (f.component) msg += " (component " + s.diagram.component(*f.component).id + ')';
    msg += ';';
  }
  msg.pop_back();
  return msg;
}

// ---- text rendering ----

void render_header(std::ostream& out, Command cmd, const Scenario* s) {
  out << "command: " << command_name(cmd) << "\n";
  if (!s) return;
  const DynkinDiagram& d = s->diagram;
  out << "diagram: " << d.component_count()
      << (d.component_count() == 1 ? " component\n" : " components\n");
  for (const Component& c : d.components())
    out << "  " << c.id << ": " << family_letter(c.family) << c.rank << "\n";
  out << "action: order " << s->action.order() << "; orbits:";
  for (const auto& orbit : s->action.component_orbits())
    out << ' ' << orbit_to_string(d, orbit);
  out << (s->action.is_transitive_on_components() ? "; transitive" : "; not transitive");
  out << (s->action.is_cyclic_on_components() ? "; cyclic" : "; not cyclic") << "\n";
  out << "polymer: " << s->polymer.size()
      << (s->polymer.size() == 1 ? " part\n" : " parts\n");
  for (const Part& t : s->polymer.parts())
    out << "  " << part_to_string(d, t) << "\n";
}

void render_validation(std::ostream& out, const Scenario& s, const Analysis& a) {
  out << "validation: polymer " << (a.prep.valid ? "valid" : "invalid")
      << "; deligne " << (a.drep.valid ? "valid" : "invalid") << "\n";
  for (const ValidationFailure& f : a.drep.failures) {
    out << "  failure " << failure_kind_id(f.kind);
    if (f.part) out << " at part " << part_to_string(s.diagram, *f.part);
    if (f.component)
      out << " (component " << s.diagram.component(*f.component).id << ")";
    out << "\n";
  }
}

void render_criteria(std::ostream& out, const Analysis& a) {
  auto line = [&out](const char* name, const json& v) {
    out << "  " << name << ": "
        << (v.is_null() ? std::string("n/a") : v.dump()) << "\n";
  };
  json c = criteria_json(a);
  out << "criteria:\n";
  line("polymer-valid", c["polymer_valid"]);
  line("deligne-valid", c["deligne_valid"]);
  line("pel-shaped", c["pel_shaped"]);
  line("cyclic", c["cyclic"]);
  line("mumford", c["mumford"]);
  line("sigma-exists", c["sigma_exists"]);
  line("perfectly-tens-twisted", c["perfectly_tens_twisted"]);
  line("index-bound", c["index_bound"]);
}

void render_twist(std::ostream& out, const Scenario& s, const Analysis& a) {
  const DynkinDiagram& d = s.diagram;
  out << "twist: " << (a.ptt->satisfied ? "satisfied" : "not satisfied") << "\n";
  for (const OrbitOutcome& o : a.ptt->orbits) {
    out << "  orbit " << orbit_to_string(d, s.action.orbit_of(o.representative))
        << ": ";
    switch (o.kind) {
      case OrbitOutcome::Kind::TensorWitness:
        out << "tensor witness " << part_to_string(d, *o.witness)
            << ", cardinality " << o.cardinality;
        break;
      case OrbitOutcome::Kind::Anisotropic:
        out << "anisotropic";
        break;
      case OrbitOutcome::Kind::Failure:
        out << "failure";
        break;
    }
    out << "\n";
  }
  if (a.transitive) {
    if (a.sigma) {
      out << "sigma:";
      for (std::size_t c = 0; c < d.component_count(); ++c) {
        out << (c ? ", " : " ") << d.component(c).id << "->"
            << d.component(a.sigma->component_permutation[c]).id;
        if (a.sigma->vertex_maps[c] != VertexMapKind::Identity)
          out << " [" << vertex_map_name(a.sigma->vertex_maps[c]) << "]";
      }
      out << "\n  (" << kSigmaNote << ")\n";
    } else {
      out << "sigma: none exists\n";
    }
  }
  for (const std::string& n : a.notes) out << "note: " << n << "\n";
}

void render_dimensions(std::ostream& out, const Scenario& s,
                       const DimensionReport& rep) {
  out << "dimensions: total " << rep.total.get_str() << "\n";
  for (const DimensionOrbit& o : rep.orbits) {
    out << "  orbit of " << part_to_string(s.diagram, o.representative) << ": dim "
        << o.dimension.get_str() << ", orbit size " << o.orbit_size;
    if (o.multiplicity != 1) out << ", multiplicity " << o.multiplicity.get_str();
    out << "\n";
  }
}

void render_padic(std::ostream& out, const Scenario& s, const Analysis& a) {
  if (a.inner_a.empty()) {
    out << "p-adic simplification: applies (no inner-type-A orbit); verdict "
           "without anisotropy flags: "
        << (*a.padic_verdict ? "satisfied" : "not satisfied") << "\n";
  } else {
    out << "p-adic simplification: not applicable; inner-type-A orbits:";
    for (std::size_t c : a.inner_a) out << ' ' << s.diagram.component(c).id;
    out << "\n";
  }
}

void render_witness(std::ostream& out, const Scenario& s, const Analysis& a) {
  if (!a.witness) return;
  out << "split witness: support {";
  bool first = true;
  for (std::size_t c : a.witness_support) {
    if (!first) out << ", ";
    first = false;
    out << s.diagram.component(c).id;
  }
  out << "}, dimension " << a.witness->matrix.rows() << ", unipotency index "
      << a.witness->classification.index << "\n";
  if (a.witness->matrix.rows() <= 32) out << a.witness->matrix.to_grid_string();
}

}  // namespace

std::optional<Command> command_from_name(std::string_view name) {
  if (name == "validate") return Command::Validate;
  if (name == "twist") return Command::Twist;
  if (name == "enumerate") return Command::Enumerate;
  if (name == "dims") return Command::Dims;
  if (name == "keylemma") return Command::KeyLemma;
  if (name == "report") return Command::Report;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Validate: return "validate";
    case Command::Twist: return "twist";
    case Command::Enumerate: return "enumerate";
    case Command::Dims: return "dims";
    case Command::KeyLemma: return "keylemma";
    case Command::Report: return "report";
  }
  throw std::invalid_argument("unknown command");
}

RunResult run(Command cmd, const Scenario* scenario, const RunOptions& options) {
  if (cmd != Command::KeyLemma && scenario == nullptr)
    throw std::invalid_argument(std::string(command_name(cmd)) +
                                " requires a scenario");

  RunResult res;
  json& m = res.machine;
  m["schema_version"] = kSchemaVersion;
  m["command"] = std::string(command_name(cmd));
  m["options"] = options_json(options);
  std::ostringstream text;

  if (cmd == Command::KeyLemma) {
    KeyLemmaReport rep = run_key_lemma(options.trials, options.seed);
    m["scenario"] = json();
    m["key_lemma"] = key_lemma_json(rep);
    res.exit_code = rep.all_pass() ? 0 : 1;
    render_header(text, cmd, nullptr);
    text << "key lemma: " << rep.exhaustive_cases << " exhaustive index pairs, "
         << rep.random_trials << " random conjugated pairs, " << rep.failed
         << " failed\n";
    for (const KeyLemmaReport::Case& c : rep.failures)
      text << "  FAILED indices (" << c.n1 << ", " << c.n2 << "), dims (" << c.dim1
           << ", " << c.dim2 << "): expected unipotent of index " << c.expected
           << "\n";
    text << "result: " << (rep.all_pass() ? "all checks pass" : "some checks failed")
         << "\n";
    res.output = options.format == RunOptions::Format::Machine
                     ? m.dump(2) + "\n"
                     : text.str();
    return res;
  }

  const Scenario& s = *scenario;
  m["scenario"] = scenario_echo(s);
  render_header(text, cmd, &s);

  const bool want_dims = cmd == Command::Dims || cmd == Command::Report;
  const bool want_extras = cmd == Command::Report;
  Analysis a = analyze(s, want_dims, want_extras);

  if (cmd == Command::Validate) {
    m["validation"] = validation_json(s, a);
    render_validation(text, s, a);
    res.exit_code = a.drep.valid ? 0 : 1;
    text << "result: " << (a.drep.valid ? "valid" : "invalid") << "\n";
    res.output = options.format == RunOptions::Format::Machine
                     ? m.dump(2) + "\n"
                     : text.str();
    return res;
  }

  if (cmd == Command::Enumerate) {
    EnumerationLimits limits{options.max_orbits, options.max_output};
    EnumerationResult er =
        enumerate_deligne_polymers(s.diagram, s.action, s.hermitian, limits);
    json list = json::array();
    for (const Polymer& p : er.polymers) {
      TwistVerdict v = perfectly_tens_twisted(p, s.action, s.flags);
      IndexBound b = min_unipotent_index_bound(p, s.action, s.flags);
      json e;
      e["parts"] = polymer_json(s.diagram, p);
      e["satisfied"] = v.satisfied;
      e["index_bound"] = b.unbounded() ? json("unbounded") : json(*b.value);
      list.push_back(e);
    }
    m["enumeration"] = json{{"count", er.polymers.size()},
                            {"truncated", er.truncated},
                            {"polymers", list}};
    text << "enumeration: " << er.polymers.size() << " polymer"
         << (er.polymers.size() == 1 ? "" : "s")
         << (er.truncated ? " (truncated)" : "") << "\n";
    for (const Polymer& p : er.polymers) {
      text << "  {";
      bool first = true;
      for (const Part& t : p.parts()) {
        if (!first) text << ", ";
        first = false;
        text << part_to_string(s.diagram, t);
      }
      text << "}\n";
    }
    res.exit_code = 0;
    res.output = options.format == RunOptions::Format::Machine
                     ? m.dump(2) + "\n"
                     : text.str();
    return res;
  }

  // twist, dims, report all require a valid polymer.
  if (!a.prep.valid) {
    m["validation"] = validation_json(s, a);
    m["criteria"] = criteria_json(a);
    m["error"] = invalid_polymer_message(s, a);
    m["conclusion"] = json();
    render_validation(text, s, a);
    text << "error: " << invalid_polymer_message(s, a) << "\n";
    res.exit_code = 2;
    res.output = options.format == RunOptions::Format::Machine
                     ? m.dump(2) + "\n"
                     : text.str();
    return res;
  }

  if (cmd == Command::Dims) {
    m["validation"] = validation_json(s, a);
    m["dimensions"] = dimensions_json(s, *a.dims);
    render_dimensions(text, s, *a.dims);
    res.exit_code = 0;
    res.output = options.format == RunOptions::Format::Machine
                     ? m.dump(2) + "\n"
                     : text.str();
    return res;
  }

  // twist and report
  m["validation"] = validation_json(s, a);
  m["criteria"] = criteria_json(a);
  m["twist"] = twist_json(s, a);
  m["notes"] = json::array();
  for (const std::string& n : a.notes) m["notes"].push_back(n);
  if (cmd == Command::Report) {
    m["dimensions"] = dimensions_json(s, *a.dims);
    m["padic"] = padic_json(s, a);
    m["split_witness"] = witness_json(s, a);
  }
  m["conclusion"] = a.ptt->satisfied ? kSatisfied : kNotSatisfied;

  render_validation(text, s, a);
  render_criteria(text, a);
  render_twist(text, s, a);
  if (cmd == Command::Report) {
    render_dimensions(text, s, *a.dims);
    render_padic(text, s, a);
    render_witness(text, s, a);
  }
  text << "conclusion: " << (a.ptt->satisfied ? kSatisfied : kNotSatisfied) << "\n";

  res.exit_code = a.ptt->satisfied ? 0 : 1;
  res.output = options.format == RunOptions::Format::Machine ? m.dump(2) + "\n"
                                                             : text.str();
  return res;
}

}  // namespace tenstwist
