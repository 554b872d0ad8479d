#include "tenstwist/repdim.hpp"

#include <map>
#include <stdexcept>

namespace tenstwist {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

Int minuscule_dim(Family f, int rank, int vertex) {
  if (!admissible_vertices(f, rank).count(vertex))
    fail("vertex " + std::to_string(vertex) + " of " +
         std::string(1, family_letter(f)) + std::to_string(rank) +
         " is not minuscule");
  switch (f) {
    case Family::A:
      return Int(rank + 1);
    case Family::B:
      return int_pow2(static_cast<unsigned long>(rank));
    case Family::C:
      return Int(2 * rank);
    case Family::D:
      if (vertex == 1) return Int(2 * rank);
      return int_pow2(static_cast<unsigned long>(rank - 1));
  }
  fail("unknown family");
}

DimensionReport polymer_dims(
    const Polymer& s, const DynkinDiagram& d, const GaloisAction& action,
    const std::vector<std::pair<Part, Int>>& multiplicities) {
  ValidationReport v = validate_polymer(s, d, action);
  if (!v.valid) {
    std::string msg = "invalid polymer:";
    for (const ValidationFailure& f : v.failures) {
      msg += ' ';
      msg += failure_kind_id(f.kind);
    }
    fail(msg);
  }

  // Orbits partition a stable polymer.
  std::map<Part, Part> rep_of;
  std::map<Part, std::size_t> orbit_size;
  for (const Part& t : s.parts()) {
    if (rep_of.count(t)) continue;
    Polymer orbit = orbit_polymer(t, action);
    const Part& rep = *orbit.parts().begin();
    for (const Part& u : orbit.parts()) rep_of.emplace(u, rep);
    orbit_size[rep] = orbit.size();
  }

  std::map<Part, Int> mult;
  for (const auto& [part, count] : multiplicities) {
    auto it = rep_of.find(part);
    if (it == rep_of.end())
      fail("multiplicity names a part outside the polymer");
    if (count < 1) fail("multiplicities must be positive");
    if (!mult.emplace(it->second, count).second)
      fail("two multiplicities name the same part orbit");
  }

  DimensionReport rep;
  rep.total = 0;
  for (const auto& [part, size] : orbit_size) {
    DimensionOrbit o;
    o.representative = part;
    o.orbit_size = size;
    o.dimension = 1;
    for (const auto& [c, vx] : part.vertices()) {
      const Component& comp = d.component(c);
      o.dimension *= minuscule_dim(comp.family, comp.rank, vx);
    }
    auto it = mult.find(part);
    o.multiplicity = it == mult.end() ? Int(1) : it->second;
    rep.total += o.dimension * Int(static_cast<unsigned long>(size)) * o.multiplicity;
    rep.orbits.push_back(std::move(o));
  }
  return rep;
}

}  // namespace tenstwist
