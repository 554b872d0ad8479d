#include "tenstwist/polymer.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace tenstwist {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void check_part_refs(const Part& t, const DynkinDiagram& d) {
  for (const auto& [c, v] : t.vertices()) {
    if (c >= d.component_count())
      fail("part references component index " + std::to_string(c) +
           " outside the diagram");
    const Component& comp = d.component(c);
    if (v < 1 || v > comp.rank)
      fail("part references vertex " + std::to_string(v) + " outside component '" +
           comp.id + "'");
  }
}

// Noncompact conditions for one part; nullopt when satisfied.
std::optional<ValidationFailure> nc_failure(const Part& t, const DynkinDiagram& d,
                                            const HermitianData& h) {
  std::vector<std::size_t> hits;
  for (const auto& [c, v] : t.vertices())
    if (h.noncompact.count(c)) hits.push_back(c);
  if (hits.size() > 1)
    return ValidationFailure{FailureKind::DeligneNc, t, hits[1]};
  if (hits.size() == 1) {
    std::size_t c = hits[0];
    const Component& comp = d.component(c);
    std::set<int> allowed = h.underlined(comp.family, comp.rank,
                                         h.special_vertices.at(c));
    if (!allowed.count(t.vertex_in(c)))
      return ValidationFailure{FailureKind::DeligneNc, t, c};
  }
  return std::nullopt;
}

}  // namespace

Part Part::from_vertices(const std::vector<VertexRef>& vs) {
  if (vs.empty()) fail("a part must contain at least one vertex");
  Part t;
  for (const VertexRef& v : vs)
    if (!t.v_.emplace(v.component, v.index).second)
      fail("a part may mark at most one vertex per component (component index " +
           std::to_string(v.component) + " appears twice)");
  return t;
}

std::set<std::size_t> Part::support() const {
  std::set<std::size_t> s;
  for (const auto& [c, v] : v_) s.insert(c);
  return s;
}

Part apply(const DynkinDiagram& d, const DiagramAutomorphism& a, const Part& t) {
  std::vector<VertexRef> out;
  out.reserve(t.size());
  for (const auto& [c, v] : t.vertices())
    out.push_back(apply(d, a, VertexRef{c, v}));
  return Part::from_vertices(out);
}

std::string_view failure_kind_id(FailureKind k) {
  switch (k) {
    case FailureKind::GaloisStable: return "galois-stable";
    case FailureKind::Covering: return "covering";
    case FailureKind::MinusculeSingleton: return "minuscule-singleton";
    case FailureKind::DeligneNc: return "deligne-nc";
  }
  fail("unknown failure kind");
}

std::set<int> HermitianData::underlined(Family f, int rank, int special_vertex) const {
  auto it = underlined_override.find(UnderlinedKey{f, rank, special_vertex});
  if (it != underlined_override.end()) return it->second;
  return admissible_vertices(f, rank);
}

void validate_hermitian(const DynkinDiagram& d, const HermitianData& h) {
  for (std::size_t c : h.noncompact) {
    if (c >= d.component_count())
      fail("noncompact component index " + std::to_string(c) + " out of range");
    if (!h.special_vertices.count(c))
      fail("noncompact component '" + d.component(c).id + "' has no special vertex");
  }
  for (const auto& [c, v] : h.special_vertices) {
    if (c >= d.component_count())
      fail("special vertex names component index " + std::to_string(c) +
           " out of range");
    const Component& comp = d.component(c);
    if (v < 1 || v > comp.rank)
      fail("special vertex " + std::to_string(v) + " outside component '" + comp.id +
           "'");
  }
  for (const auto& [key, allowed] : h.underlined_override) {
    if (!valid_component(key.family, key.rank))
      fail("underlined table keys an invalid component type");
    if (key.special_vertex < 1 || key.special_vertex > key.rank)
      fail("underlined table keys a special vertex out of range");
    std::set<int> adm = admissible_vertices(key.family, key.rank);
    for (int v : allowed)
      if (!adm.count(v))
        fail("underlined vertex " + std::to_string(v) + " is not admissible for " +
             std::string(1, family_letter(key.family)) + std::to_string(key.rank));
  }
}

ValidationReport validate_polymer(const Polymer& s, const DynkinDiagram& d,
                                  const GaloisAction& action) {
  if (!(action.diagram() == d))
    fail("the action was generated over a different diagram");
  for (const Part& t : s.parts()) check_part_refs(t, d);

  ValidationReport rep;
  for (const Part& t : s.parts()) {
    for (const DiagramAutomorphism& g : action.elements()) {
      if (!s.contains(apply(d, g, t))) {
        rep.failures.push_back({FailureKind::GaloisStable, t, std::nullopt});
        break;
      }
    }
  }
  std::set<std::size_t> covered;
  for (const Part& t : s.parts())
    for (const auto& [c, v] : t.vertices()) covered.insert(c);
  for (std::size_t c = 0; c < d.component_count(); ++c)
    if (!covered.count(c))
      rep.failures.push_back({FailureKind::Covering, std::nullopt, c});
  for (const Part& t : s.parts()) {
    for (const auto& [c, v] : t.vertices()) {
      const Component& comp = d.component(c);
      if (!admissible_vertices(comp.family, comp.rank).count(v))
        rep.failures.push_back({FailureKind::MinusculeSingleton, t, c});
    }
  }
  rep.valid = rep.failures.empty();
  return rep;
}

ValidationReport validate_deligne_polymer(const Polymer& s, const DynkinDiagram& d,
                                          const GaloisAction& action,
                                          const HermitianData& h) {
  validate_hermitian(d, h);
  ValidationReport rep = validate_polymer(s, d, action);
  for (const Part& t : s.parts())
    if (auto f = nc_failure(t, d, h)) rep.failures.push_back(*f);
  rep.valid = rep.failures.empty();
  return rep;
}

bool is_pel_shaped(const Polymer& s) {
  for (const Part& t : s.parts())
    if (t.size() != 1) return false;
  return true;
}

Polymer orbit_polymer(const Part& t, const GaloisAction& action) {
  check_part_refs(t, action.diagram());
  Polymer orbit;
  for (const DiagramAutomorphism& g : action.elements())
    orbit.insert(apply(action.diagram(), g, t));
  return orbit;
}

EnumerationResult enumerate_deligne_polymers(const DynkinDiagram& d,
                                             const GaloisAction& action,
                                             const HermitianData& h,
                                             const EnumerationLimits& limits) {
  if (!(action.diagram() == d))
    fail("the action was generated over a different diagram");
  validate_hermitian(d, h);
  const std::size_t n = d.component_count();
  if (n == 0 || n > 64)
    fail("enumeration supports 1 to 64 components");

  constexpr std::uint64_t kWorkLimit = 50000000;

  // Stage 1: part orbits, deduplicated, each passing the noncompact
  // conditions on every member.
  EnumerationResult res;
  std::set<Polymer> orbit_set;
  std::uint64_t nc_mask = 0;
  for (std::size_t c : h.noncompact) nc_mask |= std::uint64_t{1} << c;
  std::uint64_t visited = 0;
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                       : ((std::uint64_t{1} << n) - 1);
  bool stage1_done = false;
  auto process_subset = [&](std::uint64_t mask) {
    if (std::popcount(mask & nc_mask) > 1) return;
    std::vector<std::size_t> comps;
    std::vector<std::vector<int>> choices;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (std::uint64_t{1} << c))) continue;
      const Component& comp = d.component(c);
      std::set<int> allowed = admissible_vertices(comp.family, comp.rank);
      if (nc_mask & (std::uint64_t{1} << c)) {
        std::set<int> und = h.underlined(comp.family, comp.rank,
                                         h.special_vertices.at(c));
        std::set<int> both;
        for (int v : und)
          if (allowed.count(v)) both.insert(v);
        allowed = both;
        if (allowed.empty()) return;
      }
      comps.push_back(c);
      choices.emplace_back(allowed.begin(), allowed.end());
    }
    std::vector<std::size_t> odo(comps.size(), 0);
    while (!stage1_done) {
      std::vector<VertexRef> vs;
      for (std::size_t i = 0; i < comps.size(); ++i)
        vs.push_back(VertexRef{comps[i], choices[i][odo[i]]});
      Polymer orbit = orbit_polymer(Part::from_vertices(vs), action);
      bool orbit_ok = true;
      for (const Part& p : orbit.parts())
        if (nc_failure(p, d, h)) {
          orbit_ok = false;
          break;
        }
      if (orbit_ok) {
        orbit_set.insert(orbit);
        if (orbit_set.size() > limits.max_orbits) {
          orbit_set.erase(std::prev(orbit_set.end()));
          res.truncated = true;
          stage1_done = true;
          break;
        }
      }
      std::size_t i = 0;
      while (i < odo.size() && ++odo[i] == choices[i].size()) odo[i++] = 0;
      if (i == odo.size()) break;
    }
  };
  for (int k = 1; k <= static_cast<int>(n) && !stage1_done; ++k) {
    std::uint64_t mask = (k == 64) ? ~std::uint64_t{0}
                                   : ((std::uint64_t{1} << k) - 1);
    const std::uint64_t top = mask << (n - static_cast<std::size_t>(k));
    while (!stage1_done) {
      if (++visited > kWorkLimit) {
        res.truncated = true;
        stage1_done = true;
        break;
      }
      process_subset(mask);
      if (mask == top) break;
      std::uint64_t c = mask & (~mask + 1);
      std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }

  std::vector<Polymer> orbits(orbit_set.begin(), orbit_set.end());
  std::vector<std::uint64_t> cover(orbits.size(), 0);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (const Part& t : orbits[i].parts())
      for (const auto& [c, v] : t.vertices())
        cover[i] |= std::uint64_t{1} << c;

  // Stage 2: unions of orbits, by orbit count then lexicographically by
  // orbit index. Orbits are disjoint, so distinct index sets give
  // distinct polymers.
  visited = 0;
  const std::size_t m = orbits.size();
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::size_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      if (++visited > kWorkLimit) {
        res.truncated = true;
        k = m;
        break;
      }
      std::uint64_t covered = 0;
      for (std::size_t i : combo) covered |= cover[i];
      if (covered == full) {
        Polymer u;
        for (std::size_t i : combo)
          for (const Part& t : orbits[i].parts()) u.insert(t);
        res.polymers.push_back(std::move(u));
        if (res.polymers.size() >= limits.max_output) {
          bool last = (k == m);
          for (std::size_t i = 0; i < k && last; ++i)
            last = combo[i] == m - k + i;
          if (!last) res.truncated = true;
          k = m;
          break;
        }
      }
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return res;
}

}  // namespace tenstwist
