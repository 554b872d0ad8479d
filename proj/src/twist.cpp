#include "tenstwist/twist.hpp"

#include <algorithm>
#include <stdexcept>

namespace tenstwist {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void require_valid(const Polymer& s, const GaloisAction& action) {
  ValidationReport rep = validate_polymer(s, action.diagram(), action);
  if (!rep.valid) {
    std::string msg = "invalid polymer:";
    for (const ValidationFailure& f : rep.failures) {
      msg += ' ';
      msg += failure_kind_id(f.kind);
    }
    fail(msg);
  }
}

std::size_t overlap(const std::vector<std::size_t>& orbit, const Part& t) {
  std::size_t n = 0;
  for (std::size_t c : orbit)
    if (t.contains_component(c)) ++n;
  return n;
}

}  // namespace

AnisotropyFlags AnisotropyFlags::all_false(const GaloisAction& action) {
  AnisotropyFlags f;
  for (const auto& orbit : action.component_orbits()) f.by_rep[orbit.front()] = false;
  return f;
}

AnisotropyFlags AnisotropyFlags::from_members(
    const GaloisAction& action, const std::map<std::size_t, bool>& by_member) {
  AnisotropyFlags f = all_false(action);
  std::map<std::size_t, bool> seen;
  for (const auto& [c, v] : by_member) {
    if (c >= action.diagram().component_count())
      fail("anisotropy flag names component index " + std::to_string(c) +
           " out of range");
    std::size_t rep = action.orbit_representative(c);
    auto [it, inserted] = seen.emplace(rep, v);
    if (!inserted && it->second != v)
      fail("conflicting anisotropy flags within the orbit of component " +
           std::to_string(rep));
    f.by_rep[rep] = v;
  }
  return f;
}

bool AnisotropyFlags::flag_for(const GaloisAction& action,
                               std::size_t component) const {
  auto it = by_rep.find(action.orbit_representative(component));
  return it != by_rep.end() && it->second;
}

void check_flags(const GaloisAction& action, const AnisotropyFlags& flags) {
  for (const auto& [c, v] : flags.by_rep) {
    if (c >= action.diagram().component_count())
      fail("anisotropy flag names component index " + std::to_string(c) +
           " out of range");
    if (action.orbit_representative(c) != c)
      fail("anisotropy flags must be keyed by orbit representatives; component " +
           std::to_string(c) + " is not one");
  }
}

TwistVerdict perfectly_tens_twisted(const Polymer& s, const GaloisAction& action,
                                    const AnisotropyFlags& flags) {
  require_valid(s, action);
  check_flags(action, flags);
  TwistVerdict v;
  v.satisfied = true;
  for (const auto& orbit : action.component_orbits()) {
    OrbitOutcome out;
    out.representative = orbit.front();
    out.kind = OrbitOutcome::Kind::Failure;
    for (const Part& t : s.parts()) {
      std::size_t card = overlap(orbit, t);
      if (card > 1) {
        out.kind = OrbitOutcome::Kind::TensorWitness;
        out.witness = t;
        out.cardinality = card;
        break;
      }
    }
    if (out.kind == OrbitOutcome::Kind::Failure) {
      auto it = flags.by_rep.find(out.representative);
      if (it != flags.by_rep.end() && it->second)
        out.kind = OrbitOutcome::Kind::Anisotropic;
    }
    if (out.kind == OrbitOutcome::Kind::Failure) v.satisfied = false;
    v.orbits.push_back(std::move(out));
  }
  return v;
}

std::vector<std::size_t> inner_type_A_orbits(const GaloisAction& action) {
  std::vector<std::size_t> out;
  for (const auto& orbit : action.component_orbits()) {
    std::size_t rep = orbit.front();
    if (action.diagram().component(rep).family != Family::A) continue;
    bool inner = true;
    for (const DiagramAutomorphism& g : action.elements()) {
      if (g.component_permutation[rep] != rep) continue;
      if (g.vertex_maps[rep] != VertexMapKind::Identity) {
        inner = false;
        break;
      }
    }
    if (inner) out.push_back(rep);
  }
  return out;
}

TwistVerdict padic_drop_condition2(const Polymer& s, const GaloisAction& action) {
  std::vector<std::size_t> inner = inner_type_A_orbits(action);
  if (!inner.empty())
    fail("dropping the anisotropy condition is unsound here: orbit of component " +
         std::to_string(inner.front()) + " is of inner type A");
  return perfectly_tens_twisted(s, action, AnisotropyFlags::all_false(action));
}

std::optional<DiagramAutomorphism> exists_good_sigma(const Polymer& s,
                                                     const GaloisAction& action) {
  require_valid(s, action);
  if (!action.is_transitive_on_components())
    fail("the sigma search requires a transitive action on components");
  const std::size_t n = action.diagram().component_count();
  for (const DiagramAutomorphism& sigma : action.elements()) {
    bool good = true;
    for (std::size_t c = 0; c < n && good; ++c) {
      std::vector<std::size_t> cycle;
      std::size_t cur = c;
      do {
        cycle.push_back(cur);
        cur = sigma.component_permutation[cur];
      } while (cur != c);
      std::sort(cycle.begin(), cycle.end());
      bool found = false;
      for (const Part& t : s.parts())
        if (overlap(cycle, t) > 1) {
          found = true;
          break;
        }
      good = found;
    }
    if (good) return sigma;
  }
  return std::nullopt;
}

bool cyclic_criterion(const Polymer& s, const GaloisAction& action) {
  require_valid(s, action);
  if (!action.is_transitive_on_components())
    fail("the cyclic criterion requires a transitive action on components");
  if (!action.is_cyclic_on_components()) return false;
  for (const Part& t : s.parts())
    if (t.size() > 1) return true;
  return false;
}

bool mumford_criterion(const Polymer& s, const GaloisAction& action) {
  require_valid(s, action);
  if (!action.is_transitive_on_components())
    fail("the Mumford criterion requires a transitive action on components");
  const std::size_t n = action.diagram().component_count();
  if (n <= 1) return false;
  for (const Part& t : s.parts())
    if (t.size() == n) return true;
  return false;
}

IndexBound min_unipotent_index_bound(const Polymer& s, const GaloisAction& action,
                                     const AnisotropyFlags& flags) {
  require_valid(s, action);
  check_flags(action, flags);
  std::vector<const std::vector<std::size_t>*> false_orbits;
  for (const auto& orbit : action.component_orbits()) {
    auto it = flags.by_rep.find(orbit.front());
    if (it == flags.by_rep.end() || !it->second) false_orbits.push_back(&orbit);
  }
  IndexBound best;
  if (false_orbits.empty()) return best;
  const std::size_t k = false_orbits.size();
  if (k > 62) fail("too many unflagged orbits to enumerate unions");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::set<std::size_t> j;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i))
        j.insert(false_orbits[i]->begin(), false_orbits[i]->end());
    std::size_t worst = 0;
    for (const Part& t : s.parts()) {
      std::size_t c = 0;
      for (std::size_t comp : j)
        if (t.contains_component(comp)) ++c;
      worst = std::max(worst, c);
    }
    int bound = 1 + static_cast<int>(worst);
    if (!best.value || bound < *best.value) {
      best.value = bound;
      best.support = std::move(j);
    }
  }
  return best;
}

}  // namespace tenstwist
