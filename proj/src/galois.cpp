#include "tenstwist/galois.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace tenstwist {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace

DiagramAutomorphism identity_automorphism(const DynkinDiagram& d) {
  DiagramAutomorphism a;
  a.component_permutation.resize(d.component_count());
  a.vertex_maps.assign(d.component_count(), VertexMapKind::Identity);
  for (std::size_t i = 0; i < d.component_count(); ++i)
    a.component_permutation[i] = static_cast<std::uint32_t>(i);
  return a;
}

DiagramAutomorphism normalize_automorphism(const DynkinDiagram& d,
                                           const DiagramAutomorphism& a) {
  DiagramAutomorphism out = a;
  for (std::size_t i = 0; i < out.vertex_maps.size() && i < d.component_count(); ++i) {
    const Component& c = d.component(i);
    out.vertex_maps[i] = normalize_vertex_map(c.family, c.rank, out.vertex_maps[i]);
  }
  return out;
}

void validate_automorphism(const DynkinDiagram& d, const DiagramAutomorphism& a) {
  const std::size_t n = d.component_count();
  if (a.component_permutation.size() != n)
    fail("automorphism permutation covers " +
         std::to_string(a.component_permutation.size()) + " components, diagram has " +
         std::to_string(n));
  if (a.vertex_maps.size() != n)
    fail("automorphism has " + std::to_string(a.vertex_maps.size()) +
         " vertex maps, diagram has " + std::to_string(n) + " components");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t t = a.component_permutation[i];
    if (t >= n) fail("permutation image " + std::to_string(t) + " out of range");
    if (seen[t]) fail("component permutation is not a bijection");
    seen[t] = true;
    const Component& src = d.component(i);
    const Component& dst = d.component(t);
    if (src.family != dst.family || src.rank != dst.rank)
      fail("component '" + src.id + "' cannot map to '" + dst.id +
           "': family or rank mismatch");
    if (!vertex_map_valid(src.family, src.rank, a.vertex_maps[i]))
      fail("vertex map '" + std::string(vertex_map_name(a.vertex_maps[i])) +
           "' is not a symmetry of component '" + src.id + "'");
  }
}

DiagramAutomorphism compose(const DynkinDiagram& d, const DiagramAutomorphism& a,
                            const DiagramAutomorphism& b) {
  const std::size_t n = d.component_count();
  DiagramAutomorphism r;
  r.component_permutation.resize(n);
  r.vertex_maps.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::uint32_t mid = b.component_permutation[c];
    r.component_permutation[c] = a.component_permutation[mid];
    const Component& src = d.component(c);
    r.vertex_maps[c] = compose_vertex_maps(src.family, src.rank,
                                           a.vertex_maps[mid], b.vertex_maps[c]);
  }
  return r;
}

DiagramAutomorphism inverse(const DynkinDiagram& d, const DiagramAutomorphism& a) {
  const std::size_t n = d.component_count();
  DiagramAutomorphism r;
  r.component_permutation.resize(n);
  r.vertex_maps.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::uint32_t t = a.component_permutation[c];
    r.component_permutation[t] = static_cast<std::uint32_t>(c);
    const Component& src = d.component(c);
    r.vertex_maps[t] = invert_vertex_map(src.family, src.rank, a.vertex_maps[c]);
  }
  return r;
}

VertexRef apply(const DynkinDiagram& d, const DiagramAutomorphism& a, VertexRef v) {
  const Component& c = d.component(v.component);
  return VertexRef{a.component_permutation[v.component],
                   apply_vertex_map(c.family, c.rank, a.vertex_maps[v.component],
                                    v.index)};
}

bool is_identity(const DiagramAutomorphism& a) {
  for (std::size_t i = 0; i < a.component_permutation.size(); ++i)
    if (a.component_permutation[i] != i) return false;
  for (VertexMapKind k : a.vertex_maps)
    if (k != VertexMapKind::Identity) return false;
  return true;
}

GaloisAction GaloisAction::generate(DynkinDiagram diagram,
                                    std::vector<DiagramAutomorphism> generators,
                                    std::size_t max_elements) {
  GaloisAction g;
  g.diagram_ = std::move(diagram);
  for (DiagramAutomorphism& gen : generators) {
    gen = normalize_automorphism(g.diagram_, gen);
    validate_automorphism(g.diagram_, gen);
  }
  g.generators_ = generators;

  std::set<DiagramAutomorphism> closed;
  std::deque<DiagramAutomorphism> work;
  DiagramAutomorphism id = identity_automorphism(g.diagram_);
  closed.insert(id);
  work.push_back(id);
  while (!work.empty()) {
    DiagramAutomorphism cur = std::move(work.front());
    work.pop_front();
    for (const DiagramAutomorphism& gen : generators) {
      DiagramAutomorphism next = compose(g.diagram_, cur, gen);
      if (closed.insert(next).second) {
        if (closed.size() > max_elements)
          throw std::length_error("group closure exceeded the safety bound of " +
                                  std::to_string(max_elements) + " elements");
        work.push_back(std::move(next));
      }
    }
  }
  g.elements_.assign(closed.begin(), closed.end());

  const std::size_t n = g.diagram_.component_count();
  g.orbit_index_.assign(n, n);
  for (std::size_t start = 0; start < n; ++start) {
    if (g.orbit_index_[start] != n) continue;
    std::set<std::size_t> orbit{start};
    std::deque<std::size_t> frontier{start};
    while (!frontier.empty()) {
      std::size_t c = frontier.front();
      frontier.pop_front();
      for (const DiagramAutomorphism& e : g.elements_) {
        std::size_t t = e.component_permutation[c];
        if (orbit.insert(t).second) frontier.push_back(t);
      }
    }
    std::size_t oi = g.orbits_.size();
    g.orbits_.emplace_back(orbit.begin(), orbit.end());
    for (std::size_t c : orbit) g.orbit_index_[c] = oi;
  }
  return g;
}

std::size_t GaloisAction::orbit_representative(std::size_t component) const {
  return orbit_of(component).front();
}

const std::vector<std::size_t>& GaloisAction::orbit_of(std::size_t component) const {
  if (component >= orbit_index_.size())
    fail("component index " + std::to_string(component) + " out of range");
  return orbits_[orbit_index_[component]];
}

bool GaloisAction::is_cyclic_on_components() const {
  std::set<std::vector<std::uint32_t>> perms;
  for (const DiagramAutomorphism& e : elements_) perms.insert(e.component_permutation);
  std::vector<std::uint32_t> id;
  for (std::size_t i = 0; i < diagram_.component_count(); ++i)
    id.push_back(static_cast<std::uint32_t>(i));
  for (const auto& p : perms) {
    std::set<std::vector<std::uint32_t>> powers;
    std::vector<std::uint32_t> cur = id;
    do {
      powers.insert(cur);
      std::vector<std::uint32_t> next(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) next[i] = p[cur[i]];
      cur = std::move(next);
    } while (cur != id);
    if (powers.size() == perms.size()) return true;
  }
  return perms.empty();
}

std::optional<DiagramAutomorphism> GaloisAction::fixed_point_free_element() const {
  if (!is_transitive_on_components())
    fail("fixed-point-free search requires a transitive action on components");
  if (diagram_.component_count() <= 1)
    fail("fixed-point-free search requires at least two components");
  for (const DiagramAutomorphism& e : elements_) {
    bool moves_all = true;
    for (std::size_t c = 0; c < e.component_permutation.size() && moves_all; ++c)
      moves_all = e.component_permutation[c] != c;
    if (moves_all) return e;
  }
  return std::nullopt;
}

}  // namespace tenstwist
