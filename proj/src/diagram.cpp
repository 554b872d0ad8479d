#include "tenstwist/diagram.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tenstwist {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

std::string component_label(Family f, int rank) {
  return std::string(1, family_letter(f)) + std::to_string(rank);
}

}  // namespace

char family_letter(Family f) { return static_cast<char>(f); }

Family family_from_letter(std::string_view s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      case 'E':
      case 'F':
      case 'G':
        fail("exceptional family '" + std::string(s) +
             "' is not supported; families are A, B, C, D");
      default: break;
    }
  }
  fail("unknown family '" + std::string(s) + "'; families are A, B, C, D");
}

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
  }
  fail("unknown family");
}

bool valid_component(Family f, int rank) { return rank >= min_rank(f); }

DynkinDiagram::DynkinDiagram(std::vector<Component> components)
    : components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const Component& c = components_[i];
    if (c.id.empty()) fail("component " + std::to_string(i) + " has an empty id");
    if (c.id.find(':') != std::string::npos)
      fail("component id '" + c.id + "' must not contain ':'");
    if (!valid_component(c.family, c.rank))
      fail("component '" + c.id + "': rank " + std::to_string(c.rank) +
           " is below the minimum " + std::to_string(min_rank(c.family)) +
           " for family " + std::string(1, family_letter(c.family)));
    if (!index_.emplace(c.id, i).second)
      fail("duplicate component id '" + c.id + "'");
  }
}

const Component& DynkinDiagram::component(std::size_t i) const {
  if (i >= components_.size())
    fail("component index " + std::to_string(i) + " out of range");
  return components_[i];
}

std::optional<std::size_t> DynkinDiagram::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool DynkinDiagram::operator==(const DynkinDiagram& other) const {
  if (components_.size() != other.components_.size()) return false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const Component& a = components_[i];
    const Component& b = other.components_[i];
    if (a.id != b.id || a.family != b.family || a.rank != b.rank) return false;
  }
  return true;
}

std::set<int> admissible_vertices(Family f, int rank) {
  if (!valid_component(f, rank))
    fail("rank " + std::to_string(rank) + " invalid for family " +
         std::string(1, family_letter(f)));
  switch (f) {
    case Family::A: return {1, rank};
    case Family::B: return {rank};
    case Family::C: return {1};
    case Family::D: return {1, rank - 1, rank};
  }
  fail("unknown family");
}

std::string_view vertex_map_name(VertexMapKind k) {
  switch (k) {
    case VertexMapKind::Identity: return "identity";
    case VertexMapKind::Reversal: return "reversal";
    case VertexMapKind::SpinSwap: return "spin_swap";
    case VertexMapKind::Swap13: return "swap_13";
    case VertexMapKind::Swap14: return "swap_14";
    case VertexMapKind::Swap34: return "swap_34";
    case VertexMapKind::Cycle134: return "cycle_134";
    case VertexMapKind::Cycle143: return "cycle_143";
  }
  fail("unknown vertex map kind");
}

std::optional<VertexMapKind> vertex_map_from_name(std::string_view name) {
  static constexpr std::array<VertexMapKind, 8> kinds = {
      VertexMapKind::Identity, VertexMapKind::Reversal, VertexMapKind::SpinSwap,
      VertexMapKind::Swap13,   VertexMapKind::Swap14,   VertexMapKind::Swap34,
      VertexMapKind::Cycle134, VertexMapKind::Cycle143};
  for (VertexMapKind k : kinds)
    if (vertex_map_name(k) == name) return k;
  return std::nullopt;
}

VertexMapKind normalize_vertex_map(Family f, int rank, VertexMapKind k) {
  if (f == Family::D && rank == 4 && k == VertexMapKind::SpinSwap)
    return VertexMapKind::Swap34;
  if (f == Family::A && rank == 1 && k == VertexMapKind::Reversal)
    return VertexMapKind::Identity;
  return k;
}

bool vertex_map_valid(Family f, int rank, VertexMapKind k) {
  if (!valid_component(f, rank)) return false;
  return component_automorphisms(f, rank).count(normalize_vertex_map(f, rank, k)) > 0;
}

int apply_vertex_map(Family f, int rank, VertexMapKind k, int vertex) {
  if (vertex < 1 || vertex > rank)
    fail("vertex " + std::to_string(vertex) + " out of range for " +
         component_label(f, rank));
  k = normalize_vertex_map(f, rank, k);
  if (!vertex_map_valid(f, rank, k))
    fail(std::string("vertex map '") + std::string(vertex_map_name(k)) +
         "' is not a symmetry of " + component_label(f, rank));
  switch (k) {
    case VertexMapKind::Identity:
      return vertex;
    case VertexMapKind::Reversal:
      return rank + 1 - vertex;
    case VertexMapKind::SpinSwap:
      if (vertex == rank - 1) return rank;
      if (vertex == rank) return rank - 1;
      return vertex;
    case VertexMapKind::Swap13:
      return vertex == 1 ? 3 : vertex == 3 ? 1 : vertex;
    case VertexMapKind::Swap14:
      return vertex == 1 ? 4 : vertex == 4 ? 1 : vertex;
    case VertexMapKind::Swap34:
      return vertex == 3 ? 4 : vertex == 4 ? 3 : vertex;
    case VertexMapKind::Cycle134:
      return vertex == 1 ? 3 : vertex == 3 ? 4 : vertex == 4 ? 1 : vertex;
    case VertexMapKind::Cycle143:
      return vertex == 1 ? 4 : vertex == 4 ? 3 : vertex == 3 ? 1 : vertex;
  }
  fail("unknown vertex map kind");
}

VertexMapKind compose_vertex_maps(Family f, int rank, VertexMapKind outer,
                                  VertexMapKind inner) {
  outer = normalize_vertex_map(f, rank, outer);
  inner = normalize_vertex_map(f, rank, inner);
  for (VertexMapKind k : component_automorphisms(f, rank)) {
    bool match = true;
    for (int v = 1; v <= rank && match; ++v)
      match = apply_vertex_map(f, rank, k, v) ==
              apply_vertex_map(f, rank, outer, apply_vertex_map(f, rank, inner, v));
    if (match) return k;
  }
  fail("composition escaped the symmetry group of " + component_label(f, rank));
}

VertexMapKind invert_vertex_map(Family f, int rank, VertexMapKind k) {
  k = normalize_vertex_map(f, rank, k);
  for (VertexMapKind inv : component_automorphisms(f, rank)) {
    bool match = true;
    for (int v = 1; v <= rank && match; ++v)
      match = apply_vertex_map(f, rank, inv, apply_vertex_map(f, rank, k, v)) == v;
    if (match) return inv;
  }
  fail("no inverse in the symmetry group of " + component_label(f, rank));
}

std::set<VertexMapKind> component_automorphisms(Family f, int rank) {
  if (!valid_component(f, rank))
    fail("rank " + std::to_string(rank) + " invalid for family " +
         std::string(1, family_letter(f)));
  switch (f) {
    case Family::A:
      if (rank == 1) return {VertexMapKind::Identity};
      return {VertexMapKind::Identity, VertexMapKind::Reversal};
    case Family::B:
    case Family::C:
      return {VertexMapKind::Identity};
    case Family::D:
      if (rank == 4)
        return {VertexMapKind::Identity, VertexMapKind::Swap13,
                VertexMapKind::Swap14,   VertexMapKind::Swap34,
                VertexMapKind::Cycle134, VertexMapKind::Cycle143};
      return {VertexMapKind::Identity, VertexMapKind::SpinSwap};
  }
  fail("unknown family");
}

std::set<VertexMapKind> component_automorphisms(const Component& c) {
  return component_automorphisms(c.family, c.rank);
}

VertexMapKind opposition_involution(Family f, int rank) {
  if (!valid_component(f, rank))
    fail("rank " + std::to_string(rank) + " invalid for family " +
         std::string(1, family_letter(f)));
  switch (f) {
    case Family::A:
      return rank >= 2 ? VertexMapKind::Reversal : VertexMapKind::Identity;
    case Family::B:
    case Family::C:
      return VertexMapKind::Identity;
    case Family::D:
      if (rank % 2 == 1) return normalize_vertex_map(f, rank, VertexMapKind::SpinSwap);
      return VertexMapKind::Identity;
  }
  fail("unknown family");
}

VertexMapKind opposition_involution(const Component& c) {
  return opposition_involution(c.family, c.rank);
}

}  // namespace tenstwist
