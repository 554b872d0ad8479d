#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "tenstwist/diagram.hpp"

namespace tenstwist {

// A symmetry of the whole diagram: a permutation of the component list
// (index -> image index, only between components of equal family and rank)
// plus one vertex map per source component. Acting on a vertex:
// (c, v) -> (component_permutation[c], vertex_maps[c](v)).
struct DiagramAutomorphism {
  std::vector<std::uint32_t> component_permutation;
  std::vector<VertexMapKind> vertex_maps;
  auto operator<=>(const DiagramAutomorphism&) const = default;
};

DiagramAutomorphism identity_automorphism(const DynkinDiagram& d);

// Rewrites aliases (spin_swap on D4, reversal on A1) to canonical kinds.
DiagramAutomorphism normalize_automorphism(const DynkinDiagram& d,
                                           const DiagramAutomorphism& a);

// Throws std::invalid_argument on size mismatches, non-bijective
// permutations, mismatched family/rank between a component and its image,
// or vertex maps that are not symmetries of their component.
void validate_automorphism(const DynkinDiagram& d, const DiagramAutomorphism& a);

DiagramAutomorphism compose(const DynkinDiagram& d, const DiagramAutomorphism& a,
                            const DiagramAutomorphism& b);  // a after b
DiagramAutomorphism inverse(const DynkinDiagram& d, const DiagramAutomorphism& a);
VertexRef apply(const DynkinDiagram& d, const DiagramAutomorphism& a, VertexRef v);

bool is_identity(const DiagramAutomorphism& a);

// Finite group of diagram automorphisms, closed under composition.
// Elements are stored sorted; the identity is always elements()[0].
class GaloisAction {
 public:
  // Closure of the generators. Throws on invalid generators or when the
  // closure exceeds max_elements.
  static GaloisAction generate(DynkinDiagram diagram,
                               std::vector<DiagramAutomorphism> generators,
                               std::size_t max_elements = 1000000);

  const DynkinDiagram& diagram() const { return diagram_; }
  const std::vector<DiagramAutomorphism>& elements() const { return elements_; }
  const std::vector<DiagramAutomorphism>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }

  // Orbits of the component set, each sorted, listed by smallest member.
  const std::vector<std::vector<std::size_t>>& component_orbits() const {
    return orbits_;
  }
  std::size_t orbit_representative(std::size_t component) const;
  const std::vector<std::size_t>& orbit_of(std::size_t component) const;

  bool is_transitive_on_components() const { return orbits_.size() == 1; }

  // True when the induced component-permutation group is cyclic.
  bool is_cyclic_on_components() const;

  // First element (in sorted order) moving every component. Requires a
  // transitive action on at least two components, else throws
  // std::invalid_argument. By the orbit-counting identity such an element
  // always exists; nullopt is unreachable for valid inputs.
  std::optional<DiagramAutomorphism> fixed_point_free_element() const;

 private:
  DynkinDiagram diagram_;
  std::vector<DiagramAutomorphism> generators_;
  std::vector<DiagramAutomorphism> elements_;
  std::vector<std::vector<std::size_t>> orbits_;
  std::vector<std::size_t> orbit_index_;
};

}  // namespace tenstwist
