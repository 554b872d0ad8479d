#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tenstwist {

// Classical families only, Bourbaki vertex numbering throughout.
enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

char family_letter(Family f);

// Throws std::invalid_argument for unknown letters; exceptional families
// (E, F, G) are rejected with a distinct message.
Family family_from_letter(std::string_view s);

int min_rank(Family f);
bool valid_component(Family f, int rank);

struct Component {
  std::string id;
  Family family = Family::A;
  int rank = 0;
};

// Vertex within a component, both sides index-based: `component` is the
// position in the diagram's component list, `index` is 1-based Bourbaki.
struct VertexRef {
  std::size_t component = 0;
  int index = 0;
  auto operator<=>(const VertexRef&) const = default;
};

class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  // Throws std::invalid_argument on duplicate ids, ids containing ':',
  // empty ids, or ranks below the family minimum (A>=1, B>=2, C>=2, D>=4).
  explicit DynkinDiagram(std::vector<Component> components);

  std::size_t component_count() const { return components_.size(); }
  const Component& component(std::size_t i) const;
  const std::vector<Component>& components() const { return components_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  bool operator==(const DynkinDiagram& other) const;

 private:
  std::vector<Component> components_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Vertices whose fundamental representation is minuscule.
// A_n: {1, n}; B_n: {n}; C_n: {1}; D_n: {1, n-1, n}.
std::set<int> admissible_vertices(Family f, int rank);

// Diagram symmetries of a single component. Spin swap fixes every vertex
// except rank-1 and rank; on D4 the same permutation is named swap_34 and
// spin_swap is normalized to it.
enum class VertexMapKind {
  Identity,
  Reversal,  // A_n, rank >= 2: i -> rank+1-i
  SpinSwap,  // D_n, rank >= 5
  Swap13,    // D4 arm swaps and rotations; arms are vertices 1, 3, 4
  Swap14,
  Swap34,
  Cycle134,  // 1 -> 3 -> 4 -> 1
  Cycle143,  // 1 -> 4 -> 3 -> 1
};

std::string_view vertex_map_name(VertexMapKind k);
std::optional<VertexMapKind> vertex_map_from_name(std::string_view name);

VertexMapKind normalize_vertex_map(Family f, int rank, VertexMapKind k);
bool vertex_map_valid(Family f, int rank, VertexMapKind k);

// All of these throw std::invalid_argument on kinds that are not valid
// for the component or vertices out of range.
int apply_vertex_map(Family f, int rank, VertexMapKind k, int vertex);
VertexMapKind compose_vertex_maps(Family f, int rank, VertexMapKind outer,
                                  VertexMapKind inner);
VertexMapKind invert_vertex_map(Family f, int rank, VertexMapKind k);

// Full symmetry group of one component: trivial for A1/B/C, order 2 for
// A_n (n>=2) and D_n (n>=5), the six permutations of the arms for D4.
std::set<VertexMapKind> component_automorphisms(Family f, int rank);
std::set<VertexMapKind> component_automorphisms(const Component& c);

// Action of -w0 on the vertices: reversal for A_n (n>=2), spin swap for
// D_n with n odd, identity otherwise.
VertexMapKind opposition_involution(Family f, int rank);
VertexMapKind opposition_involution(const Component& c);

}  // namespace tenstwist
