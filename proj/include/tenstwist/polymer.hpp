#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tenstwist/galois.hpp"

namespace tenstwist {

// One tensor factor: at most one marked vertex per component, never empty.
// Both invariants hold by construction.
class Part {
 public:
  Part() = default;
  // Throws std::invalid_argument on an empty list or two vertices in the
  // same component.
  static Part from_vertices(const std::vector<VertexRef>& vs);

  const std::map<std::size_t, int>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool contains_component(std::size_t c) const { return v_.count(c) > 0; }
  int vertex_in(std::size_t c) const { return v_.at(c); }

  // Component support pi(T).
  std::set<std::size_t> support() const;

  bool operator==(const Part& o) const { return v_ == o.v_; }
  bool operator<(const Part& o) const { return v_ < o.v_; }

 private:
  std::map<std::size_t, int> v_;
};

Part apply(const DynkinDiagram& d, const DiagramAutomorphism& a, const Part& t);

class Polymer {
 public:
  Polymer() = default;
  explicit Polymer(std::set<Part> parts) : parts_(std::move(parts)) {}

  const std::set<Part>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool contains(const Part& t) const { return parts_.count(t) > 0; }
  void insert(Part t) { parts_.insert(std::move(t)); }

  bool operator==(const Polymer& o) const { return parts_ == o.parts_; }
  bool operator<(const Polymer& o) const { return parts_ < o.parts_; }

 private:
  std::set<Part> parts_;
};

// Stable identifiers for validation failures.
enum class FailureKind { GaloisStable, Covering, MinusculeSingleton, DeligneNc };

std::string_view failure_kind_id(FailureKind k);

struct ValidationFailure {
  FailureKind kind;
  std::optional<Part> part;            // offending part, when there is one
  std::optional<std::size_t> component;  // offending component, when there is one
};

struct ValidationReport {
  bool valid = true;
  std::vector<ValidationFailure> failures;
};

// Hermitian input data: which components are noncompact, the special
// vertex of each noncompact component, and optional overrides of the
// underlined-vertex table keyed by (family, rank, special vertex).
// When no override is present the underlined set defaults to the
// admissible vertices of the component.
struct HermitianData {
  std::set<std::size_t> noncompact;
  std::map<std::size_t, int> special_vertices;

  struct UnderlinedKey {
    Family family;
    int rank;
    int special_vertex;
    auto operator<=>(const UnderlinedKey&) const = default;
  };
  std::map<UnderlinedKey, std::set<int>> underlined_override;

  std::set<int> underlined(Family f, int rank, int special_vertex) const;
};

// Throws std::invalid_argument on dangling component references, special
// vertices out of range or missing for a noncompact component, or
// underlined overrides that are not admissible.
void validate_hermitian(const DynkinDiagram& d, const HermitianData& h);

// Checks stability under the action, covering of every component, and
// admissibility of every marked vertex. Throws std::invalid_argument on
// dangling component or vertex references and on an action whose diagram
// differs from d.
ValidationReport validate_polymer(const Polymer& s, const DynkinDiagram& d,
                                  const GaloisAction& action);

// validate_polymer plus the noncompact conditions: every part meets the
// noncompact components in at most one vertex, and such a vertex must be
// underlined for its component.
ValidationReport validate_deligne_polymer(const Polymer& s, const DynkinDiagram& d,
                                          const GaloisAction& action,
                                          const HermitianData& h);

bool is_pel_shaped(const Polymer& s);

// Orbit closure {g(T) : g in the action} of a single part.
Polymer orbit_polymer(const Part& t, const GaloisAction& action);

struct EnumerationLimits {
  std::size_t max_orbits = 10000;
  std::size_t max_output = 1000;
};

struct EnumerationResult {
  std::vector<Polymer> polymers;
  bool truncated = false;
};

// All Deligne polymers over the diagram, as unions of part orbits, in a
// deterministic order (by orbit-set size, then lexicographically).
EnumerationResult enumerate_deligne_polymers(const DynkinDiagram& d,
                                             const GaloisAction& action,
                                             const HermitianData& h,
                                             const EnumerationLimits& limits = {});

}  // namespace tenstwist
