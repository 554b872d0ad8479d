#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tenstwist/polymer.hpp"

namespace tenstwist {

// Per-orbit anisotropy input, keyed by orbit representative (the smallest
// component index of the orbit). Orbits without an entry count as false.
struct AnisotropyFlags {
  std::map<std::size_t, bool> by_rep;

  static AnisotropyFlags all_false(const GaloisAction& action);
  // Accepts keys naming any orbit member and normalizes them to the
  // representative. Conflicting values within one orbit throw.
  static AnisotropyFlags from_members(const GaloisAction& action,
                                      const std::map<std::size_t, bool>& by_member);

  bool flag_for(const GaloisAction& action, std::size_t component) const;
};

// Throws std::invalid_argument when a key is not an orbit representative.
void check_flags(const GaloisAction& action, const AnisotropyFlags& flags);

// Outcome for one component orbit: either some part meets the orbit in
// more than one component (tensor witness), or the orbit's anisotropy
// flag covers it, or it fails.
struct OrbitOutcome {
  enum class Kind { TensorWitness, Anisotropic, Failure };
  std::size_t representative = 0;
  Kind kind = Kind::Failure;
  std::optional<Part> witness;   // first qualifying part, canonical order
  std::size_t cardinality = 0;   // |orbit /\ support(witness)|
};

struct TwistVerdict {
  bool satisfied = false;
  std::vector<OrbitOutcome> orbits;
};

// The decision procedure. Requires a valid polymer (validate_polymer) and
// representative-keyed flags; throws std::invalid_argument otherwise.
TwistVerdict perfectly_tens_twisted(const Polymer& s, const GaloisAction& action,
                                    const AnisotropyFlags& flags);

// Orbit representatives of family-A orbits whose component stabilizers
// act by the identity vertex map (inner type). Checking one member per
// orbit suffices: stabilizers along an orbit are conjugate.
std::vector<std::size_t> inner_type_A_orbits(const GaloisAction& action);

// Variant dropping the anisotropy fallback. Only sound in the absence of
// inner-type-A factors; throws std::invalid_argument when one exists.
TwistVerdict padic_drop_condition2(const Polymer& s, const GaloisAction& action);

// First element sigma (in sorted order) such that every component meets
// some part of s in more than one component of its <sigma>-orbit.
// Requires transitivity on at least one component; throws otherwise.
std::optional<DiagramAutomorphism> exists_good_sigma(const Polymer& s,
                                                     const GaloisAction& action);

// Sufficient conditions. Both require a transitive action.
bool cyclic_criterion(const Polymer& s, const GaloisAction& action);
bool mumford_criterion(const Polymer& s, const GaloisAction& action);

struct IndexBound {
  // Smallest attainable unipotency index over nonempty unions of
  // false-flag orbits; empty when every orbit is flagged true.
  std::optional<int> value;
  // First minimizing union, as a component set; empty when unbounded.
  std::set<std::size_t> support;
  bool unbounded() const { return !value.has_value(); }
};

// min over unions J of (1 + max over parts of |support(part) /\ J|).
// The criterion holds exactly when this exceeds 2.
IndexBound min_unipotent_index_bound(const Polymer& s, const GaloisAction& action,
                                     const AnisotropyFlags& flags);

}  // namespace tenstwist
