#pragma once

#include <vector>

#include "tenstwist/polymer.hpp"
#include "tenstwist/rational.hpp"

namespace tenstwist {

// Dimension of the minuscule fundamental representation at an admissible
// vertex. A_n: n+1 (either end); B_n: 2^n (spin); C_n: 2n (standard);
// D_n: 2n at vertex 1, 2^(n-1) at the two spin vertices.
// Throws std::invalid_argument on inadmissible vertices.
Int minuscule_dim(Family f, int rank, int vertex);

struct DimensionOrbit {
  Part representative;   // smallest part of the orbit
  std::size_t orbit_size = 0;
  Int dimension;         // product over the marked vertices, per part
  Int multiplicity;
};

struct DimensionReport {
  std::vector<DimensionOrbit> orbits;
  Int total;
};

// Total dimension of the polymer: parts grouped into action orbits (the
// per-part dimension is constant on an orbit), each weighted by orbit
// size and multiplicity. Multiplicities are keyed by any part of the
// orbit and default to 1; unknown parts or two entries for one orbit
// throw std::invalid_argument. Requires a valid polymer.
DimensionReport polymer_dims(
    const Polymer& s, const DynkinDiagram& d, const GaloisAction& action,
    const std::vector<std::pair<Part, Int>>& multiplicities = {});

}  // namespace tenstwist
