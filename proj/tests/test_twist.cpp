#include <doctest.h>

#include <random>

#include "liesupport.hpp"
#include "tenstwist/twist.hpp"

using namespace tenstwist;

namespace {

Part part_of(std::initializer_list<std::size_t> comps) {
  std::vector<VertexRef> vs;
  for (std::size_t c : comps) vs.push_back(VertexRef{c, 1});
  return Part::from_vertices(vs);
}

GaloisAction cyclic_action(int n) {
  DynkinDiagram d = lie::a1_diagram(n);
  DiagramAutomorphism a = identity_automorphism(d);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    a.component_permutation[i] =
        static_cast<std::uint32_t>((i + 1) % static_cast<std::size_t>(n));
  return GaloisAction::generate(d, {a});
}

Polymer degree8_polymer() {
  Polymer s;
  for (std::size_t start = 0; start < 8; ++start)
    s.insert(part_of({start, (start + 1) % 8, (start + 2) % 8, (start + 3) % 8}));
  return s;
}

Polymer singletons(int n) {
  Polymer s;
  for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c)
    s.insert(part_of({c}));
  return s;
}

// Two 2-cycles on disjoint pairs; orbits {0,1} and {2,3}.
GaloisAction two_swap_action() {
  DynkinDiagram d = lie::a1_diagram(4);
  return GaloisAction::generate(
      d, {lie::from_permutation(d, {1, 0, 2, 3}),
          lie::from_permutation(d, {0, 1, 3, 2})});
}

}  // namespace

TEST_CASE("four consecutive windows witness the full cycle orbit") {
  GaloisAction g = cyclic_action(8);
  TwistVerdict v = perfectly_tens_twisted(degree8_polymer(), g,
                                          AnisotropyFlags::all_false(g));
  CHECK(v.satisfied);
  REQUIRE(v.orbits.size() == 1);
  const OrbitOutcome& out = v.orbits[0];
  CHECK(out.representative == 0);
  CHECK(out.kind == OrbitOutcome::Kind::TensorWitness);
  CHECK(out.cardinality == 4);
  REQUIRE(out.witness.has_value());
  CHECK(*out.witness == part_of({0, 1, 2, 3}));
}

TEST_CASE("singleton parts fail without the anisotropy fallback") {
  GaloisAction g = cyclic_action(4);
  TwistVerdict v = perfectly_tens_twisted(singletons(4), g,
                                          AnisotropyFlags::all_false(g));
  CHECK_FALSE(v.satisfied);
  REQUIRE(v.orbits.size() == 1);
  CHECK(v.orbits[0].kind == OrbitOutcome::Kind::Failure);
  CHECK_FALSE(v.orbits[0].witness.has_value());
}

TEST_CASE("an anisotropy flag rescues a witnessless orbit") {
  GaloisAction g = cyclic_action(4);
  AnisotropyFlags flags = AnisotropyFlags::from_members(g, {{2, true}});
  CHECK(flags.flag_for(g, 0));
  TwistVerdict v = perfectly_tens_twisted(singletons(4), g, flags);
  CHECK(v.satisfied);
  CHECK(v.orbits[0].kind == OrbitOutcome::Kind::Anisotropic);
}

TEST_CASE("conflicting member flags within one orbit throw") {
  GaloisAction g = cyclic_action(4);
  CHECK_THROWS_AS(AnisotropyFlags::from_members(g, {{1, true}, {3, false}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(AnisotropyFlags::from_members(g, {{9, true}}),
                  std::invalid_argument);
}

TEST_CASE("flags must be keyed by orbit representatives") {
  GaloisAction g = cyclic_action(4);
  AnisotropyFlags bad;
  bad.by_rep[1] = true;
  CHECK_THROWS_AS(check_flags(g, bad), std::invalid_argument);
  CHECK_THROWS_AS(perfectly_tens_twisted(singletons(4), g, bad),
                  std::invalid_argument);
}

TEST_CASE("the decision procedure rejects invalid polymers") {
  GaloisAction g = cyclic_action(4);
  Polymer not_covering;
  not_covering.insert(part_of({0}));
  CHECK_THROWS_AS(perfectly_tens_twisted(not_covering, g,
                                         AnisotropyFlags::all_false(g)),
                  std::invalid_argument);
}

TEST_CASE("per-orbit outcomes with mixed flags") {
  GaloisAction g = two_swap_action();
  Polymer s;
  s.insert(part_of({0, 1}));
  s.insert(part_of({2}));
  s.insert(part_of({3}));
  AnisotropyFlags flags = AnisotropyFlags::from_members(g, {{2, true}});
  TwistVerdict v = perfectly_tens_twisted(s, g, flags);
  CHECK(v.satisfied);
  REQUIRE(v.orbits.size() == 2);
  CHECK(v.orbits[0].representative == 0);
  CHECK(v.orbits[0].kind == OrbitOutcome::Kind::TensorWitness);
  CHECK(v.orbits[0].cardinality == 2);
  CHECK(v.orbits[1].representative == 2);
  CHECK(v.orbits[1].kind == OrbitOutcome::Kind::Anisotropic);

  TwistVerdict bare = perfectly_tens_twisted(s, g, AnisotropyFlags::all_false(g));
  CHECK_FALSE(bare.satisfied);
  CHECK(bare.orbits[1].kind == OrbitOutcome::Kind::Failure);
}

TEST_CASE("inner type A orbits") {
  DynkinDiagram a3({{"x", Family::A, 3}});
  GaloisAction trivial = GaloisAction::generate(a3, {});
  CHECK(inner_type_A_orbits(trivial) == std::vector<std::size_t>{0});

  DiagramAutomorphism rev = identity_automorphism(a3);
  rev.vertex_maps[0] = VertexMapKind::Reversal;
  GaloisAction outer = GaloisAction::generate(a3, {rev});
  CHECK(inner_type_A_orbits(outer).empty());

  DynkinDiagram b3({{"x", Family::B, 3}});
  CHECK(inner_type_A_orbits(GaloisAction::generate(b3, {})).empty());

  GaloisAction a1s = cyclic_action(3);
  CHECK(inner_type_A_orbits(a1s) == std::vector<std::size_t>{0});

  DynkinDiagram mixed({{"x", Family::A, 3}, {"y", Family::C, 4}});
  CHECK(inner_type_A_orbits(GaloisAction::generate(mixed, {})) ==
        std::vector<std::size_t>{0});
}

TEST_CASE("dropping the anisotropy condition needs no inner type A factor") {
  GaloisAction a1s = cyclic_action(3);
  Polymer full;
  full.insert(part_of({0, 1, 2}));
  CHECK_THROWS_AS(padic_drop_condition2(full, a1s), std::invalid_argument);

  DynkinDiagram twin({{"1", Family::B, 2}, {"2", Family::B, 2}});
  GaloisAction swap =
      GaloisAction::generate(twin, {lie::from_permutation(twin, {1, 0})});
  Polymer s;
  s.insert(Part::from_vertices({VertexRef{0, 2}, VertexRef{1, 2}}));
  TwistVerdict v = padic_drop_condition2(s, swap);
  CHECK(v.satisfied);
  CHECK(v.orbits[0].kind == OrbitOutcome::Kind::TensorWitness);
}

TEST_CASE("the drop variant can fail on outer type A") {
  DynkinDiagram a3({{"x", Family::A, 3}});
  DiagramAutomorphism rev = identity_automorphism(a3);
  rev.vertex_maps[0] = VertexMapKind::Reversal;
  GaloisAction outer = GaloisAction::generate(a3, {rev});
  Polymer s;
  s.insert(Part::from_vertices({VertexRef{0, 1}}));
  s.insert(Part::from_vertices({VertexRef{0, 3}}));
  TwistVerdict v = padic_drop_condition2(s, outer);
  CHECK_FALSE(v.satisfied);
}

TEST_CASE("sigma search on the degree-8 example finds the full cycle") {
  GaloisAction g = cyclic_action(8);
  std::optional<DiagramAutomorphism> sigma =
      exists_good_sigma(degree8_polymer(), g);
  REQUIRE(sigma.has_value());
  std::vector<std::uint32_t> rot1{1, 2, 3, 4, 5, 6, 7, 0};
  CHECK(sigma->component_permutation == rot1);
}

TEST_CASE("sigma search fails on singleton parts") {
  GaloisAction g = cyclic_action(4);
  CHECK_FALSE(exists_good_sigma(singletons(4), g).has_value());
}

TEST_CASE("sigma search requires transitivity") {
  GaloisAction g = two_swap_action();
  Polymer s;
  s.insert(part_of({0, 1}));
  s.insert(part_of({2, 3}));
  CHECK_THROWS_AS(exists_good_sigma(s, g), std::invalid_argument);
}

TEST_CASE("one full part yields a sigma under a cycle") {
  GaloisAction g = cyclic_action(3);
  Polymer full;
  full.insert(part_of({0, 1, 2}));
  std::optional<DiagramAutomorphism> sigma = exists_good_sigma(full, g);
  REQUIRE(sigma.has_value());
  CHECK(sigma->component_permutation == std::vector<std::uint32_t>{1, 2, 0});
}

TEST_CASE("cyclic criterion") {
  GaloisAction c8 = cyclic_action(8);
  CHECK(cyclic_criterion(degree8_polymer(), c8));
  GaloisAction c4 = cyclic_action(4);
  CHECK_FALSE(cyclic_criterion(singletons(4), c4));

  GaloisAction g = two_swap_action();
  Polymer s;
  s.insert(part_of({0, 1}));
  s.insert(part_of({2, 3}));
  CHECK_THROWS_AS(cyclic_criterion(s, g), std::invalid_argument);

  // Klein four-group: transitive but not cyclic.
  DynkinDiagram d = lie::a1_diagram(4);
  GaloisAction klein = GaloisAction::generate(
      d, {lie::from_permutation(d, {1, 0, 3, 2}),
          lie::from_permutation(d, {2, 3, 0, 1})});
  REQUIRE(klein.is_transitive_on_components());
  REQUIRE_FALSE(klein.is_cyclic_on_components());
  Polymer pairs;
  pairs.insert(part_of({0, 1}));
  pairs.insert(part_of({2, 3}));
  CHECK_FALSE(cyclic_criterion(pairs, klein));
  CHECK(perfectly_tens_twisted(pairs, klein, AnisotropyFlags::all_false(klein))
            .satisfied);
}

TEST_CASE("mumford criterion wants one part spanning everything") {
  GaloisAction c3 = cyclic_action(3);
  Polymer full;
  full.insert(part_of({0, 1, 2}));
  CHECK(mumford_criterion(full, c3));
  GaloisAction c8 = cyclic_action(8);
  CHECK_FALSE(mumford_criterion(degree8_polymer(), c8));
  GaloisAction one = cyclic_action(1);
  Polymer single;
  single.insert(part_of({0}));
  CHECK_FALSE(mumford_criterion(single, one));
  CHECK_FALSE(cyclic_criterion(single, one));
}

TEST_CASE("index bound on the degree-8 example") {
  GaloisAction g = cyclic_action(8);
  IndexBound b = min_unipotent_index_bound(degree8_polymer(), g,
                                           AnisotropyFlags::all_false(g));
  REQUIRE_FALSE(b.unbounded());
  CHECK(*b.value == 5);
  CHECK(b.support == std::set<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("index bound on singleton parts is two") {
  GaloisAction g = cyclic_action(4);
  IndexBound b = min_unipotent_index_bound(singletons(4), g,
                                           AnisotropyFlags::all_false(g));
  REQUIRE_FALSE(b.unbounded());
  CHECK(*b.value == 2);
}

TEST_CASE("flagged orbits leave the bound unconstrained") {
  GaloisAction g = cyclic_action(4);
  AnisotropyFlags flags = AnisotropyFlags::from_members(g, {{0, true}});
  IndexBound b = min_unipotent_index_bound(singletons(4), g, flags);
  CHECK(b.unbounded());
  CHECK(b.support.empty());
}

TEST_CASE("the bound minimizes over unions of unflagged orbits") {
  GaloisAction g = two_swap_action();
  Polymer s;
  s.insert(part_of({0, 1}));
  s.insert(part_of({2}));
  s.insert(part_of({3}));
  AnisotropyFlags none = AnisotropyFlags::all_false(g);
  IndexBound b = min_unipotent_index_bound(s, g, none);
  REQUIRE_FALSE(b.unbounded());
  // {2,3} alone keeps every overlap at one.
  CHECK(*b.value == 2);
  CHECK(b.support == std::set<std::size_t>{2, 3});

  AnisotropyFlags second = AnisotropyFlags::from_members(g, {{2, true}});
  IndexBound b2 = min_unipotent_index_bound(s, g, second);
  REQUIRE_FALSE(b2.unbounded());
  CHECK(*b2.value == 3);
  CHECK(b2.support == std::set<std::size_t>{0, 1});
}

TEST_CASE("satisfied exactly when the bound exceeds two") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    GaloisAction g = lie::random_transitive_action(rng, n);
    std::vector<VertexRef> vs;
    for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c)
      if (rng() % 2 == 0) vs.push_back(VertexRef{c, 1});
    if (vs.empty()) vs.push_back(VertexRef{0, 1});
    Polymer s = orbit_polymer(Part::from_vertices(vs), g);
    AnisotropyFlags flags = AnisotropyFlags::all_false(g);
    TwistVerdict v = perfectly_tens_twisted(s, g, flags);
    IndexBound b = min_unipotent_index_bound(s, g, flags);
    REQUIRE_FALSE(b.unbounded());
    CHECK(v.satisfied == (*b.value > 2));
  }
}
