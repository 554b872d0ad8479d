#include <doctest.h>

#include "liesupport.hpp"
#include "tenstwist/nilmat.hpp"

using namespace tenstwist;

namespace {

RationalMatrix jordan(int n) {
  RationalMatrix j(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i)
    j.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1) = 1;
  return j;
}

}  // namespace

TEST_CASE("matrix arithmetic is exact") {
  RationalMatrix a = RationalMatrix::from_int_rows({{1, 2}, {3, 4}});
  RationalMatrix b = RationalMatrix::from_int_rows({{0, 1}, {1, 0}});
  CHECK((a * b) == RationalMatrix::from_int_rows({{2, 1}, {4, 3}}));
  CHECK((a + b) == RationalMatrix::from_int_rows({{1, 3}, {4, 4}}));
  CHECK((a - a).is_zero());
  RationalMatrix third(1, 1);
  third.at(0, 0) = make_rat(1, 3);
  RationalMatrix sum = third + third + third;
  CHECK(sum == RationalMatrix::identity(1));
}

TEST_CASE("mismatched shapes throw") {
  RationalMatrix a(2, 3), b(2, 3);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + RationalMatrix(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(classify(a), std::invalid_argument);
  CHECK_THROWS_AS(classify(RationalMatrix()), std::invalid_argument);
}

TEST_CASE("classification of small examples") {
  IndexResult nil = classify(jordan(5));
  CHECK(nil.kind == IndexResult::Kind::Nilpotent);
  CHECK(nil.index == 5);

  IndexResult uni = classify(RationalMatrix::from_int_rows({{1, 1}, {0, 1}}));
  CHECK(uni.kind == IndexResult::Kind::Unipotent);
  CHECK(uni.index == 2);

  IndexResult id = classify(RationalMatrix::identity(3));
  CHECK(id.kind == IndexResult::Kind::Unipotent);
  CHECK(id.index == 1);

  IndexResult zero = classify(RationalMatrix(2, 2));
  CHECK(zero.kind == IndexResult::Kind::Nilpotent);
  CHECK(zero.index == 1);

  IndexResult diag = classify(RationalMatrix::from_int_rows({{2, 0}, {0, 1}}));
  CHECK(diag.kind == IndexResult::Kind::Neither);
}

TEST_CASE("exp of the 3x3 Jordan block") {
  RationalMatrix e = uni_exp(jordan(3));
  RationalMatrix want = RationalMatrix::identity(3);
  want.at(0, 1) = 1;
  want.at(1, 2) = 1;
  want.at(0, 2) = make_rat(1, 2);
  CHECK(e == want);
}

TEST_CASE("log of a unipotent matrix divides by the series index") {
  RationalMatrix u = RationalMatrix::identity(3);
  u.at(0, 1) = 1;
  u.at(1, 2) = 1;
  u.at(0, 2) = 1;
  RationalMatrix l = nil_log(u);
  CHECK(l.at(0, 1) == Rat(1));
  CHECK(l.at(1, 2) == Rat(1));
  CHECK(l.at(0, 2) == make_rat(1, 2));
}

TEST_CASE("exp and log require the right classification") {
  CHECK_THROWS_AS(uni_exp(RationalMatrix::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(nil_log(jordan(2)), std::invalid_argument);
}

TEST_CASE("exp and log are mutually inverse on seeded samples") {
  NilpotentSampler sampler(99);
  for (int trial = 0; trial < 40; ++trial) {
    int index = sampler.uniform(1, 5);
    int dim = index + sampler.uniform(0, 3);
    RationalMatrix n = sampler.nilpotent(index, dim);
    IndexResult c = classify(n);
    REQUIRE(c.kind == IndexResult::Kind::Nilpotent);
    REQUIRE(c.index == index);
    RationalMatrix u = uni_exp(n);
    IndexResult cu = classify(u);
    CHECK(cu.kind == IndexResult::Kind::Unipotent);
    CHECK(cu.index == index);
    CHECK(nil_log(u) == n);
  }
  RationalMatrix u = RationalMatrix::identity(4);
  u.at(0, 1) = make_rat(3, 2);
  u.at(1, 2) = make_rat(-1, 3);
  u.at(0, 3) = 7;
  CHECK(uni_exp(nil_log(u)) == u);
}

TEST_CASE("kronecker product shapes and entries") {
  RationalMatrix a = RationalMatrix::from_int_rows({{1, 2}, {3, 4}});
  RationalMatrix b = RationalMatrix::from_int_rows({{0, 5}, {6, 7}});
  RationalMatrix k = kronecker(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  CHECK(k.at(0, 1) == Rat(5));
  CHECK(k.at(1, 0) == Rat(6));
  CHECK(k.at(2, 1) == Rat(3 * 5));
  CHECK(k.at(2, 3) == Rat(4 * 5));
  CHECK(k.at(3, 3) == Rat(4 * 7));
  CHECK(kronecker(RationalMatrix::identity(2), RationalMatrix::identity(3)) ==
        RationalMatrix::identity(6));
}

TEST_CASE("kronecker product of exponentials has index n1 + n2 - 1") {
  for (int n1 = 1; n1 <= 4; ++n1)
    for (int n2 = 1; n2 <= 4; ++n2) {
      RationalMatrix prod = kronecker(uni_exp(jordan(n1)), uni_exp(jordan(n2)));
      IndexResult c = classify(prod);
      CHECK(c.kind == IndexResult::Kind::Unipotent);
      CHECK(c.index == n1 + n2 - 1);
      CHECK(key_lemma_check(jordan(n1), jordan(n2)));
    }
}

TEST_CASE("key lemma run over a reduced grid") {
  KeyLemmaReport rep = run_key_lemma(20, 7, 4);
  CHECK(rep.all_pass());
  CHECK(rep.exhaustive_cases == 16);
  CHECK(rep.random_trials == 20);
  CHECK(rep.failed == 0);
  CHECK(rep.failures.empty());
}

TEST_CASE("sampler preserves the requested index under conjugation") {
  NilpotentSampler sampler(5);
  for (int trial = 0; trial < 30; ++trial) {
    int index = sampler.uniform(2, 6);
    int dim = index + sampler.uniform(0, 4);
    IndexResult c = classify(sampler.nilpotent(index, dim));
    CHECK(c.kind == IndexResult::Kind::Nilpotent);
    CHECK(c.index == index);
  }
}

TEST_CASE("sampler output is deterministic for a fixed seed") {
  NilpotentSampler a(123), b(123);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(a.nilpotent(3, 5) == b.nilpotent(3, 5));
}

TEST_CASE("split witness on a single part") {
  DynkinDiagram d = lie::a1_diagram(1);
  Polymer s;
  s.insert(Part::from_vertices({VertexRef{0, 1}}));
  SplitWitness w = split_polymer_witness(s, d, {0});
  REQUIRE(w.matrix.rows() == 2);
  CHECK(w.classification.kind == IndexResult::Kind::Unipotent);
  CHECK(w.classification.index == 2);
}

TEST_CASE("split witness index is one plus the largest overlap") {
  DynkinDiagram d = lie::a1_diagram(4);
  Polymer s;
  s.insert(Part::from_vertices({VertexRef{0, 1}, VertexRef{1, 1}, VertexRef{2, 1}}));
  s.insert(Part::from_vertices({VertexRef{3, 1}}));
  SplitWitness w = split_polymer_witness(s, d, {0, 1, 3});
  // Blocks: 2^3 and 2; total dimension 10. Overlaps: 2 and 1.
  CHECK(w.matrix.rows() == 10);
  CHECK(w.classification.kind == IndexResult::Kind::Unipotent);
  CHECK(w.classification.index == 3);

  SplitWitness off = split_polymer_witness(s, d, {3});
  CHECK(off.classification.index == 2);
}

TEST_CASE("split witness rejects unsupported inputs") {
  DynkinDiagram mixed({{"x", Family::B, 3}});
  Polymer s;
  s.insert(Part::from_vertices({VertexRef{0, 3}}));
  CHECK_THROWS_AS(split_polymer_witness(s, mixed, {0}), std::invalid_argument);
  DynkinDiagram d = lie::a1_diagram(2);
  CHECK_THROWS_AS(split_polymer_witness(Polymer(), d, {0}), std::invalid_argument);
  Polymer ok;
  ok.insert(Part::from_vertices({VertexRef{0, 1}}));
  CHECK_THROWS_AS(split_polymer_witness(ok, d, {}), std::invalid_argument);
  CHECK_THROWS_AS(split_polymer_witness(ok, d, {9}), std::invalid_argument);
}
