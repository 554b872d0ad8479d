#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tenstwist/polymer.hpp"
#include "tenstwist/rational.hpp"

namespace tenstwist {

// Dense row-major matrix over exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_int_rows(
      const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  bool operator==(const RationalMatrix& o) const;

  // Aligned grid of exact fractions, one row per line.
  std::string to_grid_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

struct IndexResult {
  enum class Kind { Unipotent, Nilpotent, Neither };
  Kind kind = Kind::Neither;
  // Smallest k with (M - id)^k = 0 (unipotent) or M^k = 0 (nilpotent).
  int index = 0;
};

// Throws std::invalid_argument on non-square or empty matrices.
IndexResult classify(const RationalMatrix& m);

// log of a unipotent matrix / exp of a nilpotent one; each requires the
// corresponding classification and throws otherwise. Both series are
// finite, so the results are exact and mutually inverse.
RationalMatrix nil_log(const RationalMatrix& u);
RationalMatrix uni_exp(const RationalMatrix& n);

// exp(N1) (x) exp(N2) is unipotent of index exactly n1 + n2 - 1, where
// n1, n2 are the nilpotency indices.
bool key_lemma_check(const RationalMatrix& n1, const RationalMatrix& n2);

// Deterministic sampler for nilpotent test matrices: a Jordan block of
// the requested index padded with smaller blocks, conjugated by integer
// shear matrices. The conjugation is exact and preserves the index.
class NilpotentSampler {
 public:
  explicit NilpotentSampler(std::uint64_t seed) : rng_(seed) {}

  // lo..hi inclusive; reduction is by modulus so results are identical
  // across standard library implementations.
  int uniform(int lo, int hi);
  RationalMatrix nilpotent(int index, int dim);

 private:
  std::mt19937_64 rng_;
};

struct KeyLemmaReport {
  struct Case {
    int n1 = 0, n2 = 0;
    std::size_t dim1 = 0, dim2 = 0;
    int expected = 0;
    IndexResult actual;
    bool pass = false;
  };
  int exhaustive_cases = 0;
  int random_trials = 0;
  int failed = 0;
  std::vector<Case> failures;
  bool all_pass() const { return failed == 0; }
};

// Index grid n1, n2 in 1..max_index on plain Jordan blocks, then `trials`
// seeded random conjugated pairs.
KeyLemmaReport run_key_lemma(int trials, std::uint64_t seed, int max_index = 6);

// Block-diagonal witness for an all-A1 diagram: one Kronecker block per
// part, the factor for a marked component being the 2x2 unipotent Jordan
// block when the component lies in `support` and the 2x2 identity
// otherwise. Its unipotency index is 1 + max over parts of
// |support(part) /\ support|.
struct SplitWitness {
  RationalMatrix matrix;
  IndexResult classification;
};

SplitWitness split_polymer_witness(const Polymer& s, const DynkinDiagram& d,
                                   const std::set<std::size_t>& support);

}  // namespace tenstwist
