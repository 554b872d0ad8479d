#include "tenstwist/nilmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace tenstwist {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

void check_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail("matrix shapes differ: " + std::to_string(a.rows()) + "x" +
         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
         std::to_string(b.cols()));
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_int_rows(
    const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) fail("matrix needs at least one row");
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) fail("ragged row lengths");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const Rat& x : e_)
    if (sgn(x) != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  check_same_shape(*this, o);
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  check_same_shape(*this, o);
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_)
    fail("matrix product shape mismatch: " + std::to_string(cols_) + " vs " +
         std::to_string(o.rows_));
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (sgn(b) != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string RationalMatrix::to_grid_string() const {
  std::vector<std::string> cells(e_.size());
  std::vector<std::size_t> width(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      cells[i * cols_ + j] = rat_to_string(at(i, j));
      width[j] = std::max(width[j], cells[i * cols_ + j].size());
    }
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out.push_back('[');
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::string& c = cells[i * cols_ + j];
      out.append(width[j] - c.size(), ' ');
      out += c;
      if (j + 1 < cols_) out.append("  ");
    }
    out.append("]\n");
  }
  return out;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& x = a.at(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.rows(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Rat& y = b.at(j, l);
          if (sgn(y) != 0) r.at(i * b.rows() + j, k * b.cols() + l) = x * y;
        }
    }
  return r;
}

IndexResult classify(const RationalMatrix& m) {
  if (!m.is_square()) fail("classification requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) fail("classification requires a nonempty matrix");
  RationalMatrix a = m - RationalMatrix::identity(n);
  RationalMatrix p = a;
  for (std::size_t k = 1; k <= n; ++k) {
    if (p.is_zero()) return {IndexResult::Kind::Unipotent, static_cast<int>(k)};
    if (k < n) p = p * a;
  }
  p = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (p.is_zero()) return {IndexResult::Kind::Nilpotent, static_cast<int>(k)};
    if (k < n) p = p * m;
  }
  return {IndexResult::Kind::Neither, 0};
}

RationalMatrix nil_log(const RationalMatrix& u) {
  IndexResult c = classify(u);
  if (c.kind != IndexResult::Kind::Unipotent)
    fail("nil_log requires a unipotent matrix");
  const std::size_t n = u.rows();
  RationalMatrix a = u - RationalMatrix::identity(n);
  RationalMatrix out(n, n);
  RationalMatrix p = a;
  for (int j = 1; j < c.index; ++j) {
    Rat coeff = make_rat(j % 2 == 1 ? 1 : -1, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(p.at(i, k)) != 0) out.at(i, k) += coeff * p.at(i, k);
    if (j + 1 < c.index) p = p * a;
  }
  return out;
}

RationalMatrix uni_exp(const RationalMatrix& m) {
  IndexResult c = classify(m);
  if (c.kind != IndexResult::Kind::Nilpotent)
    fail("uni_exp requires a nilpotent matrix");
  const std::size_t n = m.rows();
  RationalMatrix out = RationalMatrix::identity(n);
  RationalMatrix p = m;
  Rat fact(1);
  for (int j = 1; j < c.index; ++j) {
    fact /= j;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(p.at(i, k)) != 0) out.at(i, k) += fact * p.at(i, k);
    if (j + 1 < c.index) p = p * m;
  }
  return out;
}

bool key_lemma_check(const RationalMatrix& n1, const RationalMatrix& n2) {
  IndexResult c1 = classify(n1);
  IndexResult c2 = classify(n2);
  if (c1.kind != IndexResult::Kind::Nilpotent ||
      c2.kind != IndexResult::Kind::Nilpotent)
    fail("key_lemma_check requires nilpotent inputs");
  IndexResult r = classify(kronecker(uni_exp(n1), uni_exp(n2)));
  return r.kind == IndexResult::Kind::Unipotent &&
         r.index == c1.index + c2.index - 1;
}

int NilpotentSampler::uniform(int lo, int hi) {
  return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

RationalMatrix NilpotentSampler::nilpotent(int index, int dim) {
  if (index < 1 || dim < index)
    fail("sampler needs 1 <= index <= dim");
  std::vector<int> blocks{index};
  int rest = dim - index;
  while (rest > 0) {
    int s = uniform(1, std::min(index, rest));
    blocks.push_back(s);
    rest -= s;
  }
  RationalMatrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  std::size_t off = 0;
  for (int b : blocks) {
    for (int i = 0; i + 1 < b; ++i)
      m.at(off + static_cast<std::size_t>(i), off + static_cast<std::size_t>(i) + 1) = 1;
    off += static_cast<std::size_t>(b);
  }
  int shears = uniform(3, 8);
  for (int s = 0; s < shears; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(0, dim - 1));
    std::size_t j = static_cast<std::size_t>(uniform(0, dim - 1));
    if (i == j) continue;
    int c = uniform(1, 2) * (uniform(0, 1) == 0 ? 1 : -1);
    // m := E m E^{-1} with E = id + c e_ij: row_i += c row_j, col_j -= c col_i.
    for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) += c * m.at(j, k);
    for (std::size_t k = 0; k < m.rows(); ++k) m.at(k, j) -= c * m.at(k, i);
  }
  return m;
}

KeyLemmaReport run_key_lemma(int trials, std::uint64_t seed, int max_index) {
  if (trials < 0 || max_index < 1) fail("run_key_lemma needs trials >= 0, max_index >= 1");
  KeyLemmaReport rep;
  auto record = [&rep](const RationalMatrix& a, const RationalMatrix& b) {
    IndexResult c1 = classify(a);
    IndexResult c2 = classify(b);
    KeyLemmaReport::Case cs;
    cs.n1 = c1.index;
    cs.n2 = c2.index;
    cs.dim1 = a.rows();
    cs.dim2 = b.rows();
    cs.expected = c1.index + c2.index - 1;
    cs.actual = classify(kronecker(uni_exp(a), uni_exp(b)));
    cs.pass = cs.actual.kind == IndexResult::Kind::Unipotent &&
              cs.actual.index == cs.expected;
    if (!cs.pass) {
      ++rep.failed;
      rep.failures.push_back(cs);
    }
  };
  for (int n1 = 1; n1 <= max_index; ++n1)
    for (int n2 = 1; n2 <= max_index; ++n2) {
      RationalMatrix a(static_cast<std::size_t>(n1), static_cast<std::size_t>(n1));
      for (int i = 0; i + 1 < n1; ++i)
        a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1) = 1;
      RationalMatrix b(static_cast<std::size_t>(n2), static_cast<std::size_t>(n2));
      for (int i = 0; i + 1 < n2; ++i)
        b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1) = 1;
      record(a, b);
      ++rep.exhaustive_cases;
    }
  NilpotentSampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    int n1 = sampler.uniform(1, max_index);
    int n2 = sampler.uniform(1, max_index);
    int d1 = n1 + sampler.uniform(0, 2);
    int d2 = n2 + sampler.uniform(0, 2);
    record(sampler.nilpotent(n1, d1), sampler.nilpotent(n2, d2));
    ++rep.random_trials;
  }
  return rep;
}

SplitWitness split_polymer_witness(const Polymer& s, const DynkinDiagram& d,
                                   const std::set<std::size_t>& support) {
  for (const Component& c : d.components())
    if (c.family != Family::A || c.rank != 1)
      fail("the split witness is defined for all-A1 diagrams");
  if (s.size() == 0) fail("the split witness needs a nonempty polymer");
  if (support.empty()) fail("the split witness needs a nonempty support");
  for (std::size_t c : support)
    if (c >= d.component_count())
      fail("support component index " + std::to_string(c) + " out of range");

  const RationalMatrix j2 = RationalMatrix::from_int_rows({{1, 1}, {0, 1}});
  const RationalMatrix i2 = RationalMatrix::identity(2);
  std::vector<RationalMatrix> blocks;
  std::size_t dim = 0;
  for (const Part& t : s.parts()) {
    RationalMatrix b = RationalMatrix::identity(1);
    for (const auto& [c, v] : t.vertices())
      b = kronecker(b, support.count(c) ? j2 : i2);
    dim += b.rows();
    blocks.push_back(std::move(b));
  }
  SplitWitness w;
  w.matrix = RationalMatrix(dim, dim);
  std::size_t off = 0;
  for (const RationalMatrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b.at(i, j)) != 0) w.matrix.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  w.classification = classify(w.matrix);
  return w;
}

}  // namespace tenstwist
