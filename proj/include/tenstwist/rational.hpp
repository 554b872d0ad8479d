#pragma once

#include <gmpxx.h>

#include <string>

namespace tenstwist {

// Exact arithmetic everywhere; no floating point in any decision path.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int int_pow2(unsigned long e) {
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

}  // namespace tenstwist
