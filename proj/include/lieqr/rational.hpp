#pragma once

#include <gmpxx.h>

#include <string>

namespace lieqr {

using Int = mpz_class;
using Rat = mpq_class;

/// num/den, canonicalized. den must be nonzero.
inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline const Int& numer(const Rat& q) { return q.get_num(); }
inline const Int& denom(const Rat& q) { return q.get_den(); }

/// Height of a rational: max(|num|, den).
inline Int height(const Rat& q) {
  Int n = abs(q.get_num());
  return n >= q.get_den() ? n : Int(q.get_den());
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace lieqr
