#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace vfib {

// All arithmetic in this library is exact. Quantities that enter formulas
// are arbitrary-precision integers or rationals; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// cpp_rational's two-argument constructor rejects negative denominators;
// route every num/den construction through division instead.
inline Rat make_rat(const Int& numerator, const Int& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Rat r(numerator);
  r /= Rat(denominator);
  return r;
}

// Canonical "num/den" rendering, lowest terms, positive denominator.
inline std::string fraction_string(const Rat& r) {
  return num(r).str() + "/" + den(r).str();
}

inline std::string int_string(const Int& v) { return v.str(); }

// Nonnegative residue, works for negative a.
inline long long mod_p(long long a, long long p) {
  long long m = a % p;
  return m < 0 ? m + p : m;
}

// Kernel of an m x n rational matrix, as a basis of column vectors.
// Plain Gauss-Jordan; sizes here are tiny ((p+1) square at most).
std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> m, int cols);

// Scale a rational vector to a primitive integer vector (gcd 1). The first
// nonzero entry is made positive.
std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v);

}  // namespace vfib
