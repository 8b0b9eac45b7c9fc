#ifndef CANTOR_INT_TYPES_HPP
#define CANTOR_INT_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace cantor {

// Unbounded integers and exact rationals. cpp_rational is canonical by
// construction: always reduced, denominator > 0.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign_of(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
inline int sign_of(const Rat& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// floor(sqrt(a)) for a >= 0.
inline Int floor_sqrt(const Int& a) { return boost::multiprecision::sqrt(a); }

// ceil(sqrt(a)) for a >= 0.
inline Int ceil_sqrt(const Int& a) {
  Int r = floor_sqrt(a);
  return r * r == a ? r : Int(r + 1);
}

inline bool is_square(const Int& a) {
  if (a < 0) return false;
  Int r = floor_sqrt(a);
  return r * r == a;
}

// Squarefree kernel: product of the distinct prime factors of |a|; radical(1) = 1.
inline Int radical(Int a) {
  a = abs_int(a);
  if (a <= 1) return a;
  Int rad = 1;
  for (Int p = 2; p * p <= a; ++p) {
    if (a % p == 0) {
      rad *= p;
      while (a % p == 0) a /= p;
    }
  }
  if (a > 1) rad *= a;
  return rad;
}

inline Int numerator(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int denominator(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

}  // namespace cantor

#endif  // CANTOR_INT_TYPES_HPP
