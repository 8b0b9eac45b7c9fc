#ifndef CANTOR_REALROOTS_HPP
#define CANTOR_REALROOTS_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cantor/intpoly.hpp"

namespace cantor {

// Rational interval. lo == hi encodes an exact rational root (degree 1 only).
struct Interval {
  Rat lo, hi;
  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
};

// A real algebraic number: canonical irreducible minimal polynomial plus an
// isolating interval containing exactly one of its roots. For degree >= 2 the
// endpoints are never roots and carry opposite signs of minpoly.
struct AlgebraicReal {
  Polynomial minpoly;
  Interval isol;
};

// Thrown by count_roots_in when an interval endpoint is a root.
struct EndpointIsRoot : std::domain_error {
  EndpointIsRoot() : std::domain_error("interval endpoint is a root") {}
};

// Sturm sequence: p, p', then negated remainders until a constant. Intermediate
// polynomials are scaled by positive integers only (sign variations unchanged).
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);
  const std::vector<Polynomial>& chain() const { return chain_; }
  // Number of sign variations of the chain evaluated at t (zeros skipped).
  int variations_at(const Rat& t) const;

 private:
  std::vector<Polynomial> chain_;
};

// (max positive roots, max negative roots) by sign changes of p and reflect(p);
// true counts are <= these with the same parity. Pre: canonical, degree >= 1.
std::pair<int, int> descartes_bound(const Polynomial& p);

// Strict upper bound on |roots|: 1 + max|a_j| / a_k.
Rat cauchy_bound(const Polynomial& p);

// Exact count of distinct real roots in the open interval (iv.lo, iv.hi).
// Pre: iv.lo < iv.hi; throws EndpointIsRoot if an endpoint is a root.
int count_roots_in(const SturmChain& s, const Interval& iv);

// All real roots of a canonical irreducible polynomial, ascending, each with
// an isolating interval (degree 1: exact point interval).
std::vector<AlgebraicReal> isolate_roots(const Polynomial& p);

// Shrink the isolating interval to width <= eps by sign-preserving bisection.
void refine_to(AlgebraicReal& a, const Rat& eps);

// Exact total order on real algebraic numbers.
std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);

// Decimal expansion truncated toward zero after `digits` fractional digits,
// certified by refinement: "+1.3247179572", "-0.4472135954", "+0.0000000000".
std::string decimal_truncated(AlgebraicReal a, int digits);

// base + coeff * sqrt(radicand) with radicand > 0 and not a perfect square.
struct QuadraticSurd {
  Rat base;
  Rat coeff;
  Int radicand;
};

// Sign of (s - r) in {-1, 0, +1}, decided exactly.
int compare_surd_rational(const QuadraticSurd& s, const Rat& r);

// The two real roots x_minus < x_plus of q x^2 + s1 a1 x + s2 N with
// D = a1^2 - s2*4*q*N: (-s1*a1 -/+ sqrt(D)) / (2q).
// Pre: q >= 1, N >= 1, a1 >= 0, D > 0 and not a perfect square (domain_error).
std::pair<QuadraticSurd, QuadraticSurd> quadratic_roots_closed_form(
    const Int& q, const Int& a1, const Int& N, int s1, int s2);

}  // namespace cantor

#endif  // CANTOR_REALROOTS_HPP
