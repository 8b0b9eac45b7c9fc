#ifndef CANTOR_IRREDUCIBILITY_HPP
#define CANTOR_IRREDUCIBILITY_HPP

#include <optional>
#include <vector>

#include "cantor/intpoly.hpp"

namespace cantor {

// Evidence of reducibility: factor * cofactor == input, 1 <= deg(factor) <= deg(input)/2.
struct FactorWitness {
  Polynomial factor;
  Polynomial cofactor;
};

struct IrreducibilityResult {
  bool irreducible;
  std::optional<FactorWitness> witness;  // present iff !irreducible
};

// All rational roots of p, found by trying +/- (divisor of |a_0|) / (divisor
// of a_k); includes 0 when a_0 == 0. Pre: p canonical, degree >= 1.
std::vector<Rat> rational_roots(const Polynomial& p);

// Coefficient bound B = a_k * ceil(2^deg * sqrt(1 + sum a_j^2)): any factor of
// p with degree <= floor(deg/2) has all |coefficients| <= B.
// Pre: p canonical, degree >= 2.
Int mignotte_bound(const Polynomial& p);

// Decide irreducibility over the integers.
//   degree 1        -> irreducible;
//   degree 2-3      -> irreducible iff no rational root;
//   degree >= 4     -> no rational root AND no trial divisor of degree
//                      2..floor(deg/2) inside the Mignotte box (leading
//                      coefficient a positive divisor of a_k, constant term a
//                      divisor of a_0, per-degree bound min(B, ceil(2^d *
//                      sqrt(1 + sum a_j^2))), pruned by g(1)|p(1), g(-1)|p(-1)).
// Pre: p canonical (else domain_error), degree >= 1.
IrreducibilityResult is_irreducible(const Polynomial& p);

// Independent brute-force oracle: enumerates every canonical d with
// 1 <= deg d <= deg p - 1 and l1-norm(d) <= l1-norm(p) and tests exact
// division; additionally sweeps the Mignotte box when that box is smaller
// than the l1 ball. Pre: p canonical, degree >= 2, height <= 9 (domain_error).
IrreducibilityResult oracle_factor_search(const Polynomial& p);

}  // namespace cantor

#endif  // CANTOR_IRREDUCIBILITY_HPP
