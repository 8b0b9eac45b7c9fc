#ifndef CANTOR_INTPOLY_HPP
#define CANTOR_INTPOLY_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cantor/int_types.hpp"

namespace cantor {

// Dense integer polynomial; coeffs_[i] is the coefficient of x^i. The zero
// polynomial is the empty vector; nonzero polynomials never carry trailing
// zero coefficients, so degree() == coeffs().size() - 1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> ascending_coeffs);

  // Build from falling-power order a_k, a_{k-1}, ..., a_0.
  static Polynomial from_falling(const std::vector<Int>& falling);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  // Coefficient of x^i (0 for i beyond the degree).
  const Int& coeff(int i) const;
  const Int& leading() const;
  const Int& constant() const { return coeff(0); }

  bool operator==(const Polynomial&) const = default;

  Polynomial operator*(const Polynomial&) const;
  Polynomial operator-(const Polynomial&) const;
  Polynomial scaled(const Int& s) const;

 private:
  std::vector<Int> coeffs_;
};

// gcd of |coefficients|; >= 1. Zero polynomial -> std::domain_error.
Int content(const Polynomial& p);

// p divided by its content, leading sign made positive. Zero -> domain_error.
Polynomial primitive_part(const Polynomial& p);

// content == 1 and leading coefficient > 0.
bool is_canonical(const Polynomial& p);

// Exact p(q) by Horner evaluation.
Rat eval_at(const Polynomial& p, const Rat& q);

// Sign of p(q) in {-1, 0, +1}, computed in integers via a homogenized Horner
// pass (no rational normalization on the hot path).
int sign_at(const Polynomial& p, const Rat& q);

// Formal derivative; degree 0 (or zero) input yields the zero polynomial.
Polynomial derivative(const Polynomial& p);

// Quotient q with p = d * q exactly over the integers, or nullopt.
// Zero divisor -> domain_error.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

// Canonicalized +/- p(-x): positive leading coefficient, roots negated.
Polynomial reflect(const Polynomial& p);

// Falling-power display: "x^3-x+1", "2x-1", "x", "0".
std::string to_string(const Polynomial& p);

}  // namespace cantor

#endif  // CANTOR_INTPOLY_HPP
