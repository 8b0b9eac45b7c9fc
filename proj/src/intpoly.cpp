#include "cantor/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cantor {

namespace {
const Int kZero = 0;

void strip_trailing_zeros(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}
}  // namespace

Polynomial::Polynomial(std::vector<Int> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::from_falling(const std::vector<Int>& falling) {
  return Polynomial(std::vector<Int>(falling.rbegin(), falling.rend()));
}

const Int& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

const Int& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Int> prod(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(prod));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Int> diff(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (size_t i = 0; i < diff.size(); ++i) diff[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return Polynomial(std::move(diff));
}

Polynomial Polynomial::scaled(const Int& s) const {
  std::vector<Int> v = coeffs_;
  for (Int& c : v) c *= s;
  return Polynomial(std::move(v));
}

Int content(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("content of zero polynomial");
  Int g = 0;
  for (const Int& c : p.coeffs()) {
    g = gcd_int(g, c);
    if (g == 1) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p) {
  Int g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Int> v = p.coeffs();
  for (Int& c : v) c /= g;
  return Polynomial(std::move(v));
}

bool is_canonical(const Polynomial& p) {
  return !p.is_zero() && p.leading() > 0 && content(p) == 1;
}

Rat eval_at(const Polynomial& p, const Rat& q) {
  Rat acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * q + *it;
  return acc;
}

int sign_at(const Polynomial& p, const Rat& q) {
  if (p.is_zero()) return 0;
  // p(a/b) has the sign of sum_i c_i a^i b^(k-i), the homogenized integer form.
  const Int a = numerator(q), b = denominator(q);
  Int acc = 0;
  Int bpow = 1;
  const auto& c = p.coeffs();
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * a + c[i] * bpow;
    bpow *= b;
  }
  return sign_of(acc);
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return Polynomial();
  std::vector<Int> v;
  v.reserve(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) v.push_back(p.coeff(i) * i);
  return Polynomial(std::move(v));
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return Polynomial();
  if (d.degree() > p.degree()) return std::nullopt;
  std::vector<Int> rem = p.coeffs();
  std::vector<Int> quot(static_cast<size_t>(p.degree() - d.degree()) + 1, Int(0));
  const Int& dl = d.leading();
  for (int i = p.degree(); i >= d.degree(); --i) {
    Int& r = rem[static_cast<size_t>(i)];
    if (r == 0) continue;
    if (r % dl != 0) return std::nullopt;
    Int q = r / dl;
    quot[static_cast<size_t>(i - d.degree())] = q;
    for (int j = 0; j <= d.degree(); ++j)
      rem[static_cast<size_t>(i - d.degree() + j)] -= q * d.coeff(j);
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  return Polynomial(std::move(quot));
}

Polynomial reflect(const Polynomial& p) {
  if (p.is_zero()) return p;
  std::vector<Int> v = p.coeffs();
  for (size_t i = 0; i < v.size(); ++i)
    if (i % 2 == 1) v[i] = -v[i];
  Polynomial r(std::move(v));
  if (r.leading() < 0) return r.scaled(-1);
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    Int a = abs_int(c);
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace cantor
