#include "cantor/realroots.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cantor {

namespace {

// Negated polynomial remainder -(a mod b), computed in exact rationals, then
// scaled by a positive rational into a content-1 integer polynomial. Positive
// scaling keeps every sign-variation count intact.
Polynomial neg_remainder_scaled(const Polynomial& a, const Polynomial& b) {
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  auto deg = [](const std::vector<Rat>& v) { return static_cast<int>(v.size()) - 1; };
  auto strip = [](std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  strip(rem);
  const int db = b.degree();
  while (deg(rem) >= db) {
    Rat f = rem.back() / Rat(b.leading());
    int shift = deg(rem) - db;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(shift + j)] -= f * Rat(b.coeff(j));
    strip(rem);
  }
  if (rem.empty()) return Polynomial();
  // negate and clear denominators with a positive multiplier
  Int lcm = 1;
  for (const Rat& r : rem) {
    Int d = denominator(r);
    lcm = lcm / gcd_int(lcm, d) * d;
  }
  std::vector<Int> out;
  out.reserve(rem.size());
  for (const Rat& r : rem) out.push_back(Int(-numerator(r) * (lcm / denominator(r))));
  Polynomial q{std::move(out)};
  Int g = content(q);
  if (g > 1) {
    std::vector<Int> v = q.coeffs();
    for (Int& c : v) c /= g;
    q = Polynomial(std::move(v));
  }
  return q;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// One bisection step preserving the sign change; no-op on point intervals.
void bisect_once(AlgebraicReal& a) {
  if (a.isol.is_point()) return;
  Rat mid = a.isol.midpoint();
  int sm = sign_at(a.minpoly, mid);
  assert(sm != 0 && "rational midpoint cannot be a root of an irreducible polynomial of degree >= 2");
  if (sign_at(a.minpoly, a.isol.lo) * sm < 0)
    a.isol.hi = mid;
  else
    a.isol.lo = mid;
}

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
  chain_.push_back(p);
  if (p.degree() >= 1) {
    chain_.push_back(derivative(p));
    while (chain_.back().degree() >= 1) {
      Polynomial r = neg_remainder_scaled(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;  // input was not squarefree
      chain_.push_back(std::move(r));
    }
  }
}

int SturmChain::variations_at(const Rat& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const Polynomial& q : chain_) signs.push_back(sign_at(q, t));
  return sign_changes(signs);
}

std::pair<int, int> descartes_bound(const Polynomial& p) {
  if (!is_canonical(p) || p.degree() < 1)
    throw std::domain_error("descartes_bound: canonical polynomial of degree >= 1 required");
  auto count = [](const Polynomial& q) {
    std::vector<int> signs;
    for (const Int& c : q.coeffs()) signs.push_back(sign_of(c));
    return sign_changes(signs);
  };
  return {count(p), count(reflect(p))};
}

Rat cauchy_bound(const Polynomial& p) {
  Int mx = 0;
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, abs_int(p.coeff(i)));
  return Rat(1) + Rat(mx, p.leading());
}

int count_roots_in(const SturmChain& s, const Interval& iv) {
  const Polynomial& p = s.chain().front();
  if (!(iv.lo < iv.hi)) throw std::domain_error("count_roots_in: lo < hi required");
  if (sign_at(p, iv.lo) == 0 || sign_at(p, iv.hi) == 0) throw EndpointIsRoot();
  return s.variations_at(iv.lo) - s.variations_at(iv.hi);
}

std::vector<AlgebraicReal> isolate_roots(const Polynomial& p) {
  if (!is_canonical(p) || p.degree() < 1)
    throw std::domain_error("isolate_roots: canonical polynomial of degree >= 1 required");
  if (p.degree() == 1) {
    Rat root(-p.coeff(0), p.coeff(1));
    return {AlgebraicReal{p, {root, root}}};
  }
  const Rat M = cauchy_bound(p);
  SturmChain s(p);
  std::vector<AlgebraicReal> out;
  // Depth-first, left segment first, so roots emerge in ascending order.
  struct Seg {
    Rat lo, hi;
    int vlo, vhi;
  };
  std::vector<Seg> stack{{-M, M, s.variations_at(-M), s.variations_at(M)}};
  while (!stack.empty()) {
    Seg seg = stack.back();
    stack.pop_back();
    int count = seg.vlo - seg.vhi;
    if (count == 0) continue;
    if (count == 1) {
      assert(sign_at(p, seg.lo) * sign_at(p, seg.hi) < 0);
      out.push_back(AlgebraicReal{p, {seg.lo, seg.hi}});
      continue;
    }
    Rat mid = (seg.lo + seg.hi) / 2;
    int vmid = s.variations_at(mid);
    // push right first; left is processed first (LIFO)
    stack.push_back({mid, seg.hi, vmid, seg.vhi});
    stack.push_back({seg.lo, mid, seg.vlo, vmid});
  }
  return out;
}

void refine_to(AlgebraicReal& a, const Rat& eps) {
  if (eps <= 0) throw std::domain_error("refine_to: eps > 0 required");
  while (!a.isol.is_point() && a.isol.width() > eps) bisect_once(a);
}

std::strong_ordering compare(const AlgebraicReal& a_in, const AlgebraicReal& b_in) {
  AlgebraicReal a = a_in, b = b_in;
  const bool same_minpoly = a.minpoly == b.minpoly;
  if (a.isol.is_point() && b.isol.is_point()) {
    if (a.isol.lo < b.isol.lo) return std::strong_ordering::less;
    if (a.isol.lo > b.isol.lo) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  while (true) {
    if (same_minpoly) {
      // Containment means both intervals isolate the same root.
      if (b.isol.lo <= a.isol.lo && a.isol.hi <= b.isol.hi) return std::strong_ordering::equal;
      if (a.isol.lo <= b.isol.lo && b.isol.hi <= a.isol.hi) return std::strong_ordering::equal;
    }
    if (a.isol.hi <= b.isol.lo) return std::strong_ordering::less;
    if (b.isol.hi <= a.isol.lo) return std::strong_ordering::greater;
    // Shrink the wider interval (point intervals never shrink).
    if (a.isol.is_point())
      bisect_once(b);
    else if (b.isol.is_point())
      bisect_once(a);
    else if (a.isol.width() >= b.isol.width())
      bisect_once(a);
    else
      bisect_once(b);
  }
}

std::string decimal_truncated(AlgebraicReal a, int digits) {
  if (digits < 0) throw std::domain_error("decimal_truncated: digits >= 0 required");
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  auto render = [&](int sign, const Int& t) {
    std::ostringstream os;
    os << (sign < 0 ? '-' : '+') << Int(t / scale) << '.';
    std::string frac = Int(t % scale).str();
    os << std::string(static_cast<size_t>(digits) - frac.size(), '0') << frac;
    return os.str();
  };

  if (a.isol.is_point()) {
    const Rat& r = a.isol.lo;
    Rat mag = r < 0 ? Rat(-r) : r;
    Int t = numerator(mag * scale) / denominator(mag * scale);
    return render(sign_of(r) < 0 ? -1 : 1, t);
  }
  // Certify the sign: the root is nonzero (degree >= 2 has a_0 != 0).
  while (a.isol.lo < 0 && a.isol.hi > 0) bisect_once(a);
  const int sign = a.isol.hi <= 0 ? -1 : 1;
  // Certify the first `digits` fractional digits: truncations of both
  // endpoints must coincide (the root is irrational, so this terminates).
  while (true) {
    Rat mlo = a.isol.lo < 0 ? Rat(-a.isol.lo) : a.isol.lo;
    Rat mhi = a.isol.hi < 0 ? Rat(-a.isol.hi) : a.isol.hi;
    if (mlo > mhi) std::swap(mlo, mhi);
    Int tlo = numerator(mlo * scale) / denominator(mlo * scale);
    Int thi = numerator(mhi * scale) / denominator(mhi * scale);
    if (tlo == thi) return render(sign, tlo);
    bisect_once(a);
  }
}

int compare_surd_rational(const QuadraticSurd& s, const Rat& r) {
  const Rat A = s.base - r;
  const Rat& B = s.coeff;
  if (B == 0) return sign_of(A);
  if (A == 0) return sign_of(B);
  if (A > 0 && B > 0) return 1;
  if (A < 0 && B < 0) return -1;
  const Rat a2 = A * A, b2r = B * B * Rat(s.radicand);
  if (A > 0) return a2 > b2r ? 1 : (a2 == b2r ? 0 : -1);
  return b2r > a2 ? 1 : (b2r == a2 ? 0 : -1);
}

std::pair<QuadraticSurd, QuadraticSurd> quadratic_roots_closed_form(
    const Int& q, const Int& a1, const Int& N, int s1, int s2) {
  if (q < 1 || N < 1 || a1 < 0)
    throw std::domain_error("quadratic_roots_closed_form: q >= 1, N >= 1, a1 >= 0 required");
  const Int D = a1 * a1 - Int(s2) * 4 * q * N;
  if (D <= 0 || is_square(D))
    throw std::domain_error("quadratic_roots_closed_form: discriminant must be positive and non-square");
  const Rat base(-s1 * a1, 2 * q);
  const Rat half(1, 2 * q);
  return {QuadraticSurd{base, -half, D}, QuadraticSurd{base, half, D}};
}

}  // namespace cantor
