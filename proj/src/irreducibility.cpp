#include "cantor/irreducibility.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cantor {

namespace {

Int eval_int(const Polynomial& p, const Int& x) {
  Int acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::vector<Int> positive_divisors(Int a) {
  a = abs_int(a);
  std::vector<Int> divs;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      divs.push_back(d);
      if (d * d != a) divs.push_back(a / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Witness with the lower-degree polynomial first, so deg(factor) <= deg/2.
FactorWitness make_witness(Polynomial d, Polynomial q) {
  if (d.degree() > q.degree()) std::swap(d, q);
  return FactorWitness{std::move(d), std::move(q)};
}

Int l1_norm(const Polynomial& p) {
  Int s = 0;
  for (const Int& c : p.coeffs()) s += abs_int(c);
  return s;
}

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lattice points of the closed l1 ball of radius r in dimension dim.
Int l1_ball_count(int dim, const Int& radius) {
  int r = static_cast<int>(radius);
  Int total = 0;
  for (int j = 0; j <= dim && j <= r; ++j)
    total += (Int(1) << j) * binom(dim, j) * binom(r, j);
  return total;
}

}  // namespace

std::vector<Rat> rational_roots(const Polynomial& p) {
  if (!is_canonical(p) || p.degree() < 1)
    throw std::domain_error("rational_roots: canonical polynomial of degree >= 1 required");
  std::set<Rat> roots;
  Polynomial q = p;
  if (q.constant() == 0) {
    roots.insert(Rat(0));
    std::vector<Int> shifted(q.coeffs().begin() + 1, q.coeffs().end());
    while (!shifted.empty() && shifted.front() == 0)
      shifted.erase(shifted.begin());
    q = Polynomial(std::move(shifted));
    if (q.degree() < 1) return {roots.begin(), roots.end()};
  }
  for (const Int& num : positive_divisors(q.constant()))
    for (const Int& den : positive_divisors(q.leading()))
      for (int s : {1, -1}) {
        Rat cand = Rat(s * num, den);
        if (sign_at(q, cand) == 0) roots.insert(cand);
      }
  return {roots.begin(), roots.end()};
}

Int mignotte_bound(const Polynomial& p) {
  if (!is_canonical(p) || p.degree() < 2)
    throw std::domain_error("mignotte_bound: canonical polynomial of degree >= 2 required");
  Int sum_sq = 1;
  for (const Int& c : p.coeffs()) sum_sq += c * c;
  Int four_pow = Int(1) << (2 * p.degree());
  return p.leading() * ceil_sqrt(four_pow * sum_sq);
}

IrreducibilityResult is_irreducible(const Polynomial& p) {
  if (!is_canonical(p)) throw std::domain_error("is_irreducible: canonical polynomial required");
  const int k = p.degree();
  if (k < 1) throw std::domain_error("is_irreducible: degree >= 1 required");
  if (k == 1) return {true, std::nullopt};

  auto roots = rational_roots(p);
  if (!roots.empty()) {
    const Rat& r = roots.front();
    Polynomial lin({Int(-numerator(r)), Int(denominator(r))});
    auto cof = exact_divide(p, lin);
    return {false, make_witness(lin, std::move(*cof))};
  }
  if (k <= 3) return {true, std::nullopt};

  const Int B = mignotte_bound(p);
  Int sum_sq = 1;
  for (const Int& c : p.coeffs()) sum_sq += c * c;
  const Int p_at_1 = eval_int(p, 1), p_at_m1 = eval_int(p, -1);
  const auto leads_all = positive_divisors(p.leading());
  const auto const_divs = positive_divisors(p.constant());

  for (int d = 2; d <= k / 2; ++d) {
    Int Bd = std::min(B, ceil_sqrt((Int(1) << (2 * d)) * sum_sq));
    std::vector<Int> g(static_cast<size_t>(d) + 1);
    // Odometer over the d-1 middle coefficients in [-Bd, Bd].
    std::vector<Int> mid(static_cast<size_t>(d - 1), -Bd);
    for (const Int& lead : leads_all) {
      if (lead > Bd) break;
      g[static_cast<size_t>(d)] = lead;
      for (const Int& c0a : const_divs) {
        if (c0a > Bd) break;
        for (int c0s : {1, -1}) {
          g[0] = c0s * c0a;
          std::fill(mid.begin(), mid.end(), -Bd);
          while (true) {
            for (size_t i = 0; i < mid.size(); ++i) g[i + 1] = mid[i];
            Int g1 = 0, gm1 = 0, sgn = 1;
            for (size_t i = 0; i < g.size(); ++i) {
              g1 += g[i];
              gm1 += sgn * g[i];
              sgn = -sgn;
            }
            if (g1 != 0 && gm1 != 0 && p_at_1 % g1 == 0 && p_at_m1 % gm1 == 0) {
              Polynomial cand(g);
              if (cand.degree() == d && content(cand) == 1) {
                if (auto q = exact_divide(p, cand))
                  return {false, make_witness(std::move(cand), std::move(*q))};
              }
            }
            // advance odometer
            size_t pos = 0;
            while (pos < mid.size() && mid[pos] == Bd) {
              mid[pos] = -Bd;
              ++pos;
            }
            if (pos == mid.size()) break;
            ++mid[pos];
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

IrreducibilityResult oracle_factor_search(const Polynomial& p) {
  if (!is_canonical(p)) throw std::domain_error("oracle_factor_search: canonical polynomial required");
  const int k = p.degree();
  if (k < 2) throw std::domain_error("oracle_factor_search: degree >= 2 required");
  const Int L = l1_norm(p);
  if (L + k - 1 > 9) throw std::domain_error("oracle_factor_search: height must be <= 9");

  std::optional<FactorWitness> found;

  // Exhaustive l1 ball: canonical d, 1 <= deg d <= k-1, l1(d) <= L.
  std::vector<Int> cand;
  auto try_candidate = [&]() {
    Polynomial g(cand);
    if (g.degree() < 1 || content(g) != 1) return false;
    if (auto q = exact_divide(p, g)) {
      found = make_witness(std::move(g), std::move(*q));
      return true;
    }
    return false;
  };
  for (int d = 1; d < k && !found; ++d) {
    cand.assign(static_cast<size_t>(d) + 1, Int(0));
    // Recursive enumeration of coefficients with an l1 budget.
    auto rec = [&](auto&& self, int pos, Int budget) -> bool {
      if (pos == d) {
        for (Int lead = 1; lead <= budget; ++lead) {
          cand[static_cast<size_t>(d)] = lead;
          if (try_candidate()) return true;
        }
        cand[static_cast<size_t>(d)] = 0;
        return false;
      }
      for (Int mag = 0; mag <= budget; ++mag) {
        for (int s : {1, -1}) {
          if (mag == 0 && s < 0) continue;
          cand[static_cast<size_t>(pos)] = s * mag;
          if (self(self, pos + 1, budget - mag)) return true;
        }
      }
      cand[static_cast<size_t>(pos)] = 0;
      return false;
    };
    rec(rec, 0, L);
  }
  if (found) return {false, std::move(found)};

  // Fall back to the Mignotte box when it is smaller than the l1 ball.
  const Int B = mignotte_bound(p);
  Int ball_total = 0;
  for (int d = 1; d < k; ++d) ball_total += l1_ball_count(d + 1, L);
  Int box_total = 0;
  for (int d = 1; d <= k / 2; ++d) {
    Int row = B;
    for (int i = 0; i < d; ++i) row *= 2 * B + 1;
    box_total += row;
  }
  if (box_total < ball_total) {
    for (int d = 1; d <= k / 2 && !found; ++d) {
      cand.assign(static_cast<size_t>(d) + 1, Int(0));
      auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == d) {
          for (Int lead = 1; lead <= B; ++lead) {
            cand[static_cast<size_t>(d)] = lead;
            if (try_candidate()) return true;
          }
          cand[static_cast<size_t>(d)] = 0;
          return false;
        }
        for (Int c = -B; c <= B; ++c) {
          cand[static_cast<size_t>(pos)] = c;
          if (self(self, pos + 1)) return true;
        }
        cand[static_cast<size_t>(pos)] = 0;
        return false;
      };
      rec(rec, 0);
    }
    if (found) return {false, std::move(found)};
  }
  return {true, std::nullopt};
}

}  // namespace cantor
