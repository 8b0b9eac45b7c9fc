#include "cantor/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cantor/irreducibility.hpp"
#include "cantor/ordering.hpp"
#include "cantor/realroots.hpp"

namespace cantor {

std::string CompositionLayout::display() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const Int& b : mag) {
    if (m <= 2 && b == 0) continue;  // zeros recorded only for m >= 3
    if (!first) os << ",";
    os << b;
    first = false;
  }
  os << "]";
  return os.str();
}

std::string Signature::display() const {
  if (signs.empty()) return "(/)";
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < signs.size(); ++i) {
    if (i) os << ",";
    os << (signs[i] > 0 ? "+" : "-");
  }
  os << ")";
  return os.str();
}

Int K_of(const Polynomial& p) {
  if (!is_canonical(p)) throw std::domain_error("K_of: canonical polynomial required");
  Int k = 0;
  for (const Int& c : p.coeffs()) k += abs_int(c);
  return k;
}

Int height_of(const Polynomial& p) { return K_of(p) + p.degree() - 1; }

std::vector<std::vector<Int>> coprime_compositions(const Int& K, int m) {
  if (K < 1 || m < 1 || Int(m) > K)
    throw std::domain_error("coprime_compositions: 1 <= m <= K required");
  std::vector<std::vector<Int>> out;
  for (const auto& part : partition_order(K)) {
    if (static_cast<int>(part.size()) != m) continue;
    for (auto& comp : composition_order(part)) out.push_back(std::move(comp));
  }
  return out;
}

std::vector<CompositionLayout> zero_placements(const std::vector<Int>& parts, int n, int k) {
  const int m = static_cast<int>(parts.size());
  if (m > k + 1) throw std::domain_error("zero_placements: more parts than coefficient slots");
  std::vector<CompositionLayout> out;
  auto make_layout = [&](std::vector<Int> mag) {
    CompositionLayout lay;
    lay.n = n;
    lay.k = k;
    lay.mag = std::move(mag);
    lay.m = m;
    lay.z = k + 1 - m;
    return lay;
  };
  if (m == 1) {
    std::vector<Int> mag(static_cast<size_t>(k) + 1, Int(0));
    mag[0] = parts[0];
    out.push_back(make_layout(std::move(mag)));
    return out;
  }
  // Choose falling-order interior slots (indices 1..k-1) for parts[1..m-2];
  // order of parts is preserved. Enumerate all C(k-1, m-2) choices, then sort
  // the magnitude vectors descending-lexicographically.
  const int interior = m - 2;
  std::vector<int> pick(static_cast<size_t>(interior));
  for (int i = 0; i < interior; ++i) pick[static_cast<size_t>(i)] = i + 1;
  while (true) {
    std::vector<Int> mag(static_cast<size_t>(k) + 1, Int(0));
    mag[0] = parts[0];
    mag[static_cast<size_t>(k)] = parts[static_cast<size_t>(m) - 1];
    for (int i = 0; i < interior; ++i)
      mag[static_cast<size_t>(pick[static_cast<size_t>(i)])] = parts[static_cast<size_t>(i) + 1];
    out.push_back(make_layout(std::move(mag)));
    // next combination of `interior` indices from 1..k-1
    int pos = interior - 1;
    while (pos >= 0 && pick[static_cast<size_t>(pos)] == k - 1 - (interior - 1 - pos)) --pos;
    if (pos < 0) break;
    ++pick[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < interior; ++i)
      pick[static_cast<size_t>(i)] = pick[static_cast<size_t>(i - 1)] + 1;
  }
  std::sort(out.begin(), out.end(), [](const CompositionLayout& a, const CompositionLayout& b) {
    return a.mag > b.mag;
  });
  return out;
}

std::vector<Signature> signatures_for(const CompositionLayout& layout) {
  const int bits = layout.m - 1;
  std::vector<Signature> out;
  out.reserve(static_cast<size_t>(1) << bits);
  for (unsigned v = 0; v < (1u << bits); ++v) {
    Signature s;
    s.signs.reserve(static_cast<size_t>(bits));
    for (int j = 0; j < bits; ++j)
      s.signs.push_back((v >> (bits - 1 - j)) & 1u ? -1 : 1);
    out.push_back(std::move(s));
  }
  return out;
}

Polynomial signed_polynomial(const CompositionLayout& layout, const Signature& sig) {
  if (sig.signs.size() + 1 != static_cast<size_t>(layout.m))
    throw std::domain_error("signed_polynomial: signature length mismatch");
  std::vector<Int> falling = layout.mag;
  size_t si = 0;
  for (size_t i = 1; i < falling.size(); ++i) {
    if (falling[i] == 0) continue;
    falling[i] *= sig.signs[si++];
  }
  return Polynomial::from_falling(falling);
}

Signature mirror_signature(const CompositionLayout& layout, const Signature& sig) {
  Signature out = sig;
  size_t si = 0;
  for (size_t i = 1; i < layout.mag.size(); ++i) {
    if (layout.mag[i] == 0) continue;
    if (i % 2 == 1) out.signs.at(si) = -out.signs.at(si);
    ++si;
  }
  return out;
}

namespace {

Fate classify(const Candidate& cand, bool content_gt_one) {
  if (content_gt_one) return Fate::ContentGtOne;
  const Polynomial& p = cand.poly;
  auto [pos, neg] = descartes_bound(p);
  if (pos == 0 && neg == 0 && p.constant() != 0) return Fate::NoRealRoots;
  if (p.degree() >= 1 && !is_irreducible(p).irreducible) return Fate::Reducible;
  if (isolate_roots(p).empty()) return Fate::NoRealRoots;
  return Fate::Survives;
}

std::vector<SievedCandidate> survey_impl(int n, int k, bool include_non_coprime) {
  if (n < 1 || k < 1) throw std::domain_error("survey: n >= 1 and k >= 1 required");
  std::vector<SievedCandidate> out;
  const Int K = Int(n) - k + 1;
  if (K < 1) return out;
  const auto partitions = include_non_coprime ? partition_order_all(K) : partition_order(K);
  for (const auto& part : partitions) {
    const int m = static_cast<int>(part.size());
    if (m > k + 1) continue;
    Int g = 0;
    for (const Int& p : part) g = gcd_int(g, p);
    const bool content_gt_one = g != 1;
    for (const auto& comp : composition_order(part)) {
      for (const auto& layout : zero_placements(comp, n, k)) {
        for (const auto& sig : signatures_for(layout)) {
          Candidate cand{layout, sig, signed_polynomial(layout, sig)};
          Fate fate = classify(cand, content_gt_one);
          out.push_back(SievedCandidate{std::move(cand), fate});
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Candidate> candidates_for(int n, int k) {
  std::vector<Candidate> out;
  for (auto& sc : survey_impl(n, k, false))
    if (sc.fate == Fate::Survives) out.push_back(std::move(sc.cand));
  return out;
}

std::vector<SievedCandidate> raw_survey(int n, int k) { return survey_impl(n, k, true); }

}  // namespace cantor
