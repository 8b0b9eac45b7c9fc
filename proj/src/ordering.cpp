#include "cantor/ordering.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace cantor {

namespace {

// Partitions of K into exactly m non-increasing positive parts, descending lex.
void partitions_into(const Int& K, int m, std::vector<Int>& acc, const Int& maxpart,
                     std::vector<std::vector<Int>>& out) {
  if (static_cast<int>(acc.size()) == m) {
    if (K == 0) out.push_back(acc);
    return;
  }
  int left = m - static_cast<int>(acc.size());
  Int hi = std::min(maxpart, Int(K - (left - 1)));
  for (Int p = hi; p >= 1; --p) {
    if (K - p < left - 1) continue;
    acc.push_back(p);
    partitions_into(K - p, m, acc, p, out);
    acc.pop_back();
  }
}

std::vector<std::vector<Int>> partitions_grouped(const Int& K, bool coprime_only) {
  std::vector<std::vector<Int>> out;
  for (int m = 1; Int(m) <= K; ++m) {
    std::vector<std::vector<Int>> of_m;
    std::vector<Int> acc;
    partitions_into(K, m, acc, K, of_m);
    // generation order is already descending lex within fixed m
    for (auto& part : of_m) {
      if (coprime_only) {
        Int g = 0;
        for (const Int& p : part) g = gcd_int(g, p);
        if (g != 1) continue;
      }
      out.push_back(std::move(part));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Int>> partition_order(const Int& K) {
  if (K < 1) throw std::domain_error("partition_order: K >= 1 required");
  return partitions_grouped(K, true);
}

std::vector<std::vector<Int>> partition_order_all(const Int& K) {
  if (K < 1) throw std::domain_error("partition_order_all: K >= 1 required");
  return partitions_grouped(K, false);
}

std::vector<std::vector<Int>> composition_order(const std::vector<Int>& partition) {
  std::vector<Int> perm = partition;
  std::sort(perm.begin(), perm.end(), std::greater<>());
  std::vector<std::vector<Int>> out;
  do {
    out.push_back(perm);
  } while (std::prev_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::pair<Signature, AlgebraicReal>> signature_order(
    const CompositionLayout& layout, std::vector<SurvivorBlock> survivors) {
  std::stable_sort(survivors.begin(), survivors.end(),
                   [](const SurvivorBlock& a, const SurvivorBlock& b) {
                     return compare(a.roots.front(), b.roots.front()) < 0;
                   });
  std::vector<std::pair<Signature, AlgebraicReal>> out;
  std::vector<bool> emitted(survivors.size(), false);
  auto emit = [&](size_t i) {
    emitted[i] = true;
    for (const AlgebraicReal& r : survivors[i].roots) out.emplace_back(survivors[i].sig, r);
  };
  for (size_t i = 0; i < survivors.size(); ++i) {
    if (emitted[i]) continue;
    emit(i);
    if (survivors[i].roots.size() != 1) continue;
    Signature mirror = mirror_signature(layout, survivors[i].sig);
    if (mirror == survivors[i].sig) continue;
    for (size_t j = i + 1; j < survivors.size(); ++j) {
      if (!emitted[j] && survivors[j].sig == mirror) {
        assert(survivors[j].roots.size() == 1);
        emit(j);
        break;
      }
    }
  }
  return out;
}

}  // namespace cantor
