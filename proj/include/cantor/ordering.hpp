#ifndef CANTOR_ORDERING_HPP
#define CANTOR_ORDERING_HPP

#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cantor/enumerate.hpp"
#include "cantor/realroots.hpp"

namespace cantor {

// Rank tuple whose lexicographic order is the catalog order; equal keys imply
// the identical entry.
struct OrderKey {
  int n = 0;
  int k = 0;
  int partition_rank = 0;
  int composition_rank = 0;
  int placement_rank = 0;
  int signature_rank = 0;
  int root_rank = 0;
  auto operator<=>(const OrderKey&) const = default;
};

// Relatively prime partitions of K (non-increasing part lists), grouped by
// ascending part count m; within equal m, descending lexicographic.
std::vector<std::vector<Int>> partition_order(const Int& K);

// Same order, but every partition of K (the raw sieve classifies the gcd > 1
// ones instead of skipping them).
std::vector<std::vector<Int>> partition_order_all(const Int& K);

// All distinct orderings of the partition's parts, descending lexicographic.
std::vector<std::vector<Int>> composition_order(const std::vector<Int>& partition);

// One surviving signature of a layout with its ascending real roots.
struct SurvivorBlock {
  Signature sig;
  Polynomial poly;
  std::vector<AlgebraicReal> roots;
};

// Flatten a layout's survivors into catalog order:
//   1. sort signatures by smallest root, ascending (exact comparison);
//   2. a single-root signature pulls its mirror signature (also single-root,
//      the negated value) directly behind it, so -|w| is followed by +|w|;
//   3. signatures with several roots keep their sorted position and emit
//      their roots in ascending order.
std::vector<std::pair<Signature, AlgebraicReal>> signature_order(
    const CompositionLayout& layout, std::vector<SurvivorBlock> survivors);

// Assign c = 1, 2, ... over entries already in catalog order; verifies the
// keys strictly increase. Entry needs members `key` (OrderKey) and `c`.
template <class Entry>
void assign_indices(std::vector<Entry>& entries) {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && !(entries[i - 1].key < entries[i].key))
      throw std::logic_error("assign_indices: entries not in strictly increasing key order");
    entries[i].c = static_cast<long long>(i) + 1;
  }
}

}  // namespace cantor

#endif  // CANTOR_ORDERING_HPP
