#ifndef CANTOR_ENUMERATE_HPP
#define CANTOR_ENUMERATE_HPP

#include <string>
#include <vector>

#include "cantor/intpoly.hpp"

namespace cantor {

// Unsigned coefficient layout of one candidate: magnitudes in falling-power
// order (mag[0] = b_k >= 1, ..., mag[k] = b_0), m nonzero parts, z interior
// zeros. Display omits zeros when m <= 2.
struct CompositionLayout {
  int n = 0;
  int k = 0;
  std::vector<Int> mag;  // falling: b_k, b_{k-1}, ..., b_0
  int m = 0;
  int z = 0;
  std::string display() const;  // "[1,0,1,1]", "[2,1]", "[1]"
};

// One sign per nonzero non-leading part, falling-power order; the leading
// sign is fixed positive and never recorded.
struct Signature {
  std::vector<int> signs;  // entries in {+1, -1}; length m-1
  std::string display() const;  // "(+,-)", "(/)" when empty
  bool operator==(const Signature&) const = default;
};

struct Candidate {
  CompositionLayout layout;
  Signature sig;
  Polynomial poly;  // canonical signed polynomial
};

// Raw-sieve outcome of one signed candidate. Classification precedence:
// content > 1 (whole composition), then a certified empty root set, then
// reducibility, then zero Sturm-counted roots, else survival.
enum class Fate { Survives, ContentGtOne, Reducible, NoRealRoots };

struct SievedCandidate {
  Candidate cand;
  Fate fate;
};

// K = sum of |non-leading coefficients| + leading coefficient. Pre: canonical.
Int K_of(const Polynomial& p);

// Height n = K + degree - 1. Pre: canonical.
Int height_of(const Polynomial& p);

// All ordered m-tuples of positive integers summing to K with gcd 1, in
// catalog order (partition order, then descending lex within a partition).
std::vector<std::vector<Int>> coprime_compositions(const Int& K, int m);

// All layouts for the parts at degree k: leading slot takes parts[0]; for
// m >= 2 the constant slot takes parts[m-1]; middle parts keep their order in
// the k-1 interior slots; ordered by descending lex of the magnitude vector.
// Pre: m <= k+1 (domain_error).
std::vector<CompositionLayout> zero_placements(const std::vector<Int>& parts, int n, int k);

// All 2^(m-1) sign vectors over the nonzero non-leading parts, in binary
// order with '+' before '-' per position, falling powers first.
std::vector<Signature> signatures_for(const CompositionLayout& layout);

// The signed polynomial of a layout + signature.
Polynomial signed_polynomial(const CompositionLayout& layout, const Signature& sig);

// Signature of the canonicalized reflection: flip the sign at falling index i
// iff i is odd (magnitudes are unchanged, so the mirror stays in the block).
Signature mirror_signature(const CompositionLayout& layout, const Signature& sig);

// Surviving candidates for height n and degree k: canonical, irreducible,
// at least one real root. Catalog order except for the signature/root
// interleaving, which `ordering` applies.
std::vector<Candidate> candidates_for(int n, int k);

// Every candidate at (n, k) including gcd > 1 compositions, each classified.
// Used to verify the case lemmas without shortcuts.
std::vector<SievedCandidate> raw_survey(int n, int k);

}  // namespace cantor

#endif  // CANTOR_ENUMERATE_HPP
