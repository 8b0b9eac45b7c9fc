#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cantor/enumerate.hpp"
#include "cantor/realroots.hpp"

using namespace cantor;

namespace {
Polynomial P(const std::vector<Int>& falling) { return Polynomial::from_falling(falling); }

using VV = std::vector<std::vector<Int>>;

std::vector<std::vector<Int>> mags(const std::vector<CompositionLayout>& ls) {
  std::vector<std::vector<Int>> out;
  for (const auto& l : ls) out.push_back(l.mag);
  return out;
}
}  // namespace

TEST_CASE("height accounting") {
  CHECK(K_of(P({1, 0})) == 1);           // x
  CHECK(height_of(P({1, 0})) == 1);
  CHECK(K_of(P({2, -1})) == 3);          // 2x-1
  CHECK(height_of(P({2, -1})) == 3);
  CHECK(K_of(P({1, 0, -1, 1})) == 3);    // x^3-x+1
  CHECK(height_of(P({1, 0, -1, 1})) == 5);
  CHECK(K_of(P({1, 3, 1})) == 5);
  CHECK(height_of(P({1, 3, 1})) == 6);
  CHECK_THROWS_AS(K_of(P({2, 0, -2})), std::domain_error);
  CHECK_THROWS_AS(height_of(P({-1, 0})), std::domain_error);
}

TEST_CASE("coprime compositions in catalog order") {
  CHECK(coprime_compositions(Int(3), 2) == VV{{Int(2), Int(1)}, {Int(1), Int(2)}});
  CHECK(coprime_compositions(Int(4), 2) == VV{{Int(3), Int(1)}, {Int(1), Int(3)}});  // no [2,2]
  CHECK(coprime_compositions(Int(5), 2) ==
        VV{{Int(4), Int(1)}, {Int(1), Int(4)}, {Int(3), Int(2)}, {Int(2), Int(3)}});
  CHECK(coprime_compositions(Int(4), 3) ==
        VV{{Int(2), Int(1), Int(1)}, {Int(1), Int(2), Int(1)}, {Int(1), Int(1), Int(2)}});
  CHECK(coprime_compositions(Int(1), 1) == VV{{Int(1)}});
  CHECK(coprime_compositions(Int(4), 1).empty());  // [4] has content 4
  CHECK_THROWS_AS(coprime_compositions(Int(3), 4), std::domain_error);
  CHECK_THROWS_AS(coprime_compositions(Int(0), 1), std::domain_error);
}

TEST_CASE("zero placements") {
  SUBCASE("middle part moves through interior slots, descending lex") {
    auto ls = zero_placements({Int(1), Int(1), Int(1)}, 5, 3);
    CHECK(mags(ls) == VV{{Int(1), Int(1), Int(0), Int(1)}, {Int(1), Int(0), Int(1), Int(1)}});
    for (const auto& l : ls) {
      CHECK(l.m == 3);
      CHECK(l.z == 1);
      CHECK(l.n == 5);
      CHECK(l.k == 3);
    }
  }
  SUBCASE("order of parts is preserved") {
    auto ls = zero_placements({Int(2), Int(1), Int(1)}, 6, 3);
    CHECK(mags(ls) == VV{{Int(2), Int(1), Int(0), Int(1)}, {Int(2), Int(0), Int(1), Int(1)}});
  }
  SUBCASE("two parts pin to the ends") {
    auto ls = zero_placements({Int(1), Int(1)}, 4, 3);
    CHECK(mags(ls) == VV{{Int(1), Int(0), Int(0), Int(1)}});
  }
  SUBCASE("saturated layout has no zeros") {
    auto ls = zero_placements({Int(1), Int(1), Int(1), Int(1)}, 6, 3);
    CHECK(mags(ls) == VV{{Int(1), Int(1), Int(1), Int(1)}});
    CHECK(ls[0].z == 0);
  }
  SUBCASE("single part occupies the leading slot") {
    auto ls = zero_placements({Int(1)}, 2, 2);
    CHECK(mags(ls) == VV{{Int(1), Int(0), Int(0)}});
  }
  SUBCASE("more parts than slots is rejected") {
    CHECK_THROWS_AS(zero_placements({Int(1), Int(1), Int(1)}, 3, 1), std::domain_error);
  }
  SUBCASE("two interior parts across four slots, descending lex") {
    auto ls = zero_placements({Int(1), Int(1), Int(1), Int(1)}, 8, 5);
    CHECK(mags(ls) ==
          VV{{Int(1), Int(1), Int(1), Int(0), Int(0), Int(1)},
             {Int(1), Int(1), Int(0), Int(1), Int(0), Int(1)},
             {Int(1), Int(1), Int(0), Int(0), Int(1), Int(1)},
             {Int(1), Int(0), Int(1), Int(1), Int(0), Int(1)},
             {Int(1), Int(0), Int(1), Int(0), Int(1), Int(1)},
             {Int(1), Int(0), Int(0), Int(1), Int(1), Int(1)}});
  }
}

TEST_CASE("display forms") {
  auto l3 = zero_placements({Int(1), Int(1), Int(1)}, 5, 3)[1];
  CHECK(l3.display() == "[1,0,1,1]");
  auto l2 = zero_placements({Int(2), Int(1)}, 4, 2)[0];
  CHECK(l2.display() == "[2,1]");  // interior zeros unrecorded when m <= 2
  CHECK(l2.mag == std::vector<Int>{Int(2), Int(0), Int(1)});
  auto l1 = zero_placements({Int(1)}, 1, 1)[0];
  CHECK(l1.display() == "[1]");

  Signature none;
  CHECK(none.display() == "(/)");
  Signature pm{{1, -1}};
  CHECK(pm.display() == "(+,-)");
  Signature m{{-1}};
  CHECK(m.display() == "(-)");
}

TEST_CASE("signatures enumerate plus-first in falling order") {
  auto l = zero_placements({Int(1), Int(1), Int(1)}, 5, 3)[0];
  auto sigs = signatures_for(l);
  REQUIRE(sigs.size() == 4);
  CHECK(sigs[0].signs == std::vector<int>{1, 1});
  CHECK(sigs[1].signs == std::vector<int>{1, -1});
  CHECK(sigs[2].signs == std::vector<int>{-1, 1});
  CHECK(sigs[3].signs == std::vector<int>{-1, -1});

  auto l1 = zero_placements({Int(1)}, 2, 2)[0];
  auto s1 = signatures_for(l1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].signs.empty());
}

TEST_CASE("signed polynomial and mirror signature") {
  auto ls = zero_placements({Int(1), Int(1), Int(1)}, 5, 3);
  const auto& l = ls[1];  // [1,0,1,1]
  CHECK(signed_polynomial(l, Signature{{-1, 1}}) == P({1, 0, -1, 1}));
  CHECK(signed_polynomial(l, Signature{{1, 1}}) == P({1, 0, 1, 1}));
  CHECK_THROWS_AS(signed_polynomial(l, Signature{{1}}), std::domain_error);

  // [1,0,1,1]: nonzero non-leading at falling indices 2 (even) and 3 (odd)
  CHECK(mirror_signature(l, Signature{{-1, 1}}).signs == std::vector<int>{-1, -1});
  // [1,1,0,1]: indices 1 and 3, both odd -> both flip
  CHECK(mirror_signature(ls[0], Signature{{1, -1}}).signs == std::vector<int>{-1, 1});

  // mirror law: signed polynomial of the mirror is the reflection
  for (const auto& lay : ls)
    for (const auto& sig : signatures_for(lay)) {
      Polynomial p = signed_polynomial(lay, sig);
      CHECK(signed_polynomial(lay, mirror_signature(lay, sig)) == reflect(p));
    }
}

TEST_CASE("survivors of small (n, k) cells") {
  CHECK(candidates_for(3, 2).empty());  // x^2+1 complex, x^2-1 reducible
  CHECK(candidates_for(2, 1).size() == 2);  // x+1, x-1

  auto c42 = candidates_for(4, 2);
  CHECK(c42.size() == 4);  // 2x^2-1, x^2-2, x^2+x-1, x^2-x-1
  size_t roots = 0;
  for (const auto& c : c42) {
    CHECK(is_canonical(c.poly));
    roots += isolate_roots(c.poly).size();
  }
  CHECK(roots == 8);  // Phi(4,2)

  // [4,1] and [1,4] die at height 6, degree 2: reducible or complex
  for (const auto& c : candidates_for(6, 2)) {
    CHECK(c.layout.mag[0] != 4);
    CHECK(c.layout.mag[2] != 4);
  }
}

TEST_CASE("raw survey classifies every candidate") {
  auto all = raw_survey(3, 2);  // K = 2: [2] and [1,1]
  REQUIRE(all.size() == 3);
  CHECK(all[0].cand.poly == P({2, 0, 0}));  // 2x^2
  CHECK(all[0].fate == Fate::ContentGtOne);
  CHECK(all[1].cand.poly == P({1, 0, 1}));
  CHECK(all[1].fate == Fate::NoRealRoots);
  CHECK(all[2].cand.poly == P({1, 0, -1}));
  CHECK(all[2].fate == Fate::Reducible);

  auto xx = raw_survey(2, 2);  // x^2 only
  REQUIRE(xx.size() == 1);
  CHECK(xx[0].fate == Fate::Reducible);

  auto x = raw_survey(1, 1);
  REQUIRE(x.size() == 1);
  CHECK(x[0].fate == Fate::Survives);
  CHECK(x[0].cand.poly == P({1, 0}));

  // content beats every other classification: 2x^2+2 is also complex
  auto h5k2 = raw_survey(5, 2);
  bool found = false;
  for (const auto& sc : h5k2)
    if (sc.cand.poly == Polynomial(std::vector<Int>{Int(2), Int(0), Int(2)})) {
      found = true;
      CHECK(sc.fate == Fate::ContentGtOne);
    }
  CHECK(found);
}
