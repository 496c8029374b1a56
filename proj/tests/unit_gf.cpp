#include <doctest.h>

#include <set>

#include "fourgen/gf.hpp"

using namespace fourgen;

TEST_CASE("GF(16) with modulus X^4+X+1") {
  // little-endian base-2 digits 1,1,0,0,1 encode to 19
  auto F = Field::make(2, 4, 19);
  CHECK(F->q() == 16);
  CHECK(F->modulus() == 19);
  Elem xi = F->omega();
  CHECK(xi == 2);  // residue of X is primitive here
  // xi^4 = xi + 1
  CHECK(F->pow(xi, 4) == F->add(xi, 1));
  CHECK(F->mul(xi, F->pow(xi, 3)) == F->add(xi, 1));
  // default modulus selection picks the same polynomial
  auto D = Field::make(2, 4);
  CHECK(D->modulus() == 19);
}

TEST_CASE("prime field GF(3)") {
  auto F = Field::make(3, 1);
  CHECK(F->q() == 3);
  CHECK(F->omega() == 2);
  CHECK(F->add(2, 2) == 1);
  CHECK(F->mul(2, 2) == 1);
  CHECK(F->inv(2) == 2);
}

TEST_CASE("GF(2048) default modulus is irreducible (trial division oracle)") {
  auto F = Field::make(2, 11);
  CHECK(F->q() == 2048);
  auto f = poly::from_encoding(F->modulus(), 2);
  CHECK(poly::degree(f) == 11);
  // independent check: no monic factor of degree 1..5
  for (uint64_t enc = 2; enc < 64; ++enc) {
    auto g = poly::from_encoding(enc, 2);
    if (poly::degree(g) < 1) continue;
    CHECK_FALSE(poly::divides(g, f, 2));
  }
}

TEST_CASE("field construction rejects bad input") {
  CHECK_THROWS(Field::make(4, 2));             // non-prime p
  CHECK_THROWS(Field::make(2, 4, 20));         // X^4 + X^2 reducible
  CHECK_THROWS(Field::make(2, 4, 5));          // wrong degree
  CHECK_THROWS(Field::make(2, 21));            // beyond table scale
  auto F = Field::make(2, 4);
  CHECK_THROWS(F->inv(0));
  CHECK_THROWS(F->pow(0, -1));
}

TEST_CASE("exp/log round-trip and basic identities") {
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 4}, {3, 2}, {5, 1}, {3, 4}, {2, 8}}) {
    auto F = Field::make(p, k);
    for (Elem a = 1; a < F->q(); ++a) {
      CHECK(F->exp(F->log(a)) == a);
      CHECK(F->inv(F->inv(a)) == a);
      CHECK(F->mul(a, F->inv(a)) == 1);
      CHECK(F->pow(a, (long long)F->q() - 1) == 1);
    }
    CHECK(F->inv(1) == 1);
  }
}

TEST_CASE("distributivity spot-check") {
  auto F = Field::make(3, 3);
  uint64_t s = 12345;
  for (int i = 0; i < 1000; ++i) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    Elem a = (Elem)((s >> 33) % F->q());
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    Elem b = (Elem)((s >> 33) % F->q());
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    Elem c = (Elem)((s >> 33) % F->q());
    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
  }
}

TEST_CASE("norm-one elements satisfy x^(p^j) * x = 1 in GF(81) over GF(9)") {
  auto F = Field::make(3, 4);
  // elements with x^10 = 1: x = omega^(8t)
  for (uint64_t t = 0; t < 10; ++t) {
    Elem x = F->exp(8 * t);
    CHECK(F->mul(F->frobenius(x, 2), x) == 1);
  }
}

TEST_CASE("subfield embedding GF(4) in GF(16)") {
  auto big = Field::make(2, 4);
  auto small = Field::make(2, 2);
  auto emb = SubfieldMap::make(big, small);
  std::set<Elem> image;
  for (Elem e = 0; e < 4; ++e) image.insert(emb.to_big(e));
  // solutions of x^4 = x by enumeration
  std::set<Elem> expect;
  for (Elem x = 0; x < 16; ++x)
    if (big->pow(x, 4) == x || x == 0) expect.insert(x);
  CHECK(image == expect);
  std::set<Elem> named = {0, 1, big->exp(5), big->exp(10)};
  CHECK(image == named);
  // homomorphism
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(emb.to_big(small->add(a, b)) == big->add(emb.to_big(a), emb.to_big(b)));
      CHECK(emb.to_big(small->mul(a, b)) == big->mul(emb.to_big(a), emb.to_big(b)));
    }
}

TEST_CASE("subfield embedding is the identity on the same field") {
  auto F = Field::make(2, 3);
  auto emb = SubfieldMap::make(F, F);
  for (Elem e = 0; e < F->q(); ++e) CHECK(emb.to_big(e) == e);
}

TEST_CASE("GF(4) generator lands on omega^21 inside GF(64)") {
  auto big = Field::make(2, 6);
  auto small = Field::make(2, 2);
  auto emb = SubfieldMap::make(big, small);
  CHECK(emb.to_big(small->omega()) == big->exp(21));
  CHECK(big->element_order(emb.to_big(small->omega())) == 3);
}

TEST_CASE("embedding image closed under add and mul for small_q <= 16") {
  auto big = Field::make(2, 8);
  auto small = Field::make(2, 4);
  auto emb = SubfieldMap::make(big, small);
  std::set<Elem> image;
  for (Elem e = 0; e < small->q(); ++e) image.insert(emb.to_big(e));
  for (Elem a : image)
    for (Elem b : image) {
      CHECK(image.count(big->add(a, b)) == 1);
      CHECK(image.count(big->mul(a, b)) == 1);
    }
  CHECK_THROWS(SubfieldMap::make(big, Field::make(2, 3)));  // 3 does not divide 8
}

TEST_CASE("flatten over GF(2): xi^4 has coordinates (1,1,0,0)") {
  auto big = Field::make(2, 4);
  auto small = Field::make(2, 1);
  auto fl = Flattener::power_basis(big, small);
  auto c = fl.flatten(big->pow(big->omega(), 4));
  CHECK(c == std::vector<Elem>{1, 1, 0, 0});
  CHECK(fl.flatten(0) == std::vector<Elem>{0, 0, 0, 0});
}

TEST_CASE("flatten/unflatten round-trips on all of GF(81) over GF(3)") {
  auto big = Field::make(3, 4);
  auto small = Field::make(3, 1);
  auto fl = Flattener::power_basis(big, small);
  for (Elem x = 0; x < big->q(); ++x) {
    auto c = fl.flatten(x);
    CHECK(fl.unflatten(c) == x);
  }
}

TEST_CASE("flatten over a proper subfield round-trips and is linear") {
  auto big = Field::make(2, 6);
  auto small = Field::make(2, 2);
  auto fl = Flattener::power_basis(big, small);
  auto emb = SubfieldMap::make(big, small);
  REQUIRE(fl.dim() == 3);
  for (Elem x = 0; x < big->q(); ++x) CHECK(fl.unflatten(fl.flatten(x)) == x);
  // GF(4)-linearity
  for (Elem s = 0; s < 4; ++s) {
    Elem sb = emb.to_big(s);
    for (Elem x : {(Elem)7, (Elem)33, (Elem)60}) {
      auto cx = fl.flatten(x);
      auto cs = fl.flatten(big->mul(sb, x));
      for (size_t i = 0; i < 3; ++i) CHECK(cs[i] == small->mul(s, cx[i]));
    }
  }
}

TEST_CASE("dependent basis is rejected") {
  auto big = Field::make(2, 4);
  auto small = Field::make(2, 2);
  CHECK_THROWS(Flattener::make(big, small, {1, 1}));
}
