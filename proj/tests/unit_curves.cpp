#include <doctest.h>

#include <random>

#include "fourgen/constructions.hpp"
#include "fourgen/curves.hpp"

using namespace fourgen;

TEST_CASE("nodal cubic point counts") {
  CHECK(cubic1_count(4) == 1);
  CHECK(cubic1_count(16) == 13);
  CHECK(cubic1_count(64) == 61);
  CHECK_THROWS(cubic1_count(8));   // 8 = 2 mod 3
  CHECK_THROWS(cubic1_count(13));  // odd
}

TEST_CASE("smooth cubic point counts stay inside the Hasse window") {
  for (Elem g = 2; g < 16; ++g) {
    uint64_t r = cubic2_count(16, g);
    CHECK(r >= 6);
    CHECK(r <= 22);
  }
  for (Elem g = 2; g < 4; ++g) {
    uint64_t r = cubic2_count(4, g);
    CHECK(r <= 6);
  }
  CHECK_THROWS(cubic2_count(16, 0));
  CHECK_THROWS(cubic2_count(16, 1));
}

TEST_CASE("nondegenerate Hermitian curves have q^3+1 points") {
  for (uint32_t q : {3u, 4u}) {
    auto S = field_for_q(q);
    auto B = Field::make(S->p(), 2 * S->k());
    ProjSpace plane(2, B);
    auto pts = enumerate_points(plane);
    auto conj = [&](Elem x) { return B->pow(x, q); };
    std::mt19937_64 rng(11);
    int found = 0;
    while (found < 5) {
      GfMatrix a(3, 3, B);
      for (size_t i = 0; i < 3; ++i) {
        Elem d;
        do {
          d = (Elem)(rng() % B->q());
        } while (conj(d) != d);
        a.at(i, i) = d;
      }
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
          Elem e = (Elem)(rng() % B->q());
          a.at(i, j) = e;
          a.at(j, i) = conj(e);
        }
      if (rank_gf(a) != 3) continue;
      ++found;
      size_t zeros = 0;
      for (const auto& p : pts) {
        Elem acc = 0;
        for (size_t i = 0; i < 3; ++i)
          for (size_t j = 0; j < 3; ++j)
            acc = B->add(acc, B->mul(p.coords[i], B->mul(a.at(i, j), conj(p.coords[j]))));
        if (acc == 0) ++zeros;
      }
      CHECK(zeros == (size_t)q * q * q + 1);
    }
  }
}

TEST_CASE("net and pencil probe at q = 3") {
  auto rep = hermitian_net_probe(3, 20, 12345);
  CHECK(rep.nets_probed == 20);
  CHECK(rep.empty_base_loci == 0);
  CHECK(rep.pencil_sizes_admissible);
  CHECK(rep.pencils_have_enough_nondegenerate);
  REQUIRE(rep.pencil_base_sizes.size() == 20);
  for (size_t s : rep.pencil_base_sizes) CHECK((s == 7 || s == 10 || s == 13 || s == 16));
  // reproducible with the same seed
  auto rep2 = hermitian_net_probe(3, 20, 12345);
  CHECK(rep2.pencil_base_sizes == rep.pencil_base_sizes);
}

TEST_CASE("net and pencil probe at q = 4") {
  auto rep = hermitian_net_probe(4, 5, 99);
  CHECK(rep.empty_base_loci == 0);
  for (size_t s : rep.pencil_base_sizes) CHECK((s == 13 || s == 17 || s == 21 || s == 25));
  CHECK_THROWS(hermitian_net_probe(5, 5, 1));
}
