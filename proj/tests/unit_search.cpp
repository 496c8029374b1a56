#include <doctest.h>

#include <set>

#include "fourgen/bounds.hpp"
#include "fourgen/constructions.hpp"
#include "fourgen/search.hpp"

using namespace fourgen;

TEST_CASE("greedy completion of the 9-point affine set reaches the 11-cap") {
  auto y = htw_y(2);
  auto done = greedy_complete(y);
  CHECK(done.size() == 11);
  auto rep = verify_complete(done);
  CHECK(*rep.is_complete);
  CHECK(aut_order(done).order == 7920);
  // attains the closed-form maximum
  CHECK(done.size() == m3_upper(4, 3).integer_bound);
}

TEST_CASE("greedy completion fixes complete inputs") {
  auto eq = elliptic_quadric(2);
  auto done = greedy_complete(eq);
  CHECK(done.size() == eq.size());
  for (size_t i = 0; i < eq.size(); ++i) CHECK(done.points[i].index == eq.points[i].index);
}

TEST_CASE("greedy completion from an empty set seeds the frame") {
  PointSet empty;
  empty.space = ProjSpace(6, Field::make(2, 1));
  auto done = greedy_complete(empty);
  CHECK(done.size() == 11);  // frame + a quadric plane triple
  CHECK(*verify_complete(done).is_complete);
  // randomized order with a fixed seed is reproducible
  auto r1 = greedy_complete(empty, CandidateOrder::Random, 42);
  auto r2 = greedy_complete(empty, CandidateOrder::Random, 42);
  REQUIRE(r1.size() == r2.size());
  for (size_t i = 0; i < r1.size(); ++i) CHECK(r1.points[i].index == r2.points[i].index);
}

TEST_CASE("exact maxima for small parameters") {
  auto m32 = max_size(3, 2);
  CHECK(m32.proven);
  CHECK(m32.max_size == 5);
  auto m34 = max_size(3, 4);
  CHECK(m34.proven);
  CHECK(m34.max_size == 5);
  auto m43 = max_size(4, 3);
  CHECK(m43.proven);
  CHECK(m43.max_size == 11);
  CHECK_THROWS(max_size(6, 2));
}

TEST_CASE("classification of PG(3,2)") {
  auto res = classify_complete(3, 2);
  REQUIRE(res.classes.size() == 1);
  CHECK(res.classes[0].size == 5);
  CHECK(res.classes[0].aut == 120);
  CHECK(res.classes[0].labeled_copies == 168);
  CHECK(res.consistency_ok);
  // full oracle agreement
  auto brute = enumerate_complete_sets_bruteforce(3, 2);
  REQUIRE(brute.size() == 1);
  CHECK(brute[0].first == 5);
  CHECK(brute[0].second == 168);
  CHECK(are_equivalent(res.classes[0].representative, elliptic_quadric(2)));
}

TEST_CASE("classification of PG(4,2)") {
  auto res = classify_complete(4, 2);
  REQUIRE(res.classes.size() == 2);
  CHECK(res.classes[0].size == 6);
  CHECK(res.classes[1].size == 6);
  std::set<uint64_t> auts{res.classes[0].aut, res.classes[1].aut};
  CHECK(auts == std::set<uint64_t>{720, 120});
  CHECK(res.consistency_ok);
  // one class is the frame
  bool frame_found = false;
  for (const auto& c : res.classes)
    if (are_equivalent(c.representative, frame(4, 2))) frame_found = true;
  CHECK(frame_found);
}

TEST_CASE("classification of PG(3,3)") {
  auto res = classify_complete(3, 3);
  REQUIRE(res.classes.size() == 1);
  CHECK(res.classes[0].size == 5);
  CHECK(res.classes[0].aut == 120);
  CHECK(res.consistency_ok);
  CHECK(are_equivalent(res.classes[0].representative, frame(3, 3)));
  CHECK_THROWS(classify_complete(4, 3));  // out of scope
}

TEST_CASE("classification at the longer whitelisted parameters") {
  auto c34 = classify_complete(3, 4);
  REQUIRE(c34.classes.size() == 1);
  CHECK(c34.classes[0].size == 5);
  CHECK(c34.classes[0].aut == 120);
  CHECK(c34.consistency_ok);
  CHECK(are_equivalent(c34.classes[0].representative, twisted_cubic(4)));

  auto c35 = classify_complete(3, 5);
  REQUIRE(c35.classes.size() == 1);
  CHECK(c35.classes[0].size == 6);
  CHECK(c35.classes[0].aut == 120);
  CHECK(c35.consistency_ok);
  CHECK(are_equivalent(c35.classes[0].representative, twisted_cubic(5)));
}
