#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourgen/projspace.hpp"

namespace fourgen {

// Witness of a failed property.  For "collinear"/"coplanar" the entries are
// positions within the point set; for "uncovered" they are space point
// indices that no secant line or trisecant plane reaches.
struct Violation {
  std::string kind;
  std::vector<uint64_t> points;
};

struct VerifyReport {
  uint64_t size = 0;
  bool spans_space = false;
  bool is_cap = false;
  bool is_4general = false;
  std::optional<bool> is_complete;
  std::optional<uint64_t> covered_count;
  std::vector<Violation> violations;  // truncated at 10 entries
};

// A set is 4-general when it spans PG(n,q), no three points are collinear and
// no four are coplanar.  For a cap the last condition is equivalent to no two
// secant lines meeting off the set, which is what the scoreboard below
// checks in O(k^2 q) instead of O(k^4) rank tests.
VerifyReport verify_4general(const PointSet& x);

// Completeness (no extension point exists) is equivalent, for spanning
// 4-general sets with at least 3 points, to every point of the space lying
// on the set, on a secant line, or on a plane through three set points.
VerifyReport verify_complete(const PointSet& x);

// covered[i] != 0 iff space point i lies on x, a secant of x, or a plane
// spanned by a triple of x
std::vector<char> coverage_mask(const PointSet& x);

// exactly the points P not in x with x + P still 4-general; empty iff x is
// complete.  Requires x 4-general.
std::vector<Point> extension_candidates(const PointSet& x);

struct AutResult {
  uint64_t order = 0;
  bool computable = true;
  std::string method;  // "frame", "frame+frobenius" or "brute"
};

// order of the setwise stabilizer of x in PGL(n+1,q); with semilinear set,
// the stabilizer in PGammaL(n+1,q) (projectivities composed with field
// automorphisms)
AutResult aut_order(const PointSet& x, bool semilinear = false);

// number of projectivities g with g(from) == to; stop_at_first short-circuits
// to 0/1 for plain equivalence testing
uint64_t count_projectivities(const PointSet& from, const PointSet& to, bool stop_at_first);
bool are_equivalent(const PointSet& a, const PointSet& b);

// coordinatewise p-th power, a semilinear collineation generator
PointSet frobenius_image(const PointSet& x);

// |PGL(d, q)| for d = n+1; throws when it does not fit 64 bits
uint64_t pgl_order(uint32_t d, uint32_t q);

// lexicographically first n+2 positions of x forming a frame, or empty
std::vector<size_t> first_frame_in(const PointSet& x);

struct SecantGraph {
  std::vector<std::pair<uint32_t, uint32_t>> lines;  // position pairs, i < j
  size_t vertex_count = 0;
  size_t degree = 0;              // 2(k-2) for the triangular graph
  int64_t lambda = -1, mu = -1;   // common neighbours on edges / non-edges
  bool regular = false;
  bool adjacency_is_point_sharing = false;  // geometric intersection == index sharing
  bool triangular_parameters = false;       // (C(k,2), 2(k-2), k-2, 4)
};

// graph on the secant lines of a 4-general set, adjacency by nontrivial line
// intersection; |x| >= 4 required
SecantGraph secant_graph(const PointSet& x);

struct NmdsReport {
  bool every_4_span_solid = false;   // cond i
  bool some_5_in_solid = false;      // cond ii
  bool every_6_span_space = false;   // cond iii
  bool is_nmds = false;
};

// the three defining conditions for an NMDS-set of PG(4,q)
NmdsReport nmds_check(const PointSet& x);

}  // namespace fourgen
