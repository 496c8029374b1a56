#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fourgen/projspace.hpp"

namespace fourgen {

// builds GF(q) for a prime power q, default modulus
FieldPtr field_for_q(uint32_t q);

// n+2 points: the unit points and the all-ones point
PointSet frame(int n, uint32_t q);

// q^2+1 points of x0 x1 = f(x2,x3) in PG(3,q), f the lexicographically first
// irreducible quadratic; a 4-general set only at q = 2
PointSet elliptic_quadric(uint32_t q);

struct CyclicModelSet {
  PointSet set;
  GfMatrix generator;  // cyclic projectivity acting regularly on the set
};

// the norm-one orbit in the cyclic model: q = 3 gives (3^d+1)/2 points of
// PG(2d-1,3) (d >= 2), q = 4 gives (2^{2d+1}+1)/3 points of PG(2d,4) (d >= 1)
CyclicModelSet cyclic_theta0_full(uint32_t d, uint32_t q);
PointSet cyclic_theta0(uint32_t d, uint32_t q);

// {(1, a, a^2)} flattened over GF(3): 3^d points of PG(2d,3), d >= 2
PointSet htw_y(uint32_t d);

// {P(x, alpha x^-2)} in the interleaved model of PG(2d-1,4); (4^d-1)/3 points
PointSet v_alpha(uint32_t d, Elem alpha = 1);
// the two parameter subspaces P(a,0) / P(0,b) of the same model
PointSet v_alpha_pi(uint32_t d, int which);
// the sets V_alpha together with the two subspaces partition the point set
bool v_alpha_partition_holds(uint32_t d);

// {(1, t, t^s, t^{s+1}) | t in GF(q)} + (0,0,0,1) with s = 2^h; q+1 points.
// h = 1 for every q; h > 1 needs q = 2^m with gcd(m,h) = 1
PointSet twisted_cubic(uint32_t q, uint32_t h = 1);

// the 7-point complete set of PG(3,8)
PointSet pg38_seven_set();

struct TripleCubic {
  PointSet set;          // 3(q+1) points of PG(5,q)
  GfMatrix gen_block;    // block generator of order 3
  GfMatrix gen_scaling;  // induced norm-one scaling of order q+1
  uint64_t group_order = 0;
};

// three twisted cubics glued along a common imaginary chord, q = 1 mod 3;
// asserts that the set is the orbit of its seed point under the two
// generators and that the group has order 3(q+1)
TripleCubic triple_cubic_full(uint32_t q);
PointSet triple_cubic(uint32_t q);

struct Pg62Detail {
  PointSet set;  // frame + the lexicographically first valid triple
  std::vector<std::array<uint64_t, 3>> valid_triples;  // point indices, ascending
};

// the 11-point completion of the PG(6,2) frame found by searching extension
// triples; every valid triple spans a plane inside the quadric of uncovered
// points (recorded, not hard-coded)
Pg62Detail pg62_example();

// named examples: "pg55" (28 points of PG(5,5)), "pg516" (82 points of
// PG(5,16), orbit of size 80 plus two points), "pg62"
PointSet named_example(const std::string& id);

// {(1, x, x^{q^2+q}, x^{q^2+q+1})} + (0,0,0,1) flattened to PG(7,q);
// q^3+1 points
PointSet set_O(uint32_t q);

// sizes of all hyperplane sections of set_O(q), with each section checked to
// carry no collinear triple or coplanar quadruple after re-coordinatization
std::map<size_t, size_t> o_hyperplane_sections(uint32_t q);

// affine representation of a (q^2+1)-arc of PG(3,q^2) with an external plane
// sent to infinity; q^2+1 points of AG(6,q) inside PG(6,q)
PointSet abb_arc(uint32_t q);

// the 23 columns of a parity check matrix of the binary [23,12,7] cyclic
// code, as points of PG(10,2); the generator polynomial is found by
// factoring X^23 - 1 in-code
PointSet golay_cap23();

// the second shell of a frame of PG(2d,2): the (2d+1)(d+1) off-frame points
// on secant lines, all inside one hyperplane
PointSet frame_secant_shadow(uint32_t d);

}  // namespace fourgen
