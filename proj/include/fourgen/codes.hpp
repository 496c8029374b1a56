#pragma once

#include <string>

#include "fourgen/projspace.hpp"

namespace fourgen {

// Linear-code view of a point set: the points are the columns of a parity
// check matrix of an [N, N-(n+1), d]_q code with covering radius rho.
struct CodeParams {
  uint64_t length = 0;     // N = |x|
  uint64_t dimension = 0;  // N - (n+1)
  int min_distance = 0;
  int covering_radius = 0;
  uint32_t q = 0;
  std::string exception;   // set for the d = 7 sporadic cases
};

// (n+1) x N matrix whose columns are the point representatives in set order;
// the set must span the space
GfMatrix parity_check(const PointSet& x);

// smallest w such that some w columns are linearly dependent; searched in
// stages w = 1..7 ((w-1)-subsets kept independent by construction, so a hit
// is a column inside the span of an independent subset).  Throws when the
// distance exceeds 7.
int min_distance(const GfMatrix& h);

// smallest rho with every syndrome a combination of at most rho columns,
// by breadth-first closure over the q^rows syndrome space
int covering_radius(const GfMatrix& h);

CodeParams code_params(const PointSet& x);

}  // namespace fourgen
