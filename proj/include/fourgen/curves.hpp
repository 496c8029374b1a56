#pragma once

#include <cstdint>
#include <vector>

#include "fourgen/projspace.hpp"

namespace fourgen {

// affine point count of X^2 Y + X Y^2 + X^2 + Y^2 + XY = 0 over GF(q),
// q even, q = 1 mod 3; equals q - 3
uint64_t cubic1_count(uint32_t q);

// affine point count of g(X^2 Y + X Y^2) + X^2 + X + Y^2 + Y + (g+1)XY = 0,
// g not in {0,1}; lands in [q - 2 sqrt(q) - 2, q + 2 sqrt(q) - 2]
uint64_t cubic2_count(uint32_t q, Elem gamma);

// Hermitian curves of PG(2, q^2): 3x3 matrices A over GF(q^2) with
// A^T = conj(A) entrywise (x -> x^q); the form evaluates as v^T A v^(q).
struct HermitianCurve {
  GfMatrix gram;   // over GF(q^2)
  size_t rank = 0;
};

struct NetProbeReport {
  uint32_t q = 0;
  uint64_t seed = 0;
  size_t nets_probed = 0;
  size_t empty_base_loci = 0;       // must stay 0
  // pencils with no rank-1 member and at least one nondegenerate member (the
  // hypothesis of the classical base-locus classification)
  std::vector<size_t> pencil_base_sizes;
  bool pencil_sizes_admissible = false;   // subset of the four closed forms
  bool pencils_have_enough_nondegenerate = false;  // >= q-2 rank-3 members each
  // pencils whose members are all cones fall outside that classification;
  // they are counted separately (their base locus has 2q^2+1 points)
  size_t all_degenerate_pencils = 0;
};

// Samples random nets of Hermitian curves containing a rank-2 and no rank-1
// member and intersects their zero sets; also sweeps random pencils with no
// rank-1 member and records base-locus sizes.  q in {3, 4}.
NetProbeReport hermitian_net_probe(uint32_t q, size_t trials, uint64_t seed);

}  // namespace fourgen
