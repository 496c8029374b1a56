#pragma once

#include <cstdint>
#include <vector>

#include "fourgen/genset.hpp"
#include "fourgen/projspace.hpp"

namespace fourgen {

enum class CandidateOrder { Lex, Random };

// add extension points until none remain: lex takes the least point index,
// random draws uniformly from the candidates with the given seed.  An empty
// input is seeded with the frame of its space.
PointSet greedy_complete(const PointSet& x, CandidateOrder order = CandidateOrder::Lex,
                         uint64_t seed = 0);

struct MaxSizeResult {
  uint64_t max_size = 0;
  PointSet witness;
  bool proven = false;  // false when the time budget ran out first
  uint64_t nodes = 0;
};

// exact maximum size of a 4-general set by branch and bound over sets
// containing a fixed independent triple (every class has such a member),
// cut by the closed-form upper bound; whitelisted small parameters only
MaxSizeResult max_size(int n, uint32_t q, double budget_sec = 60.0);

struct ClassInfo {
  PointSet representative;
  uint64_t size = 0;
  uint64_t aut = 0;
  uint64_t labeled_copies = 0;        // |PGL(n+1,q)| / aut
  uint64_t basis_rooted_found = 0;    // complete supersets of the unit basis in this class
  uint64_t basis_rooted_predicted = 0;  // from the orbit-stabilizer equation
};

struct ClassificationResult {
  std::vector<ClassInfo> classes;  // ordered by (size, first found)
  uint64_t pgl = 0;
  bool consistency_ok = false;  // found == predicted for every class
};

// all complete 4-general sets up to projective equivalence, by exhausting
// complete supersets of the unit basis (every spanning set contains a basis,
// and PGL is transitive on unordered bases).  Whitelist: (3,2), (4,2), (3,3)
// and the longer (5,2), (3,4), (3,5).
ClassificationResult classify_complete(int n, uint32_t q);

// test oracle: complete 4-general sets by size, by plain exhaustion over all
// subsets; feasible for tiny spaces only
std::vector<std::pair<uint64_t, uint64_t>> enumerate_complete_sets_bruteforce(int n, uint32_t q);

}  // namespace fourgen
