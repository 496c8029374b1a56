#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fourgen {

// A closed-form bound evaluated exactly: the integer_bound is bit-exact
// (computed from integer comparisons under the radicals, never from floating
// point); real_value is a display approximation only.
struct BoundValue {
  std::string name;
  int n = 0;
  uint32_t q = 0;
  double real_value = 0.0;
  uint64_t integer_bound = 0;
  bool equality_case = false;
};

// largest size of a 4-general set of PG(n,q):
// (sqrt(8q^{n+1} + q^2 - 6q + 1) + q - 3) / (2(q-1)), floored.
// equality_case marks (q,n) in {(2,3),(3,4)}, attained by the elliptic
// quadric and the 11-cap.
BoundValue m3_upper(int n, uint32_t q);

struct LowerBound {
  BoundValue general;                   // nested cube-root expression
  std::optional<BoundValue> simplified; // cbrt(6q^{n+1}-1)/(q-1) where applicable
  BoundValue effective;                 // the stronger valid bound
};

// every complete 4-general set of PG(n,q) has size strictly above the bound;
// integer_bound is the least admissible size
LowerBound t3_lower(int n, uint32_t q);

// size bound for 4-general sets of AG(n,q), by the four parameter cases
BoundValue ag_upper(int n, uint32_t q);

struct ReferenceValue {
  std::string name;
  bool exact = false;  // exact value vs lower bound
  uint64_t value = 0;
};

// known exact values and lower bounds applicable to (n, q)
std::vector<ReferenceValue> reference_values(int n, uint32_t q);

// exact helpers (also used by tests)
uint64_t ipow_u64(uint64_t b, uint32_t e);  // throws on overflow past 2^62
uint64_t isqrt_u64(uint64_t v);

}  // namespace fourgen
