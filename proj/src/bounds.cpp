#include "fourgen/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace fourgen {

uint64_t ipow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (r > (1ull << 62) / (b ? b : 1)) throw std::overflow_error("q^(n+1) beyond desk scale");
    r *= b;
  }
  return r;
}

uint64_t isqrt_u64(uint64_t v) {
  uint64_t r = (uint64_t)std::sqrt((double)v);
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

namespace {

using i128 = __int128;

i128 cube(i128 x) { return x * x * x; }

// is t^3 - W <= c * W^(1/3), exactly
bool cube_le(i128 t, i128 W, i128 c) {
  i128 L = cube(t) - W;
  if (c >= 0) {
    if (L <= 0) return true;
    return cube(L) <= cube(c) * W;
  }
  if (L >= 0) return false;
  return cube(-L) >= cube(-c) * W;
}

}  // namespace

BoundValue m3_upper(int n, uint32_t q) {
  if (n < 2 || q < 2) throw std::invalid_argument("m3_upper needs n >= 2, q >= 2");
  const uint64_t qn1 = ipow_u64(q, (uint32_t)n + 1);
  const i128 R = (i128)8 * qn1 + (i128)q * q - 6 * (i128)q + 1;
  const int64_t c = (int64_t)q - 3;
  const int64_t D = 2 * ((int64_t)q - 1);

  // integer_bound = max m with (m*D - c)^2 <= R
  uint64_t m = (isqrt_u64((uint64_t)R) + (uint64_t)std::max<int64_t>(c, 0)) / (uint64_t)D + 2;
  auto fits = [&](uint64_t mm) {
    i128 t = (i128)mm * D - c;
    if (t < 0) return true;
    return t * t <= R;
  };
  while (m > 0 && !fits(m)) --m;

  BoundValue b;
  b.name = "m3_upper";
  b.n = n;
  b.q = q;
  b.real_value = (std::sqrt((double)(uint64_t)R) + (double)c) / (double)D;
  b.integer_bound = m;
  b.equality_case = (q == 2 && n == 3) || (q == 3 && n == 4);
  return b;
}

LowerBound t3_lower(int n, uint32_t q) {
  if (n < 2 || q < 2) throw std::invalid_argument("t3_lower needs n >= 2, q >= 2");
  const uint64_t qn1 = ipow_u64(q, (uint32_t)n + 1);
  const i128 W = (i128)6 * qn1 - (i128)q * q - q;
  const i128 c2 = (i128)q * q - 5 * (i128)q + 1;
  const int64_t qm1 = (int64_t)q - 1;
  const int64_t qm2 = (int64_t)q - 2;

  LowerBound out;
  // general: s <= bound  iff  (s(q-1) - (q-2))^3 <= W + c2 * W^(1/3)
  auto below_general = [&](uint64_t s) {
    i128 t = (i128)s * qm1 - qm2;
    if (t < 0) return true;
    return cube_le(t, W, c2);
  };
  uint64_t s = 1;
  while (below_general(s)) ++s;
  out.general.name = "t3_lower";
  out.general.n = n;
  out.general.q = q;
  const double w = (double)(uint64_t)W;
  out.general.real_value =
      (std::cbrt(w + (double)(int64_t)c2 * std::cbrt(w)) + qm2) / (double)qm1;
  out.general.integer_bound = s;

  const bool simplified_applies =
      q == 2 || q == 3 || q == 4 || (q == 5 && (n == 3 || n == 4));
  if (simplified_applies) {
    const i128 V = (i128)6 * qn1 - 1;
    auto below_simple = [&](uint64_t ss) { return cube((i128)ss * qm1) <= V; };
    uint64_t s2 = 1;
    while (below_simple(s2)) ++s2;
    BoundValue b;
    b.name = "t3_lower_simplified";
    b.n = n;
    b.q = q;
    b.real_value = std::cbrt((double)(uint64_t)V) / (double)qm1;
    b.integer_bound = s2;
    out.simplified = b;
  }

  out.effective = out.general;
  // The simplified radical overshoots the cubic's actual root at
  // (q,n) = (2,5): a 7-point complete set exists there, so only the general
  // expression is a valid lower bound at those parameters.
  if (out.simplified && !(q == 2 && n == 5) &&
      out.simplified->integer_bound > out.effective.integer_bound)
    out.effective = *out.simplified;
  out.effective.name = "t3_lower";
  return out;
}

BoundValue ag_upper(int n, uint32_t q) {
  if (n < 2 || q < 2) throw std::invalid_argument("ag_upper needs n >= 2, q >= 2");
  BoundValue b;
  b.name = "ag_upper";
  b.n = n;
  b.q = q;
  if (q == 2) {
    if (n % 2 == 1) {
      b.integer_bound = ipow_u64(2, (uint32_t)(n + 1) / 2) - 2;
      b.real_value = (double)b.integer_bound;
    } else {
      // floor(2^{(n+1)/2} + 1/2) - 2 computed as (isqrt(2^{n+3}) + 1) / 2 - 2
      b.integer_bound = (isqrt_u64(ipow_u64(2, (uint32_t)n + 3)) + 1) / 2 - 2;
      b.real_value = std::pow(2.0, (n + 1) / 2.0) + 0.5 - 2.0;
    }
  } else if (q == 3) {
    uint64_t p3n = ipow_u64(3, (uint32_t)n);
    uint64_t r = isqrt_u64(p3n);
    b.integer_bound = r * r == p3n ? r : r + 1;  // ceil(3^{n/2})
    b.real_value = std::pow(3.0, n / 2.0);
  } else {
    // 2 q^{n/2} / sqrt(q-2): the floor is the largest m with m^2 (q-2) <= 4 q^n
    uint64_t qn = ipow_u64(q, (uint32_t)n);
    i128 lim = (i128)4 * qn;
    uint64_t m = isqrt_u64((uint64_t)(4 * (double)qn / (q - 2))) + 2;
    while (m > 0 && (i128)m * m * (q - 2) > lim) --m;
    while ((i128)(m + 1) * (m + 1) * (q - 2) <= lim) ++m;
    b.integer_bound = m;
    b.real_value = 2.0 * std::pow((double)q, n / 2.0) / std::sqrt((double)q - 2.0);
  }
  return b;
}

std::vector<ReferenceValue> reference_values(int n, uint32_t q) {
  std::vector<ReferenceValue> out;
  if (n == 3) {
    if (q == 2 || q == 3) out.push_back({"M3(3,q)", true, 5});
    else out.push_back({"M3(3,q)", true, (uint64_t)q + 1});
  }
  if (n == 4) {
    // largest known NMDS-sets: q + ceil(2 sqrt(q)), plus one generically
    uint64_t c = isqrt_u64(4 * (uint64_t)q);
    if (c * c < 4 * (uint64_t)q) ++c;
    // exceptional case: q = p^r, r >= 3 odd, p divides ceil(2 sqrt q)
    uint32_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if ((uint64_t)p * p > q) p = q;  // q prime
    uint32_t r = 0;
    uint64_t acc = 1;
    while (acc < q) {
      acc *= p;
      ++r;
    }
    bool exceptional = acc == q && r >= 3 && r % 2 == 1 && c % p == 0;
    out.push_back({"M3(4,q) lower", false, (uint64_t)q + c + (exceptional ? 0 : 1)});
  }
  return out;
}

}  // namespace fourgen
