#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace fourgen {

// Element of GF(p^k), encoded as an integer in [0, q): the base-p digits of
// the encoding are the coefficients of the residue polynomial, constant term
// first.  0 is the zero element, 1 the identity.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Polynomials over GF(p) on little-endian digit vectors. Used for modulus
// selection, irreducibility testing and the cyclic-code generator search.
namespace poly {

std::vector<uint32_t> from_encoding(uint64_t enc, uint32_t p);
uint64_t to_encoding(const std::vector<uint32_t>& f, uint32_t p);
int degree(const std::vector<uint32_t>& f);
std::vector<uint32_t> mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, uint32_t p);
// remainder of a modulo b, b nonzero
std::vector<uint32_t> mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p);
bool divides(const std::vector<uint32_t>& d, const std::vector<uint32_t>& a, uint32_t p);
bool is_irreducible(const std::vector<uint32_t>& f, uint32_t p);

}  // namespace poly

// Exact arithmetic in GF(p^k) for p prime, k >= 1, q = p^k <= 2^20.
// Multiplicative structure lives in exp/log tables for a fixed generator
// omega; the residue of X is taken as omega whenever it is primitive.
// Immutable after construction, safe for shared concurrent reads.
class Field {
public:
  // modulus, when given, encodes a monic irreducible degree-k polynomial
  // over GF(p) (little-endian base-p digits).  When omitted, the smallest
  // such encoding whose residue X is primitive is chosen deterministically.
  static FieldPtr make(uint32_t p, uint32_t k, std::optional<uint32_t> modulus = std::nullopt);

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }
  uint32_t modulus() const { return modulus_; }
  Elem omega() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const {
    return p_ == 2 ? (a ^ b) : add_general(a, b);
  }
  Elem neg(Elem a) const { return p_ == 2 ? a : neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;                 // throws on a == 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;    // a == 0 requires e >= 0
  Elem frobenius(Elem a, uint32_t j) const;  // a^(p^j)

  // discrete log w.r.t. omega; a != 0
  uint32_t log(Elem a) const;
  // omega^e, e arbitrary non-negative
  Elem exp(uint64_t e) const { return exp_[e % (q_ - 1)]; }

  uint64_t element_order(Elem a) const;   // a != 0
  bool same_field(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  // header line used by the point-set file format
  std::string header_line() const;

private:
  Field() = default;
  Elem add_general(Elem a, Elem b) const;

  uint32_t p_ = 0, k_ = 0, q_ = 0;
  uint32_t modulus_ = 0;
  std::vector<Elem> exp_;   // size 2(q-1), doubled so mul skips the reduction
  std::vector<uint32_t> log_;
  std::vector<Elem> neg_;
  std::vector<uint64_t> ppow_;  // p^0 .. p^k
};

// Injective field homomorphism GF(p^j) -> GF(p^K), j | K.  The image is the
// set of solutions of x^(q_small) = x; among the conjugate roots of the small
// modulus the one with least discrete log is chosen, so the map is canonical.
class SubfieldMap {
public:
  static SubfieldMap make(FieldPtr big, FieldPtr small);
  Elem to_big(Elem small_e) const { return fwd_[small_e]; }
  // inverse on the image; throws if big_e is not in the image
  Elem to_small(Elem big_e) const;
  bool in_image(Elem big_e) const { return back_.count(big_e) != 0; }
  const FieldPtr& big() const { return big_; }
  const FieldPtr& small() const { return small_; }

private:
  FieldPtr big_, small_;
  std::vector<Elem> fwd_;
  std::unordered_map<Elem, Elem> back_;
};

// Coordinates of GF(p^K) as a vector space over the subfield GF(p^j) with
// respect to a chosen basis.  flatten(x) returns c with x = sum c_i basis_i.
class Flattener {
public:
  static Flattener make(FieldPtr big, FieldPtr small, std::vector<Elem> basis);
  // convenience: basis (1, w, ..., w^{m-1}) for w = big->omega()
  static Flattener power_basis(FieldPtr big, FieldPtr small);

  std::vector<Elem> flatten(Elem x) const;
  Elem unflatten(const std::vector<Elem>& c) const;
  size_t dim() const { return m_; }
  const SubfieldMap& embedding() const { return emb_; }
  const std::vector<Elem>& basis() const { return basis_; }

private:
  Flattener(SubfieldMap emb, std::vector<Elem> basis);
  SubfieldMap emb_;
  std::vector<Elem> basis_;
  size_t m_ = 0, kp_ = 0;        // m = number of coords, kp = digits per coord
  uint32_t bigk_ = 0;
  std::vector<uint32_t> solve_;  // inverse of the GF(p) change-of-basis matrix, row-major
};

bool is_prime_u32(uint32_t n);
std::vector<uint64_t> prime_factors(uint64_t n);

}  // namespace fourgen
