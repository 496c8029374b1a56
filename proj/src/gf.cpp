#include "fourgen/gf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fourgen {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace poly {

std::vector<uint32_t> from_encoding(uint64_t enc, uint32_t p) {
  std::vector<uint32_t> f;
  while (enc) {
    f.push_back((uint32_t)(enc % p));
    enc /= p;
  }
  return f;
}

uint64_t to_encoding(const std::vector<uint32_t>& f, uint32_t p) {
  uint64_t enc = 0;
  for (size_t i = f.size(); i-- > 0;) enc = enc * p + f[i];
  return enc;
}

int degree(const std::vector<uint32_t>& f) {
  for (size_t i = f.size(); i-- > 0;)
    if (f[i]) return (int)i;
  return -1;
}

static void trim(std::vector<uint32_t>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<uint32_t> mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (uint32_t)((c[i + j] + (uint64_t)a[i] * b[j]) % p);
  }
  trim(c);
  return c;
}

std::vector<uint32_t> mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
  int db = degree(b);
  if (db < 0) throw std::invalid_argument("poly::mod by zero");
  uint32_t lead = b[db];
  // lead^-1 mod p
  uint32_t li = 1;
  for (uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) li = (uint32_t)((uint64_t)li * lead % p);
    lead = (uint32_t)((uint64_t)lead * lead % p);
  }
  lead = b[db];
  trim(a);
  while (degree(a) >= db) {
    int da = degree(a);
    uint32_t f = (uint32_t)((uint64_t)a[da] * li % p);
    for (int i = 0; i <= db; ++i) {
      uint64_t sub = (uint64_t)f * b[i] % p;
      a[da - db + i] = (uint32_t)((a[da - db + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool divides(const std::vector<uint32_t>& d, const std::vector<uint32_t>& a, uint32_t p) {
  return degree(mod(a, d, p)) < 0;
}

bool is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
  int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  if (f[0] == 0) return false;  // divisible by X
  // trial division by all monic polynomials of degree <= d/2
  for (int e = 1; e <= d / 2; ++e) {
    uint64_t lo = 1, hi = 1;
    for (int i = 0; i < e; ++i) lo *= p;
    hi = lo * p;
    for (uint64_t enc = lo; enc < hi; ++enc) {
      auto g = from_encoding(enc, p);
      if ((int)g.size() - 1 != e || g.back() != 1) continue;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace poly

namespace {

// order of the residue class `a` in GF(p)[X]/(f), a nonzero
uint64_t residue_order(const std::vector<uint32_t>& a, const std::vector<uint32_t>& f,
                       uint32_t p, uint64_t group_order,
                       const std::vector<uint64_t>& factors) {
  auto powmod = [&](std::vector<uint32_t> base, uint64_t e) {
    std::vector<uint32_t> r{1};
    while (e) {
      if (e & 1) r = poly::mod(poly::mul(r, base, p), f, p);
      base = poly::mod(poly::mul(base, base, p), f, p);
      e >>= 1;
    }
    return r;
  };
  std::vector<uint32_t> one{1};
  if (powmod(a, group_order) != one) return 0;  // not a unit of full-group order divisor (can't happen in a field)
  uint64_t ord = group_order;
  for (uint64_t fac : factors) {
    while (ord % fac == 0 && powmod(a, ord / fac) == one) ord /= fac;
  }
  return ord;
}

}  // namespace

FieldPtr Field::make(uint32_t p, uint32_t k, std::optional<uint32_t> modulus) {
  if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 20)) throw std::invalid_argument("fields beyond q = 2^20 are not supported");
  }

  const uint64_t pk = q;  // lowest monic degree-k encoding is p^k == q

  const uint64_t group = q - 1;
  const auto factors = group > 1 ? prime_factors(group) : std::vector<uint64_t>{};
  std::vector<uint32_t> f;

  auto x_residue = [&](const std::vector<uint32_t>& ff) {
    return poly::mod(std::vector<uint32_t>{0, 1}, ff, p);
  };

  if (modulus) {
    if (*modulus < pk || *modulus >= pk * p)
      throw std::invalid_argument("modulus must encode a monic degree-k polynomial");
    f = poly::from_encoding(*modulus, p);
    if (f.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (k > 1 && !poly::is_irreducible(f, p))
      throw std::invalid_argument("modulus is reducible over GF(p)");
  } else {
    // smallest encoding whose residue X is primitive; plain smallest
    // irreducible (plus generator search below) as fallback
    uint64_t fallback = 0;
    for (uint64_t enc = pk; enc < pk * p; ++enc) {
      auto cand = poly::from_encoding(enc, p);
      if (k > 1 && !poly::is_irreducible(cand, p)) continue;
      if (!fallback) fallback = enc;
      auto xr = x_residue(cand);
      if (poly::degree(xr) < 0) continue;  // X == 0, not a unit
      if (group == 1 || residue_order(xr, cand, p, group, factors) == group) {
        f = cand;
        break;
      }
    }
    if (f.empty()) {
      if (!fallback) throw std::runtime_error("no irreducible modulus found");
      f = poly::from_encoding(fallback, p);
    }
  }

  // pick the generator: the residue of X when primitive, else the smallest
  // element (by encoding) of multiplicative order q-1
  std::vector<uint32_t> gen = x_residue(f);
  bool x_primitive =
      poly::degree(gen) >= 0 && (group == 1 || residue_order(gen, f, p, group, factors) == group);
  if (!x_primitive) {
    gen.clear();
    for (uint64_t enc = 1; enc < q; ++enc) {
      auto cand = poly::from_encoding(enc, p);
      if (group == 1 || residue_order(cand, f, p, group, factors) == group) {
        gen = cand;
        break;
      }
    }
    if (gen.empty()) throw std::runtime_error("no generator found");
  }

  auto fld = std::shared_ptr<Field>(new Field());
  fld->p_ = p;
  fld->k_ = k;
  fld->q_ = (uint32_t)q;
  fld->modulus_ = (uint32_t)poly::to_encoding(f, p);
  fld->ppow_.resize(k + 1);
  fld->ppow_[0] = 1;
  for (uint32_t i = 1; i <= k; ++i) fld->ppow_[i] = fld->ppow_[i - 1] * p;

  fld->exp_.assign(group > 0 ? 2 * group : 2, 1);
  fld->log_.assign(q, 0);
  std::vector<uint32_t> acc{1};
  for (uint64_t i = 0; i < group; ++i) {
    Elem enc = (Elem)poly::to_encoding(acc, p);
    fld->exp_[i] = enc;
    fld->exp_[i + group] = enc;
    fld->log_[enc] = (uint32_t)i;
    acc = poly::mod(poly::mul(acc, gen, p), f, p);
  }
  if (poly::to_encoding(acc, p) != 1)
    throw std::runtime_error("generator order mismatch while building tables");

  fld->neg_.assign(q, 0);
  for (uint64_t v = 0; v < q; ++v) {
    uint64_t r = 0, vv = v;
    for (uint32_t i = 0; i < k; ++i) {
      uint32_t d = (uint32_t)(vv % p);
      vv /= p;
      r += (uint64_t)((p - d) % p) * fld->ppow_[i];
    }
    fld->neg_[v] = (Elem)r;
  }
  return fld;
}

Elem Field::add_general(Elem a, Elem b) const {
  Elem r = 0;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t da = (uint32_t)(a / ppow_[i] % p_);
    uint32_t db = (uint32_t)(b / ppow_[i] % p_);
    r += (Elem)((da + db) % p_ * ppow_[i]);
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inversion of zero in GF(q)");
  if (q_ == 2) return 1;
  return exp_[(q_ - 1) - log_[a]];
}

Elem Field::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw std::domain_error("zero raised to a negative power");
  }
  long long g = (long long)(q_ - 1);
  long long r = ((long long)log_[a] * (e % g)) % g;
  if (r < 0) r += g;
  return exp_[(size_t)r];
}

Elem Field::frobenius(Elem a, uint32_t j) const {
  if (a == 0) return 0;
  uint64_t e = 1, g = q_ - 1;
  for (uint32_t i = 0; i < j; ++i) e = e * p_ % g;
  return exp_[(uint64_t)log_[a] * e % g];
}

uint32_t Field::log(Elem a) const {
  if (a == 0 || a >= q_) throw std::domain_error("log of zero or out-of-range element");
  return log_[a];
}

uint64_t Field::element_order(Elem a) const {
  if (a == 0) throw std::domain_error("order of zero");
  uint64_t g = q_ - 1;
  if (g == 0) return 1;
  return g / std::gcd(g, (uint64_t)log_[a]);
}

std::string Field::header_line() const {
  return "field p=" + std::to_string(p_) + " k=" + std::to_string(k_) +
         " modulus=" + std::to_string(modulus_);
}

SubfieldMap SubfieldMap::make(FieldPtr big, FieldPtr small) {
  if (!big || !small) throw std::invalid_argument("null field");
  if (big->p() != small->p()) throw std::invalid_argument("subfield must share the characteristic");
  if (big->k() % small->k() != 0)
    throw std::invalid_argument("subfield degree must divide the extension degree");

  SubfieldMap m;
  m.big_ = big;
  m.small_ = small;
  m.fwd_.assign(small->q(), 0);

  if (big->q() == small->q() && big->modulus() == small->modulus()) {
    for (Elem e = 0; e < small->q(); ++e) m.fwd_[e] = e;
  } else if (small->k() == 1) {
    // prime subfield: e maps to the e-fold sum of the identity
    for (Elem e = 0; e < small->q(); ++e) {
      Elem acc = 0;
      for (Elem r = 0; r < e; ++r) acc = big->add(acc, 1);
      m.fwd_[e] = acc;
    }
  } else {
    // the image of the small generator is a root of the small modulus inside
    // the (q_s - 1)-element subgroup; take the root of least discrete log
    auto modpoly = poly::from_encoding(small->modulus(), small->p());
    const uint64_t step = (uint64_t)(big->q() - 1) / (small->q() - 1);
    Elem xroot = 0;
    for (uint64_t t = 0; t < small->q() - 1; ++t) {
      Elem cand = big->exp(t * step);
      // evaluate the small modulus at cand inside the big field
      Elem v = 0;
      Elem cp = 1;
      for (uint32_t i = 0; i < modpoly.size(); ++i) {
        if (modpoly[i]) {
          Elem coeff = 0;
          for (uint32_t r = 0; r < modpoly[i]; ++r) coeff = big->add(coeff, 1);
          v = big->add(v, big->mul(coeff, cp));
        }
        cp = big->mul(cp, cand);
      }
      if (v == 0) {
        xroot = cand;
        break;
      }
    }
    if (xroot == 0) throw std::runtime_error("no root of the small modulus found in the big field");
    // phi is determined by X_small -> xroot; express every small element in
    // the polynomial basis and push the digits through
    for (Elem e = 0; e < small->q(); ++e) {
      Elem acc = 0, xp = 1;
      Elem rem = e;
      for (uint32_t i = 0; i < small->k(); ++i) {
        uint32_t d = rem % small->p();
        rem /= small->p();
        if (d) {
          Elem coeff = 0;
          for (uint32_t r = 0; r < d; ++r) coeff = big->add(coeff, 1);
          acc = big->add(acc, big->mul(coeff, xp));
        }
        xp = big->mul(xp, xroot);
      }
      m.fwd_[e] = acc;
    }
  }
  for (Elem e = 0; e < small->q(); ++e) m.back_[m.fwd_[e]] = e;
  if (m.back_.size() != small->q()) throw std::runtime_error("subfield embedding is not injective");
  return m;
}

Elem SubfieldMap::to_small(Elem big_e) const {
  auto it = back_.find(big_e);
  if (it == back_.end()) throw std::domain_error("element is not in the subfield image");
  return it->second;
}

Flattener::Flattener(SubfieldMap emb, std::vector<Elem> basis)
    : emb_(std::move(emb)), basis_(std::move(basis)) {}

Flattener Flattener::make(FieldPtr big, FieldPtr small, std::vector<Elem> basis) {
  SubfieldMap emb = SubfieldMap::make(big, small);
  const uint32_t p = big->p();
  const uint32_t K = big->k();
  const size_t m = basis.size();
  const size_t kp = small->k();
  if (m * kp != K) throw std::invalid_argument("basis size must equal the extension degree ratio");

  Flattener fl(std::move(emb), std::move(basis));
  fl.m_ = m;
  fl.kp_ = kp;
  fl.bigk_ = K;

  // change of basis over GF(p): column (i*kp + j) holds the digits of
  // basis_i * phi(X_small^j)
  std::vector<uint32_t> mat(K * 2 * K, 0);  // augmented [T | I]
  auto at = [&](size_t r, size_t c) -> uint32_t& { return mat[r * 2 * K + c]; };
  // element that the polynomial X reduces to in the small field
  const Elem xres = small->k() == 1 ? small->neg((Elem)(small->modulus() % small->p()))
                                    : (Elem)small->p();
  for (size_t i = 0; i < m; ++i) {
    Elem xs = 1;  // X_small^j as a small-field element
    for (size_t j = 0; j < kp; ++j) {
      Elem prod = big->mul(fl.basis_[i], fl.emb_.to_big(xs));
      for (uint32_t r = 0; r < K; ++r) {
        uint64_t pr = 1;
        for (uint32_t t = 0; t < r; ++t) pr *= p;
        at(r, i * kp + j) = (uint32_t)(prod / pr % p);
      }
      xs = small->mul(xs, xres);
    }
  }
  for (uint32_t r = 0; r < K; ++r) at(r, K + r) = 1;

  // Gauss-Jordan over GF(p)
  auto inv_mod_p = [&](uint32_t a) {
    uint32_t r = 1, b = a;
    for (uint32_t e = p - 2; e; e >>= 1) {
      if (e & 1) r = (uint32_t)((uint64_t)r * b % p);
      b = (uint32_t)((uint64_t)b * b % p);
    }
    return r;
  };
  for (uint32_t col = 0, row = 0; col < K; ++col, ++row) {
    uint32_t piv = row;
    while (piv < K && at(piv, col) == 0) ++piv;
    if (piv == K) throw std::invalid_argument("flattening basis is linearly dependent");
    if (piv != row)
      for (uint32_t c = 0; c < 2 * K; ++c) std::swap(at(piv, c), at(row, c));
    uint32_t li = inv_mod_p(at(row, col));
    for (uint32_t c = 0; c < 2 * K; ++c) at(row, c) = (uint32_t)((uint64_t)at(row, c) * li % p);
    for (uint32_t r = 0; r < K; ++r) {
      if (r == row || at(r, col) == 0) continue;
      uint32_t fmul = at(r, col);
      for (uint32_t c = 0; c < 2 * K; ++c)
        at(r, c) = (uint32_t)((at(r, c) + (uint64_t)(p - fmul) * at(row, c)) % p);
    }
  }
  fl.solve_.assign(K * K, 0);
  for (uint32_t r = 0; r < K; ++r)
    for (uint32_t c = 0; c < K; ++c) fl.solve_[r * K + c] = at(r, K + c);
  return fl;
}

Flattener Flattener::power_basis(FieldPtr big, FieldPtr small) {
  size_t m = big->k() / small->k();
  std::vector<Elem> basis(m);
  Elem w = 1;
  for (size_t i = 0; i < m; ++i) {
    basis[i] = w;
    w = big->mul(w, big->omega());
  }
  return make(std::move(big), std::move(small), std::move(basis));
}

std::vector<Elem> Flattener::flatten(Elem x) const {
  const auto& big = emb_.big();
  const uint32_t p = big->p();
  const uint32_t K = bigk_;
  std::vector<uint32_t> digits(K);
  uint64_t v = x;
  for (uint32_t i = 0; i < K; ++i) {
    digits[i] = (uint32_t)(v % p);
    v /= p;
  }
  std::vector<Elem> out(m_, 0);
  const auto& small = emb_.small();
  for (size_t i = 0; i < m_; ++i) {
    Elem enc = 0;
    uint64_t pw = 1;
    for (size_t j = 0; j < kp_; ++j) {
      uint32_t d = 0;
      const uint32_t row0 = (uint32_t)(i * kp_ + j);
      for (uint32_t c = 0; c < K; ++c)
        d = (uint32_t)((d + (uint64_t)solve_[row0 * K + c] * digits[c]) % p);
      enc += (Elem)(d * pw);
      pw *= p;
    }
    // enc holds GF(p)-digits w.r.t. the polynomial basis of the small field;
    // that is exactly the small-field encoding
    (void)small;
    out[i] = enc;
  }
  return out;
}

Elem Flattener::unflatten(const std::vector<Elem>& c) const {
  if (c.size() != m_) throw std::invalid_argument("coordinate tuple has the wrong length");
  const auto& big = emb_.big();
  Elem acc = 0;
  for (size_t i = 0; i < m_; ++i) acc = big->add(acc, big->mul(emb_.to_big(c[i]), basis_[i]));
  return acc;
}

}  // namespace fourgen
