#include "fourgen/curves.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "fourgen/bounds.hpp"
#include "fourgen/constructions.hpp"

namespace fourgen {

uint64_t cubic1_count(uint32_t q) {
  auto F = field_for_q(q);
  if (F->p() != 2 || q % 3 != 1)
    throw std::invalid_argument("cubic1 needs q even with q = 1 mod 3");
  uint64_t count = 0;
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) {
      Elem x2 = F->mul(x, x), y2 = F->mul(y, y);
      Elem v = F->add(F->add(F->mul(x2, y), F->mul(x, y2)),
                      F->add(F->add(x2, y2), F->mul(x, y)));
      if (v == 0) ++count;
    }
  if (count != q - 3) throw std::runtime_error("cubic1: point count differs from q - 3");
  return count;
}

uint64_t cubic2_count(uint32_t q, Elem gamma) {
  auto F = field_for_q(q);
  if (F->p() != 2 || q % 3 != 1)
    throw std::invalid_argument("cubic2 needs q even with q = 1 mod 3");
  if (gamma == 0 || gamma == 1 || gamma >= q)
    throw std::invalid_argument("gamma must avoid {0, 1}");
  uint64_t count = 0;
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y) {
      Elem x2 = F->mul(x, x), y2 = F->mul(y, y);
      Elem v = F->mul(gamma, F->add(F->mul(x2, y), F->mul(x, y2)));
      v = F->add(v, F->add(F->add(x2, x), F->add(y2, y)));
      v = F->add(v, F->mul(F->add(gamma, 1), F->mul(x, y)));
      if (v == 0) ++count;
    }
  // Hasse-type window with 2 sqrt(q) exact for the q used here
  uint64_t root = isqrt_u64(q);
  if (root * root != q) throw std::invalid_argument("cubic2 expects a square q");
  int64_t lo = (int64_t)q - 2 * (int64_t)root - 2;
  int64_t hi = (int64_t)q + 2 * (int64_t)root - 2;
  if ((int64_t)count < lo || (int64_t)count > hi)
    throw std::runtime_error("cubic2: point count escapes the Hasse window");
  return count;
}

namespace {

struct HermitianModel {
  FieldPtr big;    // GF(q^2)
  uint32_t q;
  ProjSpace plane; // PG(2, q^2)
  std::vector<Point> points;

  explicit HermitianModel(uint32_t q_) : q(q_) {
    auto S = field_for_q(q_);
    big = Field::make(S->p(), 2 * S->k());
    plane = ProjSpace(2, big);
    points = enumerate_points(plane);
  }

  Elem conj(Elem x) const { return big->pow(x, q); }

  // v^T A v^(q)
  Elem eval(const GfMatrix& a, const Point& p) const {
    Elem acc = 0;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        acc = big->add(acc, big->mul(p.coords[i], big->mul(a.at(i, j), conj(p.coords[j]))));
    return acc;
  }

  bool is_hermitian(const GfMatrix& a) const {
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        if (a.at(j, i) != conj(a.at(i, j))) return false;
    return true;
  }

  // random Hermitian matrix: diagonal from the subfield, upper triangle free
  GfMatrix random_hermitian(std::mt19937_64& rng) const {
    GfMatrix a(3, 3, big);
    const uint32_t Q2 = big->q();
    for (size_t i = 0; i < 3; ++i) {
      Elem d;
      do {
        d = (Elem)(rng() % Q2);
      } while (conj(d) != d);
      a.at(i, i) = d;
    }
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = i + 1; j < 3; ++j) {
        Elem e = (Elem)(rng() % Q2);
        a.at(i, j) = e;
        a.at(j, i) = conj(e);
      }
    return a;
  }

  GfMatrix combine(const std::vector<const GfMatrix*>& mats, const std::vector<Elem>& coef) const {
    GfMatrix r(3, 3, big);
    for (size_t t = 0; t < mats.size(); ++t) {
      if (!coef[t]) continue;
      for (size_t i = 0; i < 9; ++i) r.a[i] = big->add(r.a[i], big->mul(coef[t], mats[t]->a[i]));
    }
    return r;
  }
};

// GF(q)-linear independence of Hermitian matrices, via their entries over
// GF(p) (a GF(q)-combination vanishing is the same as a GF(p)-one after
// expanding coefficients; here we test directly over GF(q) embedded)
bool independent_over_subfield(const HermitianModel& m, const std::vector<const GfMatrix*>& mats,
                               const SubfieldMap& emb) {
  const uint32_t q = m.q;
  // brute force: any nontrivial combination with subfield coefficients zero?
  std::vector<Elem> coef(mats.size(), 0);
  size_t total = 1;
  for (size_t i = 0; i < mats.size(); ++i) total *= q;
  for (size_t code = 1; code < total; ++code) {
    size_t c = code;
    for (size_t i = 0; i < mats.size(); ++i) {
      coef[i] = emb.to_big((Elem)(c % q));
      c /= q;
    }
    GfMatrix comb = m.combine(mats, coef);
    bool zero = true;
    for (Elem e : comb.a)
      if (e) zero = false;
    if (zero) return false;
  }
  return true;
}

}  // namespace

NetProbeReport hermitian_net_probe(uint32_t q, size_t trials, uint64_t seed) {
  if (q != 3 && q != 4) throw std::invalid_argument("net probe supports q in {3, 4}");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  HermitianModel m(q);
  auto small = field_for_q(q);
  auto emb = SubfieldMap::make(m.big, small);
  std::mt19937_64 rng(seed);

  NetProbeReport rep;
  rep.q = q;
  rep.seed = seed;
  rep.pencil_sizes_admissible = true;
  rep.pencils_have_enough_nondegenerate = true;

  const std::set<size_t> admissible = {(size_t)q * q - q + 1, (size_t)q * q + 1,
                                       (size_t)q * q + q + 1, (size_t)q * q + 2 * q + 1};

  // subfield coefficient tuples (a,b) and (a,b,c), nonzero
  auto subfield_elems = [&]() {
    std::vector<Elem> v;
    for (Elem e = 0; e < q; ++e) v.push_back(emb.to_big(e));
    return v;
  }();

  size_t net_done = 0, pencil_done = 0;
  size_t attempts = 0;
  const size_t max_attempts = 2000 * trials;
  while ((net_done < trials || pencil_done < trials) && attempts < max_attempts) {
    ++attempts;
    GfMatrix A = m.random_hermitian(rng);
    GfMatrix B = m.random_hermitian(rng);
    GfMatrix C = m.random_hermitian(rng);

    if (pencil_done < trials) {
      // pencil through A, B with no rank-1 member
      std::vector<const GfMatrix*> mats{&A, &B};
      if (independent_over_subfield(m, mats, emb)) {
        bool has_rank1 = false;
        size_t nondeg = 0;
        std::vector<GfMatrix> members;
        for (Elem a = 0; a < q; ++a) {
          GfMatrix comb = m.combine(mats, {subfield_elems[a], subfield_elems[1]});
          members.push_back(comb);
        }
        members.push_back(A);  // the (1, 0) member
        for (const auto& mm : members) {
          size_t r = rank_gf(mm);
          if (r == 1) has_rank1 = true;
          if (r == 3) ++nondeg;
        }
        if (!has_rank1 && nondeg == 0) ++rep.all_degenerate_pencils;
        if (!has_rank1 && nondeg > 0) {
          // base locus = common zeros of two independent members
          size_t base = 0;
          for (const auto& p : m.points)
            if (m.eval(A, p) == 0 && m.eval(B, p) == 0) ++base;
          rep.pencil_base_sizes.push_back(base);
          if (!admissible.count(base)) rep.pencil_sizes_admissible = false;
          if (nondeg + 2 < q) rep.pencils_have_enough_nondegenerate = false;
          ++pencil_done;
        }
      }
    }

    if (net_done < trials) {
      std::vector<const GfMatrix*> mats{&A, &B, &C};
      if (!independent_over_subfield(m, mats, emb)) continue;
      // net must contain a rank-2 member and no rank-1 member
      bool has_rank1 = false, has_rank2 = false;
      for (Elem a = 0; a < q && !has_rank1; ++a)
        for (Elem b = 0; b < q && !has_rank1; ++b)
          for (Elem c = 0; c < q && !has_rank1; ++c) {
            if (a == 0 && b == 0 && c == 0) continue;
            // projective representatives: first nonzero coefficient = 1
            if (a == 0 && b == 0 && c != 1) continue;
            if (a == 0 && b > 1) continue;
            if (a > 1) continue;
            GfMatrix comb =
                m.combine(mats, {subfield_elems[a], subfield_elems[b], subfield_elems[c]});
            size_t r = rank_gf(comb);
            if (r == 1) has_rank1 = true;
            if (r == 2) has_rank2 = true;
          }
      if (has_rank1 || !has_rank2) continue;
      size_t base = 0;
      for (const auto& p : m.points)
        if (m.eval(A, p) == 0 && m.eval(B, p) == 0 && m.eval(C, p) == 0) ++base;
      if (base == 0) ++rep.empty_base_loci;
      ++net_done;
    }
  }
  if (net_done < trials || pencil_done < trials)
    throw std::runtime_error("net probe: could not sample enough admissible configurations");
  rep.nets_probed = net_done;
  return rep;
}

}  // namespace fourgen
