#include "fourgen/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fourgen/bounds.hpp"
#include "fourgen/genset.hpp"

namespace fourgen {

namespace {

void assert_size(const PointSet& x, uint64_t expected, const char* what) {
  if (x.size() != expected)
    throw std::runtime_error(std::string(what) + ": emitted size does not match the closed form");
}

// collinear triples or coplanar quadruples (spanning not required: small
// sections and affine representations may live in a subspace)
bool has_tuple_violation(const VerifyReport& rep) {
  for (const auto& v : rep.violations)
    if (v.kind == "collinear" || v.kind == "coplanar") return true;
  return false;
}

// orbit of x.points[0] under g must be exactly x
void assert_single_orbit(const PointSet& x, const GfMatrix& g, const char* what) {
  std::vector<char> member(x.space.num_points(), 0);
  for (const auto& p : x.points) member[p.index] = 1;
  std::vector<char> seen(x.space.num_points(), 0);
  Point cur = x.points[0];
  for (size_t step = 0; step < x.size(); ++step) {
    if (!member[cur.index])
      throw std::runtime_error(std::string(what) + ": orbit leaves the set");
    if (seen[cur.index])
      throw std::runtime_error(std::string(what) + ": the set is not a single orbit");
    seen[cur.index] = 1;
    cur = apply_projectivity(x.space, g, cur);
  }
  if (cur.index != x.points[0].index)
    throw std::runtime_error(std::string(what) + ": generator does not close the orbit");
}

}  // namespace

FieldPtr field_for_q(uint32_t q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power");
  uint32_t p = 2;
  while (q % p != 0) ++p;
  uint32_t k = 0;
  uint32_t acc = 1;
  while (acc < q) {
    acc *= p;
    ++k;
  }
  if (acc != q) throw std::invalid_argument("q must be a prime power");
  return Field::make(p, k);
}

PointSet frame(int n, uint32_t q) {
  PointSet x;
  x.space = ProjSpace(n, field_for_q(q));
  for (int i = 0; i <= n; ++i) {
    std::vector<Elem> c(n + 1, 0);
    c[i] = 1;
    x.add(std::move(c));
  }
  x.add(std::vector<Elem>(n + 1, 1));
  assert_size(x, n + 2, "frame");
  return x;
}

PointSet elliptic_quadric(uint32_t q) {
  auto F = field_for_q(q);
  // lexicographically first irreducible x^2 + a x + b over GF(q)
  Elem qa = 0, qb = 0;
  bool found = false;
  for (Elem a = 0; a < q && !found; ++a)
    for (Elem b = 0; b < q && !found; ++b) {
      bool has_root = false;
      for (Elem x = 0; x < q; ++x)
        if (F->add(F->add(F->mul(x, x), F->mul(a, x)), b) == 0) {
          has_root = true;
          break;
        }
      if (!has_root) {
        qa = a;
        qb = b;
        found = true;
      }
    }
  if (!found) throw std::runtime_error("no irreducible quadratic found");

  PointSet out;
  out.space = ProjSpace(3, F);
  for (uint64_t i = 0; i < out.space.num_points(); ++i) {
    auto c = out.space.coords_of(i);
    Elem lhs = F->mul(c[0], c[1]);
    Elem rhs = F->add(F->add(F->mul(c[2], c[2]), F->mul(qa, F->mul(c[2], c[3]))),
                      F->mul(qb, F->mul(c[3], c[3])));
    if (lhs == rhs) out.add(std::move(c));
  }
  assert_size(out, (uint64_t)q * q + 1, "elliptic_quadric");
  return out;
}

namespace {

CyclicModelSet theta0_impl(uint32_t d, uint32_t q) {
  uint32_t n;
  uint64_t M;
  FieldPtr big, small;
  if (q == 3) {
    if (d < 2) throw std::invalid_argument("theta0 over GF(3) needs d >= 2");
    n = 2 * d - 1;
    M = (ipow_u64(3, d) + 1) / 2;
    big = Field::make(3, 2 * d);
    small = Field::make(3, 1);
  } else if (q == 4) {
    if (d < 1) throw std::invalid_argument("theta0 over GF(4) needs d >= 1");
    n = 2 * d;
    M = (ipow_u64(2, 2 * d + 1) + 1) / 3;
    big = Field::make(2, 2 * (2 * d + 1));
    small = Field::make(2, 2);
  } else {
    throw std::invalid_argument("theta0 exists for q in {3, 4} only");
  }

  auto fl = Flattener::power_basis(big, small);
  const uint64_t group = (uint64_t)big->q() - 1;
  const uint64_t sol_order = (q - 1) * M;  // solutions of x^{(q-1)M} = 1
  const uint64_t step = group / sol_order;

  CyclicModelSet out;
  out.set.space = ProjSpace((int)n, small);
  for (uint64_t i = 0; i < sol_order; ++i)
    out.set.try_add(fl.flatten(big->exp(i * step)));
  assert_size(out.set, M, "cyclic_theta0");

  // projectivity induced by multiplication with a generator of the solution
  // group; it acts regularly on the set
  const size_t dim = n + 1;
  out.generator = GfMatrix(dim, dim, small);
  Elem g = big->exp(step);
  for (size_t col = 0; col < dim; ++col) {
    auto img = fl.flatten(big->mul(g, fl.basis()[col]));
    for (size_t row = 0; row < dim; ++row) out.generator.at(row, col) = img[row];
  }
  assert_single_orbit(out.set, out.generator, "cyclic_theta0");
  return out;
}

}  // namespace

CyclicModelSet cyclic_theta0_full(uint32_t d, uint32_t q) { return theta0_impl(d, q); }
PointSet cyclic_theta0(uint32_t d, uint32_t q) { return theta0_impl(d, q).set; }

PointSet htw_y(uint32_t d) {
  if (d < 2) throw std::invalid_argument("htw_y needs d >= 2");
  auto big = Field::make(3, d);
  auto small = Field::make(3, 1);
  auto fl = Flattener::power_basis(big, small);
  PointSet out;
  out.space = ProjSpace((int)(2 * d), small);
  for (Elem a = 0; a < big->q(); ++a) {
    std::vector<Elem> c;
    c.reserve(2 * d + 1);
    c.push_back(1);
    for (Elem e : fl.flatten(a)) c.push_back(e);
    for (Elem e : fl.flatten(big->mul(a, a))) c.push_back(e);
    out.add(std::move(c));
  }
  assert_size(out, ipow_u64(3, d), "htw_y");
  return out;
}

namespace {

struct VAlphaModel {
  FieldPtr big, small;
  Flattener fl;
  ProjSpace space;

  explicit VAlphaModel(uint32_t d)
      : big(Field::make(2, 2 * d)),
        small(Field::make(2, 2)),
        fl(Flattener::power_basis(big, small)),
        space((int)(2 * d - 1), small) {}

  std::vector<Elem> coords(Elem a, Elem b) const {
    const size_t d = fl.dim();
    auto fa = fl.flatten(a);
    auto fb = fl.flatten(b);
    std::vector<Elem> c(2 * d);
    for (size_t i = 0; i < d; ++i) {
      c[2 * i] = fa[i];
      c[2 * i + 1] = fb[i];
    }
    return c;
  }
};

}  // namespace

PointSet v_alpha(uint32_t d, Elem alpha) {
  if (d < 2) throw std::invalid_argument("v_alpha needs d >= 2");
  VAlphaModel m(d);
  if (alpha == 0 || alpha >= m.big->q()) throw std::invalid_argument("alpha must be nonzero");
  PointSet out;
  out.space = m.space;
  for (Elem x = 1; x < m.big->q(); ++x)
    out.try_add(m.coords(x, m.big->mul(alpha, m.big->pow(x, -2))));
  assert_size(out, (m.big->q() - 1) / 3, "v_alpha");
  return out;
}

PointSet v_alpha_pi(uint32_t d, int which) {
  if (d < 2) throw std::invalid_argument("v_alpha needs d >= 2");
  if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
  VAlphaModel m(d);
  PointSet out;
  out.space = m.space;
  for (Elem e = 1; e < m.big->q(); ++e)
    out.try_add(which == 1 ? m.coords(0, e) : m.coords(e, 0));
  assert_size(out, (m.big->q() - 1) / 3, "v_alpha_pi");
  return out;
}

bool v_alpha_partition_holds(uint32_t d) {
  // alpha = a^2 b is a projective invariant of P(a,b), so the V_alpha are
  // pairwise disjoint and together with the two parameter subspaces must hit
  // every point exactly once
  VAlphaModel m(d);
  std::vector<uint32_t> hits(m.space.num_points(), 0);
  auto mark = [&](const PointSet& s) {
    for (const auto& p : s.points) ++hits[p.index];
  };
  mark(v_alpha_pi(d, 1));
  mark(v_alpha_pi(d, 2));
  for (Elem alpha = 1; alpha < m.big->q(); ++alpha) mark(v_alpha(d, alpha));
  for (uint32_t h : hits)
    if (h != 1) return false;
  return true;
}

PointSet twisted_cubic(uint32_t q, uint32_t h) {
  auto F = field_for_q(q);
  uint64_t sigma;
  if (h == 1) {
    sigma = 2;
  } else {
    if (F->p() != 2) throw std::invalid_argument("h > 1 requires even q");
    uint32_t m = F->k();
    if (h >= m || std::gcd(m, h) != 1)
      throw std::invalid_argument("h must satisfy gcd(m, h) = 1 with q = 2^m and h < m");
    sigma = ipow_u64(2, h);
  }
  PointSet out;
  out.space = ProjSpace(3, F);
  for (Elem t = 0; t < q; ++t)
    out.add({1, t, F->pow(t, (long long)sigma), F->pow(t, (long long)sigma + 1)});
  out.add({0, 0, 0, 1});
  assert_size(out, (uint64_t)q + 1, "twisted_cubic");
  return out;
}

PointSet pg38_seven_set() {
  auto F = Field::make(2, 3);
  PointSet out;
  out.space = ProjSpace(3, F);
  for (Elem t = 2; t < 8; ++t)
    out.add({1, t, F->mul(t, t), F->pow(t, 3)});
  out.add({0, 1, 1, 0});
  assert_size(out, 7, "pg38_seven_set");
  return out;
}

TripleCubic triple_cubic_full(uint32_t q) {
  if (q % 3 != 1) throw std::invalid_argument("triple cubic needs q = 1 mod 3");
  auto S = field_for_q(q);
  auto B = Field::make(S->p(), 2 * S->k());
  auto fl = Flattener::power_basis(B, S);
  auto emb = SubfieldMap::make(B, S);
  const size_t dim = 6;

  Elem xi = S->exp((q - 1) / 3);  // order-3 element of GF(q)
  Elem xi2 = S->mul(xi, xi);
  Elem xiB = emb.to_big(xi);
  Elem xiB2 = emb.to_big(xi2);
  Elem t0 = B->exp(q - 1);  // generator of the norm-one group

  TripleCubic out;
  out.set.space = ProjSpace(5, S);
  auto add_point = [&](Elem x, Elem y, Elem z) {
    auto fx = fl.flatten(x), fy = fl.flatten(y), fz = fl.flatten(z);
    std::vector<Elem> c{fx[0], fx[1], fy[0], fy[1], fz[0], fz[1]};
    out.set.try_add(std::move(c));
  };
  // the three cubics; scaling by lambda = omega^{3i} rewrites each row in
  // the (x, x^q, ...) vector form
  for (uint32_t i = 0; i <= q; ++i) {
    Elem lam = B->exp(3ull * i);
    Elem t = B->pow(t0, i);
    Elem lt = B->mul(lam, t);
    add_point(lam, lt, 0);
    add_point(lam, B->mul(xiB, lt), lt);
    add_point(lam, B->mul(xiB2, lt), B->neg(lt));
  }
  assert_size(out.set, 3ull * (q + 1), "triple_cubic");

  // block generator: fixes x, scales y by xi, maps z to y + xi^2 z
  out.gen_block = GfMatrix(dim, dim, S);
  auto& g1 = out.gen_block;
  g1.at(0, 0) = g1.at(1, 1) = 1;
  g1.at(2, 2) = g1.at(3, 3) = xi;
  g1.at(4, 2) = g1.at(5, 3) = 1;
  g1.at(4, 4) = g1.at(5, 5) = xi2;

  // scaling generator: (x, y, z) -> (s x, s t0 y, s t0 z) with s^{q-1} = t0^3
  out.gen_scaling = GfMatrix(dim, dim, S);
  Elem s = B->exp(3);
  Elem st0 = B->mul(s, t0);
  auto put_block = [&](size_t at, Elem mult) {
    for (size_t col = 0; col < 2; ++col) {
      auto img = fl.flatten(B->mul(mult, fl.basis()[col]));
      out.gen_scaling.at(at, at + col) = img[0];
      out.gen_scaling.at(at + 1, at + col) = img[1];
    }
  };
  put_block(0, s);
  put_block(2, st0);
  put_block(4, st0);

  // orbit of the seed equals the whole set
  {
    std::vector<char> member(out.set.space.num_points(), 0);
    for (const auto& p : out.set.points) member[p.index] = 1;
    std::vector<char> seen(out.set.space.num_points(), 0);
    std::vector<Point> frontier{out.set.points[0]};
    seen[frontier[0].index] = 1;
    uint64_t reached = 1;
    while (!frontier.empty()) {
      std::vector<Point> next;
      for (const auto& p : frontier)
        for (const GfMatrix* g : {&out.gen_block, &out.gen_scaling}) {
          Point ip = apply_projectivity(out.set.space, *g, p);
          if (!member[ip.index]) throw std::runtime_error("triple_cubic: orbit leaves the set");
          if (!seen[ip.index]) {
            seen[ip.index] = 1;
            ++reached;
            next.push_back(std::move(ip));
          }
        }
      frontier.swap(next);
    }
    if (reached != out.set.size())
      throw std::runtime_error("triple_cubic: the set is not a single orbit");
  }

  // group order by closure over normalized matrices
  {
    auto normalize_mat = [&](GfMatrix m) {
      for (auto& e : m.a) {
        if (e != 0) {
          Elem inv = S->inv(e);
          for (auto& f : m.a) f = S->mul(f, inv);
          break;
        }
      }
      return m.a;
    };
    std::map<std::vector<Elem>, GfMatrix> seen;
    std::vector<GfMatrix> frontier{GfMatrix::identity(dim, S)};
    seen[normalize_mat(frontier[0])] = frontier[0];
    while (!frontier.empty()) {
      std::vector<GfMatrix> next;
      for (const auto& m : frontier)
        for (const GfMatrix* g : {&out.gen_block, &out.gen_scaling}) {
          GfMatrix prod = mat_mul(*g, m);
          auto key = normalize_mat(prod);
          if (!seen.count(key)) {
            seen.emplace(key, prod);
            next.push_back(std::move(prod));
          }
        }
      frontier.swap(next);
    }
    out.group_order = seen.size();
    if (out.group_order != 3ull * (q + 1))
      throw std::runtime_error("triple_cubic: group order mismatch");
  }
  return out;
}

PointSet triple_cubic(uint32_t q) { return triple_cubic_full(q).set; }

namespace {

PointSet pg55_example() {
  auto F = Field::make(5, 1);
  PointSet out;
  out.space = ProjSpace(5, F);
  for (Elem x = 0; x < 5; ++x)
    for (Elem y = 0; y < 5; ++y) {
      Elem xy = F->mul(x, y);
      Elem x2 = F->mul(x, x), y2 = F->mul(y, y);
      Elem c3 = F->mul(2, xy);
      Elem c4 = F->add(x2, F->mul(2, y2));
      Elem c5 = F->add(F->add(F->mul(x2, x), F->mul(x2, y)),
                       F->sub(F->mul(x, y2), F->mul(y2, y)));
      out.add({1, x, y, c3, c4, c5});
    }
  out.add({0, 0, 0, 1, 0, 0});
  out.add({0, 0, 0, 1, 2, 0});
  out.add({0, 0, 0, 0, 0, 1});
  assert_size(out, 28, "pg55");
  return out;
}

PointSet pg516_example() {
  auto F = Field::make(2, 4, 19);  // xi^4 = xi + 1
  const size_t dim = 6;
  Elem xi = F->omega();

  // the (a, c) matrices acting on the left.  The family is closed under
  // products exactly when a runs over the fifth roots of unity and c over
  // all of GF(16): then (a,c)(a',c') = (aa', c/a' + ac'), a group of order
  // 80.  (Constraining c instead generates the whole order-240 stabilizer.)
  std::vector<GfMatrix> gens;
  for (uint64_t ai = 0; ai < 5; ++ai)
    for (Elem c = 0; c < 16; ++c) {
      Elem a = F->exp(3 * ai);
      GfMatrix m(dim, dim, F);
      auto P = [&](long long e) { return F->pow(a, e); };
      Elem ac = F->mul(a, c);
      m.at(0, 0) = 1;
      m.at(1, 0) = ac;
      m.at(1, 1) = P(2);
      m.at(2, 0) = F->mul(ac, ac);
      m.at(2, 2) = P(4);
      m.at(3, 0) = F->pow(ac, 3);
      m.at(3, 1) = F->mul(P(4), F->mul(c, c));
      m.at(3, 2) = F->mul(P(5), c);
      m.at(3, 3) = P(6);
      m.at(4, 0) = F->pow(ac, 4);
      m.at(4, 4) = P(8);
      m.at(5, 0) = F->pow(ac, 5);
      m.at(5, 1) = F->mul(P(6), F->pow(c, 4));
      m.at(5, 4) = F->mul(P(9), c);
      m.at(5, 5) = P(10);
      gens.push_back(std::move(m));
    }

  // K = group generated by the matrices, modulo scalars
  auto normalize_mat = [&](GfMatrix m) {
    for (auto& e : m.a) {
      if (e != 0) {
        Elem inv = F->inv(e);
        for (auto& f : m.a) f = F->mul(f, inv);
        break;
      }
    }
    return m.a;
  };
  std::map<std::vector<Elem>, GfMatrix> group;
  std::vector<GfMatrix> frontier{GfMatrix::identity(dim, F)};
  group[normalize_mat(frontier[0])] = frontier[0];
  while (!frontier.empty()) {
    std::vector<GfMatrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        GfMatrix prod = mat_mul(g, m);
        auto key = normalize_mat(prod);
        if (!group.count(key)) {
          group.emplace(key, prod);
          next.push_back(std::move(prod));
        }
      }
    frontier.swap(next);
  }
  if (group.size() != 80) throw std::runtime_error("pg516: group order is not 80");

  PointSet out;
  out.space = ProjSpace(5, F);
  Point seed = make_point(out.space, {1, F->exp(5), xi, F->mul(xi, xi), 0, 0});
  std::vector<std::vector<Elem>> orbit;
  for (const auto& [key, m] : group) {
    Point ip = apply_projectivity(out.space, m, seed);
    orbit.push_back(ip.coords);
  }
  std::sort(orbit.begin(), orbit.end(),
            [&](const auto& a, const auto& b) { return out.space.index_of(a) < out.space.index_of(b); });
  for (auto& c : orbit) out.try_add(std::move(c));
  if (out.size() != 80) throw std::runtime_error("pg516: orbit size is not 80");
  out.add({0, 0, 0, 1, 0, 0});
  out.add({0, 0, 0, 0, 0, 1});
  assert_size(out, 82, "pg516");
  return out;
}

}  // namespace

Pg62Detail pg62_example() {
  Pg62Detail out;
  PointSet s = frame(6, 2);
  auto cands = extension_candidates(s);

  for (size_t i = 0; i < cands.size(); ++i) {
    PointSet s1 = s;
    s1.add(cands[i].coords);
    auto c1 = extension_candidates(s1);
    for (const auto& p2 : c1) {
      if (p2.index <= cands[i].index) continue;
      PointSet s2 = s1;
      s2.add(p2.coords);
      auto c2 = extension_candidates(s2);
      for (const auto& p3 : c2) {
        if (p3.index <= p2.index) continue;
        out.valid_triples.push_back({cands[i].index, p2.index, p3.index});
      }
    }
  }
  if (out.valid_triples.empty())
    throw std::runtime_error("pg62: no completing triple found");
  std::sort(out.valid_triples.begin(), out.valid_triples.end());

  out.set = s;
  for (uint64_t idx : out.valid_triples.front()) out.set.add(out.set.space.coords_of(idx));
  assert_size(out.set, 11, "pg62");
  return out;
}

PointSet named_example(const std::string& id) {
  if (id == "pg55") return pg55_example();
  if (id == "pg516") return pg516_example();
  if (id == "pg62") return pg62_example().set;
  throw std::invalid_argument("unknown example id: " + id);
}

PointSet set_O(uint32_t q) {
  auto S = field_for_q(q);
  auto C = Field::make(S->p(), 3 * S->k());
  auto fl = Flattener::power_basis(C, S);
  auto emb = SubfieldMap::make(C, S);
  PointSet out;
  out.space = ProjSpace(7, S);
  for (Elem x = 0; x < C->q(); ++x) {
    Elem z = x == 0 ? 0 : C->pow(x, (long long)q * q + q);
    Elem t = x == 0 ? 0 : C->mul(z, x);  // the norm x^{q^2+q+1}
    std::vector<Elem> c;
    c.reserve(8);
    c.push_back(1);
    for (Elem e : fl.flatten(x)) c.push_back(e);
    for (Elem e : fl.flatten(z)) c.push_back(e);
    c.push_back(emb.to_small(t));
    out.add(std::move(c));
  }
  out.add({0, 0, 0, 0, 0, 0, 0, 1});
  assert_size(out, ipow_u64(q, 3) + 1, "set_O");
  return out;
}

std::map<size_t, size_t> o_hyperplane_sections(uint32_t q) {
  PointSet o = set_O(q);
  const ProjSpace& sp = o.space;
  const auto& F = *sp.field;
  const size_t dim = 8;

  std::map<size_t, size_t> sizes;
  ProjSpace section_space(6, sp.field);
  for (uint64_t hidx = 0; hidx < sp.num_points(); ++hidx) {
    auto h = sp.coords_of(hidx);
    size_t lead = 0;
    while (h[lead] == 0) ++lead;
    PointSet section;
    section.space = section_space;
    for (const auto& p : o.points) {
      Elem dot = 0;
      for (size_t i = 0; i < dim; ++i) dot = F.add(dot, F.mul(h[i], p.coords[i]));
      if (dot != 0) continue;
      // coordinates inside the hyperplane: drop the pivot coordinate of h
      std::vector<Elem> c;
      c.reserve(7);
      for (size_t i = 0; i < dim; ++i)
        if (i != lead) c.push_back(p.coords[i]);
      section.add(std::move(c));
    }
    ++sizes[section.size()];
    auto rep = verify_4general(section);
    if (has_tuple_violation(rep))
      throw std::runtime_error("hyperplane section has collinear or coplanar points");
  }
  return sizes;
}

PointSet abb_arc(uint32_t q) {
  auto S = field_for_q(q);
  auto B = Field::make(S->p(), 2 * S->k());
  const uint32_t Q = B->q();
  PointSet arc;
  arc.space = ProjSpace(3, B);
  for (Elem t = 0; t < Q; ++t)
    arc.add({1, t, B->mul(t, t), B->pow(t, 3)});
  arc.add({0, 0, 0, 1});

  // first plane (in dual index order) meeting the arc in no point
  std::vector<Elem> h;
  for (uint64_t hidx = 0; hidx < arc.space.num_points(); ++hidx) {
    auto cand = arc.space.coords_of(hidx);
    bool external = true;
    for (const auto& p : arc.points) {
      Elem dot = 0;
      for (size_t i = 0; i < 4; ++i) dot = B->add(dot, B->mul(cand[i], p.coords[i]));
      if (dot == 0) {
        external = false;
        break;
      }
    }
    if (external) {
      h = cand;
      break;
    }
  }
  if (h.empty()) throw std::runtime_error("abb_arc: no external plane found");

  // projectivity whose first row is h: sends the external plane to x0 = 0
  GfMatrix m(4, 4, B);
  RowReducer red(B, 4);
  red.push(h);
  for (size_t i = 0; i < 4; ++i) m.at(0, i) = h[i];
  size_t row = 1;
  for (size_t i = 0; i < 4 && row < 4; ++i) {
    std::vector<Elem> e(4, 0);
    e[i] = 1;
    if (red.push(e)) {
      m.at(row, i) = 1;
      ++row;
    }
  }

  auto fl = Flattener::power_basis(B, S);
  PointSet out;
  out.space = ProjSpace(6, S);
  for (const auto& p : arc.points) {
    Point ip = apply_projectivity(arc.space, m, p);
    // affine now: first coordinate nonzero, normalized to 1
    std::vector<Elem> c;
    c.reserve(7);
    c.push_back(1);
    for (size_t i = 1; i < 4; ++i)
      for (Elem e : fl.flatten(ip.coords[i])) c.push_back(e);
    out.add(std::move(c));
  }
  assert_size(out, (uint64_t)q * q + 1, "abb_arc");
  auto rep = verify_4general(out);
  if (has_tuple_violation(rep))
    throw std::runtime_error("abb_arc: collinear or coplanar points in the representation");
  return out;
}

PointSet golay_cap23() {
  const uint32_t p = 2;
  auto x23 = poly::from_encoding((1ull << 23) | 1, p);  // X^23 + 1
  // degree-11 factors with nonzero constant term, by trial division
  std::vector<uint64_t> factors;
  for (uint64_t enc = (1ull << 11) + 1; enc < (1ull << 12); enc += 2) {
    auto g = poly::from_encoding(enc, p);
    if (poly::divides(g, x23, p)) factors.push_back(enc);
  }
  if (factors.size() != 2) throw std::runtime_error("golay: expected two degree-11 factors");
  auto g = poly::from_encoding(std::min(factors[0], factors[1]), p);

  auto F = Field::make(2, 1);
  PointSet out;
  out.space = ProjSpace(10, F);
  std::vector<uint32_t> xj{1};  // X^j mod g, little-endian bits
  for (int j = 0; j < 23; ++j) {
    std::vector<Elem> c(11, 0);
    for (size_t i = 0; i < xj.size(); ++i) c[i] = xj[i];
    out.add(std::move(c));
    // multiply by X and reduce
    xj.insert(xj.begin(), 0);
    xj = poly::mod(xj, g, p);
  }
  assert_size(out, 23, "golay_cap23");
  return out;
}

PointSet frame_secant_shadow(uint32_t d) {
  if (d < 1) throw std::invalid_argument("d >= 1");
  PointSet s = frame((int)(2 * d), 2);
  const auto& F = *s.space.field;
  PointSet out;
  out.space = s.space;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      std::vector<Elem> c(2 * d + 1);
      for (size_t t = 0; t < c.size(); ++t)
        c[t] = F.add(s.points[i].coords[t], s.points[j].coords[t]);
      out.try_add(std::move(c));
    }
  assert_size(out, (uint64_t)(2 * d + 1) * (d + 1), "frame_secant_shadow");
  if (rank_of_points(out.space, out.points) != 2 * d)
    throw std::runtime_error("frame_secant_shadow: points do not fill exactly one hyperplane");
  return out;
}

}  // namespace fourgen
