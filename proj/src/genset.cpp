#include "fourgen/genset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace fourgen {

namespace {

constexpr uint32_t kNoClaim = 0xFFFFFFFFu;
constexpr size_t kMaxWitnesses = 10;

void add_witness(VerifyReport& rep, std::string kind, std::vector<uint64_t> pts) {
  if (rep.violations.size() < kMaxWitnesses)
    rep.violations.push_back({std::move(kind), std::move(pts)});
}

}  // namespace

VerifyReport verify_4general(const PointSet& x) {
  const ProjSpace& sp = x.space;
  const auto& F = *sp.field;
  const uint32_t q = F.q();
  const size_t k = x.size();
  const size_t dim = sp.n + 1;

  VerifyReport rep;
  rep.size = k;
  if (k == 0) throw std::invalid_argument("empty point set");
  rep.spans_space = rank_of_points(sp, x.points) == dim;
  if (!rep.spans_space) add_witness(rep, "nonspanning", {});

  std::vector<char> member(sp.num_points(), 0);
  std::vector<size_t> position(sp.num_points(), 0);
  for (size_t i = 0; i < k; ++i) {
    member[x.points[i].index] = 1;
    position[x.points[i].index] = i;
  }

  // scoreboard over off-set points: each is claimed by at most one secant of
  // a cap; a second claim exhibits two secants meeting off the set, i.e.
  // four coplanar points
  std::vector<uint32_t> claimed(sp.num_points(), kNoClaim);
  bool cap = true, collision_free = true;
  std::vector<Elem> v(dim);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      const uint32_t pair_id = (uint32_t)(i * k + j);
      const auto& pi = x.points[i].coords;
      const auto& pj = x.points[j].coords;
      for (Elem lam = 1; lam < q; ++lam) {
        for (size_t c = 0; c < dim; ++c) v[c] = F.add(F.mul(lam, pi[c]), pj[c]);
        sp.normalize(v);
        const uint64_t ridx = sp.index_of(v);
        if (member[ridx]) {
          cap = false;
          add_witness(rep, "collinear", {(uint64_t)i, (uint64_t)j, (uint64_t)position[ridx]});
          continue;
        }
        const uint32_t other = claimed[ridx];
        if (other == kNoClaim) {
          claimed[ridx] = pair_id;
        } else if (other != pair_id) {
          collision_free = false;
          const uint64_t oi = other / k, oj = other % k;
          if (cap) add_witness(rep, "coplanar", {oi, oj, (uint64_t)i, (uint64_t)j});
        }
      }
    }
  }
  rep.is_cap = cap;
  rep.is_4general = rep.spans_space && cap && collision_free;
  return rep;
}

std::vector<char> coverage_mask(const PointSet& x) {
  const ProjSpace& sp = x.space;
  const auto& F = *sp.field;
  const uint32_t q = F.q();
  const size_t k = x.size();
  const size_t dim = sp.n + 1;
  const uint64_t npts = sp.num_points();

  std::vector<char> covered(npts, 0);
  for (const auto& p : x.points) covered[p.index] = 1;

  std::vector<Elem> v(dim);
  // secant lines
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      for (Elem lam = 1; lam < q; ++lam) {
        for (size_t c = 0; c < dim; ++c)
          v[c] = F.add(F.mul(lam, x.points[i].coords[c]), x.points[j].coords[c]);
        sp.normalize(v);
        covered[sp.index_of(v)] = 1;
      }

  // planes through point triples: for a fixed pair (i,j) the combinations
  // a*Pi + b*Pj + Pk over all a,b sweep plane(i,j,k) minus line(i,j)
  auto sweep_pairs = [&](size_t pair_begin, size_t pair_end, std::vector<char>& mask) {
    std::vector<std::vector<Elem>> combos(q * (size_t)q, std::vector<Elem>(dim));
    std::vector<Elem> w(dim);
    size_t pair_idx = 0;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j, ++pair_idx) {
        if (pair_idx < pair_begin || pair_idx >= pair_end) continue;
        for (Elem a = 0; a < q; ++a)
          for (Elem b = 0; b < q; ++b) {
            auto& s = combos[a * q + b];
            for (size_t c = 0; c < dim; ++c)
              s[c] = F.add(F.mul(a, x.points[i].coords[c]), F.mul(b, x.points[j].coords[c]));
          }
        for (size_t t = j + 1; t < k; ++t) {
          const auto& pk = x.points[t].coords;
          for (const auto& s : combos) {
            for (size_t c = 0; c < dim; ++c) w[c] = F.add(s[c], pk[c]);
            sp.normalize(w);
            mask[sp.index_of(w)] = 1;
          }
        }
      }
  };

  const size_t total_pairs = k * (k - 1) / 2;
  unsigned workers = std::thread::hardware_concurrency();
  if (npts > 200000 && workers > 1 && total_pairs > 64) {
    workers = std::min<unsigned>(workers, 8);
    std::vector<std::vector<char>> parts(workers, std::vector<char>(npts, 0));
    std::vector<std::thread> pool;
    const size_t chunk = (total_pairs + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(sweep_pairs, w * chunk, std::min(total_pairs, (w + 1) * chunk),
                        std::ref(parts[w]));
    for (auto& t : pool) t.join();
    for (const auto& part : parts)
      for (uint64_t idx = 0; idx < npts; ++idx) covered[idx] |= part[idx];
  } else {
    sweep_pairs(0, total_pairs, covered);
  }
  return covered;
}

VerifyReport verify_complete(const PointSet& x) {
  VerifyReport rep = verify_4general(x);
  if (!rep.is_4general) return rep;  // completeness undefined, flags propagate

  auto covered = coverage_mask(x);
  uint64_t count = 0;
  for (uint64_t idx = 0; idx < covered.size(); ++idx) {
    if (covered[idx]) {
      ++count;
    } else if (rep.violations.size() < kMaxWitnesses) {
      add_witness(rep, "uncovered", {idx});
    }
  }
  rep.covered_count = count;
  rep.is_complete = count == covered.size();
  return rep;
}

std::vector<Point> extension_candidates(const PointSet& x) {
  VerifyReport rep = verify_4general(x);
  if (!rep.is_4general) throw std::invalid_argument("extension candidates need a 4-general input");
  auto covered = coverage_mask(x);
  std::vector<Point> out;
  for (uint64_t idx = 0; idx < covered.size(); ++idx)
    if (!covered[idx]) out.push_back({x.space.coords_of(idx), idx});
  return out;
}

uint64_t pgl_order(uint32_t d, uint32_t q) {
  __int128 acc = 1;
  __int128 qd = 1;
  for (uint32_t i = 0; i < d; ++i) qd *= q;
  __int128 qi = 1;
  for (uint32_t i = 0; i < d; ++i) {
    acc *= (qd - qi);
    qi *= q;
    if (acc > (__int128)9e36) throw std::overflow_error("group order exceeds 64 bits");
  }
  acc /= (q - 1);
  if (acc > (__int128)UINT64_MAX) throw std::overflow_error("group order exceeds 64 bits");
  return (uint64_t)acc;
}

namespace {

GfMatrix columns_matrix(const ProjSpace& sp, const std::vector<const Point*>& pts) {
  GfMatrix m((size_t)sp.n + 1, pts.size(), sp.field);
  for (size_t c = 0; c < pts.size(); ++c)
    for (int r = 0; r <= sp.n; ++r) m.at(r, c) = pts[c]->coords[r];
  return m;
}

// matrix sending the standard frame (e_1..e_{n+1}, all-ones) to the ordered
// frame fr; column i is lambda_i * fr_i with sum lambda_i fr_i = fr_{n+2}
GfMatrix frame_matrix(const ProjSpace& sp, const std::vector<const Point*>& fr) {
  const auto& F = *sp.field;
  const size_t dim = sp.n + 1;
  GfMatrix base = columns_matrix(sp, {fr.begin(), fr.begin() + dim});
  GfMatrix inv = mat_inverse(base);
  std::vector<Elem> lambda(dim, 0);
  for (size_t r = 0; r < dim; ++r) {
    Elem acc = 0;
    for (size_t c = 0; c < dim; ++c) acc = F.add(acc, F.mul(inv.at(r, c), fr[dim]->coords[c]));
    lambda[r] = acc;
  }
  GfMatrix m(dim, dim, sp.field);
  for (size_t c = 0; c < dim; ++c) {
    if (lambda[c] == 0) throw std::invalid_argument("tuple is not a frame");
    for (size_t r = 0; r < dim; ++r) m.at(r, c) = F.mul(lambda[c], fr[c]->coords[r]);
  }
  return m;
}

// count projectivities g with g(from) == to, where the images of a fixed
// frame of `from` range over ordered general-position tuples of `to`
uint64_t count_maps_frame(const PointSet& from, const PointSet& to,
                          const std::vector<size_t>& frame_pos, bool stop_at_first) {
  const ProjSpace& sp = from.space;
  const auto& F = *sp.field;
  const size_t dim = sp.n + 1;
  const size_t k = to.size();

  std::vector<const Point*> fr;
  for (size_t p : frame_pos) fr.push_back(&from.points[p]);
  GfMatrix mf_inv = mat_inverse(frame_matrix(sp, fr));

  std::vector<char> target(sp.num_points(), 0);
  for (const auto& p : to.points) target[p.index] = 1;

  uint64_t count = 0;
  std::vector<size_t> tuple;
  std::vector<char> used(k, 0);
  RowReducer st(sp.field, dim);
  std::vector<Elem> img(dim);

  auto full_check = [&]() {
    // basis chosen; try every remaining point of `to` as the frame's unit sum
    GfMatrix base(dim, dim, sp.field);
    for (size_t c = 0; c < dim; ++c)
      for (size_t r = 0; r < dim; ++r) base.at(r, c) = to.points[tuple[c]].coords[r];
    GfMatrix binv;
    try {
      binv = mat_inverse(base);
    } catch (const std::invalid_argument&) {
      return;  // cannot happen: prefix kept independent
    }
    for (size_t last = 0; last < k; ++last) {
      if (used[last]) continue;
      std::vector<Elem> lambda(dim, 0);
      bool ok = true;
      for (size_t r = 0; r < dim && ok; ++r) {
        Elem acc = 0;
        for (size_t c = 0; c < dim; ++c)
          acc = F.add(acc, F.mul(binv.at(r, c), to.points[last].coords[c]));
        lambda[r] = acc;
        if (acc == 0) ok = false;
      }
      if (!ok) continue;
      GfMatrix mt(dim, dim, sp.field);
      for (size_t c = 0; c < dim; ++c)
        for (size_t r = 0; r < dim; ++r)
          mt.at(r, c) = F.mul(lambda[c], to.points[tuple[c]].coords[r]);
      GfMatrix g = mat_mul(mt, mf_inv);
      bool stab = true;
      for (const auto& p : from.points) {
        for (size_t r = 0; r < dim; ++r) {
          Elem acc = 0;
          for (size_t c = 0; c < dim; ++c) acc = F.add(acc, F.mul(g.at(r, c), p.coords[c]));
          img[r] = acc;
        }
        if (!sp.normalize(img)) {
          stab = false;
          break;
        }
        if (!target[sp.index_of(img)]) {
          stab = false;
          break;
        }
      }
      if (stab) ++count;
      if (stab && stop_at_first) return;
    }
  };

  // DFS over ordered independent prefixes of `to`
  auto dfs = [&](auto&& self) -> bool {
    if (stop_at_first && count) return true;
    if (tuple.size() == dim) {
      full_check();
      return stop_at_first && count;
    }
    for (size_t cand = 0; cand < k; ++cand) {
      if (used[cand]) continue;
      if (!st.push(to.points[cand].coords)) continue;
      used[cand] = 1;
      tuple.push_back(cand);
      bool done = self(self);
      tuple.pop_back();
      used[cand] = 0;
      st.pop();
      if (done) return true;
    }
    return false;
  };
  dfs(dfs);
  return count;
}

// fallback when the source holds no frame: a projectivity is pinned down by
// the ordered images of n+1 independent points together with a diagonal
// torus vector (first entry scaled to 1), so enumerate tuples of `to` times
// the torus
uint64_t count_maps_basis(const PointSet& from, const PointSet& to, bool stop_at_first) {
  const ProjSpace& sp = from.space;
  const auto& F = *sp.field;
  const uint32_t q = F.q();
  const size_t dim = sp.n + 1;
  const size_t k = to.size();

  // lex-first independent (n+1)-subset of `from`
  std::vector<size_t> bpos;
  {
    RowReducer red(sp.field, dim);
    for (size_t i = 0; i < from.size() && bpos.size() < dim; ++i)
      if (red.push(from.points[i].coords)) bpos.push_back(i);
  }
  if (bpos.size() < dim)
    throw std::runtime_error("not computable: the set does not span the space");
  GfMatrix mb(dim, dim, sp.field);
  for (size_t c = 0; c < dim; ++c)
    for (size_t r = 0; r < dim; ++r) mb.at(r, c) = from.points[bpos[c]].coords[r];
  GfMatrix mb_inv = mat_inverse(mb);

  std::vector<char> target(sp.num_points(), 0);
  for (const auto& p : to.points) target[p.index] = 1;

  uint64_t count = 0;
  std::vector<size_t> tuple;
  std::vector<char> used(k, 0);
  RowReducer st(sp.field, dim);
  std::vector<Elem> img(dim);
  std::vector<Elem> lambda(dim, 1);

  auto check_all_torus = [&]() -> bool {
    // lambda[0] fixed to 1; the rest sweep GF(q)*
    std::vector<uint32_t> digit(dim, 1);
    while (true) {
      GfMatrix mt(dim, dim, sp.field);
      for (size_t c = 0; c < dim; ++c)
        for (size_t r = 0; r < dim; ++r)
          mt.at(r, c) = F.mul((Elem)digit[c], to.points[tuple[c]].coords[r]);
      GfMatrix g = mat_mul(mt, mb_inv);
      bool match = true;
      for (const auto& p : from.points) {
        for (size_t r = 0; r < dim; ++r) {
          Elem acc = 0;
          for (size_t c = 0; c < dim; ++c) acc = F.add(acc, F.mul(g.at(r, c), p.coords[c]));
          img[r] = acc;
        }
        if (!sp.normalize(img) || !target[sp.index_of(img)]) {
          match = false;
          break;
        }
      }
      if (match) {
        ++count;
        if (stop_at_first) return true;
      }
      // advance the torus odometer over nonzero field elements
      size_t pos = 1;
      while (pos < dim) {
        ++digit[pos];
        if (digit[pos] < q) break;
        digit[pos] = 1;
        ++pos;
      }
      if (pos == dim) return false;
    }
  };

  auto dfs = [&](auto&& self) -> bool {
    if (tuple.size() == dim) return check_all_torus();
    for (size_t cand = 0; cand < k; ++cand) {
      if (used[cand]) continue;
      if (!st.push(to.points[cand].coords)) continue;
      used[cand] = 1;
      tuple.push_back(cand);
      bool done = self(self);
      tuple.pop_back();
      used[cand] = 0;
      st.pop();
      if (done) return true;
    }
    return false;
  };
  dfs(dfs);
  return count;
}

}  // namespace

std::vector<size_t> first_frame_in(const PointSet& x) {
  const ProjSpace& sp = x.space;
  const size_t dim = sp.n + 1;
  const size_t k = x.size();
  if (k < dim + 1) return {};
  std::vector<size_t> combo;
  RowReducer st(sp.field, dim);
  std::vector<size_t> result;

  auto dfs = [&](auto&& self, size_t start) -> bool {
    if (combo.size() == dim + 1) {
      std::vector<const Point*> pts;
      for (size_t p : combo) pts.push_back(&x.points[p]);
      try {
        frame_matrix(sp, pts);
      } catch (const std::invalid_argument&) {
        return false;
      }
      result = combo;
      return true;
    }
    for (size_t cand = start; cand < k; ++cand) {
      bool need_rank = combo.size() < dim;
      if (need_rank) {
        if (!st.push(x.points[cand].coords)) continue;
      }
      combo.push_back(cand);
      bool done = self(self, cand + 1);
      combo.pop_back();
      if (need_rank) st.pop();
      if (done) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  return result;
}

uint64_t count_projectivities(const PointSet& from, const PointSet& to, bool stop_at_first) {
  if (!from.space.same_space(to.space)) throw std::invalid_argument("sets live in different spaces");
  if (from.size() != to.size()) return 0;
  auto frame = first_frame_in(from);
  if (!frame.empty()) return count_maps_frame(from, to, frame, stop_at_first);
  return count_maps_basis(from, to, stop_at_first);
}

bool are_equivalent(const PointSet& a, const PointSet& b) {
  return count_projectivities(a, b, true) > 0;
}

PointSet frobenius_image(const PointSet& x) {
  PointSet out;
  out.space = x.space;
  const auto& F = *x.space.field;
  for (const auto& p : x.points) {
    std::vector<Elem> c(p.coords.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.frobenius(p.coords[i], 1);
    out.add(std::move(c));
  }
  return out;
}

AutResult aut_order(const PointSet& x, bool semilinear) {
  AutResult res;
  auto frame = first_frame_in(x);
  try {
    if (!frame.empty()) {
      res.method = "frame";
      res.order = count_maps_frame(x, x, frame, false);
    } else {
      res.method = "basis";
      res.order = count_maps_basis(x, x, false);
    }
    if (semilinear) {
      res.method += "+frobenius";
      PointSet img = x;
      for (uint32_t j = 1; j < x.space.field->k(); ++j) {
        img = frobenius_image(img);
        res.order += count_projectivities(img, x, false);
      }
    }
  } catch (const std::runtime_error& e) {
    res.computable = false;
    res.method = e.what();
    res.order = 0;
  }
  return res;
}

SecantGraph secant_graph(const PointSet& x) {
  VerifyReport rep = verify_4general(x);
  // spanning is irrelevant here; the graph structure only needs the secant
  // lines to be pairwise disjoint off the set
  bool tuple_violation = false;
  for (const auto& v : rep.violations)
    if (v.kind == "collinear" || v.kind == "coplanar") tuple_violation = true;
  if (tuple_violation || x.size() < 4)
    throw std::invalid_argument("secant graph requires no collinear or coplanar points");
  const size_t k = x.size();
  SecantGraph g;
  std::vector<std::vector<uint64_t>> line_pts;
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = i + 1; j < k; ++j) {
      g.lines.emplace_back(i, j);
      line_pts.push_back(span_members(x.space, std::vector<Point>{x.points[i], x.points[j]}));
    }
  const size_t V = g.lines.size();
  g.vertex_count = V;

  const size_t words = (V + 63) / 64;
  std::vector<uint64_t> adj(V * words, 0);
  bool sharing_ok = true;
  for (size_t a = 0; a < V; ++a)
    for (size_t b = a + 1; b < V; ++b) {
      bool geo = false;
      {
        const auto& A = line_pts[a];
        const auto& B = line_pts[b];
        size_t ia = 0, ib = 0;
        while (ia < A.size() && ib < B.size()) {
          if (A[ia] == B[ib]) {
            geo = true;
            break;
          }
          (A[ia] < B[ib]) ? ++ia : ++ib;
        }
      }
      bool share = g.lines[a].first == g.lines[b].first || g.lines[a].first == g.lines[b].second ||
                   g.lines[a].second == g.lines[b].first || g.lines[a].second == g.lines[b].second;
      if (geo != share) sharing_ok = false;
      if (geo) {
        adj[a * words + b / 64] |= 1ull << (b % 64);
        adj[b * words + a / 64] |= 1ull << (a % 64);
      }
    }
  g.adjacency_is_point_sharing = sharing_ok;

  auto deg = [&](size_t vtx) {
    size_t d = 0;
    for (size_t w = 0; w < words; ++w) d += std::popcount(adj[vtx * words + w]);
    return d;
  };
  g.regular = true;
  g.degree = deg(0);
  for (size_t vtx = 1; vtx < V; ++vtx)
    if (deg(vtx) != g.degree) g.regular = false;

  int64_t lambda = -1, mu = -1;
  bool srg = true;
  for (size_t a = 0; a < V && srg; ++a)
    for (size_t b = a + 1; b < V; ++b) {
      size_t common = 0;
      for (size_t w = 0; w < words; ++w)
        common += std::popcount(adj[a * words + w] & adj[b * words + w]);
      bool edge = (adj[a * words + b / 64] >> (b % 64)) & 1;
      int64_t& slot = edge ? lambda : mu;
      if (slot < 0) slot = (int64_t)common;
      else if (slot != (int64_t)common) {
        srg = false;
        break;
      }
    }
  g.lambda = lambda;
  g.mu = mu;
  g.triangular_parameters = srg && g.regular && sharing_ok &&
                            g.vertex_count == k * (k - 1) / 2 && g.degree == 2 * (k - 2) &&
                            lambda == (int64_t)k - 2 && (mu == 4 || V == (size_t)1);
  return g;
}

NmdsReport nmds_check(const PointSet& x) {
  if (x.space.n != 4) throw std::invalid_argument("NMDS test is defined in PG(4,q)");
  const size_t k = x.size();
  NmdsReport rep;

  auto rank_subset = [&](const std::vector<size_t>& idx) {
    std::vector<Point> pts;
    for (size_t i : idx) pts.push_back(x.points[i]);
    return rank_of_points(x.space, pts);
  };

  auto for_each_subset = [&](size_t r, auto&& fn) {
    std::vector<size_t> c(r);
    for (size_t i = 0; i < r; ++i) c[i] = i;
    if (r > k) return;
    while (true) {
      if (!fn(c)) return;
      size_t i = r;
      bool adv = false;
      while (i-- > 0) {
        if (c[i] + (r - i) < k) {
          ++c[i];
          for (size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
          adv = true;
          break;
        }
      }
      if (!adv) return;
    }
  };

  rep.every_4_span_solid = true;  // vacuous below 4 points
  for_each_subset(4, [&](const std::vector<size_t>& c) {
    if (rank_subset(c) != 4) {
      rep.every_4_span_solid = false;
      return false;
    }
    return true;
  });
  rep.some_5_in_solid = false;
  for_each_subset(5, [&](const std::vector<size_t>& c) {
    if (rank_subset(c) <= 4) {
      rep.some_5_in_solid = true;
      return false;
    }
    return true;
  });
  rep.every_6_span_space = true;
  for_each_subset(6, [&](const std::vector<size_t>& c) {
    if (rank_subset(c) != 5) {
      rep.every_6_span_space = false;
      return false;
    }
    return true;
  });
  rep.is_nmds = rep.every_4_span_solid && rep.some_5_in_solid && rep.every_6_span_space;
  return rep;
}

}  // namespace fourgen
