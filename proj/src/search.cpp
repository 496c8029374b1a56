#include "fourgen/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <stdexcept>

#include "fourgen/bounds.hpp"
#include "fourgen/constructions.hpp"

namespace fourgen {

PointSet greedy_complete(const PointSet& x, CandidateOrder order, uint64_t seed) {
  PointSet cur = x;
  if (cur.points.empty()) cur = frame(cur.space.n, cur.space.q());
  if (!verify_4general(cur).is_4general)
    throw std::invalid_argument("greedy completion needs a 4-general start");
  std::mt19937_64 rng(seed);
  while (true) {
    auto cands = extension_candidates(cur);
    if (cands.empty()) break;
    size_t pick = 0;
    if (order == CandidateOrder::Random) pick = (size_t)(rng() % cands.size());
    cur.add(cands[pick].coords);  // lex: candidates come out in index order
  }
  return cur;
}

namespace {

// marks everything newly covered when `p` joins `members`
void mark_new_coverage(const ProjSpace& sp, const std::vector<Point>& members, const Point& p,
                       std::vector<char>& covered) {
  const auto& F = *sp.field;
  const uint32_t q = F.q();
  const size_t dim = sp.n + 1;
  covered[p.index] = 1;
  std::vector<Elem> v(dim), s(dim);
  for (size_t i = 0; i < members.size(); ++i) {
    const auto& pi = members[i].coords;
    for (Elem lam = 1; lam < q; ++lam) {
      for (size_t c = 0; c < dim; ++c) v[c] = F.add(F.mul(lam, pi[c]), p.coords[c]);
      sp.normalize(v);
      covered[sp.index_of(v)] = 1;
    }
    for (size_t j = i + 1; j < members.size(); ++j) {
      const auto& pj = members[j].coords;
      for (Elem a = 1; a < q; ++a)
        for (Elem b = 1; b < q; ++b) {
          for (size_t c = 0; c < dim; ++c)
            s[c] = F.add(F.mul(a, pi[c]), F.mul(b, pj[c]));
          for (size_t c = 0; c < dim; ++c) v[c] = F.add(s[c], p.coords[c]);
          sp.normalize(v);
          covered[sp.index_of(v)] = 1;
        }
    }
  }
}

const std::vector<std::pair<int, uint32_t>> kClassifyWhitelist = {
    {3, 2}, {4, 2}, {3, 3}, {5, 2}, {3, 4}, {3, 5}};

}  // namespace

MaxSizeResult max_size(int n, uint32_t q, double budget_sec) {
  const std::vector<std::pair<int, uint32_t>> whitelist = {
      {3, 2}, {3, 3}, {3, 4}, {3, 5}, {4, 2}, {4, 3}, {5, 2}};
  if (std::find(whitelist.begin(), whitelist.end(), std::make_pair(n, q)) == whitelist.end())
    throw std::invalid_argument("max_size: parameters outside the supported whitelist");

  ProjSpace sp(n, field_for_q(q));
  const uint64_t cut = m3_upper(n, q).integer_bound;
  const auto deadline =
      std::chrono::steady_clock::now() + std::chrono::duration<double>(budget_sec);

  MaxSizeResult res;
  res.proven = true;

  // greedy witness first: with luck it already meets the closed-form cut
  {
    PointSet seed;
    seed.space = sp;
    auto g = greedy_complete(seed);
    res.max_size = g.size();
    res.witness = g;
  }
  if (res.max_size == cut) return res;

  // every 4-general set of size >= 3 maps onto one containing the first
  // independent triple, so roots the search there
  std::vector<Point> base;
  for (int i = 0; i < 3; ++i) {
    std::vector<Elem> c(n + 1, 0);
    c[i] = 1;
    base.push_back(make_point(sp, std::move(c)));
  }
  std::vector<char> covered(sp.num_points(), 0);
  {
    std::vector<Point> members;
    for (const auto& p : base) {
      mark_new_coverage(sp, members, p, covered);
      members.push_back(p);
    }
  }
  std::vector<uint64_t> cands;
  for (uint64_t i = 0; i < sp.num_points(); ++i)
    if (!covered[i]) cands.push_back(i);

  std::vector<Point> chosen = base;
  bool timeout = false;

  auto dfs = [&](auto&& self, const std::vector<uint64_t>& avail) -> void {
    ++res.nodes;
    if ((res.nodes & 1023) == 0 && std::chrono::steady_clock::now() > deadline) timeout = true;
    if (timeout || res.max_size == cut) return;
    if (chosen.size() > res.max_size) {
      res.max_size = chosen.size();
      res.witness.space = sp;
      res.witness.points = chosen;
    }
    if (chosen.size() + avail.size() <= res.max_size) return;  // bound
    for (size_t t = 0; t < avail.size(); ++t) {
      if (chosen.size() + (avail.size() - t) <= res.max_size) break;
      Point p{sp.coords_of(avail[t]), avail[t]};
      std::vector<char> delta(sp.num_points(), 0);
      mark_new_coverage(sp, chosen, p, delta);
      std::vector<uint64_t> next;
      for (size_t u = t + 1; u < avail.size(); ++u)
        if (!delta[avail[u]]) next.push_back(avail[u]);
      chosen.push_back(std::move(p));
      self(self, next);
      chosen.pop_back();
      if (timeout || res.max_size == cut) return;
    }
  };
  dfs(dfs, cands);
  if (timeout) res.proven = false;

  if (rank_of_points(sp, res.witness.points) != (size_t)n + 1)
    throw std::runtime_error("max_size: maximum witness does not span the space");
  return res;
}

ClassificationResult classify_complete(int n, uint32_t q) {
  if (std::find(kClassifyWhitelist.begin(), kClassifyWhitelist.end(), std::make_pair(n, q)) ==
      kClassifyWhitelist.end())
    throw std::invalid_argument("classification is out of scope for these parameters");

  ProjSpace sp(n, field_for_q(q));
  const size_t dim = n + 1;

  // root everything at the unit basis
  std::vector<Point> basis;
  for (size_t i = 0; i < dim; ++i) {
    std::vector<Elem> c(dim, 0);
    c[i] = 1;
    basis.push_back(make_point(sp, std::move(c)));
  }
  std::vector<char> covered(sp.num_points(), 0);
  {
    std::vector<Point> members;
    for (const auto& p : basis) {
      mark_new_coverage(sp, members, p, covered);
      members.push_back(p);
    }
  }

  std::vector<std::vector<uint64_t>> complete_sets;
  std::vector<Point> chosen = basis;

  // uncovered = current extension candidates; completeness is their absence
  auto dfs = [&](auto&& self, const std::vector<char>& cov, uint64_t min_next) -> void {
    std::vector<uint64_t> cands;
    for (uint64_t i = 0; i < sp.num_points(); ++i)
      if (!cov[i]) cands.push_back(i);
    if (cands.empty()) {
      std::vector<uint64_t> key;
      for (const auto& p : chosen) key.push_back(p.index);
      std::sort(key.begin(), key.end());
      complete_sets.push_back(std::move(key));
      return;
    }
    for (uint64_t c : cands) {
      if (c < min_next) continue;
      Point p{sp.coords_of(c), c};
      std::vector<char> next = cov;
      mark_new_coverage(sp, chosen, p, next);
      chosen.push_back(std::move(p));
      self(self, next, c + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, covered, 0);

  ClassificationResult out;
  out.pgl = pgl_order((uint32_t)dim, q);

  auto to_pointset = [&](const std::vector<uint64_t>& idx) {
    PointSet x;
    x.space = sp;
    for (uint64_t i : idx) x.add(sp.coords_of(i));
    return x;
  };

  for (const auto& key : complete_sets) {
    PointSet x = to_pointset(key);
    bool placed = false;
    for (auto& cls : out.classes) {
      if (cls.size == key.size() && are_equivalent(cls.representative, x)) {
        ++cls.basis_rooted_found;
        placed = true;
        break;
      }
    }
    if (!placed) {
      ClassInfo info;
      info.size = key.size();
      info.representative = std::move(x);
      info.basis_rooted_found = 1;
      out.classes.push_back(std::move(info));
    }
  }
  std::stable_sort(out.classes.begin(), out.classes.end(),
                   [](const ClassInfo& a, const ClassInfo& b) { return a.size < b.size; });

  // orbit-stabilizer bookkeeping: the number of complete supersets of the
  // basis inside one orbit is  #bases(X) * (n+1)! * (q-1)^n / |aut(X)|
  uint64_t fact = 1;
  for (size_t i = 2; i <= dim; ++i) fact *= i;
  uint64_t torus = 1;
  for (size_t i = 0; i + 1 < dim; ++i) torus *= (q - 1);
  out.consistency_ok = true;
  for (auto& cls : out.classes) {
    cls.aut = aut_order(cls.representative).order;
    cls.labeled_copies = out.pgl / cls.aut;
    // count independent (n+1)-subsets of the representative
    uint64_t bases = 0;
    std::vector<size_t> combo;
    auto count_bases = [&](auto&& self, size_t start, RowReducer& red) -> void {
      if (combo.size() == dim) {
        ++bases;
        return;
      }
      for (size_t c = start; c < cls.representative.size(); ++c) {
        if (!red.push(cls.representative.points[c].coords)) continue;
        combo.push_back(c);
        self(self, c + 1, red);
        combo.pop_back();
        red.pop();
      }
    };
    RowReducer red(sp.field, dim);
    count_bases(count_bases, 0, red);
    cls.basis_rooted_predicted = bases * fact * torus / cls.aut;
    if (cls.basis_rooted_predicted != cls.basis_rooted_found) out.consistency_ok = false;
  }
  return out;
}

std::vector<std::pair<uint64_t, uint64_t>> enumerate_complete_sets_bruteforce(int n, uint32_t q) {
  ProjSpace sp(n, field_for_q(q));
  if (sp.num_points() > 40) throw std::invalid_argument("brute-force oracle is for tiny spaces");
  std::map<uint64_t, uint64_t> by_size;
  std::vector<Point> chosen;
  std::vector<char> covered(sp.num_points(), 0);

  auto dfs = [&](auto&& self, const std::vector<char>& cov, uint64_t min_next) -> void {
    bool complete = true;
    for (uint64_t i = 0; i < sp.num_points(); ++i)
      if (!cov[i]) {
        complete = false;
        break;
      }
    if (complete && rank_of_points(sp, chosen) == (size_t)n + 1) ++by_size[chosen.size()];
    for (uint64_t c = min_next; c < sp.num_points(); ++c) {
      if (cov[c]) continue;
      Point p{sp.coords_of(c), c};
      std::vector<char> next = cov;
      mark_new_coverage(sp, chosen, p, next);
      chosen.push_back(std::move(p));
      self(self, next, c + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, covered, 0);
  return {by_size.begin(), by_size.end()};
}

}  // namespace fourgen
