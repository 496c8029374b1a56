#include "fourgen/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace fourgen {

GfMatrix parity_check(const PointSet& x) {
  const ProjSpace& sp = x.space;
  if (rank_of_points(sp, x.points) != (size_t)sp.n + 1)
    throw std::invalid_argument("point set does not span the space");
  GfMatrix h((size_t)sp.n + 1, x.size(), sp.field);
  for (size_t c = 0; c < x.size(); ++c)
    for (int r = 0; r <= sp.n; ++r) h.at(r, c) = x.points[c].coords[r];
  return h;
}

namespace {

std::vector<Elem> column(const GfMatrix& h, size_t c) {
  std::vector<Elem> v(h.rows);
  for (size_t r = 0; r < h.rows; ++r) v[r] = h.at(r, c);
  return v;
}

// does some independent (w-1)-subset have a further column in its span,
// with the extra column's index above the subset (the minimal dependent set
// is found with its largest index last)
bool stage_hit(const GfMatrix& h, size_t w) {
  const size_t N = h.cols;
  std::vector<size_t> subset;
  RowReducer red(h.field, h.rows);
  std::vector<std::vector<Elem>> cols;
  cols.reserve(N);
  for (size_t c = 0; c < N; ++c) cols.push_back(column(h, c));

  auto dfs = [&](auto&& self, size_t start) -> bool {
    if (subset.size() == w - 1) {
      for (size_t extra = subset.back() + 1; extra < N; ++extra)
        if (red.in_span(cols[extra])) return true;
      return false;
    }
    for (size_t c = start; c + (w - 1 - subset.size()) <= N; ++c) {
      if (!red.push(cols[c])) continue;  // smaller dependency was ruled out before
      subset.push_back(c);
      bool hit = self(self, c + 1);
      subset.pop_back();
      red.pop();
      if (hit) return true;
    }
    return false;
  };
  return dfs(dfs, 0);
}

}  // namespace

int min_distance(const GfMatrix& h) {
  const size_t N = h.cols;
  if (N == 0) throw std::invalid_argument("empty matrix");
  const auto& F = *h.field;

  // w = 1: a zero column
  for (size_t c = 0; c < N; ++c) {
    bool zero = true;
    for (size_t r = 0; r < h.rows; ++r)
      if (h.at(r, c)) zero = false;
    if (zero) return 1;
  }
  // w = 2: proportional columns; scale each so its first nonzero entry is 1
  {
    std::vector<std::vector<Elem>> normed(N);
    for (size_t c = 0; c < N; ++c) {
      auto v = column(h, c);
      size_t lead = 0;
      while (v[lead] == 0) ++lead;
      Elem s = F.inv(v[lead]);
      for (auto& e : v) e = F.mul(e, s);
      normed[c] = std::move(v);
    }
    std::sort(normed.begin(), normed.end());
    for (size_t i = 1; i < N; ++i)
      if (normed[i] == normed[i - 1]) return 2;
  }
  for (size_t w = 3; w <= std::min<size_t>(N, 7); ++w)
    if (stage_hit(h, w)) return (int)w;
  if (N <= 7) throw std::runtime_error("all columns independent; not a parity check of a code");
  throw std::runtime_error("minimum distance exceeds 7: not computed at desk scale");
}

int covering_radius(const GfMatrix& h) {
  const auto& F = *h.field;
  const uint32_t q = F.q();
  const size_t rows = h.rows;
  uint64_t space = 1;
  for (size_t i = 0; i < rows; ++i) {
    space *= q;
    if (space > 100000000ull)
      throw std::runtime_error("syndrome space too large: not computable at desk scale");
  }

  std::vector<uint8_t> dist(space, 255);
  dist[0] = 0;
  std::vector<uint64_t> frontier{0}, next;
  // nonzero multiples of every column, as digit vectors
  std::vector<std::vector<Elem>> deltas;
  for (size_t c = 0; c < h.cols; ++c)
    for (Elem lam = 1; lam < q; ++lam) {
      std::vector<Elem> d(rows);
      for (size_t r = 0; r < rows; ++r) d[r] = F.mul(lam, h.at(r, c));
      deltas.push_back(std::move(d));
    }

  std::vector<Elem> digits(rows);
  uint8_t layer = 0;
  uint64_t covered = 1;
  while (!frontier.empty() && covered < space) {
    ++layer;
    next.clear();
    for (uint64_t s : frontier) {
      uint64_t t = s;
      for (size_t r = 0; r < rows; ++r) {
        digits[r] = (Elem)(t % q);
        t /= q;
      }
      for (const auto& d : deltas) {
        uint64_t out = 0, mult = 1;
        for (size_t r = 0; r < rows; ++r) {
          out += (uint64_t)F.add(digits[r], d[r]) * mult;
          mult *= q;
        }
        if (dist[out] == 255) {
          dist[out] = layer;
          next.push_back(out);
          ++covered;
        }
      }
    }
    frontier.swap(next);
  }
  if (covered < space)
    throw std::runtime_error("columns do not span the syndrome space");
  return (int)layer;
}

CodeParams code_params(const PointSet& x) {
  GfMatrix h = parity_check(x);
  CodeParams cp;
  cp.length = x.size();
  cp.dimension = x.size() - (x.space.n + 1);
  cp.q = x.space.q();
  cp.min_distance = min_distance(h);
  cp.covering_radius = covering_radius(h);
  if (cp.min_distance == 7) {
    if (cp.length == 7 && cp.dimension == 1 && cp.q == 2)
      cp.exception = "[7,1,7]_2 repetition code";
    else if (cp.length == 23 && cp.dimension == 12 && cp.q == 2)
      cp.exception = "[23,12,7]_2 Golay code";
    else
      cp.exception = "d = 7";
  }
  return cp;
}

}  // namespace fourgen
