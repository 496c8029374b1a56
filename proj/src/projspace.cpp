#include "fourgen/projspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace fourgen {

ProjSpace::ProjSpace(int n_, FieldPtr f) : n(n_), field(std::move(f)) {
  if (n < 1) throw std::invalid_argument("projective dimension must be >= 1");
  if (!field) throw std::invalid_argument("null field");
  const uint64_t q = field->q();
  qpow_.resize(n + 2);
  qpow_[0] = 1;
  for (int i = 1; i <= n + 1; ++i) {
    qpow_[i] = qpow_[i - 1] * q;
    if (qpow_[i] > (uint64_t)5e10) throw std::invalid_argument("space too large");
  }
  chart_.resize(n + 2);
  chart_[0] = 0;
  for (int l = 0; l <= n; ++l) chart_[l + 1] = chart_[l] + qpow_[n - l];
  npoints_ = chart_[n + 1];
}

bool ProjSpace::normalize(std::span<Elem> coords) const {
  const auto& F = *field;
  size_t lead = coords.size();
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead == coords.size()) return false;
  if (coords[lead] != 1) {
    Elem s = F.inv(coords[lead]);
    for (size_t i = lead; i < coords.size(); ++i) coords[i] = F.mul(coords[i], s);
  }
  return true;
}

uint64_t ProjSpace::index_of(std::span<const Elem> c) const {
  size_t lead = 0;
  while (lead < c.size() && c[lead] == 0) ++lead;
  uint64_t idx = chart_[lead];
  for (size_t i = lead + 1; i < c.size(); ++i) idx += (uint64_t)c[i] * qpow_[n - (int)i];
  return idx;
}

std::vector<Elem> ProjSpace::coords_of(uint64_t index) const {
  if (index >= npoints_) throw std::out_of_range("point index out of range");
  int lead = 0;
  while (index >= chart_[lead + 1]) ++lead;
  uint64_t rest = index - chart_[lead];
  std::vector<Elem> c(n + 1, 0);
  c[lead] = 1;
  for (int i = n; i > lead; --i) {
    c[i] = (Elem)(rest % field->q());
    rest /= field->q();
  }
  return c;
}

Point make_point(const ProjSpace& sp, std::vector<Elem> coords) {
  if ((int)coords.size() != sp.n + 1) throw std::invalid_argument("coordinate tuple has wrong length");
  for (Elem e : coords)
    if (e >= sp.q()) throw std::invalid_argument("coordinate out of field range");
  if (!sp.normalize(coords)) throw std::invalid_argument("the zero tuple is not a point");
  Point p;
  p.index = sp.index_of(coords);
  p.coords = std::move(coords);
  return p;
}

void PointSet::add(std::vector<Elem> coords) {
  if (!try_add(std::move(coords))) throw std::invalid_argument("duplicate point");
}

bool PointSet::try_add(std::vector<Elem> coords) {
  Point p = make_point(space, std::move(coords));
  for (const auto& e : points)
    if (e.index == p.index) return false;
  points.push_back(std::move(p));
  return true;
}

bool PointSet::contains_index(uint64_t idx) const {
  for (const auto& e : points)
    if (e.index == idx) return true;
  return false;
}

std::vector<char> PointSet::index_mask() const {
  std::vector<char> mask(space.num_points(), 0);
  for (const auto& e : points) mask[e.index] = 1;
  return mask;
}

std::vector<Point> enumerate_points(const ProjSpace& sp) {
  std::vector<Point> out;
  out.reserve(sp.num_points());
  for (uint64_t i = 0; i < sp.num_points(); ++i) out.push_back({sp.coords_of(i), i});
  return out;
}

GfMatrix GfMatrix::identity(size_t nn, FieldPtr f) {
  GfMatrix m(nn, nn, std::move(f));
  for (size_t i = 0; i < nn; ++i) m.at(i, i) = 1;
  return m;
}

GfMatrix mat_mul(const GfMatrix& x, const GfMatrix& y) {
  if (x.cols != y.rows || !x.field->same_field(*y.field))
    throw std::invalid_argument("matrix shape/field mismatch");
  const auto& F = *x.field;
  GfMatrix r(x.rows, y.cols, x.field);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      Elem v = x.at(i, k);
      if (!v) continue;
      for (size_t j = 0; j < y.cols; ++j)
        r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
    }
  return r;
}

GfMatrix mat_inverse(const GfMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  const auto& F = *m.field;
  const size_t n = m.rows;
  GfMatrix a = m;
  GfMatrix inv = GfMatrix::identity(n, m.field);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    if (piv != col) {
      for (size_t c = 0; c < n; ++c) {
        std::swap(a.a[piv * n + c], a.a[col * n + c]);
        std::swap(inv.a[piv * n + c], inv.a[col * n + c]);
      }
    }
    Elem s = F.inv(a.at(col, col));
    for (size_t c = 0; c < n; ++c) {
      a.at(col, c) = F.mul(a.at(col, c), s);
      inv.at(col, c) = F.mul(inv.at(col, c), s);
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Elem f = a.at(r, col);
      if (!f) continue;
      for (size_t c = 0; c < n; ++c) {
        a.at(r, c) = F.sub(a.at(r, c), F.mul(f, a.at(col, c)));
        inv.at(r, c) = F.sub(inv.at(r, c), F.mul(f, inv.at(col, c)));
      }
    }
  }
  return inv;
}

size_t rank_gf(const GfMatrix& m) {
  const auto& F = *m.field;
  std::vector<Elem> a = m.a;
  const size_t R = m.rows, C = m.cols;
  size_t rank = 0;
  for (size_t col = 0; col < C && rank < R; ++col) {
    // deterministic pivot: lowest row index
    size_t piv = rank;
    while (piv < R && a[piv * C + col] == 0) ++piv;
    if (piv == R) continue;
    if (piv != rank)
      for (size_t c = col; c < C; ++c) std::swap(a[piv * C + c], a[rank * C + c]);
    Elem s = F.inv(a[rank * C + col]);
    for (size_t c = col; c < C; ++c) a[rank * C + c] = F.mul(a[rank * C + c], s);
    for (size_t r = rank + 1; r < R; ++r) {
      Elem f = a[r * C + col];
      if (!f) continue;
      for (size_t c = col; c < C; ++c)
        a[r * C + c] = F.sub(a[r * C + c], F.mul(f, a[rank * C + c]));
    }
    ++rank;
  }
  return rank;
}

size_t rank_of_points(const ProjSpace& sp, std::span<const Point> pts) {
  GfMatrix m(pts.size(), sp.n + 1, sp.field);
  for (size_t r = 0; r < pts.size(); ++r)
    for (int c = 0; c <= sp.n; ++c) m.at(r, c) = pts[r].coords[c];
  return rank_gf(m);
}

std::vector<uint64_t> span_members(const ProjSpace& sp, std::span<const Point> pts) {
  if (pts.empty() || pts.size() > 3) throw std::invalid_argument("span takes 1 to 3 points");
  const auto& F = *sp.field;
  const uint32_t q = F.q();
  std::vector<uint64_t> out;
  std::vector<Elem> v(sp.n + 1);
  auto emit = [&](std::vector<Elem> w) {
    if (sp.normalize(w)) out.push_back(sp.index_of(w));
  };
  if (pts.size() == 1) {
    out.push_back(pts[0].index);
  } else if (pts.size() == 2) {
    for (Elem a = 0; a < q; ++a) {
      for (int i = 0; i <= sp.n; ++i)
        v[i] = F.add(F.mul(a, pts[0].coords[i]), pts[1].coords[i]);
      emit(v);
    }
    out.push_back(pts[0].index);
  } else {
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        for (int i = 0; i <= sp.n; ++i)
          v[i] = F.add(F.add(F.mul(a, pts[0].coords[i]), F.mul(b, pts[1].coords[i])),
                       pts[2].coords[i]);
        emit(v);
      }
    for (Elem a = 0; a < q; ++a) {
      for (int i = 0; i <= sp.n; ++i)
        v[i] = F.add(F.mul(a, pts[0].coords[i]), pts[1].coords[i]);
      emit(v);
    }
    out.push_back(pts[0].index);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Point apply_projectivity(const ProjSpace& sp, const GfMatrix& m, const Point& p) {
  if (m.rows != (size_t)sp.n + 1 || m.cols != (size_t)sp.n + 1)
    throw std::invalid_argument("projectivity matrix has wrong shape");
  const auto& F = *sp.field;
  std::vector<Elem> v(sp.n + 1, 0);
  for (int r = 0; r <= sp.n; ++r) {
    Elem acc = 0;
    for (int c = 0; c <= sp.n; ++c) acc = F.add(acc, F.mul(m.at(r, c), p.coords[c]));
    v[r] = acc;
  }
  if (!sp.normalize(v)) throw std::invalid_argument("singular projectivity matrix");
  Point out;
  out.index = sp.index_of(v);
  out.coords = std::move(v);
  return out;
}

PointSet apply_projectivity(const GfMatrix& m, const PointSet& x) {
  if (rank_gf(m) != (size_t)x.space.n + 1) throw std::invalid_argument("singular projectivity matrix");
  PointSet out;
  out.space = x.space;
  for (const auto& p : x.points) out.add(apply_projectivity(x.space, m, p).coords);
  return out;
}

bool RowReducer::push(std::span<const Elem> v) {
  const auto& F = *field_;
  std::vector<Elem> r(v.begin(), v.end());
  for (size_t i = 0; i < rows_.size(); ++i) {
    Elem f = r[pivots_[i]];
    if (f)
      for (size_t c = 0; c < dim_; ++c) r[c] = F.sub(r[c], F.mul(f, rows_[i][c]));
  }
  size_t piv = dim_;
  for (size_t c = 0; c < dim_; ++c)
    if (r[c]) {
      piv = c;
      break;
    }
  if (piv == dim_) return false;
  Elem s = F.inv(r[piv]);
  for (size_t c = 0; c < dim_; ++c) r[c] = F.mul(r[c], s);
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

bool RowReducer::in_span(std::span<const Elem> v) const {
  const auto& F = *field_;
  std::vector<Elem> r(v.begin(), v.end());
  for (size_t i = 0; i < rows_.size(); ++i) {
    Elem f = r[pivots_[i]];
    if (f)
      for (size_t c = 0; c < dim_; ++c) r[c] = F.sub(r[c], F.mul(f, rows_[i][c]));
  }
  for (size_t c = 0; c < dim_; ++c)
    if (r[c]) return false;
  return true;
}

void RowReducer::pop() {
  rows_.pop_back();
  pivots_.pop_back();
}

bool general_position(const ProjSpace& sp, std::span<const Point> pts) {
  const size_t m = pts.size();
  if (m > (size_t)sp.n + 2) throw std::invalid_argument("at most n+2 points");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (pts[i].index == pts[j].index) return false;
  if (m <= (size_t)sp.n + 1) return rank_of_points(sp, pts) == m;
  // n+2 points: every (n+1)-subset must have full rank
  std::vector<Point> sub;
  for (size_t skip = 0; skip < m; ++skip) {
    sub.clear();
    for (size_t i = 0; i < m; ++i)
      if (i != skip) sub.push_back(pts[i]);
    if (rank_of_points(sp, sub) != (size_t)sp.n + 1) return false;
  }
  return true;
}

}  // namespace fourgen
