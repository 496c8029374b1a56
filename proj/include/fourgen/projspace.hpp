#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fourgen/gf.hpp"

namespace fourgen {

// PG(n, q): points are normalized homogeneous (n+1)-tuples, leftmost nonzero
// coordinate equal to 1.  Enumeration lists the chart with leading 1 in
// coordinate 0 first, then leading coordinate 1, and so on; within a chart the
// free coordinates run in ascending base-q order.  A point's index is its
// position in that enumeration.
struct ProjSpace {
  int n = 0;
  FieldPtr field;

  ProjSpace() = default;
  ProjSpace(int n_, FieldPtr f);

  uint32_t q() const { return field->q(); }
  int dim() const { return n; }
  uint64_t num_points() const { return npoints_; }

  // in-place normalization; returns false when the tuple is zero
  bool normalize(std::span<Elem> coords) const;
  uint64_t index_of(std::span<const Elem> normalized) const;
  std::vector<Elem> coords_of(uint64_t index) const;

  bool same_space(const ProjSpace& o) const {
    return n == o.n && field->same_field(*o.field);
  }

private:
  uint64_t npoints_ = 0;
  std::vector<uint64_t> qpow_;     // q^0 .. q^n
  std::vector<uint64_t> chart_;    // first index of each chart
};

struct Point {
  std::vector<Elem> coords;  // normalized
  uint64_t index = 0;
};

Point make_point(const ProjSpace& sp, std::vector<Elem> coords);

// Ordered duplicate-free point collection in one space; the universal object
// every verifier consumes.
struct PointSet {
  ProjSpace space;
  std::vector<Point> points;

  size_t size() const { return points.size(); }
  void add(std::vector<Elem> coords);       // normalizes, throws on duplicates
  bool try_add(std::vector<Elem> coords);   // normalizes, false on duplicate
  bool contains_index(uint64_t idx) const;
  std::vector<char> index_mask() const;     // space-sized membership mask
};

// exactly (q^(n+1)-1)/(q-1) points, index == position
std::vector<Point> enumerate_points(const ProjSpace& sp);

struct GfMatrix {
  size_t rows = 0, cols = 0;
  FieldPtr field;
  std::vector<Elem> a;  // row-major

  GfMatrix() = default;
  GfMatrix(size_t r, size_t c, FieldPtr f) : rows(r), cols(c), field(std::move(f)), a(r * c, 0) {}
  Elem& at(size_t r, size_t c) { return a[r * cols + c]; }
  Elem at(size_t r, size_t c) const { return a[r * cols + c]; }
  static GfMatrix identity(size_t nn, FieldPtr f);
};

GfMatrix mat_mul(const GfMatrix& x, const GfMatrix& y);
// Gauss-Jordan inverse; throws on singular input
GfMatrix mat_inverse(const GfMatrix& m);

// row rank over GF(q); the input is not mutated
size_t rank_gf(const GfMatrix& m);
// rank of the coordinate matrix of a tuple of points
size_t rank_of_points(const ProjSpace& sp, std::span<const Point> pts);

// all points of the projective subspace spanned by 1..3 points, as indices,
// sorted ascending; size is 1, q+1 or q^2+q+1 according to the input rank
std::vector<uint64_t> span_members(const ProjSpace& sp, std::span<const Point> pts);

// image of p under the projectivity with matrix m acting from the left on
// column vectors; m must be invertible
Point apply_projectivity(const ProjSpace& sp, const GfMatrix& m, const Point& p);
PointSet apply_projectivity(const GfMatrix& m, const PointSet& x);

// every (n+1)-subset of pts has full rank (for fewer than n+2 points: the
// tuple is linearly independent); repeated points give false
bool general_position(const ProjSpace& sp, std::span<const Point> pts);

// Incremental Gaussian state over a growing list of vectors; rows are kept
// reduced so a push costs O(dim^2).  push returns false (and stores nothing)
// when the vector is dependent on the current rows.
class RowReducer {
public:
  RowReducer(FieldPtr f, size_t dim) : field_(std::move(f)), dim_(dim) {}
  bool push(std::span<const Elem> v);
  // reduce v against the current rows without storing it; true if it lands in
  // the span
  bool in_span(std::span<const Elem> v) const;
  void pop();
  size_t rank() const { return rows_.size(); }

private:
  FieldPtr field_;
  size_t dim_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<size_t> pivots_;
};

}  // namespace fourgen
