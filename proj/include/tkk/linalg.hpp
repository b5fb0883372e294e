#pragma once

// Dense linear algebra over an abstract field, instantiated with 62-bit prime
// fields for the heavy rank computations and with exact rationals as the
// fallback arbiter.  All matrices here are small weight-space blocks.

#include "tkk/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tkk {

struct FpField {
  Zp zp;
  using Elt = std::uint64_t;
  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  bool is_zero(Elt a) const { return a == 0; }
  Elt add(Elt a, Elt b) const { return zp.add(a, b); }
  Elt sub(Elt a, Elt b) const { return zp.sub(a, b); }
  Elt mul(Elt a, Elt b) const { return zp.mul(a, b); }
  Elt neg(Elt a) const { return zp.neg(a); }
  Elt inv(Elt a) const { return zp.inv(a); }
  Elt from_rat(const Rat& r) const { return zp.from_rat(r); }
  Elt from_long(long long v) const { return zp.from_long(v); }
};

struct RatField {
  using Elt = Rat;
  Elt zero() const { return Rat(0); }
  Elt one() const { return Rat(1); }
  bool is_zero(const Elt& a) const { return a == 0; }
  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt inv(const Elt& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  Elt from_rat(const Rat& r) const { return r; }
  Elt from_long(long long v) const { return Rat(v); }
};

template <class F>
struct Mat {
  using Elt = typename F::Elt;
  int rows = 0, cols = 0;
  std::vector<Elt> a;

  Mat() = default;
  Mat(int r, int c, const F& f) : rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}

  Elt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Elt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Row-echelon span with pivot tracking: a growing basis of a subspace of k^d.
template <class F>
struct Span {
  using Elt = typename F::Elt;
  F f;
  int d = 0;
  std::vector<std::vector<Elt>> rows;  // echelonized, each with leading 1
  std::vector<int> pivots;             // pivot column of each row

  Span() = default;
  Span(const F& field, int dim) : f(field), d(dim) {}

  int dim() const { return static_cast<int>(rows.size()); }

  // Reduce v against the span in place; returns the pivot column of the
  // residual or -1 if v reduced to zero.
  int reduce(std::vector<Elt>& v) const {
    for (size_t k = 0; k < rows.size(); ++k) {
      const Elt& c = v[pivots[k]];
      if (f.is_zero(c)) continue;
      Elt cc = c;
      for (int j = 0; j < d; ++j) v[j] = f.sub(v[j], f.mul(cc, rows[k][j]));
    }
    for (int j = 0; j < d; ++j)
      if (!f.is_zero(v[j])) return j;
    return -1;
  }

  // Insert v (destroyed); returns true if the span grew.
  bool insert(std::vector<Elt> v) {
    int p = reduce(v);
    if (p < 0) return false;
    Elt ip = f.inv(v[p]);
    for (int j = 0; j < d; ++j) v[j] = f.mul(v[j], ip);
    // back-substitute to keep reduced form
    for (size_t k = 0; k < rows.size(); ++k) {
      const Elt c = rows[k][p];
      if (f.is_zero(c)) continue;
      for (int j = 0; j < d; ++j) rows[k][j] = f.sub(rows[k][j], f.mul(c, v[j]));
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }

  bool contains(std::vector<Elt> v) const { return reduce(v) < 0; }

  // Coordinates of v in the span basis (throws if not contained).
  std::vector<Elt> coordinates(std::vector<Elt> v) const {
    std::vector<Elt> coord(rows.size(), f.zero());
    for (size_t k = 0; k < rows.size(); ++k) {
      const Elt c = v[pivots[k]];
      if (f.is_zero(c)) continue;
      coord[k] = c;
      for (int j = 0; j < d; ++j) v[j] = f.sub(v[j], f.mul(c, rows[k][j]));
    }
    for (int j = 0; j < d; ++j)
      if (!f.is_zero(v[j])) throw std::logic_error("Span::coordinates: not in span");
    return coord;
  }
};

// Rank of a set of column vectors.
template <class F>
int rank_of(const F& f, int d, const std::vector<std::vector<typename F::Elt>>& cols) {
  Span<F> s(f, d);
  int r = 0;
  for (auto& c : cols)
    if (s.insert(c)) ++r;
  return r;
}

// Nullspace of the linear map given by rows `constraints` acting on k^n:
// returns a basis of {x : for every row r, sum_j r[j] x[j] = 0}.
template <class F>
std::vector<std::vector<typename F::Elt>> nullspace(
    const F& f, int n, const std::vector<std::vector<typename F::Elt>>& constraints) {
  using Elt = typename F::Elt;
  // Gaussian elimination on the constraint matrix.
  std::vector<std::vector<Elt>> m = constraints;
  std::vector<int> pivot_col;
  size_t row = 0;
  for (int col = 0; col < n && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && f.is_zero(m[sel][col])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Elt ip = f.inv(m[row][col]);
    for (int j = 0; j < n; ++j) m[row][j] = f.mul(m[row][j], ip);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row) continue;
      const Elt c = m[i][col];
      if (f.is_zero(c)) continue;
      for (int j = 0; j < n; ++j) m[i][j] = f.sub(m[i][j], f.mul(c, m[row][j]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Elt>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elt> v(n, f.zero());
    v[free] = f.one();
    for (size_t k = 0; k < pivot_col.size(); ++k)
      v[pivot_col[k]] = f.neg(m[k][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tkk
