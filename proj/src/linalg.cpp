// Copyright 2026 The polylift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polylift/linalg.hpp"

#include <algorithm>

namespace polylift {

Scalar dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) {
    throw DimensionMismatchError("dot: size " + std::to_string(x.size()) +
                                 " vs " + std::to_string(y.size()));
  }
  Scalar acc(0);
  for (Index i = 0; i < x.size(); ++i) acc += x(i) * y(i);
  return acc;
}

Mat rref(const Mat& m, std::vector<Index>* pivot_cols) {
  Mat r = m;
  if (pivot_cols) pivot_cols->clear();
  Index pivot_row = 0;
  for (Index col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    Index found = -1;
    for (Index i = pivot_row; i < r.rows(); ++i) {
      if (!r(i, col).is_zero()) {
        found = i;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) r.row(found).swap(r.row(pivot_row));
    const Scalar inv = r(pivot_row, col).inverse();
    for (Index j = col; j < r.cols(); ++j) r(pivot_row, j) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col);
      for (Index j = col; j < r.cols(); ++j) {
        r(i, j) -= factor * r(pivot_row, j);
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++pivot_row;
  }
  return r;
}

Index exact_rank(const Mat& m) {
  std::vector<Index> pivots;
  rref(m, &pivots);
  return static_cast<Index>(pivots.size());
}

std::optional<AffineSubspace> solve_affine(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) {
    throw DimensionMismatchError("solve_affine: " + std::to_string(a.rows()) +
                                 " rows vs rhs of size " +
                                 std::to_string(b.size()));
  }
  Mat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Index> pivots;
  const Mat r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) {
    return std::nullopt;  // a pivot in the rhs column: inconsistent
  }

  std::vector<bool> is_pivot(a.cols(), false);
  for (Index p : pivots) is_pivot[p] = true;

  AffineSubspace sol;
  sol.offset = Vec::Zero(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    sol.offset(pivots[k]) = r(static_cast<Index>(k), a.cols());
  }
  const Index nullity = a.cols() - static_cast<Index>(pivots.size());
  sol.basis = Mat::Zero(a.cols(), nullity);
  Index out = 0;
  for (Index col = 0; col < a.cols(); ++col) {
    if (is_pivot[col]) continue;
    sol.basis(col, out) = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      sol.basis(pivots[k], out) = -r(static_cast<Index>(k), col);
    }
    ++out;
  }
  return sol;
}

Mat row_space_basis(const Mat& m) {
  std::vector<Index> pivots;
  const Mat r = rref(m, &pivots);
  Mat basis(static_cast<Index>(pivots.size()), m.cols());
  for (Index i = 0; i < basis.rows(); ++i) basis.row(i) = r.row(i);
  return basis;
}

Mat nullspace_basis(const Mat& m) {
  std::vector<Index> pivots;
  const Mat r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : pivots) is_pivot[p] = true;
  const Index nullity = m.cols() - static_cast<Index>(pivots.size());
  Mat basis = Mat::Zero(m.cols(), nullity);
  Index out = 0;
  for (Index col = 0; col < m.cols(); ++col) {
    if (is_pivot[col]) continue;
    basis(col, out) = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      basis(pivots[k], out) = -r(static_cast<Index>(k), col);
    }
    ++out;
  }
  return basis;
}

bool in_span(const Mat& basis_cols, const Vec& v) {
  return solve_affine(basis_cols, v).has_value();
}

bool subspace_equal(const AffineSubspace& s1, const AffineSubspace& s2) {
  if (s1.ambient_dim() != s2.ambient_dim()) return false;
  if (exact_rank(s1.basis) != exact_rank(s2.basis)) return false;
  // Equal span dimension plus one-way containment forces equal spans; the
  // offset difference must then lie in that common span.
  Vec diff = s2.offset - s1.offset;
  if (!in_span(s1.basis, diff)) return false;
  for (Index j = 0; j < s2.basis.cols(); ++j) {
    if (!in_span(s1.basis, s2.basis.col(j))) return false;
  }
  return true;
}

Mat gram_schmidt(const Mat& cols) {
  std::vector<Vec> ortho;
  for (Index j = 0; j < cols.cols(); ++j) {
    Vec v = cols.col(j);
    for (const Vec& u : ortho) {
      const Scalar coeff = dot(v, u) / dot(u, u);
      v = v - coeff * u;
    }
    bool zero = true;
    for (Index i = 0; i < v.size(); ++i) {
      if (!v(i).is_zero()) {
        zero = false;
        break;
      }
    }
    if (!zero) ortho.push_back(v);
  }
  Mat out(cols.rows(), static_cast<Index>(ortho.size()));
  for (std::size_t j = 0; j < ortho.size(); ++j) {
    out.col(static_cast<Index>(j)) = ortho[j];
  }
  return out;
}

bool lex_less(const Vec& x, const Vec& y) {
  const Index n = std::min(x.size(), y.size());
  for (Index i = 0; i < n; ++i) {
    const int c = (x(i) - y(i)).sign();
    if (c < 0) return true;
    if (c > 0) return false;
  }
  return x.size() < y.size();
}

Vec canonical_ray(const Vec& r) {
  for (Index i = 0; i < r.size(); ++i) {
    if (!r(i).is_zero()) {
      return r / abs(r(i));
    }
  }
  throw Error("canonical_ray: zero direction");
}

Vec canonical_line(const Vec& w) {
  for (Index i = 0; i < w.size(); ++i) {
    if (!w(i).is_zero()) {
      return w / w(i);
    }
  }
  throw Error("canonical_line: zero direction");
}

Mat rows_matrix(const std::vector<Vec>& rows, Index ambient) {
  Mat m(static_cast<Index>(rows.size()), ambient);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ambient) {
      throw DimensionMismatchError("rows_matrix: inconsistent vector length");
    }
    m.row(static_cast<Index>(i)) = rows[i].transpose();
  }
  return m;
}

Mat cols_matrix(const std::vector<Vec>& cols, Index ambient) {
  Mat m(ambient, static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != ambient) {
      throw DimensionMismatchError("cols_matrix: inconsistent vector length");
    }
    m.col(static_cast<Index>(j)) = cols[j];
  }
  return m;
}

}  // namespace polylift
