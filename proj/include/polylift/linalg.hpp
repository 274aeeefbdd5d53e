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

#ifndef POLYLIFT_LINALG_HPP_
#define POLYLIFT_LINALG_HPP_

#include <optional>
#include <vector>

#include "polylift/scalar.hpp"

namespace polylift {

using Index = Eigen::Index;

/// Solution set of a consistent linear system: offset + span(basis columns).
/// basis may have zero columns (a unique solution).
struct AffineSubspace {
  Vec offset;
  Mat basis;

  Index ambient_dim() const { return offset.size(); }
  Index dim() const { return basis.cols(); }
};

/// Exact dot product.  Eigen's own dot() is avoided so that no conjugation
/// or numeric-traits subtleties enter the exact paths.
Scalar dot(const Vec& x, const Vec& y);

/// Reduced row echelon form with deterministic first-nonzero pivoting: pivots
/// are chosen as the first row (in current order) with a nonzero entry in the
/// leftmost unresolved column, never by magnitude.  Optionally reports the
/// pivot columns.
Mat rref(const Mat& m, std::vector<Index>* pivot_cols = nullptr);

/// Rank over the exact field.
Index exact_rank(const Mat& m);

/// Solves A x = b.  Returns the full solution set, or nullopt when the system
/// is infeasible (infeasibility is a value here, not an error).  The offset is
/// the canonical solution with all free variables set to zero.
std::optional<AffineSubspace> solve_affine(const Mat& a, const Vec& b);

/// Canonical basis of the row space: the nonzero rows of rref(m).
Mat row_space_basis(const Mat& m);

/// Columns spanning the right null space {x : m x = 0}, in the canonical
/// free-column order of the reduced row echelon form.
Mat nullspace_basis(const Mat& m);

/// Whether v lies in the span of the columns of basis_cols.
bool in_span(const Mat& basis_cols, const Vec& v);

/// Whether the affine solution sets coincide (equal ambient dimension and
/// dimension, mutual containment).
bool subspace_equal(const AffineSubspace& s1, const AffineSubspace& s2);

/// Gram-Schmidt over the exact field without normalization: returns pairwise
/// orthogonal columns spanning the same space; dependent inputs are dropped.
Mat gram_schmidt(const Mat& cols);

/// Strict lexicographic order on coordinate vectors.
bool lex_less(const Vec& x, const Vec& y);

/// Positive rescaling of a nonzero direction so its first nonzero coordinate
/// becomes +1 or -1 (division by the absolute value of that coordinate).
Vec canonical_ray(const Vec& r);

/// Rescaling of a nonzero line direction so its first nonzero coordinate
/// becomes exactly +1 (lines absorb sign flips).
Vec canonical_line(const Vec& w);

/// Assembles vectors into a matrix, one vector per row.  `ambient` fixes the
/// column count (and so permits an empty list).
Mat rows_matrix(const std::vector<Vec>& rows, Index ambient);

/// Assembles vectors into a matrix, one vector per column.
Mat cols_matrix(const std::vector<Vec>& cols, Index ambient);

}  // namespace polylift

#endif  // POLYLIFT_LINALG_HPP_
