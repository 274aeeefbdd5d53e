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

#ifndef POLYLIFT_SLACK_HPP_
#define POLYLIFT_SLACK_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polylift/polar.hpp"

namespace polylift {

/// Row provenance of a slack matrix: the inequality <normal, x> <= rhs it came
/// from.  block classifies the right-hand side: 1 for rhs > 0, 2 for rhs = 0,
/// 3 for rhs < 0.
struct SlackRowLabel {
  int block = 0;
  Vec normal;
  Scalar rhs;
};

/// Column provenance: the generator (extreme point or extreme ray) whose
/// slacks fill the column.
struct SlackColLabel {
  bool is_ray = false;
  Vec generator;
};

/// Nonnegative matrix of inequality slacks, rows labeled by inequalities and
/// columns by generators.  Entry (i, j) is rhs_i - <normal_i, c_j> for a point
/// column and -<normal_i, r_j> for a ray column.
struct SlackMatrix {
  Mat m;
  std::vector<SlackRowLabel> row_labels;
  std::vector<SlackColLabel> col_labels;

  Index rows() const { return m.rows(); }
  Index cols() const { return m.cols(); }
};

/// Slack matrix of P for a caller-chosen inequality system h and generator
/// list v, preserving both given orders.  h must be pure inequalities (no
/// equation rows); v may carry lines, which contribute no columns but are
/// checked like the rest: both h and v must describe exactly P, and every
/// slack entry must come out nonnegative.  Violations throw
/// RepresentationMismatchError.
SlackMatrix build_slack(const Polyhedron& p, const HRep& h, const VRep& v);

/// Slack matrix of a full-dimensional line-free P in canonical form: facet
/// rows rescaled so the right-hand side becomes +1 or -1 (facets through the
/// origin instead get their first nonzero normal coordinate scaled to +-1),
/// grouped by right-hand-side sign (positive, zero, negative) and ordered
/// lexicographically by normal within each group; columns are the extreme
/// points in lexicographic order followed by the extreme rays in
/// lexicographic order.  Throws EmptyPolyhedronError, LinesPresentError, or
/// NotFullDimensionalError.
SlackMatrix canonical_slack(const Polyhedron& p);

/// The structured rank factorization a slack matrix carries by construction:
/// u = [rhs | -normals] (one row per inequality) and v = [all-ones over point
/// columns, zeros over ray columns; generators as columns], with s.m = u * v.
struct SlackFactors {
  Mat u;
  Mat v;
};
SlackFactors slack_factors(const SlackMatrix& s);

/// Slack matrix of the polar-side inequality description: one row per element
/// of d1 (rhs +1), d2 (rhs 0), and d3 (rhs -1), in their stored orders, and
/// one column per generator of the pointed part.  No cross-representation
/// check is run: for sets that are not full dimensional the polar description
/// cuts P only within its affine hull, so the usual round trip does not apply.
SlackMatrix d_slack(const PolarData& pd, const Polyhedron& pointed);

/// Outcome of comparing a slack-matrix rank against the dimension of the
/// pointed part.
struct RankTheoremReport {
  Index slack_rank = 0;
  Index pointed_dim = 0;
  bool translated_cone = false;  // rank reported, equality not asserted
  bool holds = false;            // slack_rank == pointed_dim + 1
};

/// Computes the slack rank of P (canonical slack for full-dimensional
/// line-free sets, the polar-side slack otherwise) and compares it with
/// dim(pointed part) + 1.  Translated cones are exempt from the equality:
/// the report flags them and leaves holds vacuously true.  Throws
/// EmptyPolyhedronError.
RankTheoremReport check_rank_theorem(const Polyhedron& p);

/// Change of coordinates for slack factors of a set with lineality: given the
/// structured factors u, v of s and a matrix q whose columns are a pairwise
/// orthogonal basis of the subspace holding the normals and generators,
/// returns (u * blockdiag(1, q * d^-1), blockdiag(1, q^T) * v) where d is the
/// diagonal of squared column norms of q.  The product of the returned pair
/// equals s.m exactly (checked; RepresentationMismatchError otherwise), and
/// the second factor's generator rows are the coordinates of the original
/// generators in the q basis.  Throws QNotOrthogonalError when q's columns
/// are not pairwise orthogonal and nonzero.
std::pair<Mat, Mat> pointed_reduction(const SlackMatrix& s, const Mat& u,
                                      const Mat& v, const Mat& q);

/// Decision report for recognizing slack matrices among nonnegative matrices
/// of rank at least two.
struct SlackIdentification {
  bool accepted = false;
  /// When accepted: a nonzero vector with entries in {0, 1} lying in the row
  /// space of the matrix.  Its support marks the point columns.
  std::optional<Vec> zero_one_vector;
  /// When the cone test fails: a nonnegative row-space vector outside the
  /// cone generated by the rows.
  std::optional<Vec> violation;
  /// Human-readable provenance of the criterion used.
  std::string note;
};

/// Tests whether a nonnegative matrix is a slack matrix of some polyhedron:
/// (a) every nonnegative vector in the row space must lie in the cone
/// generated by the rows (checked exactly on the generators of
/// rowspace intersect the nonnegative orthant), and (b) some nonzero 0/1
/// vector must lie in the row space (exhaustive search over value patterns on
/// the pivot coordinates of a row-space basis).  Throws RankTooSmallError for
/// rank below two, RepresentationMismatchError for negative entries, and
/// SizeCapError beyond 24 columns.
SlackIdentification is_slack_matrix(const Mat& m);

}  // namespace polylift

#endif  // POLYLIFT_SLACK_HPP_
