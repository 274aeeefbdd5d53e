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

#include "polylift/slack.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "polylift/errors.hpp"

namespace polylift {

namespace {

int block_of(const Scalar& rhs) {
  const int s = rhs.sign();
  if (s > 0) return 1;
  if (s == 0) return 2;
  return 3;
}

// Fills the matrix from labels: entry = rhs - <normal, point> on point
// columns, -<normal, ray> on ray columns.
Mat slack_entries(const std::vector<SlackRowLabel>& rows,
                  const std::vector<SlackColLabel>& cols) {
  Mat m(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (Index i = 0; i < m.rows(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    for (Index j = 0; j < m.cols(); ++j) {
      const auto& col = cols[static_cast<std::size_t>(j)];
      Scalar v = -dot(row.normal, col.generator);
      if (!col.is_ray) v += row.rhs;
      m(i, j) = v;
    }
  }
  return m;
}

SlackMatrix assemble(std::vector<SlackRowLabel> rows,
                     std::vector<SlackColLabel> cols) {
  SlackMatrix s;
  s.m = slack_entries(rows, cols);
  s.row_labels = std::move(rows);
  s.col_labels = std::move(cols);
  return s;
}

}  // namespace

SlackMatrix build_slack(const Polyhedron& p, const HRep& h, const VRep& v) {
  if (p.is_empty()) throw EmptyPolyhedronError("build_slack: empty set");
  h.validate();
  v.validate();
  if (h.n != p.ambient_dim() || v.n != p.ambient_dim()) {
    throw DimensionMismatchError("build_slack: ambient dimension mismatch");
  }
  if (h.num_eq() > 0) {
    throw RepresentationMismatchError(
        "build_slack: equation rows are not slack rows; pass them as "
        "inequality pairs");
  }
  if (!polyhedra_equal(Polyhedron::from_h(h), p)) {
    throw RepresentationMismatchError(
        "build_slack: the inequality system does not describe the set");
  }
  if (!polyhedra_equal(Polyhedron::from_v(v), p)) {
    throw RepresentationMismatchError(
        "build_slack: the generator list does not describe the set");
  }

  std::vector<SlackRowLabel> rows;
  rows.reserve(static_cast<std::size_t>(h.num_ineq()));
  for (Index i = 0; i < h.num_ineq(); ++i) {
    SlackRowLabel label;
    label.rhs = h.b(i);
    label.block = block_of(label.rhs);
    label.normal = h.a.row(i).transpose();
    rows.push_back(std::move(label));
  }

  std::vector<SlackColLabel> cols;
  cols.reserve(v.points.size() + v.rays.size());
  for (const Vec& c : v.points) cols.push_back({false, c});
  for (const Vec& r : v.rays) cols.push_back({true, r});

  SlackMatrix s = assemble(std::move(rows), std::move(cols));
  for (Index i = 0; i < s.m.rows(); ++i) {
    for (Index j = 0; j < s.m.cols(); ++j) {
      if (s.m(i, j).sign() < 0) {
        throw RepresentationMismatchError(
            "build_slack: negative slack entry; the inequalities do not "
            "contain the generators");
      }
    }
  }
  return s;
}

SlackMatrix canonical_slack(const Polyhedron& p) {
  if (p.is_empty()) throw EmptyPolyhedronError("canonical_slack: empty set");
  if (!p.vrep().lines.empty()) {
    throw LinesPresentError("canonical_slack: set contains lines");
  }
  if (p.dim() != p.ambient_dim()) {
    throw NotFullDimensionalError("canonical_slack: set is not full "
                                  "dimensional");
  }

  const HRep& h = p.minimal_h();
  std::vector<SlackRowLabel> rows;
  rows.reserve(static_cast<std::size_t>(h.num_ineq()));
  for (Index i = 0; i < h.num_ineq(); ++i) {
    Vec normal = h.a.row(i).transpose();
    Scalar rhs = h.b(i);
    if (!rhs.is_zero()) {
      const Scalar scale = abs(rhs);
      normal /= scale;
      rhs /= scale;
    } else {
      Index k = 0;
      while (k < normal.size() && normal(k).is_zero()) ++k;
      if (k < normal.size()) {
        const Scalar scale = abs(normal(k));
        normal /= scale;
      }
    }
    rows.push_back({block_of(rhs), std::move(normal), std::move(rhs)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SlackRowLabel& x, const SlackRowLabel& y) {
                     if (x.block != y.block) return x.block < y.block;
                     return lex_less(x.normal, y.normal);
                   });

  const VRep& v = p.vrep();
  std::vector<SlackColLabel> cols;
  cols.reserve(v.points.size() + v.rays.size());
  for (const Vec& c : v.points) cols.push_back({false, c});
  for (const Vec& r : v.rays) cols.push_back({true, r});

  return assemble(std::move(rows), std::move(cols));
}

SlackFactors slack_factors(const SlackMatrix& s) {
  const Index p = s.rows();
  const Index q = s.cols();
  const Index n = p > 0 ? s.row_labels.front().normal.size()
                        : (q > 0 ? s.col_labels.front().generator.size() : 0);
  SlackFactors f;
  f.u = Mat(p, n + 1);
  for (Index i = 0; i < p; ++i) {
    const auto& row = s.row_labels[static_cast<std::size_t>(i)];
    f.u(i, 0) = row.rhs;
    for (Index j = 0; j < n; ++j) f.u(i, j + 1) = -row.normal(j);
  }
  f.v = Mat(n + 1, q);
  for (Index j = 0; j < q; ++j) {
    const auto& col = s.col_labels[static_cast<std::size_t>(j)];
    f.v(0, j) = col.is_ray ? Scalar(0) : Scalar(1);
    for (Index i = 0; i < n; ++i) f.v(i + 1, j) = col.generator(i);
  }
  return f;
}

SlackMatrix d_slack(const PolarData& pd, const Polyhedron& pointed) {
  if (pointed.is_empty()) throw EmptyPolyhedronError("d_slack: empty set");
  std::vector<SlackRowLabel> rows;
  rows.reserve(pd.d1.size() + pd.d2.size() + pd.d3.size());
  for (const Vec& y : pd.d1) rows.push_back({1, y, Scalar(1)});
  for (const Vec& y : pd.d2) rows.push_back({2, y, Scalar(0)});
  for (const Vec& y : pd.d3) rows.push_back({3, y, Scalar(-1)});

  const VRep& v = pointed.vrep();
  std::vector<SlackColLabel> cols;
  cols.reserve(v.points.size() + v.rays.size());
  for (const Vec& c : v.points) cols.push_back({false, c});
  for (const Vec& r : v.rays) cols.push_back({true, r});

  return assemble(std::move(rows), std::move(cols));
}

RankTheoremReport check_rank_theorem(const Polyhedron& p) {
  if (p.is_empty()) {
    throw EmptyPolyhedronError("check_rank_theorem: empty set");
  }
  const LineDecomposition ld = decompose_lines(p);

  RankTheoremReport report;
  report.pointed_dim = ld.pointed.dim();
  report.translated_cone = is_translated_cone(ld.pointed).has_value();

  SlackMatrix s;
  if (p.vrep().lines.empty() && p.dim() == p.ambient_dim()) {
    s = canonical_slack(p);
  } else {
    s = d_slack(compute_d_sets(p), ld.pointed);
  }
  report.slack_rank = exact_rank(s.m);
  report.holds =
      report.translated_cone || report.slack_rank == report.pointed_dim + 1;
  return report;
}

std::pair<Mat, Mat> pointed_reduction(const SlackMatrix& s, const Mat& u,
                                      const Mat& v, const Mat& q) {
  if (u.rows() != s.rows() || v.cols() != s.cols() || u.cols() != v.rows() ||
      u.cols() < 1 || q.rows() != u.cols() - 1) {
    throw DimensionMismatchError("pointed_reduction: factor shapes do not "
                                 "match the slack matrix");
  }
  // Pairwise orthogonality and nonzero columns; collect squared norms.
  const Index k = q.cols();
  std::vector<Scalar> sq_norms(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) {
    for (Index j = i; j < k; ++j) {
      const Scalar g = dot(q.col(i), q.col(j));
      if (i == j) {
        if (g.is_zero()) {
          throw QNotOrthogonalError("pointed_reduction: zero basis column");
        }
        sq_norms[static_cast<std::size_t>(i)] = g;
      } else if (!g.is_zero()) {
        throw QNotOrthogonalError(
            "pointed_reduction: basis columns are not pairwise orthogonal");
      }
    }
  }

  // u' = u * blockdiag(1, q * d^-1); d^-1 rescales each column of q by its
  // squared norm so that q * d^-1 * q^T acts as the identity on the span.
  Mat right(u.cols(), k + 1);
  right.setConstant(Scalar(0));
  right(0, 0) = Scalar(1);
  for (Index j = 0; j < k; ++j) {
    for (Index i = 0; i + 1 < u.cols(); ++i) {
      right(i + 1, j + 1) = q(i, j) / sq_norms[static_cast<std::size_t>(j)];
    }
  }
  Mat left(k + 1, v.rows());
  left.setConstant(Scalar(0));
  left(0, 0) = Scalar(1);
  for (Index j = 0; j < k; ++j) {
    for (Index i = 0; i + 1 < v.rows(); ++i) {
      left(j + 1, i + 1) = q(i, j);
    }
  }

  Mat u_red = u * right;
  Mat v_red = left * v;
  const Mat product = u_red * v_red;
  for (Index i = 0; i < s.rows(); ++i) {
    for (Index j = 0; j < s.cols(); ++j) {
      if (product(i, j) != s.m(i, j)) {
        throw RepresentationMismatchError(
            "pointed_reduction: reduced factors do not reproduce the slack "
            "matrix; the basis does not span the normal/generator subspace "
            "or the factors are not the structured ones");
      }
    }
  }
  return {std::move(u_red), std::move(v_red)};
}

SlackIdentification is_slack_matrix(const Mat& m) {
  const Index p = m.rows();
  const Index q = m.cols();
  if (q > 24) {
    throw SizeCapError("is_slack_matrix: more than 24 columns");
  }
  for (Index i = 0; i < p; ++i) {
    for (Index j = 0; j < q; ++j) {
      if (m(i, j).sign() < 0) {
        throw RepresentationMismatchError(
            "is_slack_matrix: matrix has negative entries");
      }
    }
  }
  const Index rank = exact_rank(m);
  if (rank < 2) {
    throw RankTooSmallError(
        "is_slack_matrix: rank below two is outside the criterion's scope");
  }

  SlackIdentification out;
  out.note =
      "cone test: generators of rowspace(M) intersected with the nonnegative "
      "orthant against cone(rows of M) (external criterion from the "
      "polyhedral-cone slack characterization); 0/1 test: exhaustive "
      "row-space pattern search";

  // (a) rowspace(M) cap R_+^q as a polyhedral cone: x >= 0 together with
  // orthogonality to a basis of the null space (rowspace = null(M)-perp).
  const Mat null_basis = nullspace_basis(m);
  HRep cone_h;
  cone_h.n = q;
  cone_h.a = Mat(q, q);
  cone_h.a.setConstant(Scalar(0));
  for (Index i = 0; i < q; ++i) cone_h.a(i, i) = Scalar(-1);
  cone_h.b = Vec(q);
  cone_h.b.setConstant(Scalar(0));
  cone_h.e = Mat(null_basis.cols(), q);
  for (Index i = 0; i < null_basis.cols(); ++i) {
    cone_h.e.row(i) = null_basis.col(i).transpose();
  }
  cone_h.f = Vec(null_basis.cols());
  cone_h.f.setConstant(Scalar(0));
  const VRep cone_v = h_to_v(cone_h);

  VRep row_cone;
  row_cone.n = q;
  Vec origin(q);
  origin.setConstant(Scalar(0));
  row_cone.points.push_back(origin);
  for (Index i = 0; i < p; ++i) {
    Vec row = m.row(i).transpose();
    bool zero = true;
    for (Index j = 0; j < q; ++j) {
      if (!row(j).is_zero()) {
        zero = false;
        break;
      }
    }
    if (!zero) row_cone.rays.push_back(std::move(row));
  }
  const Polyhedron row_cone_p = Polyhedron::from_v(row_cone);
  for (const Vec& ray : cone_v.rays) {
    if (!contains_point(row_cone_p, ray)) {
      out.accepted = false;
      out.violation = ray;
      return out;
    }
  }

  // (b) nonzero 0/1 vector in the row space.  Every row-space vector is
  // determined by its values on the pivot columns of the reduced basis, so
  // 0/1 candidates are exactly the subset sums of the basis rows.
  const Mat basis = row_space_basis(m);
  const Index r = basis.rows();
  const std::uint64_t limit = std::uint64_t{1} << r;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    Vec x(q);
    x.setConstant(Scalar(0));
    for (Index i = 0; i < r; ++i) {
      if (mask & (std::uint64_t{1} << i)) x += basis.row(i).transpose();
    }
    bool zero_one = true;
    for (Index j = 0; j < q; ++j) {
      if (!x(j).is_zero() && x(j) != Scalar(1)) {
        zero_one = false;
        break;
      }
    }
    if (zero_one) {
      out.accepted = true;
      out.zero_one_vector = std::move(x);
      return out;
    }
  }
  out.accepted = false;
  return out;
}

}  // namespace polylift
