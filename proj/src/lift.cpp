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

#include "polylift/lift.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polylift/errors.hpp"

namespace polylift {

namespace {

void check_cone_shape(const ConeKind& cone, const Mat& x, const char* who) {
  const bool ok = cone.is_orthant()
                      ? (x.rows() == cone.size && x.cols() == 1)
                      : (x.rows() == cone.size && x.cols() == cone.size);
  if (!ok) {
    throw DimensionMismatchError(std::string(who) +
                                 ": element has the wrong shape for the cone");
  }
}

Mat zero_cone_element(const ConeKind& cone) {
  return cone.is_orthant() ? Mat::Zero(cone.size, 1)
                           : Mat::Zero(cone.size, cone.size);
}

bool vec_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

bool vec_is_zero(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return false;
  }
  return true;
}

Vec negated(const Vec& v) {
  Vec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = -v(i);
  return out;
}

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += print_scalar(v(i));
  }
  s += ")";
  return s;
}

// Flattened coordinate index of matrix entry (i, j), i <= j, for side k:
// the k diagonal entries come first, then the upper triangle row by row.
Index flat_index(Index k, Index i, Index j) {
  if (i > j) std::swap(i, j);
  if (i == j) return i;
  return k + i * (2 * k - i - 1) / 2 + (j - i - 1);
}

struct SliceSolution {
  AffineSubspace slice;
  Mat projection;
};

// Solves the stacked equation system over (x, z)
//   <normal_i, x> + <dual_i, z> = rhs_i        (row duals)
//   <line_i, x>   - <pairing_i, z> = 0         (line equations)
// and returns its z-projection together with the linear map recovering x
// from z on the slice.
SliceSolution solve_slice(Index n, const ConeKind& cone,
                          const std::vector<LiftRowDual>& rows,
                          const std::vector<LiftLineEquation>& lines) {
  const Index m = cone.ambient();
  const Index q =
      static_cast<Index>(rows.size()) + static_cast<Index>(lines.size());
  Mat a = Mat::Zero(q, n + m);
  Vec b = Vec::Zero(q);
  Mat xblock = Mat::Zero(q, n);
  Index at = 0;
  for (const LiftRowDual& r : rows) {
    if (r.normal.size() != n) {
      throw DimensionMismatchError("solve_slice: functional dimension");
    }
    const Vec c = pairing_functional(cone, r.dual);
    for (Index j = 0; j < n; ++j) {
      a(at, j) = r.normal(j);
      xblock(at, j) = r.normal(j);
    }
    for (Index j = 0; j < m; ++j) a(at, n + j) = c(j);
    b(at) = r.rhs;
    ++at;
  }
  for (const LiftLineEquation& le : lines) {
    if (le.line.size() != n) {
      throw DimensionMismatchError("solve_slice: line dimension");
    }
    const Vec c = pairing_functional(cone, le.pairing);
    for (Index j = 0; j < n; ++j) {
      a(at, j) = le.line(j);
      xblock(at, j) = le.line(j);
    }
    for (Index j = 0; j < m; ++j) a(at, n + j) = -c(j);
    ++at;
  }
  if (exact_rank(xblock) != n) {
    throw DegenerateSystemError(
        "the stacked functionals do not span the ambient space, so x is not "
        "determined by z");
  }
  const auto sol = solve_affine(a, b);
  if (!sol) {
    throw DegenerateSystemError("the slice equation system is infeasible");
  }
  const Index dim = sol->basis.cols();
  const Vec x0 = sol->offset.head(n);
  Vec z0 = sol->offset.tail(m);
  const Mat xb = sol->basis.topRows(n);
  Mat zb = sol->basis.bottomRows(m);
  if (exact_rank(zb) != dim) {
    throw DegenerateSystemError(
        "slice directions collapse under the z-projection");
  }
  Mat bmat;
  Mat xmat;
  if (vec_is_zero(z0)) {
    if (!vec_is_zero(x0)) {
      throw DegenerateSystemError(
          "the slice passes through the origin with a nonzero base point");
    }
    bmat = zb;
    xmat = xb;
  } else {
    bmat = Mat(m, dim + 1);
    xmat = Mat(n, dim + 1);
    for (Index i = 0; i < m; ++i) bmat(i, 0) = z0(i);
    for (Index i = 0; i < n; ++i) xmat(i, 0) = x0(i);
    for (Index c = 0; c < dim; ++c) {
      for (Index i = 0; i < m; ++i) bmat(i, c + 1) = zb(i, c);
      for (Index i = 0; i < n; ++i) xmat(i, c + 1) = xb(i, c);
    }
    if (exact_rank(bmat) != dim + 1) {
      throw DegenerateSystemError(
          "the slice's affine hull contains the origin, so the projection "
          "cannot be extended to a linear map");
    }
  }
  Mat projection;
  const Index r = bmat.cols();
  if (r == 0) {
    projection = Mat::Zero(n, m);
  } else {
    const Mat g = bmat.transpose() * bmat;
    Mat aug(r, r + m);
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < r; ++j) aug(i, j) = g(i, j);
      for (Index j = 0; j < m; ++j) aug(i, r + j) = bmat(j, i);
    }
    std::vector<Index> piv;
    const Mat red = rref(aug, &piv);
    if (static_cast<Index>(piv.size()) != r) {
      throw DegenerateSystemError("projection system is singular");
    }
    Mat ginvbt(r, m);
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < m; ++j) ginvbt(i, j) = red(i, r + j);
    }
    projection = xmat * ginvbt;
  }
  SliceSolution out;
  out.slice.offset = std::move(z0);
  out.slice.basis = std::move(zb);
  out.projection = std::move(projection);
  return out;
}

std::vector<LiftRowDual> rows_from_slack(const SlackMatrix& s,
                                         const Factorization& f) {
  std::vector<LiftRowDual> rows;
  rows.reserve(s.row_labels.size());
  for (std::size_t i = 0; i < s.row_labels.size(); ++i) {
    const SlackRowLabel& label = s.row_labels[i];
    rows.push_back({label.block, label.rhs, label.normal, f.a_factors[i]});
  }
  return rows;
}

std::vector<LiftWitness> witnesses_from_slack(const SlackMatrix& s,
                                              const Factorization& f) {
  std::vector<LiftWitness> out;
  out.reserve(s.col_labels.size());
  for (std::size_t j = 0; j < s.col_labels.size(); ++j) {
    const SlackColLabel& label = s.col_labels[j];
    out.push_back({label.is_ray, label.generator, f.b_factors[j]});
  }
  return out;
}

}  // namespace

Vec flatten_cone_element(const ConeKind& cone, const Mat& x) {
  check_cone_shape(cone, x, "flatten_cone_element");
  if (cone.is_orthant()) {
    Vec v(x.rows());
    for (Index i = 0; i < x.rows(); ++i) v(i) = x(i, 0);
    return v;
  }
  const Index k = cone.size;
  for (Index i = 0; i < k; ++i) {
    for (Index j = i + 1; j < k; ++j) {
      if (x(i, j) != x(j, i)) {
        throw DimensionMismatchError(
            "flatten_cone_element: matrix is not symmetric");
      }
    }
  }
  Vec v(cone.ambient());
  for (Index i = 0; i < k; ++i) v(i) = x(i, i);
  for (Index i = 0; i < k; ++i) {
    for (Index j = i + 1; j < k; ++j) v(flat_index(k, i, j)) = x(i, j);
  }
  return v;
}

Mat unflatten_cone_element(const ConeKind& cone, const Vec& v) {
  if (v.size() != cone.ambient()) {
    throw DimensionMismatchError(
        "unflatten_cone_element: coordinate count mismatch");
  }
  if (cone.is_orthant()) {
    Mat x(cone.size, 1);
    for (Index i = 0; i < cone.size; ++i) x(i, 0) = v(i);
    return x;
  }
  const Index k = cone.size;
  Mat x(k, k);
  for (Index i = 0; i < k; ++i) x(i, i) = v(i);
  for (Index i = 0; i < k; ++i) {
    for (Index j = i + 1; j < k; ++j) {
      x(i, j) = v(flat_index(k, i, j));
      x(j, i) = x(i, j);
    }
  }
  return x;
}

Vec pairing_functional(const ConeKind& cone, const Mat& x) {
  Vec v = flatten_cone_element(cone, x);
  if (!cone.is_orthant()) {
    for (Index i = cone.size; i < v.size(); ++i) v(i) = v(i) * Scalar(2);
  }
  return v;
}

Lift build_lift(const Polyhedron& p, const PolarData& pd,
                const Factorization& f) {
  if (p.is_empty()) throw EmptyPolyhedronError("build_lift: empty set");
  const Index n = p.ambient_dim();
  if (dimension(p) != n) {
    throw NotFullDimensionalError("build_lift: the set is not full dimensional");
  }
  if (lineality_space(p).cols() != 0) {
    throw LinesPresentError(
        "build_lift: the set has lines; use build_lift_with_lines");
  }
  if (is_translated_cone(p)) {
    throw TranslatedConeError(
        "build_lift: the set is a translated cone; use build_cone_lift");
  }
  if (f.lineality) {
    throw RepresentationMismatchError(
        "build_lift: unexpected lineality factors for a line-free set");
  }
  const SlackMatrix target = d_slack(pd, p);
  const VerifyOutcome check = verify_factorization(target.m, f);
  if (!check.ok) {
    throw FactorizationMismatchError("build_lift: " + check.violation);
  }
  Lift lift;
  lift.cone = f.cone;
  lift.rows = rows_from_slack(target, f);
  lift.witnesses = witnesses_from_slack(target, f);
  SliceSolution s = solve_slice(n, f.cone, lift.rows, {});
  lift.slice = std::move(s.slice);
  lift.projection = std::move(s.projection);
  return lift;
}

Lift build_cone_lift(const Polyhedron& p, const Factorization& f) {
  if (p.is_empty()) throw EmptyPolyhedronError("build_cone_lift: empty set");
  const Index n = p.ambient_dim();
  if (!is_pointed_cone_at_origin(p)) {
    throw NotPointedConeError(
        "build_cone_lift: the set is not a pointed cone with apex at the "
        "origin");
  }
  if (dimension(p) != n) {
    throw NotFullDimensionalError(
        "build_cone_lift: the cone is not full dimensional");
  }
  if (f.lineality) {
    throw RepresentationMismatchError(
        "build_cone_lift: unexpected lineality factors");
  }
  const Polyhedron polar = polar_set(p);
  const VRep& pv = polar.vrep();
  const VRep& cv = p.vrep();
  const Index q = static_cast<Index>(pv.rays.size());
  const Index w = static_cast<Index>(cv.rays.size());
  Mat target(q, w);
  for (Index i = 0; i < q; ++i) {
    for (Index j = 0; j < w; ++j) {
      target(i, j) = -dot(cv.rays[static_cast<std::size_t>(j)],
                          pv.rays[static_cast<std::size_t>(i)]);
    }
  }
  const VerifyOutcome check = verify_factorization(target, f);
  if (!check.ok) {
    throw FactorizationMismatchError("build_cone_lift: " + check.violation);
  }
  Lift lift;
  lift.cone = f.cone;
  lift.rows.reserve(static_cast<std::size_t>(q));
  for (Index i = 0; i < q; ++i) {
    lift.rows.push_back({2, Scalar(0), pv.rays[static_cast<std::size_t>(i)],
                         f.a_factors[static_cast<std::size_t>(i)]});
  }
  for (const Vec& pt : cv.points) {
    lift.witnesses.push_back({false, pt, zero_cone_element(f.cone)});
  }
  for (Index j = 0; j < w; ++j) {
    lift.witnesses.push_back({true, cv.rays[static_cast<std::size_t>(j)],
                              f.b_factors[static_cast<std::size_t>(j)]});
  }
  SliceSolution s = solve_slice(n, f.cone, lift.rows, {});
  lift.slice = std::move(s.slice);
  lift.projection = std::move(s.projection);
  return lift;
}

Lift build_lift_with_lines(const Polyhedron& p, const PolarData& pd,
                           const Factorization& f) {
  if (p.is_empty()) {
    throw EmptyPolyhedronError("build_lift_with_lines: empty set");
  }
  const LineDecomposition ld = decompose_lines(p);
  if (ld.lines.cols() == 0) return build_lift(p, pd, f);
  const Index n = p.ambient_dim();
  if (dimension(p) != n) {
    throw NotFullDimensionalError(
        "build_lift_with_lines: the set is not full dimensional");
  }
  if (is_translated_cone(ld.pointed)) {
    throw TranslatedComponentError(
        "build_lift_with_lines: the line-free component is a translated cone");
  }
  if (!f.lineality) {
    throw MissingLinealityFactorsError(
        "build_lift_with_lines: the factorization carries no lineality "
        "factors");
  }
  const LinealityFactors& lf = *f.lineality;
  const Index s = lf.lines.cols();
  bool span_ok = s == ld.lines.cols() && lf.lines.rows() == n;
  for (Index i = 0; span_ok && i < s; ++i) {
    span_ok = in_span(ld.lines, lf.lines.col(i));
  }
  for (Index i = 0; span_ok && i < ld.lines.cols(); ++i) {
    span_ok = in_span(lf.lines, ld.lines.col(i));
  }
  if (!span_ok) {
    throw FactorizationMismatchError(
        "build_lift_with_lines: the lineality basis does not span the set's "
        "lineality space");
  }
  const SlackMatrix target = d_slack(pd, ld.pointed);
  const VerifyOutcome check = verify_factorization(target.m, f);
  if (!check.ok) {
    throw FactorizationMismatchError("build_lift_with_lines: " +
                                     check.violation);
  }
  Lift lift;
  lift.cone = f.cone;
  lift.rows = rows_from_slack(target, f);
  lift.line_rows.reserve(static_cast<std::size_t>(s));
  for (Index i = 0; i < s; ++i) {
    lift.line_rows.push_back(
        {lf.lines.col(i), lf.f[static_cast<std::size_t>(i)]});
  }
  lift.witnesses = witnesses_from_slack(target, f);
  for (Index i = 0; i < s; ++i) {
    const Vec l = lf.lines.col(i);
    lift.witnesses.push_back({true, l, lf.a3[static_cast<std::size_t>(i)]});
    lift.witnesses.push_back(
        {true, negated(l), lf.a3_minus[static_cast<std::size_t>(i)]});
  }
  SliceSolution sol = solve_slice(n, f.cone, lift.rows, lift.line_rows);
  lift.slice = std::move(sol.slice);
  lift.projection = std::move(sol.projection);
  return lift;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return "verified";
    case Verdict::failed:
      return "failed";
    default:
      return "undecided";
  }
}

bool LiftReport::all_verified() const {
  if (checks.empty()) return false;
  for (const LiftCheck& c : checks) {
    if (c.verdict != Verdict::verified) return false;
  }
  return true;
}

const LiftCheck* LiftReport::find(const std::string& condition) const {
  for (const LiftCheck& c : checks) {
    if (c.condition == condition) return &c;
  }
  return nullptr;
}

namespace {

// Rows spanning the orthogonal complement of the columns of zb, so that
// v lies in span(zb) iff complement * v = 0.
Mat complement_rows(const Mat& zb) {
  return nullspace_basis(zb.transpose()).transpose();
}

struct WitnessScan {
  std::vector<std::size_t> valid;          // indices of valid witnesses
  std::vector<Vec> valid_point_gens;       // generators of valid point entries
  std::vector<Vec> valid_ray_gens;         // generators of valid ray entries
  std::string first_problem;
};

WitnessScan scan_witnesses(const Lift& lift, Index n) {
  WitnessScan scan;
  const Vec& z0 = lift.slice.offset;
  const Mat& zb = lift.slice.basis;
  for (std::size_t k = 0; k < lift.witnesses.size(); ++k) {
    const LiftWitness& w = lift.witnesses[k];
    if (w.generator.size() != n) {
      throw DimensionMismatchError("verify_lift: witness generator dimension");
    }
    const Vec flat = flatten_cone_element(lift.cone, w.cone_point);
    std::string why;
    if (!cone_contains(lift.cone, w.cone_point)) {
      why = "is not in the cone";
    } else if (w.is_ray ? !in_span(zb, flat)
                        : !in_span(zb, flat - z0)) {
      why = w.is_ray ? "is not on the slice's direction space"
                     : "is not on the slice";
    } else {
      const Vec image = lift.projection * flat;
      if (!vec_equal(image, w.generator)) {
        why = "projects to " + vec_text(image) + " instead of its generator";
      }
    }
    if (!why.empty()) {
      if (scan.first_problem.empty()) {
        scan.first_problem = "witness " + std::to_string(k) +
                             " for generator " + vec_text(w.generator) + " " +
                             why;
      }
      continue;
    }
    scan.valid.push_back(k);
    if (w.is_ray) {
      if (!vec_is_zero(w.generator)) scan.valid_ray_gens.push_back(w.generator);
    } else {
      scan.valid_point_gens.push_back(w.generator);
    }
  }
  return scan;
}

LiftCheck check_witnesses(const Polyhedron& pe, const Lift& lift,
                          const WitnessScan& scan) {
  LiftCheck out;
  out.condition = "witnesses";
  std::string problem = scan.first_problem;
  const VRep& v = pe.vrep();
  std::size_t covered = 0;
  for (const Vec& pt : v.points) {
    bool found = false;
    for (const Vec& g : scan.valid_point_gens) {
      if (vec_equal(g, pt)) {
        found = true;
        break;
      }
    }
    if (found) {
      ++covered;
    } else if (problem.empty()) {
      problem = "extreme point " + vec_text(pt) + " has no valid witness";
    }
  }
  if (problem.empty()) {
    out.verdict = Verdict::verified;
    out.detail = std::to_string(scan.valid.size()) + " witnesses valid, " +
                 std::to_string(covered) + " extreme points covered";
  } else {
    out.verdict = Verdict::failed;
    out.detail = problem;
  }
  return out;
}

LiftCheck check_row_functionals(const Polyhedron& pe, const PolarData& pde,
                                const Lift& lift) {
  LiftCheck out;
  out.condition = "row-functionals";
  if (!pde.l_two_basis.empty()) {
    out.verdict = Verdict::undecided;
    out.detail =
        "the set is not full dimensional; the functional certificate does not "
        "apply";
    return out;
  }
  const Vec& z0 = lift.slice.offset;
  const Mat& zb = lift.slice.basis;
  const Vec px0 = lift.projection * z0;
  const Mat pzb = lift.projection * zb;
  std::string problem;
  for (std::size_t i = 0; i < lift.rows.size() && problem.empty(); ++i) {
    const LiftRowDual& r = lift.rows[i];
    if (r.normal.size() != pe.ambient_dim()) {
      throw DimensionMismatchError("verify_lift: row normal dimension");
    }
    if (!cone_contains(lift.cone, r.dual)) {
      problem = "row " + std::to_string(i) + " dual is not in the cone";
      break;
    }
    const Vec c = pairing_functional(lift.cone, r.dual);
    const Scalar at_offset = r.rhs - dot(r.normal, px0) - dot(c, z0);
    if (!at_offset.is_zero()) {
      problem = "row " + std::to_string(i) +
                " functional does not vanish on the slice offset";
      break;
    }
    for (Index j = 0; j < zb.cols(); ++j) {
      const Scalar at_dir = dot(r.normal, pzb.col(j)) + dot(c, zb.col(j));
      if (!at_dir.is_zero()) {
        problem = "row " + std::to_string(i) +
                  " functional does not vanish on slice direction " +
                  std::to_string(j);
        break;
      }
    }
  }
  for (std::size_t i = 0; i < lift.line_rows.size() && problem.empty(); ++i) {
    const LiftLineEquation& le = lift.line_rows[i];
    const Vec c = pairing_functional(lift.cone, le.pairing);
    const Scalar at_offset = dot(le.line, px0) - dot(c, z0);
    if (!at_offset.is_zero()) {
      problem = "line equation " + std::to_string(i) +
                " does not hold on the slice offset";
      break;
    }
    for (Index j = 0; j < zb.cols(); ++j) {
      const Scalar at_dir = dot(le.line, pzb.col(j)) - dot(c, zb.col(j));
      if (!at_dir.is_zero()) {
        problem = "line equation " + std::to_string(i) +
                  " does not hold on slice direction " + std::to_string(j);
        break;
      }
    }
  }
  std::size_t needed = 0;
  if (problem.empty()) {
    const auto covered = [&lift](int block, const Scalar& rhs, const Vec& y) {
      for (const LiftRowDual& r : lift.rows) {
        if (r.block == block && r.rhs == rhs && vec_equal(r.normal, y)) {
          return true;
        }
      }
      return false;
    };
    for (const Vec& y : pde.d1) {
      ++needed;
      if (!covered(1, Scalar(1), y)) {
        problem = "polar generator " + vec_text(y) + " (support 1) has no row";
        break;
      }
    }
    for (const Vec& y : pde.d2) {
      if (!problem.empty()) break;
      ++needed;
      if (!covered(2, Scalar(0), y)) {
        problem = "polar generator " + vec_text(y) + " (support 0) has no row";
        break;
      }
    }
    for (const Vec& y : pde.d3) {
      if (!problem.empty()) break;
      ++needed;
      if (!covered(3, Scalar(-1), y)) {
        problem = "polar generator " + vec_text(y) + " (support -1) has no row";
        break;
      }
    }
  }
  if (problem.empty()) {
    out.verdict = Verdict::verified;
    out.detail = std::to_string(lift.rows.size()) + " rows vanish on the " +
                 "slice and cover all " + std::to_string(needed) +
                 " polar generator functionals";
  } else {
    out.verdict = Verdict::failed;
    out.detail = problem;
  }
  return out;
}

// Subspace of the psd coordinate space obtained from the slice directions by
// repeatedly forcing whole rows to zero whenever a diagonal entry vanishes
// identically: the result contains every cone element of the direction span.
Mat zero_propagate(const ConeKind& cone, const Mat& zb) {
  const Index k = cone.size;
  Mat cur = zb;
  std::vector<bool> forced(static_cast<std::size_t>(k), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index i = 0; i < k && !changed; ++i) {
      if (forced[static_cast<std::size_t>(i)]) continue;
      bool diag_zero = true;
      for (Index c = 0; c < cur.cols() && diag_zero; ++c) {
        diag_zero = cur(i, c).is_zero();
      }
      if (!diag_zero) continue;
      forced[static_cast<std::size_t>(i)] = true;
      changed = true;
      Mat constraints(k, cur.cols());
      for (Index j = 0; j < k; ++j) {
        const Index idx = flat_index(k, i, j);
        for (Index c = 0; c < cur.cols(); ++c) {
          constraints(j, c) = cur(idx, c);
        }
      }
      cur = cur * nullspace_basis(constraints);
    }
  }
  return cur;
}

LiftCheck check_recession_image(const Polyhedron& pe, const Lift& lift,
                                const WitnessScan& scan) {
  LiftCheck out;
  out.condition = "recession-image";
  const Polyhedron rec = recession_cone(pe);
  const Mat& zb = lift.slice.basis;
  const Index n = pe.ambient_dim();
  if (lift.cone.is_orthant()) {
    const Index m = lift.cone.size;
    HRep h;
    h.n = m;
    h.a = -Mat::Identity(m, m);
    h.b = Vec::Zero(m);
    h.e = complement_rows(zb);
    h.f = Vec::Zero(h.e.rows());
    const Polyhedron directions = Polyhedron::from_h(std::move(h));
    const Polyhedron image = linear_image(directions, lift.projection);
    if (polyhedra_equal(image, rec)) {
      out.verdict = Verdict::verified;
      out.detail =
          "the projected cone-slice recession intersection equals the "
          "recession cone (double description)";
    } else {
      out.verdict = Verdict::failed;
      out.detail =
          "the projected cone-slice recession intersection differs from the "
          "recession cone";
    }
    return out;
  }
  // psd: witness-level certificate
  std::vector<Vec> needed;
  for (const Vec& r : rec.vrep().rays) needed.push_back(r);
  for (const Vec& l : rec.vrep().lines) {
    needed.push_back(l);
    needed.push_back(negated(l));
  }
  if (needed.empty()) {
    out.verdict = Verdict::verified;
    out.detail =
        "the recession cone is trivial and the row functionals bound the "
        "projected recession intersection";
    return out;
  }
  bool covered = !scan.valid_ray_gens.empty();
  if (covered) {
    VRep cone_v;
    cone_v.n = n;
    cone_v.points.push_back(Vec::Zero(n));
    cone_v.rays = scan.valid_ray_gens;
    const Polyhedron witness_cone = Polyhedron::from_v(std::move(cone_v));
    for (const Vec& g : needed) {
      if (!contains_point(witness_cone, g)) {
        covered = false;
        break;
      }
    }
  }
  if (covered) {
    out.verdict = Verdict::verified;
    out.detail =
        "witness-level: every recession generator is a conic combination of "
        "ray witnesses, and the row functionals give the reverse inclusion";
    return out;
  }
  const Mat residual = zero_propagate(lift.cone, zb);
  const Mat image = lift.projection * residual;
  bool image_zero = true;
  for (Index i = 0; i < image.rows() && image_zero; ++i) {
    for (Index j = 0; j < image.cols() && image_zero; ++j) {
      image_zero = image(i, j).is_zero();
    }
  }
  if (image_zero) {
    out.verdict = Verdict::failed;
    out.detail =
        "pi(K cap 0+L) = {0}: zero propagation collapses the projected "
        "recession intersection to the origin, but the recession cone of the "
        "set is nonzero";
  } else {
    out.verdict = Verdict::undecided;
    out.detail =
        "recession coverage incomplete and zero propagation is inconclusive";
  }
  return out;
}

LiftCheck check_properness(const Lift& lift, const WitnessScan& scan) {
  LiftCheck out;
  out.condition = "properness";
  const Vec& z0 = lift.slice.offset;
  const Mat& zb = lift.slice.basis;
  if (lift.cone.is_orthant()) {
    const Index m = lift.cone.size;
    HRep h;
    h.n = m;
    h.a = -Mat::Identity(m, m);
    h.b = Vec::Zero(m);
    h.e = complement_rows(zb);
    h.f = h.e * z0;
    const Polyhedron meet = Polyhedron::from_h(std::move(h));
    if (meet.is_empty()) {
      out.verdict = Verdict::failed;
      out.detail = "the slice does not meet the cone";
      return out;
    }
    const VRep& v = meet.vrep();
    Vec relint = Vec::Zero(m);
    for (const Vec& pt : v.points) relint = relint + pt;
    const Scalar inv(1, static_cast<long>(v.points.size()));
    for (Index i = 0; i < m; ++i) relint(i) = relint(i) * inv;
    for (const Vec& r : v.rays) relint = relint + r;
    for (Index i = 0; i < m; ++i) {
      if (!(relint(i) > Scalar(0))) {
        out.verdict = Verdict::failed;
        out.detail = "the slice meets the cone only on its boundary "
                     "(coordinate " +
                     std::to_string(i) + " vanishes on the intersection)";
        return out;
      }
    }
    out.verdict = Verdict::verified;
    out.detail = "the slice meets the cone's interior";
    return out;
  }
  std::vector<Vec> probes;
  probes.push_back(z0);
  for (Index j = 0; j < zb.cols(); ++j) {
    probes.push_back(z0 + zb.col(j));
    probes.push_back(z0 - zb.col(j));
  }
  Vec all = z0;
  for (Index j = 0; j < zb.cols(); ++j) all = all + zb.col(j);
  probes.push_back(all);
  const Scalar half(1, 2);
  for (std::size_t k : scan.valid) {
    const LiftWitness& w = lift.witnesses[k];
    if (w.is_ray) continue;
    Vec flat = flatten_cone_element(lift.cone, w.cone_point);
    probes.push_back(flat);
    Vec mid(flat.size());
    for (Index i = 0; i < flat.size(); ++i) {
      mid(i) = (flat(i) + z0(i)) * half;
    }
    probes.push_back(mid);
  }
  for (const Vec& probe : probes) {
    if (is_pd_matrix(unflatten_cone_element(lift.cone, probe))) {
      out.verdict = Verdict::verified;
      out.detail = "a strictly feasible slice point was found";
      return out;
    }
  }
  out.verdict = Verdict::undecided;
  out.detail = "no strictly interior probe point found";
  return out;
}

}  // namespace

LiftReport verify_lift(const Polyhedron& p, const Lift& lift) {
  const Index m = lift.cone.ambient();
  const Index n = p.ambient_dim();
  if (lift.slice.offset.size() != m) {
    throw DimensionMismatchError("verify_lift: slice offset dimension");
  }
  if (lift.slice.basis.cols() > 0 && lift.slice.basis.rows() != m) {
    throw DimensionMismatchError("verify_lift: slice basis dimension");
  }
  if (lift.projection.rows() != n || lift.projection.cols() != m) {
    throw DimensionMismatchError("verify_lift: projection shape");
  }
  if (lift.translation && lift.translation->size() != n) {
    throw DimensionMismatchError("verify_lift: translation dimension");
  }
  LiftReport report;
  const Polyhedron pe =
      lift.translation ? translate(p, negated(*lift.translation)) : p;
  if (pe.is_empty()) {
    for (const char* name :
         {"witnesses", "row-functionals", "recession-image", "properness"}) {
      report.checks.push_back({name, Verdict::failed, "the set is empty"});
    }
    return report;
  }
  Lift fixed = lift;
  if (fixed.slice.basis.cols() == 0) fixed.slice.basis = Mat(m, 0);
  const WitnessScan scan = scan_witnesses(fixed, n);
  const PolarData pde = compute_d_sets(pe);
  report.checks.push_back(check_witnesses(pe, fixed, scan));
  report.checks.push_back(check_row_functionals(pe, pde, fixed));
  report.checks.push_back(check_recession_image(pe, fixed, scan));
  report.checks.push_back(check_properness(fixed, scan));
  return report;
}

AffineSubspace eliminate_presentation(const Lift& lift, const HRep& h,
                                      const Mat& u, const Vec& d) {
  const Index n = h.n;
  const Index m = lift.cone.ambient();
  if (h.num_eq() != 0) {
    throw RepresentationMismatchError(
        "eliminate_presentation: the presentation must be inequality-only");
  }
  if (h.a.rows() != u.rows() || h.a.rows() != d.size()) {
    throw DimensionMismatchError(
        "eliminate_presentation: row counts disagree");
  }
  if (u.cols() != m) {
    throw DimensionMismatchError(
        "eliminate_presentation: the y block must match the lift's cone "
        "dimension");
  }
  if (n != lift.projection.rows()) {
    throw DimensionMismatchError(
        "eliminate_presentation: the x block must match the lift's target "
        "dimension");
  }
  const Index q = h.a.rows();
  Mat aug = Mat::Zero(q, n + m + 1);
  for (Index i = 0; i < q; ++i) {
    for (Index j = 0; j < n; ++j) aug(i, j) = h.a(i, j);
    for (Index j = 0; j < m; ++j) aug(i, n + j) = u(i, j);
    aug(i, n + m) = d(i);
  }
  std::vector<Index> piv;
  const Mat red = rref(aug, &piv);
  for (Index pc : piv) {
    if (pc == n + m) {
      throw InconsistentSystemError(
          "eliminate_presentation: the system has no solution");
    }
  }
  std::vector<Index> pure_rows;
  for (Index i = 0; i < q; ++i) {
    Index lead = -1;
    for (Index j = 0; j < n + m + 1; ++j) {
      if (!red(i, j).is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead >= n && lead < n + m) pure_rows.push_back(i);
  }
  Mat r(static_cast<Index>(pure_rows.size()), m);
  Vec e(static_cast<Index>(pure_rows.size()));
  for (std::size_t t = 0; t < pure_rows.size(); ++t) {
    const Index i = pure_rows[t];
    for (Index j = 0; j < m; ++j) {
      r(static_cast<Index>(t), j) = red(i, n + j);
    }
    e(static_cast<Index>(t)) = red(i, n + m);
  }
  const auto sol = solve_affine(r, e);
  if (!sol) {
    throw InconsistentSystemError(
        "eliminate_presentation: the reduced system has no solution");
  }
  return *sol;
}

}  // namespace polylift
