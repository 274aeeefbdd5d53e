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

#include "polylift/polyhedron.hpp"

#include <algorithm>
#include <utility>

namespace polylift {

namespace {

bool is_zero_vec(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) return false;
  }
  return true;
}

/// Incremental double description on cones { x : rows x <= 0 } (with optional
/// equality rows), maintaining a lineality basis plus the extreme rays of the
/// pointed quotient.  Constraints are inserted strictly in the order given;
/// pivots inside one insertion take the first usable candidate, never the
/// largest.  Adjacency of two rays is decided by the algebraic rank test:
/// they are adjacent iff the rows tight at both have rank
/// (ambient - lineality_dim - 2).
class DoubleDescription {
 public:
  explicit DoubleDescription(Index ambient) : ambient_(ambient) {
    for (Index i = 0; i < ambient; ++i) {
      Vec e = Vec::Zero(ambient);
      e(i) = Scalar(1);
      lineality_.push_back(e);
    }
  }

  void insert(const Vec& row, bool equality) {
    if (row.size() != ambient_) {
      throw DimensionMismatchError("double description: bad row length");
    }
    if (is_zero_vec(row)) {
      // 0 <= 0 (or 0 = 0): no-op, but keep index bookkeeping aligned.
      for (Ray& r : rays_) r.active.push_back(true);
      inserted_.push_back(row);
      return;
    }

    // Phase 1: direct the lineality space along the new constraint.
    Index pivot = -1;
    std::vector<Scalar> lin_vals(lineality_.size());
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      lin_vals[i] = dot(row, lineality_[i]);
      if (pivot < 0 && !lin_vals[i].is_zero()) pivot = static_cast<Index>(i);
    }
    if (pivot >= 0) {
      Vec star = lineality_[static_cast<std::size_t>(pivot)];
      Scalar star_val = lin_vals[static_cast<std::size_t>(pivot)];
      if (star_val.sign() > 0) {
        star = -star;
        star_val = -star_val;
      }
      std::vector<Vec> new_lin;
      for (std::size_t i = 0; i < lineality_.size(); ++i) {
        if (static_cast<Index>(i) == pivot) continue;
        new_lin.push_back(lineality_[i] - (lin_vals[i] / star_val) * star);
      }
      lineality_ = std::move(new_lin);
      for (Ray& r : rays_) {
        const Scalar val = dot(row, r.v);
        if (!val.is_zero()) r.v = canonical_ray(r.v - (val / star_val) * star);
        r.active.push_back(true);
      }
      if (!equality) {
        // The pivot direction survives one-sidedly as a new extreme ray.
        Ray nr;
        nr.v = canonical_ray(star);
        nr.active.assign(inserted_.size(), true);  // lineality was tight
        nr.active.push_back(false);
        rays_.push_back(std::move(nr));
      }
      inserted_.push_back(row);
      return;
    }

    // Phase 2: lineality is already inside the hyperplane; split the rays.
    std::vector<Scalar> vals(rays_.size());
    std::vector<int> side(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      vals[i] = dot(row, rays_[i].v);
      side[i] = vals[i].sign();
    }
    const Index lambda = static_cast<Index>(lineality_.size());
    const Index need = ambient_ - lambda - 2;

    std::vector<Ray> result;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (side[i] == 0 || (!equality && side[i] < 0)) {
        Ray kept = rays_[i];
        kept.active.push_back(side[i] == 0);
        result.push_back(std::move(kept));
      }
    }
    std::vector<Ray> fresh;
    for (std::size_t p = 0; p < rays_.size(); ++p) {
      if (side[p] <= 0) continue;
      for (std::size_t q = 0; q < rays_.size(); ++q) {
        if (side[q] >= 0) continue;
        if (!adjacent(rays_[p], rays_[q], need)) continue;
        Ray nr;
        nr.v = canonical_ray(vals[p] * rays_[q].v - vals[q] * rays_[p].v);
        // Recompute the tight set honestly; a combination can pick up
        // equalities that neither parent had.
        nr.active.resize(inserted_.size() + 1);
        for (std::size_t k = 0; k < inserted_.size(); ++k) {
          nr.active[k] = dot(inserted_[k], nr.v).is_zero();
        }
        nr.active[inserted_.size()] = true;
        fresh.push_back(std::move(nr));
      }
    }
    // Deduplicate: in the pointed quotient an extreme ray is determined by
    // its tight set.
    for (Ray& nr : fresh) {
      bool dup = false;
      for (const Ray& r : result) {
        if (r.active == nr.active) {
          dup = true;
          break;
        }
      }
      if (!dup) result.push_back(std::move(nr));
    }
    rays_ = std::move(result);
    inserted_.push_back(row);
  }

  /// Orthogonal lineality basis and extreme rays of the quotient, projected
  /// onto the orthogonal complement of the lineality space.
  std::pair<Mat, std::vector<Vec>> finish() const {
    Mat lin = gram_schmidt(cols_matrix(lineality_, ambient_));
    std::vector<Vec> out;
    out.reserve(rays_.size());
    for (const Ray& r : rays_) {
      Vec v = r.v;
      for (Index j = 0; j < lin.cols(); ++j) {
        const Vec u = lin.col(j);
        v = v - (dot(v, u) / dot(u, u)) * u;
      }
      out.push_back(canonical_ray(v));
    }
    return {lin, out};
  }

 private:
  struct Ray {
    Vec v;
    std::vector<bool> active;  // active[k]: inserted row k is tight here
  };

  bool adjacent(const Ray& r1, const Ray& r2, Index need) const {
    if (need < 0) return rays_.size() == 2;  // a 1- or 2-dim quotient
    std::vector<Index> common;
    for (std::size_t k = 0; k < inserted_.size(); ++k) {
      if (r1.active[k] && r2.active[k]) common.push_back(static_cast<Index>(k));
    }
    if (static_cast<Index>(common.size()) < need) return false;
    Mat sub(static_cast<Index>(common.size()), ambient_);
    for (std::size_t i = 0; i < common.size(); ++i) {
      sub.row(static_cast<Index>(i)) = inserted_[common[i]].transpose();
    }
    return exact_rank(sub) == need;
  }

  Index ambient_;
  std::vector<Vec> lineality_;
  std::vector<Ray> rays_;
  std::vector<Vec> inserted_;
};

/// Runs double description on the homogenization of an inequality system.
/// Returns nullopt when the system is infeasible.
std::optional<VRep> h_to_v_impl(const HRep& h) {
  h.validate();
  const Index n = h.n;
  DoubleDescription dd(n + 1);
  // x0 >= 0 first, then the given rows in order: inequalities a x <= b x0
  // become (-b, a), equations likewise.
  {
    Vec first = Vec::Zero(n + 1);
    first(0) = Scalar(-1);
    dd.insert(first, false);
  }
  for (Index i = 0; i < h.num_ineq(); ++i) {
    Vec row(n + 1);
    row(0) = -h.b(i);
    for (Index j = 0; j < n; ++j) row(j + 1) = h.a(i, j);
    dd.insert(row, false);
  }
  for (Index i = 0; i < h.num_eq(); ++i) {
    Vec row(n + 1);
    row(0) = -h.f(i);
    for (Index j = 0; j < n; ++j) row(j + 1) = h.e(i, j);
    dd.insert(row, true);
  }

  auto [lin, rays] = dd.finish();
  VRep v;
  v.n = n;
  for (const Vec& r : rays) {
    if (r(0).sign() > 0) {
      Vec pt(n);
      for (Index j = 0; j < n; ++j) pt(j) = r(j + 1) / r(0);
      v.points.push_back(std::move(pt));
    } else {
      // r(0) < 0 cannot survive the x0 >= 0 row.
      Vec dir(n);
      for (Index j = 0; j < n; ++j) dir(j) = r(j + 1);
      v.rays.push_back(canonical_ray(dir));
    }
  }
  for (Index j = 0; j < lin.cols(); ++j) {
    // Lineality of the homogenized cone always has a zero x0 component.
    Vec dir(n);
    for (Index k = 0; k < n; ++k) dir(k) = lin(k + 1, j);
    v.lines.push_back(canonical_line(dir));
  }
  if (v.points.empty()) return std::nullopt;
  std::sort(v.points.begin(), v.points.end(), lex_less);
  std::sort(v.rays.begin(), v.rays.end(), lex_less);
  std::sort(v.lines.begin(), v.lines.end(), lex_less);
  return v;
}

/// Canonical scaling for an inequality row (a | b): divide by |first nonzero
/// of a|.  Only positive scalings preserve the inequality.
void canonicalize_ineq_row(Vec* a, Scalar* b) {
  for (Index i = 0; i < a->size(); ++i) {
    if (!(*a)(i).is_zero()) {
      const Scalar s = abs((*a)(i));
      *a = *a / s;
      *b = *b / s;
      return;
    }
  }
  throw Error("canonicalize_ineq_row: zero normal");
}

/// Canonical scaling for an equation row: make the first nonzero coefficient
/// exactly +1 (equations may also be negated).
void canonicalize_eq_row(Vec* e, Scalar* f) {
  for (Index i = 0; i < e->size(); ++i) {
    if (!(*e)(i).is_zero()) {
      const Scalar s = (*e)(i);
      *e = *e / s;
      *f = *f / s;
      return;
    }
  }
  throw Error("canonicalize_eq_row: zero normal");
}

}  // namespace

HRep HRep::trivial(Index ambient) {
  HRep h;
  h.n = ambient;
  h.a = Mat(0, ambient);
  h.b = Vec(0);
  h.e = Mat(0, ambient);
  h.f = Vec(0);
  return h;
}

void HRep::validate() const {
  if (n < 0) throw DimensionMismatchError("HRep: negative dimension");
  const bool a_ok = a.cols() == n || a.rows() == 0;
  const bool e_ok = e.cols() == n || e.rows() == 0;
  if (!a_ok || !e_ok || a.rows() != b.size() || e.rows() != f.size()) {
    throw DimensionMismatchError("HRep: inconsistent shapes");
  }
  for (Index i = 0; i < a.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < n; ++j) {
      if (!a(i, j).is_zero()) {
        zero = false;
        break;
      }
    }
    if (zero) {
      throw RepresentationMismatchError("HRep: zero inequality row " +
                                        std::to_string(i));
    }
  }
}

void VRep::validate() const {
  for (const Vec& p : points) {
    if (p.size() != n) throw DimensionMismatchError("VRep: bad point length");
  }
  for (const Vec& r : rays) {
    if (r.size() != n) throw DimensionMismatchError("VRep: bad ray length");
    if (is_zero_vec(r)) throw RepresentationMismatchError("VRep: zero ray");
  }
  for (const Vec& w : lines) {
    if (w.size() != n) throw DimensionMismatchError("VRep: bad line length");
    if (is_zero_vec(w)) throw RepresentationMismatchError("VRep: zero line");
  }
  if (points.empty() && (!rays.empty() || !lines.empty())) {
    throw RepresentationMismatchError(
        "VRep: rays or lines without any point");
  }
}

VRep h_to_v(const HRep& h) {
  auto v = h_to_v_impl(h);
  if (!v) throw EmptyPolyhedronError("h_to_v: infeasible system");
  return *std::move(v);
}

HRep v_to_h(const VRep& v) {
  v.validate();
  if (v.empty()) throw EmptyPolyhedronError("v_to_h: no points");
  const Index n = v.n;
  // Generators of the polar of the homogenization: (y0, y) with
  // y0 + <y, c> <= 0 for points, <y, r> <= 0 for rays, <y, w> = 0 for lines.
  DoubleDescription dd(n + 1);
  for (const Vec& c : v.points) {
    Vec row(n + 1);
    row(0) = Scalar(1);
    for (Index j = 0; j < n; ++j) row(j + 1) = c(j);
    dd.insert(row, false);
  }
  for (const Vec& r : v.rays) {
    Vec row(n + 1);
    row(0) = Scalar(0);
    for (Index j = 0; j < n; ++j) row(j + 1) = r(j);
    dd.insert(row, false);
  }
  for (const Vec& w : v.lines) {
    Vec row(n + 1);
    row(0) = Scalar(0);
    for (Index j = 0; j < n; ++j) row(j + 1) = w(j);
    dd.insert(row, true);
  }

  auto [lin, rays] = dd.finish();
  std::vector<std::pair<Vec, Scalar>> ineqs;  // normal, rhs
  std::vector<std::pair<Vec, Scalar>> eqs;
  for (const Vec& g : rays) {
    Vec normal(n);
    for (Index j = 0; j < n; ++j) normal(j) = g(j + 1);
    if (is_zero_vec(normal)) continue;  // the trivial 0 <= -y0 artifact
    Scalar rhs = -g(0);
    canonicalize_ineq_row(&normal, &rhs);
    ineqs.emplace_back(std::move(normal), std::move(rhs));
  }
  for (Index j = 0; j < lin.cols(); ++j) {
    Vec normal(n);
    for (Index k = 0; k < n; ++k) normal(k) = lin(k + 1, j);
    if (is_zero_vec(normal)) continue;
    Scalar rhs = -lin(0, j);
    canonicalize_eq_row(&normal, &rhs);
    eqs.emplace_back(std::move(normal), std::move(rhs));
  }
  // An inequality whose normal lies in the row space of the equations is
  // constant over the affine hull, hence implied; such rows can appear as the
  // dual ray of the face at infinity when the set is not full-dimensional.
  if (!eqs.empty()) {
    std::vector<Vec> eq_rows;
    eq_rows.reserve(eqs.size());
    for (const auto& e : eqs) eq_rows.push_back(e.first);
    const Mat eq_basis = row_space_basis(rows_matrix(eq_rows, n)).transpose();
    std::vector<std::pair<Vec, Scalar>> kept;
    for (auto& row : ineqs) {
      if (!in_span(eq_basis, row.first)) kept.push_back(std::move(row));
    }
    ineqs = std::move(kept);
  }
  auto row_less = [](const std::pair<Vec, Scalar>& x,
                     const std::pair<Vec, Scalar>& y) {
    if (lex_less(x.first, y.first)) return true;
    if (lex_less(y.first, x.first)) return false;
    return (x.second - y.second).sign() < 0;
  };
  std::sort(ineqs.begin(), ineqs.end(), row_less);
  std::sort(eqs.begin(), eqs.end(), row_less);

  HRep h;
  h.n = n;
  h.a = Mat(static_cast<Index>(ineqs.size()), n);
  h.b = Vec(static_cast<Index>(ineqs.size()));
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    h.a.row(static_cast<Index>(i)) = ineqs[i].first.transpose();
    h.b(static_cast<Index>(i)) = ineqs[i].second;
  }
  h.e = Mat(static_cast<Index>(eqs.size()), n);
  h.f = Vec(static_cast<Index>(eqs.size()));
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    h.e.row(static_cast<Index>(i)) = eqs[i].first.transpose();
    h.f(static_cast<Index>(i)) = eqs[i].second;
  }
  return h;
}

namespace {

Index dim_from_v(const VRep& v) {
  if (v.empty()) return -1;
  std::vector<Vec> dirs;
  for (std::size_t i = 1; i < v.points.size(); ++i) {
    dirs.push_back(v.points[i] - v.points[0]);
  }
  dirs.insert(dirs.end(), v.rays.begin(), v.rays.end());
  dirs.insert(dirs.end(), v.lines.begin(), v.lines.end());
  return exact_rank(rows_matrix(dirs, v.n));
}

Scalar row_dot(const Mat& m, Index i, const Vec& x) {
  Scalar acc(0);
  for (Index j = 0; j < m.cols(); ++j) acc += m(i, j) * x(j);
  return acc;
}

bool satisfies_h(const HRep& h, const Vec& x, bool homogeneous) {
  for (Index i = 0; i < h.num_ineq(); ++i) {
    const Scalar lhs = row_dot(h.a, i, x);
    const Scalar rhs = homogeneous ? Scalar(0) : h.b(i);
    if ((lhs - rhs).sign() > 0) return false;
  }
  for (Index i = 0; i < h.num_eq(); ++i) {
    const Scalar lhs = row_dot(h.e, i, x);
    const Scalar rhs = homogeneous ? Scalar(0) : h.f(i);
    if (lhs != rhs) return false;
  }
  return true;
}

/// Construction-time consistency check between the two cached descriptions.
void check_mutual_membership(const HRep& h, const VRep& v) {
  for (const Vec& p : v.points) {
    if (!satisfies_h(h, p, false)) {
      throw RepresentationMismatchError(
          "polyhedron caches disagree: generator point violates a row");
    }
  }
  for (const Vec& r : v.rays) {
    if (!satisfies_h(h, r, true)) {
      throw RepresentationMismatchError(
          "polyhedron caches disagree: generator ray violates a row");
    }
  }
  for (const Vec& w : v.lines) {
    if (!satisfies_h(h, w, true) || !satisfies_h(h, Vec(-w), true)) {
      throw RepresentationMismatchError(
          "polyhedron caches disagree: generator line violates a row");
    }
  }
}

}  // namespace

Polyhedron Polyhedron::from_h(HRep h) {
  h.validate();
  Polyhedron p;
  p.h_ = std::move(h);
  auto v = h_to_v_impl(p.h_);
  if (v) {
    p.v_ = *std::move(v);
    p.minimal_h_ = v_to_h(p.v_);
    p.dim_ = dim_from_v(p.v_);
    check_mutual_membership(p.h_, p.v_);
  } else {
    p.v_ = VRep{};
    p.v_.n = p.h_.n;
    p.dim_ = -1;
  }
  return p;
}

Polyhedron Polyhedron::from_v(VRep v) {
  v.validate();
  if (v.empty()) {
    throw EmptyPolyhedronError(
        "from_v requires at least one point; build empty sets from an "
        "infeasible inequality description instead");
  }
  // Orthogonalize a supplied lineality basis if needed.
  if (!v.lines.empty()) {
    Mat lin = gram_schmidt(cols_matrix(v.lines, v.n));
    v.lines.clear();
    for (Index j = 0; j < lin.cols(); ++j) v.lines.push_back(lin.col(j));
  }
  Polyhedron p;
  p.h_ = v_to_h(v);
  p.minimal_h_ = p.h_;
  p.v_ = h_to_v(p.h_);
  p.dim_ = dim_from_v(p.v_);
  check_mutual_membership(p.h_, p.v_);
  return p;
}

Polyhedron Polyhedron::empty_set(Index ambient) {
  if (ambient < 1) {
    throw DimensionMismatchError("empty_set requires ambient dimension >= 1");
  }
  HRep h;
  h.n = ambient;
  h.a = Mat::Zero(2, ambient);
  h.a(0, 0) = Scalar(1);
  h.a(1, 0) = Scalar(-1);
  h.b = Vec(2);
  h.b(0) = Scalar(-1);
  h.b(1) = Scalar(-1);
  return from_h(std::move(h));
}

const HRep& Polyhedron::minimal_h() const {
  if (is_empty()) throw EmptyPolyhedronError("minimal_h of empty polyhedron");
  return minimal_h_;
}

const VRep& Polyhedron::vrep() const {
  if (is_empty()) throw EmptyPolyhedronError("vrep of empty polyhedron");
  return v_;
}

Index dimension(const Polyhedron& p) { return p.dim(); }

bool contains_point(const Polyhedron& p, const Vec& x) {
  if (x.size() != p.ambient_dim()) {
    throw DimensionMismatchError("contains_point: bad point length");
  }
  if (p.is_empty()) return false;
  return satisfies_h(p.hrep(), x, false);
}

bool in_recession_cone(const Polyhedron& p, const Vec& r) {
  if (r.size() != p.ambient_dim()) {
    throw DimensionMismatchError("in_recession_cone: bad direction length");
  }
  if (p.is_empty()) return false;
  return satisfies_h(p.hrep(), r, true);
}

bool polyhedra_equal(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim()) return false;
  if (p.is_empty() || q.is_empty()) return p.is_empty() == q.is_empty();
  if (p.dim() != q.dim()) return false;
  auto contained = [](const Polyhedron& inner, const Polyhedron& outer) {
    const VRep& v = inner.vrep();
    for (const Vec& pt : v.points) {
      if (!contains_point(outer, pt)) return false;
    }
    for (const Vec& r : v.rays) {
      if (!in_recession_cone(outer, r)) return false;
    }
    for (const Vec& w : v.lines) {
      if (!in_recession_cone(outer, w)) return false;
      if (!in_recession_cone(outer, Vec(-w))) return false;
    }
    return true;
  };
  return contained(p, q) && contained(q, p);
}

Polyhedron recession_cone(const Polyhedron& p) {
  if (p.is_empty()) {
    throw EmptyPolyhedronError("recession_cone of empty polyhedron");
  }
  HRep h = p.hrep();
  h.b = Vec::Zero(h.b.size());
  h.f = Vec::Zero(h.f.size());
  return Polyhedron::from_h(std::move(h));
}

Mat lineality_space(const Polyhedron& p) {
  if (p.is_empty()) {
    throw EmptyPolyhedronError("lineality_space of empty polyhedron");
  }
  return cols_matrix(p.vrep().lines, p.ambient_dim());
}

LineDecomposition decompose_lines(const Polyhedron& p) {
  if (p.is_empty()) {
    throw EmptyPolyhedronError("decompose_lines of empty polyhedron");
  }
  // The cached generators already describe P ∩ (lineality)^perp.
  VRep pointed = p.vrep();
  Mat lines = cols_matrix(pointed.lines, p.ambient_dim());
  pointed.lines.clear();
  LineDecomposition out{Polyhedron::from_v(std::move(pointed)), std::move(lines)};
  return out;
}

std::optional<Vec> is_translated_cone(const Polyhedron& p) {
  if (p.is_empty()) {
    throw EmptyPolyhedronError("is_translated_cone of empty polyhedron");
  }
  if (!p.vrep().lines.empty()) {
    throw LinesPresentError("is_translated_cone requires a line-free input");
  }
  if (p.vrep().points.size() == 1) return p.vrep().points.front();
  return std::nullopt;
}

Polyhedron linear_image(const Polyhedron& p, const Mat& m) {
  if (m.cols() != p.ambient_dim()) {
    throw DimensionMismatchError("linear_image: map expects dimension " +
                                 std::to_string(m.cols()));
  }
  if (p.is_empty()) {
    throw EmptyPolyhedronError("linear_image of empty polyhedron");
  }
  VRep image;
  image.n = m.rows();
  for (const Vec& pt : p.vrep().points) image.points.push_back(m * pt);
  for (const Vec& r : p.vrep().rays) {
    Vec img = m * r;
    if (!is_zero_vec(img)) image.rays.push_back(std::move(img));
  }
  for (const Vec& w : p.vrep().lines) {
    Vec img = m * w;
    if (!is_zero_vec(img)) image.lines.push_back(std::move(img));
  }
  return Polyhedron::from_v(std::move(image));
}

Polyhedron translate(const Polyhedron& p, const Vec& t) {
  if (t.size() != p.ambient_dim()) {
    throw DimensionMismatchError("translate: offset expects dimension " +
                                 std::to_string(p.ambient_dim()));
  }
  HRep h = p.hrep();
  for (Index i = 0; i < h.a.rows(); ++i) h.b(i) += row_dot(h.a, i, t);
  for (Index i = 0; i < h.e.rows(); ++i) h.f(i) += row_dot(h.e, i, t);
  return Polyhedron::from_h(std::move(h));
}

bool is_pointed_cone_at_origin(const Polyhedron& p) {
  if (p.is_empty()) return false;
  const VRep& v = p.vrep();
  return v.lines.empty() && v.points.size() == 1 && is_zero_vec(v.points[0]);
}

}  // namespace polylift
