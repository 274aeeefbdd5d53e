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

#include "polylift/polar.hpp"

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

/// H-description of { l : <l, x> <= level for all x in p }, written against
/// the generators of p.  The origin as a generator contributes the row
/// 0 <= level: trivial for nonnegative levels, infeasible for negative ones
/// (signalled by nullopt).
std::optional<HRep> level_polar_h(const Polyhedron& p, const Scalar& level) {
  const VRep& v = p.vrep();
  const Index n = p.ambient_dim();
  std::vector<std::pair<Vec, Scalar>> rows;
  for (const Vec& c : v.points) {
    if (is_zero_vec(c)) {
      if (level.sign() < 0) return std::nullopt;
      continue;
    }
    rows.emplace_back(c, level);
  }
  for (const Vec& r : v.rays) {
    rows.emplace_back(r, Scalar(0));
  }
  HRep h;
  h.n = n;
  h.a = Mat(static_cast<Index>(rows.size()), n);
  h.b = Vec(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    h.a.row(static_cast<Index>(i)) = rows[i].first.transpose();
    h.b(static_cast<Index>(i)) = rows[i].second;
  }
  h.e = Mat(static_cast<Index>(v.lines.size()), n);
  h.f = Vec::Zero(static_cast<Index>(v.lines.size()));
  for (std::size_t i = 0; i < v.lines.size(); ++i) {
    h.e.row(static_cast<Index>(i)) = v.lines[i].transpose();
  }
  return h;
}

}  // namespace

std::optional<Scalar> support_value(const Polyhedron& p, const Vec& l) {
  if (l.size() != p.ambient_dim()) {
    throw DimensionMismatchError("support_value: bad functional length");
  }
  if (p.is_empty()) {
    throw EmptyPolyhedronError("support_value over the empty set");
  }
  const VRep& v = p.vrep();
  for (const Vec& w : v.lines) {
    if (!dot(l, w).is_zero()) return std::nullopt;
  }
  for (const Vec& r : v.rays) {
    if (dot(l, r).sign() > 0) return std::nullopt;
  }
  Scalar best = dot(l, v.points.front());
  for (std::size_t i = 1; i < v.points.size(); ++i) {
    const Scalar val = dot(l, v.points[i]);
    if ((val - best).sign() > 0) best = val;
  }
  return best;
}

Polyhedron polar_set(const Polyhedron& p) {
  if (p.is_empty()) {
    throw EmptyPolyhedronError("polar_set of the empty set");
  }
  return Polyhedron::from_h(*level_polar_h(p, Scalar(1)));
}

Polyhedron barrier_cone(const Polyhedron& p) {
  if (p.is_empty()) {
    throw EmptyPolyhedronError("barrier_cone of the empty set");
  }
  const HRep& h = p.hrep();
  VRep cone;
  cone.n = p.ambient_dim();
  cone.points.push_back(Vec::Zero(cone.n));
  for (Index i = 0; i < h.num_ineq(); ++i) {
    cone.rays.push_back(h.a.row(i).transpose());
  }
  for (Index i = 0; i < h.num_eq(); ++i) {
    Vec normal = h.e.row(i).transpose();
    if (!is_zero_vec(normal)) cone.lines.push_back(std::move(normal));
  }
  return Polyhedron::from_v(std::move(cone));
}

PolarData compute_d_sets(const Polyhedron& p) {
  if (p.is_empty()) {
    throw EmptyPolyhedronError("compute_d_sets of the empty set");
  }
  PolarData out;
  out.polar_set = polar_set(p);
  out.polar_recession = recession_cone(out.polar_set);
  {
    const Mat l2 = lineality_space(out.polar_set);
    for (Index j = 0; j < l2.cols(); ++j) out.l_two_basis.push_back(l2.col(j));
  }

  for (const Vec& pt : out.polar_set.vrep().points) {
    if (!is_zero_vec(pt)) out.d1.push_back(pt);
  }
  for (const Vec& ray : out.polar_set.vrep().rays) {
    // A recession direction u of the polar satisfies <u, x> <= 0 on p, so
    // its support value is finite and nonpositive.
    const auto sigma = support_value(p, ray);
    if (!sigma) {
      throw RepresentationMismatchError(
          "polar recession direction with unbounded support value");
    }
    if (sigma->is_zero()) {
      out.d2.push_back(canonical_ray(ray));
    } else {
      out.d32.push_back(ray / -*sigma);
    }
  }

  const auto deep_h = level_polar_h(p, Scalar(-1));
  out.c_three = deep_h ? Polyhedron::from_h(*deep_h)
                       : Polyhedron::empty_set(p.ambient_dim());
  if (!out.c_three.is_empty()) out.d3 = out.c_three.vrep().points;

  std::sort(out.d1.begin(), out.d1.end(), lex_less);
  std::sort(out.d2.begin(), out.d2.end(), lex_less);
  std::sort(out.d3.begin(), out.d3.end(), lex_less);
  std::sort(out.d32.begin(), out.d32.end(), lex_less);
  return out;
}

bool membership_by_d(const PolarData& pd, const Vec& x) {
  for (const Vec& w : pd.l_two_basis) {
    if (!dot(w, x).is_zero()) return false;
  }
  for (const Vec& f : pd.d1) {
    if ((dot(f, x) - Scalar(1)).sign() > 0) return false;
  }
  for (const Vec& f : pd.d2) {
    if (dot(f, x).sign() > 0) return false;
  }
  for (const Vec& f : pd.d3) {
    if ((dot(f, x) + Scalar(1)).sign() > 0) return false;
  }
  for (const Vec& f : pd.d32) {
    if ((dot(f, x) + Scalar(1)).sign() > 0) return false;
  }
  return true;
}

}  // namespace polylift
