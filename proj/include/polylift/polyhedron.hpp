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

#ifndef POLYLIFT_POLYHEDRON_HPP_
#define POLYLIFT_POLYHEDRON_HPP_

#include <optional>
#include <vector>

#include "polylift/linalg.hpp"

namespace polylift {

/// Inequality description { x : A x <= b, E x = f }.  The equation block may
/// be empty.  Zero rows are not allowed in A.
struct HRep {
  Index n = 0;  // ambient dimension
  Mat a;        // num_ineq x n
  Vec b;
  Mat e;        // num_eq x n
  Vec f;

  static HRep trivial(Index ambient);  // no constraints: all of R^n

  Index num_ineq() const { return a.rows(); }
  Index num_eq() const { return e.rows(); }

  /// Shape and zero-row checks; throws on violation.
  void validate() const;
};

/// Generator description: conv(points) + cone(rays) + span(lines).
/// Canonical instances keep the lineality basis pairwise orthogonal, rays
/// scaled so their first nonzero coordinate is +-1, and both lists sorted
/// lexicographically.  An entirely empty VRep denotes the empty polyhedron.
struct VRep {
  Index n = 0;
  std::vector<Vec> points;
  std::vector<Vec> rays;
  std::vector<Vec> lines;

  bool empty() const { return points.empty(); }

  /// Shape checks plus "no zero ray/line" and "points nonempty unless the
  /// whole description is empty"; throws on violation.
  void validate() const;
};

/// Minimal generator description of { x : A x <= b, E x = f } by the double
/// description method, processing rows in their given order (the
/// homogenization row is inserted first).  The returned points are exactly
/// the extreme points of C intersected with the orthogonal complement of the
/// lineality space, the rays are the extreme rays of the recession cone in
/// that complement, and the lineality basis is orthogonal.  Throws
/// EmptyPolyhedronError when the system is infeasible.
VRep h_to_v(const HRep& h);

/// Minimal inequality description of conv(points) + cone(rays) + span(lines):
/// one irredundant inequality per facet plus an equation system cutting out
/// the affine hull.  Rows are canonically scaled and sorted.  Throws
/// EmptyPolyhedronError when there are no points.
HRep v_to_h(const VRep& v);

/// A polyhedron with both descriptions cached.  Instances are immutable;
/// every cache is filled at construction, so const access is thread-safe.
class Polyhedron {
 public:
  /// A default-constructed instance is an empty placeholder (is_empty() is
  /// true, ambient_dim() is 0); use the factories below for real sets.
  Polyhedron() = default;

  /// Builds from inequalities.  The given system is kept verbatim as hrep();
  /// the generator form and an irredundant inequality form are derived.
  /// The empty polyhedron is representable (is_empty() == true).
  static Polyhedron from_h(HRep h);

  /// Builds from generators; derives the minimal inequality form and
  /// re-canonicalizes the generators.
  static Polyhedron from_v(VRep v);

  /// The empty subset of R^ambient, built from an infeasible inequality
  /// pair.  Requires ambient >= 1.
  static Polyhedron empty_set(Index ambient);

  bool is_empty() const { return v_.empty(); }
  Index ambient_dim() const { return h_.n; }

  /// Affine dimension; -1 for the empty polyhedron.
  Index dim() const { return dim_; }

  /// The inequality system this polyhedron was built from (or, when built
  /// from generators, the derived minimal system).
  const HRep& hrep() const { return h_; }

  /// Irredundant facet inequalities plus affine-hull equations.  Throws
  /// EmptyPolyhedronError for the empty polyhedron.
  const HRep& minimal_h() const;

  /// Canonical minimal generators.  Throws EmptyPolyhedronError for the
  /// empty polyhedron.
  const VRep& vrep() const;

 private:
  HRep h_;
  HRep minimal_h_;
  VRep v_;
  Index dim_ = -1;
};

/// Affine dimension of P (-1 when empty).
Index dimension(const Polyhedron& p);

/// Exact membership test against the cached inequality system.
bool contains_point(const Polyhedron& p, const Vec& x);

/// Whether direction r satisfies A r <= 0, E r = 0 (r may be zero).
bool in_recession_cone(const Polyhedron& p, const Vec& r);

/// Set equality via equal dimensions plus mutual membership of generators.
bool polyhedra_equal(const Polyhedron& p, const Polyhedron& q);

/// Recession cone 0+P = { x : A x <= 0, E x = 0 } as a polyhedron.
/// Requires P nonempty.
Polyhedron recession_cone(const Polyhedron& p);

/// Orthogonal basis of the lineality space (zero columns count = pointed).
/// Requires P nonempty.
Mat lineality_space(const Polyhedron& p);

/// P = pointed + span(lines): the pointed part is P intersected with the
/// orthogonal complement of the lineality space.
struct LineDecomposition {
  Polyhedron pointed;
  Mat lines;  // orthogonal basis, one line per column
};
LineDecomposition decompose_lines(const Polyhedron& p);

/// Apex of P when P is a translated cone (exactly one extreme point), else
/// nullopt.  Requires P nonempty and line-free.
std::optional<Vec> is_translated_cone(const Polyhedron& p);

/// Image of P under the linear map x -> m x, re-minimized.
Polyhedron linear_image(const Polyhedron& p, const Mat& m);

/// The translate P + t.
Polyhedron translate(const Polyhedron& p, const Vec& t);

/// Whether P is a pointed cone with apex at the origin.
bool is_pointed_cone_at_origin(const Polyhedron& p);

}  // namespace polylift

#endif  // POLYLIFT_POLYHEDRON_HPP_
