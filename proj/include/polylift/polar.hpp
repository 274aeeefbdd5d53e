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

#ifndef POLYLIFT_POLAR_HPP_
#define POLYLIFT_POLAR_HPP_

#include <optional>
#include <vector>

#include "polylift/polyhedron.hpp"

namespace polylift {

/// Supremum of <l, x> over a nonempty polyhedron; nullopt means unbounded
/// above.  Throws EmptyPolyhedronError on the empty set.
std::optional<Scalar> support_value(const Polyhedron& p, const Vec& l);

/// The polar { l : <l, x> <= 1 for all x in p }.  Requires p nonempty.
Polyhedron polar_set(const Polyhedron& p);

/// The cone of linear functionals bounded above on p: generated by the
/// inequality normals plus the span of the equation normals of any valid
/// inequality description.  Requires p nonempty.
Polyhedron barrier_cone(const Polyhedron& p);

/// Polar-side decomposition of a nonempty polyhedron C: the polar itself,
/// its recession cone, the deeper level set C3 = { l : <l, x> <= -1 on C },
/// and the finite D-sets that drive membership tests, slack matrices, and
/// lift construction.  Writing L2 for the lineality space of the polar (the
/// orthogonal complement of span C) and C' for polar ∩ L2-perp:
///  - d1:  extreme points of C' other than the origin (each has support
///         value 1 over C),
///  - d2:  extreme rays of the recession cone of C' whose support value over
///         C is 0, scaled so the first nonzero coordinate has absolute
///         value 1,
///  - d32: extreme rays of the recession cone of C' with negative support
///         value, rescaled so the support value is exactly -1 (always a
///         subset of d3 as point sets),
///  - d3:  extreme points of C3 ∩ L2-perp; empty iff C contains the origin,
///  - l_two_basis: an orthogonal basis of L2 (empty when C is full
///         dimensional).
/// All lists are sorted lexicographically.
struct PolarData {
  Polyhedron polar_set;        // C-polar
  Polyhedron polar_recession;  // recession cone of the polar
  Polyhedron c_three;          // C3, possibly empty
  std::vector<Vec> d1;
  std::vector<Vec> d2;
  std::vector<Vec> d3;
  std::vector<Vec> d32;
  std::vector<Vec> l_two_basis;
};

PolarData compute_d_sets(const Polyhedron& p);

/// Exact membership test driven by a D-set decomposition of C:
/// x ∈ C  iff  <d, x> <= 1 for d in d1, <= 0 for d in d2, <= -1 for d in
/// d3 and d32, and x is orthogonal to every element of l_two_basis.
bool membership_by_d(const PolarData& pd, const Vec& x);

}  // namespace polylift

#endif  // POLYLIFT_POLAR_HPP_
