#include <doctest.h>

#include <vector>

#include "polylift/errors.hpp"
#include "polylift/polar.hpp"
#include "polylift/polyhedron.hpp"
#include "test_util.hpp"

using namespace polylift;
using test_util::mat;
using test_util::vec;
using test_util::veq;

namespace {

Polyhedron from_ineqs(Index n, const std::vector<long>& a,
                      const std::vector<long>& b) {
  HRep h;
  h.n = n;
  h.a = mat(static_cast<Index>(b.size()), n, a);
  h.b = vec(b);
  return Polyhedron::from_h(std::move(h));
}

bool set_has(const std::vector<Vec>& set, const Vec& v) {
  for (const Vec& u : set) {
    if (veq(u, v)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("support values on the unit box") {
  const Polyhedron box =
      from_ineqs(2, {1, 0, -1, 0, 0, 1, 0, -1}, {1, 1, 1, 1});
  CHECK(support_value(box, vec({1, 0})) == Scalar(1));
  CHECK(support_value(box, vec({1, 1})) == Scalar(2));
  CHECK(support_value(box, vec({-3, 0})) == Scalar(3));
  CHECK(support_value(box, vec({0, 0})) == Scalar(0));
}

TEST_CASE("polar of the unit box is the cross polytope") {
  const Polyhedron box =
      from_ineqs(2, {1, 0, -1, 0, 0, 1, 0, -1}, {1, 1, 1, 1});
  const Polyhedron diamond = polar_set(box);
  CHECK(contains_point(diamond, vec({1, 0})));
  CHECK(contains_point(diamond, vec({0, -1})));
  CHECK_FALSE(contains_point(diamond, vec({1, 1})));
  const VRep& v = diamond.vrep();
  CHECK(v.points.size() == 4);
  CHECK(v.rays.empty());
  // polarity is an involution around the origin
  CHECK(polyhedra_equal(polar_set(diamond), box));
}

TEST_CASE("polar of a cone is the dual cone") {
  const Polyhedron quadrant = from_ineqs(2, {-1, 0, 0, -1}, {0, 0});
  const Polyhedron polar = polar_set(quadrant);
  CHECK(contains_point(polar, vec({-1, -1})));
  CHECK(contains_point(polar, vec({0, 0})));
  CHECK_FALSE(contains_point(polar, vec({1, 0})));
  CHECK(polyhedra_equal(polar_set(polar), quadrant));
}

TEST_CASE("polar of an unbounded set not containing the origin") {
  // 1 <= x+y <= 3, |x - y| <= 1: square with vertices (1,0),(0,1),(2,1),(1,2)
  const Polyhedron p = from_ineqs(
      2, {-1, -1, 1, 1, 1, -1, -1, 1}, {-1, 3, 1, 1});
  const Polyhedron polar = polar_set(p);
  const VRep& v = polar.vrep();
  CHECK(v.points.size() == 3);
  CHECK(set_has(v.points, vec({-1, 1})));
  CHECK(set_has(v.points, vec({1, -1})));
  CHECK(v.rays.size() == 2);
  CHECK(set_has(v.rays, vec({-1, 0})));
  CHECK(set_has(v.rays, vec({0, -1})));
}

TEST_CASE("barrier cone of a slab is its width direction") {
  // 0 <= y <= 1 in the plane: linear functionals bounded above are (0, t)
  const Polyhedron slab = from_ineqs(2, {0, 1, 0, -1}, {1, 0});
  const Polyhedron barrier = barrier_cone(slab);
  CHECK(contains_point(barrier, vec({0, 5})));
  CHECK(contains_point(barrier, vec({0, -5})));
  CHECK_FALSE(contains_point(barrier, vec({1, 0})));
}

TEST_CASE("the d blocks partition the polar generators by support value") {
  const Polyhedron p = from_ineqs(
      2, {-1, -1, 1, 1, 1, -1, -1, 1}, {-1, 3, 1, 1});
  const PolarData pd = compute_d_sets(p);
  CHECK(pd.d1.size() == 3);
  CHECK(pd.d2.size() == 2);
  CHECK(pd.d3.size() == 1);
  CHECK(pd.d32.empty());
  CHECK(pd.l_two_basis.empty());
  CHECK(set_has(pd.d3, vec({-1, -1})));
  for (const Vec& d : pd.d1) CHECK(support_value(p, d) == Scalar(1));
  for (const Vec& d : pd.d2) CHECK(support_value(p, d) == Scalar(0));
  for (const Vec& d : pd.d3) CHECK(support_value(p, d) == Scalar(-1));
}

TEST_CASE("membership via the d blocks matches direct containment") {
  const Polyhedron p = from_ineqs(
      2, {-1, -1, 1, 1, 1, -1, -1, 1}, {-1, 3, 1, 1});
  const PolarData pd = compute_d_sets(p);
  const std::vector<Vec> probes = {
      vec({1, 1}),  vec({0, 0}),   vec({2, 1}), vec({3, 3}),
      vec({1, 0}),  vec({-1, -1}), vec({2, 2}), vec({0, 2}),
  };
  for (const Vec& x : probes) {
    CHECK(membership_by_d(pd, x) == contains_point(p, x));
  }
}

TEST_CASE("d blocks of a cone are pure recession functionals") {
  const Polyhedron quadrant = from_ineqs(2, {-1, 0, 0, -1}, {0, 0});
  const PolarData pd = compute_d_sets(quadrant);
  CHECK(pd.d1.empty());
  CHECK(pd.d2.size() == 2);
  CHECK(pd.d3.empty());
  CHECK(pd.d32.empty());
}

TEST_CASE("lower dimensional sets expose an l2 basis") {
  // the vertical segment from (0,0) to (0,1) spans only the y axis
  VRep seg;
  seg.n = 2;
  seg.points = {vec({0, 0}), vec({0, 1})};
  const PolarData pd = compute_d_sets(Polyhedron::from_v(std::move(seg)));
  REQUIRE(pd.l_two_basis.size() == 1);
  CHECK(pd.l_two_basis[0](1) == Scalar(0));
  // the d vectors live in the orthogonal complement of the l2 component
  CHECK(!pd.d1.empty());
  for (const Vec& d : pd.d1) CHECK(d(0) == Scalar(0));
  for (const Vec& d : pd.d2) CHECK(d(0) == Scalar(0));
  for (const Vec& d : pd.d3) CHECK(d(0) == Scalar(0));
  // a full dimensional set has no l2 component
  const Polyhedron slab = from_ineqs(2, {0, 1, 0, -1}, {1, 0});
  CHECK(compute_d_sets(slab).l_two_basis.empty());
}

TEST_CASE("empty sets are rejected") {
  const Polyhedron e = Polyhedron::empty_set(2);
  CHECK_THROWS_AS(compute_d_sets(e), EmptyPolyhedronError);
  CHECK_THROWS_AS(polar_set(e), EmptyPolyhedronError);
}
