#include <doctest.h>

#include <random>
#include <vector>

#include "polylift/errors.hpp"
#include "polylift/factorization.hpp"
#include "polylift/lift.hpp"
#include "polylift/linalg.hpp"
#include "polylift/polar.hpp"
#include "polylift/polyhedron.hpp"
#include "polylift/slack.hpp"
#include "test_util.hpp"

using namespace polylift;

namespace {

using Rng = std::mt19937_64;

Vec random_point(Rng& rng, Index n, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = Scalar(num(rng), den(rng));
  return v;
}

Polyhedron random_h(Rng& rng, Index n) {
  std::uniform_int_distribution<int> rows(n == 2 ? 3 : 4, n == 2 ? 6 : 7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> rhs(-2, 4);
  const Index m = rows(rng);
  HRep h;
  h.n = n;
  h.a = Mat(m, n);
  h.b = Vec(m);
  for (Index i = 0; i < m; ++i) {
    bool all_zero = true;
    for (Index j = 0; j < n; ++j) {
      h.a(i, j) = Scalar(coeff(rng));
      all_zero = all_zero && h.a(i, j).is_zero();
    }
    if (all_zero) h.a(i, 0) = Scalar(1);
    h.b(i) = Scalar(rhs(rng));
  }
  return Polyhedron::from_h(std::move(h));
}

Polyhedron random_v(Rng& rng, Index n) {
  std::uniform_int_distribution<int> npts(1, 4);
  std::uniform_int_distribution<int> nrays(0, 2);
  VRep v;
  v.n = n;
  const int pts = npts(rng);
  for (int i = 0; i < pts; ++i) v.points.push_back(random_point(rng, n, -3, 3));
  const int rays = nrays(rng);
  for (int i = 0; i < rays; ++i) {
    Vec r = random_point(rng, n, -2, 2);
    bool zero = true;
    for (Index j = 0; j < n; ++j) zero = zero && r(j).is_zero();
    if (!zero) v.rays.push_back(r);
  }
  return Polyhedron::from_v(std::move(v));
}

Vec negated(const Vec& v) {
  Vec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = -v(i);
  return out;
}

void check_instance(Rng& rng, const Polyhedron& p) {
  if (p.is_empty()) return;
  const Index n = p.ambient_dim();

  // double description round trip
  {
    VRep copy = p.vrep();
    const Polyhedron back = Polyhedron::from_v(std::move(copy));
    CHECK(polyhedra_equal(back, p));
    HRep hcopy = p.minimal_h();
    const Polyhedron hback = Polyhedron::from_h(std::move(hcopy));
    CHECK(polyhedra_equal(hback, p));
  }

  // membership through the polar blocks agrees with direct containment
  {
    const PolarData pd = compute_d_sets(p);
    for (int probe = 0; probe < 10; ++probe) {
      const Vec x = random_point(rng, n, -4, 4);
      CHECK(membership_by_d(pd, x) == contains_point(p, x));
    }
    // vertices themselves are members
    for (const Vec& pt : p.vrep().points) {
      CHECK(membership_by_d(pd, pt));
    }
  }

  // polarity is an involution once the set is shifted over the origin
  {
    const Vec v0 = p.vrep().points.front();
    const Polyhedron centered = translate(p, negated(v0));
    const Polyhedron once = polar_set(centered);
    CHECK(polyhedra_equal(polar_set(once), centered));
  }

  // slack rank against pointed dimension
  {
    const RankTheoremReport rep = check_rank_theorem(p);
    CHECK(rep.holds);
    if (!rep.translated_cone) {
      const LineDecomposition ld = decompose_lines(p);
      CHECK(rep.slack_rank == rep.pointed_dim + 1);
      CHECK(rep.pointed_dim == dimension(ld.pointed));
    }
  }

  // generated slacks are recognized: the facet slack for bounded sets, the
  // homogenization slack (which carries the point-marker row) otherwise
  if (dimension(p) == n && lineality_space(p).cols() == 0) {
    const SlackMatrix s =
        p.vrep().rays.empty() ? canonical_slack(p) : test_util::hom_slack(p);
    if (s.m.cols() <= 24 && exact_rank(s.m) >= 2) {
      CHECK(is_slack_matrix(s.m).accepted);
    }
  }
}

}  // namespace

TEST_CASE("randomized geometric cross checks in the plane and space") {
  Rng rng(12345);
  int nonempty = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const Index n = (iter % 3 == 2) ? 3 : 2;
    const Polyhedron p =
        (iter % 2 == 0) ? random_h(rng, n) : random_v(rng, n);
    if (!p.is_empty()) ++nonempty;
    check_instance(rng, p);
  }
  CHECK(nonempty > 20);  // the generator must not degenerate
}

TEST_CASE("randomized identity lifts verify and project back") {
  Rng rng(777);
  int built = 0;
  for (int iter = 0; iter < 40 && built < 12; ++iter) {
    const Polyhedron p = random_h(rng, 2);
    if (p.is_empty()) continue;
    if (dimension(p) != 2) continue;
    if (lineality_space(p).cols() != 0) continue;
    if (is_translated_cone(p)) continue;
    const PolarData pd = compute_d_sets(p);
    const SlackMatrix ds = d_slack(pd, p);
    Factorization f;
    f.cone = ConeKind::orthant(ds.m.rows());
    for (Index i = 0; i < ds.m.rows(); ++i) {
      Mat a = Mat::Zero(ds.m.rows(), 1);
      a(i, 0) = Scalar(1);
      f.a_factors.push_back(std::move(a));
    }
    for (Index j = 0; j < ds.m.cols(); ++j) {
      Mat b(ds.m.rows(), 1);
      for (Index i = 0; i < ds.m.rows(); ++i) b(i, 0) = ds.m(i, j);
      f.b_factors.push_back(std::move(b));
    }
    const Lift lift = build_lift(p, pd, f);
    const LiftReport rep = verify_lift(p, lift);
    CHECK(rep.all_verified());
    ++built;
  }
  CHECK(built >= 8);
}

TEST_CASE("deterministic degenerate shapes stay consistent") {
  Rng rng(1);
  // single point
  {
    VRep v;
    v.n = 2;
    v.points = {test_util::vec({2, -1})};
    check_instance(rng, Polyhedron::from_v(std::move(v)));
  }
  // segment (not full dimensional)
  {
    VRep v;
    v.n = 2;
    v.points = {test_util::vec({0, 0}), test_util::vec({3, 3})};
    check_instance(rng, Polyhedron::from_v(std::move(v)));
  }
  // slab with a line
  {
    VRep v;
    v.n = 2;
    v.points = {test_util::vec({0, 0}), test_util::vec({0, 1})};
    v.lines = {test_util::vec({1, 0})};
    check_instance(rng, Polyhedron::from_v(std::move(v)));
  }
  // translated cone
  {
    VRep v;
    v.n = 2;
    v.points = {test_util::vec({5, 5})};
    v.rays = {test_util::vec({1, 0}), test_util::vec({0, 1})};
    check_instance(rng, Polyhedron::from_v(std::move(v)));
  }
  // the empty set is silently skipped
  check_instance(rng, Polyhedron::empty_set(2));
}
