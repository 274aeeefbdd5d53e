#include <doctest.h>

#include <vector>

#include "polylift/errors.hpp"
#include "polylift/linalg.hpp"
#include "polylift/polar.hpp"
#include "polylift/polyhedron.hpp"
#include "polylift/slack.hpp"
#include "test_util.hpp"

using namespace polylift;
using test_util::mat;
using test_util::meq;
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

Polyhedron triangle() {  // conv{(0,0), (1,0), (0,1)}
  return from_ineqs(2, {-1, 0, 0, -1, 1, 1}, {0, 0, 1});
}

}  // namespace

TEST_CASE("slack entries are right hand side minus the pairing") {
  Polyhedron p = triangle();
  const SlackMatrix s = build_slack(p, p.minimal_h(), p.vrep());
  REQUIRE(s.m.rows() == 3);
  REQUIRE(s.m.cols() == 3);
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      const Scalar expect =
          s.row_labels[i].rhs -
          dot(s.row_labels[i].normal, s.col_labels[j].generator);
      CHECK(s.m(i, j) == expect);
      CHECK(s.m(i, j) >= Scalar(0));
    }
  }
  // every row and column of a triangle slack has exactly one zero... rows:
  // each facet contains two of the three vertices.
  for (Index i = 0; i < 3; ++i) {
    int zeros = 0;
    for (Index j = 0; j < 3; ++j) zeros += s.m(i, j).is_zero() ? 1 : 0;
    CHECK(zeros == 2);
  }
  CHECK(exact_rank(s.m) == 3);  // dim 2 plus one
}

TEST_CASE("ray columns pair against the normal only") {
  Polyhedron q = from_ineqs(2, {-1, 0, 0, -1}, {0, 0});  // quadrant
  const SlackMatrix s = build_slack(q, q.minimal_h(), q.vrep());
  bool saw_ray = false;
  for (std::size_t j = 0; j < s.col_labels.size(); ++j) {
    if (!s.col_labels[j].is_ray) continue;
    saw_ray = true;
    for (Index i = 0; i < s.m.rows(); ++i) {
      const Scalar expect = -dot(s.row_labels[i].normal,
                                 s.col_labels[j].generator);
      CHECK(s.m(i, static_cast<Index>(j)) == expect);
    }
  }
  CHECK(saw_ray);
}

TEST_CASE("canonical slack is deterministic and scale normalized") {
  Polyhedron p = triangle();
  const SlackMatrix s1 = canonical_slack(p);
  const SlackMatrix s2 = canonical_slack(p);
  CHECK(meq(s1.m, s2.m));
  // right hand sides are normalized to 1, 0, or -1
  for (const SlackRowLabel& label : s1.row_labels) {
    const bool normalized = label.rhs == Scalar(1) || label.rhs == Scalar(0) ||
                            label.rhs == Scalar(-1);
    CHECK(normalized);
  }
  // a rescaled presentation of the same set yields the same canonical slack
  Polyhedron scaled = from_ineqs(2, {-3, 0, 0, -5, 2, 2}, {0, 0, 2});
  const SlackMatrix s3 = canonical_slack(scaled);
  CHECK(meq(s1.m, s3.m));
}

TEST_CASE("d slack stacks the support blocks") {
  const Polyhedron p = from_ineqs(
      2, {-1, -1, 1, 1, 1, -1, -1, 1}, {-1, 3, 1, 1});
  const PolarData pd = compute_d_sets(p);
  const SlackMatrix ds = d_slack(pd, p);
  CHECK(ds.m.rows() == 6);  // 3 + 2 + 1 support rows
  CHECK(ds.m.cols() == 4);  // four vertices, no rays
  int block1 = 0, block2 = 0, block3 = 0;
  for (const SlackRowLabel& label : ds.row_labels) {
    if (label.block == 1) {
      ++block1;
      CHECK(label.rhs == Scalar(1));
    } else if (label.block == 2) {
      ++block2;
      CHECK(label.rhs == Scalar(0));
    } else {
      ++block3;
      CHECK(label.rhs == Scalar(-1));
    }
  }
  CHECK(block1 == 3);
  CHECK(block2 == 2);
  CHECK(block3 == 1);
  for (Index i = 0; i < ds.m.rows(); ++i) {
    for (Index j = 0; j < ds.m.cols(); ++j) CHECK(ds.m(i, j) >= Scalar(0));
  }
}

TEST_CASE("slack factors split along the labels") {
  Polyhedron p = triangle();
  const SlackMatrix s = canonical_slack(p);
  const SlackFactors f = slack_factors(s);
  CHECK(f.u.rows() == s.m.rows());
  CHECK(f.v.cols() == s.m.cols());
  CHECK(meq(f.u * f.v, s.m));
}

TEST_CASE("rank theorem holds on standard examples") {
  const RankTheoremReport tri = check_rank_theorem(triangle());
  CHECK(tri.slack_rank == 3);
  CHECK(tri.pointed_dim == 2);
  CHECK(tri.holds);
  CHECK_FALSE(tri.translated_cone);
  // unbounded but not a cone
  const Polyhedron p = from_ineqs(
      2, {-1, -1, 1, 1, 1, -1, -1, 1}, {-1, 3, 1, 1});
  CHECK(check_rank_theorem(p).holds);
  // a translated cone is exempt but flagged
  const Polyhedron shifted =
      translate(from_ineqs(2, {-1, 0, 0, -1}, {0, 0}), vec({1, 2}));
  const RankTheoremReport cone_report = check_rank_theorem(shifted);
  CHECK(cone_report.translated_cone);
  CHECK(cone_report.holds);
  // a set with lines reduces to its pointed part
  const Polyhedron slab = from_ineqs(2, {0, 1, 0, -1}, {1, 0});
  const RankTheoremReport slab_report = check_rank_theorem(slab);
  CHECK(slab_report.holds);
  CHECK(slab_report.pointed_dim == 1);
  CHECK_THROWS_AS(check_rank_theorem(Polyhedron::empty_set(2)),
                  EmptyPolyhedronError);
}

TEST_CASE("pointed reduction rewrites structured factors") {
  // The slab 0 <= y <= 1 has the x axis as lineality; its polar-side slack
  // lives entirely in the y axis, so the factors reduce to one coordinate.
  const Polyhedron slab = from_ineqs(2, {0, 1, 0, -1}, {1, 0});
  const PolarData pd = compute_d_sets(slab);
  const LineDecomposition ld = decompose_lines(slab);
  const SlackMatrix s = d_slack(pd, ld.pointed);
  const SlackFactors f = slack_factors(s);
  Mat q(2, 1);  // orthogonal basis of the subspace holding the data
  q(0, 0) = Scalar(0);
  q(1, 0) = Scalar(3);  // deliberately unnormalized
  const auto [u2, v2] = pointed_reduction(s, f.u, f.v, q);
  CHECK(u2.cols() == 2);  // rhs column plus one reduced coordinate
  CHECK(v2.rows() == 2);
  CHECK(meq(u2 * v2, s.m));
  // non-orthogonal basis is rejected
  Mat bad(2, 2);
  bad(0, 0) = Scalar(1);
  bad(1, 0) = Scalar(0);
  bad(0, 1) = Scalar(1);
  bad(1, 1) = Scalar(1);
  CHECK_THROWS_AS(pointed_reduction(s, f.u, f.v, bad), QNotOrthogonalError);
}

TEST_CASE("slack recognition accepts true slacks and rejects impostors") {
  const SlackMatrix tri = canonical_slack(triangle());
  const SlackIdentification ok = is_slack_matrix(tri.m);
  CHECK(ok.accepted);
  REQUIRE(ok.zero_one_vector.has_value());
  // the all-ones combination certifies: slack rows of a polytope admit a
  // row-space vector with entries in {0, 1}
  for (Index i = 0; i < ok.zero_one_vector->size(); ++i) {
    const Scalar& e = (*ok.zero_one_vector)(i);
    CHECK((e == Scalar(0) || e == Scalar(1)));
  }
  // circulant counterexample: full rank, nonnegative, but not a slack
  const Mat impostor = mat(3, 3, {1, 2, 0, 0, 1, 2, 2, 0, 1});
  const SlackIdentification bad = is_slack_matrix(impostor);
  CHECK_FALSE(bad.accepted);
  REQUIRE(bad.violation.has_value());
  // rank one matrices are out of scope
  CHECK_THROWS_AS(is_slack_matrix(mat(2, 2, {1, 1, 1, 1})),
                  RankTooSmallError);
  // negative entries cannot be slacks
  CHECK_THROWS_AS(is_slack_matrix(mat(2, 2, {1, -1, 0, 1})),
                  RepresentationMismatchError);
  // width cap
  Mat wide = Mat::Zero(2, 25);
  for (Index j = 0; j < 25; ++j) {
    wide(0, j) = Scalar(j + 1);
    wide(1, j) = Scalar(1);
  }
  CHECK_THROWS_AS(is_slack_matrix(wide), SizeCapError);
}

TEST_CASE("unbounded facet slacks need the homogenization row") {
  // two vertices and two extreme rays; the point-marker vector lies in the
  // row space of the facet slack but outside the cone of its rows, so the
  // recognition criterion rejects the bare facet slack...
  HRep h;
  h.n = 2;
  h.a = Mat(3, 2);
  h.b = Vec(3);
  h.a(0, 0) = Scalar(-1);
  h.a(0, 1) = Scalar(-1);
  h.b(0) = Scalar(1);
  h.a(1, 0) = Scalar(-1);
  h.a(1, 1) = Scalar(1, 3);
  h.b(1) = Scalar(4, 3);
  h.a(2, 0) = Scalar(1);
  h.a(2, 1) = Scalar(-1, 2);
  h.b(2) = Scalar(-1);
  const Polyhedron p = Polyhedron::from_h(std::move(h));
  REQUIRE(p.vrep().points.size() == 2);
  REQUIRE(p.vrep().rays.size() == 2);
  const SlackMatrix facet = canonical_slack(p);
  const SlackIdentification bare = is_slack_matrix(facet.m);
  CHECK_FALSE(bare.accepted);
  REQUIRE(bare.violation.has_value());
  CHECK(veq(*bare.violation, vec({1, 1, 0, 0})));
  // ...while the slack of the homogenization representation, whose extra row
  // realizes that marker as an actual row, is accepted
  const SlackMatrix hom = test_util::hom_slack(p);
  const SlackIdentification full = is_slack_matrix(hom.m);
  CHECK(full.accepted);
  REQUIRE(full.zero_one_vector.has_value());
}
