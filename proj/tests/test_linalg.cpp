#include <doctest.h>

#include <vector>

#include "polylift/linalg.hpp"
#include "polylift/scalar.hpp"
#include "test_util.hpp"

using namespace polylift;
using test_util::mat;
using test_util::vec;
using test_util::veq;

namespace {
const Scalar r2 = Scalar(mpq_class(0), mpq_class(1), 2);
}  // namespace

TEST_CASE("rref reduces and reports pivots") {
  Mat m = mat(3, 4, {1, 2, 0, 3,
                     2, 4, 1, 7,
                     0, 0, 2, 2});
  std::vector<Index> pivots;
  const Mat r = rref(m, &pivots);
  CHECK(pivots == std::vector<Index>{0, 2});
  CHECK(r(0, 0) == Scalar(1));
  CHECK(r(0, 1) == Scalar(2));
  CHECK(r(0, 2) == Scalar(0));
  CHECK(r(0, 3) == Scalar(3));
  CHECK(r(1, 2) == Scalar(1));
  CHECK(r(1, 3) == Scalar(1));
  for (Index j = 0; j < 4; ++j) CHECK(r(2, j) == Scalar(0));
  CHECK(exact_rank(m) == 2);
}

TEST_CASE("rank over a quadratic extension sees exact cancellation") {
  // Second row is sqrt(2) times the first: rank 1 requires exact surds.
  Mat m(2, 2);
  m(0, 0) = Scalar(1);
  m(0, 1) = r2;
  m(1, 0) = r2;
  m(1, 1) = Scalar(2);
  CHECK(exact_rank(m) == 1);
  m(1, 1) = Scalar(2) + Scalar(1, 1000000);
  CHECK(exact_rank(m) == 2);
}

TEST_CASE("solve_affine distinguishes unique, free, and infeasible") {
  // unique
  auto unique_sol = solve_affine(mat(2, 2, {1, 1, 1, -1}), vec({3, 1}));
  REQUIRE(unique_sol.has_value());
  CHECK(unique_sol->basis.cols() == 0);
  CHECK(veq(unique_sol->offset, vec({2, 1})));
  // one free variable
  auto free_sol = solve_affine(mat(1, 2, {1, 1}), vec({5}));
  REQUIRE(free_sol.has_value());
  CHECK(free_sol->basis.cols() == 1);
  CHECK(free_sol->offset(0) + free_sol->offset(1) == Scalar(5));
  const Vec dir = free_sol->basis.col(0);
  CHECK(dir(0) + dir(1) == Scalar(0));
  // infeasible
  CHECK_FALSE(solve_affine(mat(2, 1, {1, 1}), vec({0, 1})).has_value());
}

TEST_CASE("nullspace and row space have complementary ranks") {
  const Mat m = mat(2, 4, {1, 0, 2, 1, 0, 1, 1, 1});
  const Mat ns = nullspace_basis(m);
  CHECK(ns.cols() == 2);
  for (Index c = 0; c < ns.cols(); ++c) {
    const Vec prod = m * ns.col(c);
    for (Index i = 0; i < prod.size(); ++i) CHECK(prod(i) == Scalar(0));
  }
  const Mat rs = row_space_basis(m);
  CHECK(rs.rows() == 2);
  CHECK(exact_rank(rs) == 2);
}

TEST_CASE("span membership and subspace equality ignore basis choice") {
  Mat basis = mat(3, 2, {1, 0, 0, 1, 1, 1});
  CHECK(in_span(basis, vec({2, 3, 5})));
  CHECK_FALSE(in_span(basis, vec({1, 0, 0})));
  AffineSubspace s1;
  s1.offset = vec({1, 0, 0});
  s1.basis = mat(3, 2, {1, 0, 0, 1, 1, 1});
  AffineSubspace s2;
  s2.offset = vec({2, 1, 2});  // s1.offset + basis * (1, 1)
  s2.basis = mat(3, 2, {1, 1, 1, -1, 2, 0});
  CHECK(subspace_equal(s1, s2));
  s2.offset = vec({2, 1, 4});
  CHECK_FALSE(subspace_equal(s1, s2));
}

TEST_CASE("gram_schmidt returns a pairwise orthogonal spanning set") {
  const Mat m = mat(3, 3, {1, 1, 0, 1, 0, 1, 0, 1, 1});
  const Mat q = gram_schmidt(m);
  CHECK(q.cols() == 3);
  for (Index i = 0; i < q.cols(); ++i) {
    for (Index j = i + 1; j < q.cols(); ++j) {
      CHECK(dot(q.col(i), q.col(j)) == Scalar(0));
    }
    CHECK(dot(q.col(i), q.col(i)) != Scalar(0));
  }
  CHECK(exact_rank(q) == 3);
}

TEST_CASE("canonical ray and line normalization") {
  CHECK(veq(canonical_ray(vec({2, 4})), vec({1, 2})));
  CHECK(veq(canonical_ray(vec({0, -3})), vec({0, -1})));
  // a line and its negation normalize identically
  CHECK(veq(canonical_line(vec({0, -3})), canonical_line(vec({0, 3}))));
  CHECK_FALSE(veq(canonical_ray(vec({0, -3})), canonical_ray(vec({0, 3}))));
  Vec w(2);
  w(0) = r2;
  w(1) = Scalar(2);
  const Vec cw = canonical_ray(w);
  CHECK(cw(0) == Scalar(1));
  CHECK(cw(1) == r2);  // 2 / sqrt(2) = sqrt(2)
}

TEST_CASE("lexicographic comparison is a strict order on distinct vectors") {
  CHECK(lex_less(vec({0, 1}), vec({1, 0})));
  CHECK_FALSE(lex_less(vec({1, 0}), vec({0, 1})));
  CHECK_FALSE(lex_less(vec({1, 0}), vec({1, 0})));
  CHECK(lex_less(vec({1, -1}), vec({1, 0})));
}

TEST_CASE("dot product is the standard bilinear form") {
  CHECK(dot(vec({1, 2, 3}), vec({4, 5, 6})) == Scalar(32));
  Vec a(1), b(1);
  a(0) = r2;
  b(0) = r2;
  CHECK(dot(a, b) == Scalar(2));
}
