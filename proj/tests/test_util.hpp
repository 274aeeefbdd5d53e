// Small builders and exact comparisons shared by the unit tests.
#pragma once

#include <vector>

#include "polylift/polyhedron.hpp"
#include "polylift/scalar.hpp"
#include "polylift/slack.hpp"

namespace test_util {

inline polylift::Mat mat(polylift::Index r, polylift::Index c,
                         const std::vector<long>& entries) {
  polylift::Mat m(r, c);
  for (polylift::Index i = 0; i < r; ++i) {
    for (polylift::Index j = 0; j < c; ++j) {
      m(i, j) = polylift::Scalar(entries[static_cast<std::size_t>(i * c + j)]);
    }
  }
  return m;
}

inline polylift::Vec vec(const std::vector<long>& entries) {
  polylift::Vec v(static_cast<polylift::Index>(entries.size()));
  for (polylift::Index i = 0; i < v.size(); ++i) {
    v(i) = polylift::Scalar(entries[static_cast<std::size_t>(i)]);
  }
  return v;
}

inline bool veq(const polylift::Vec& a, const polylift::Vec& b) {
  if (a.size() != b.size()) return false;
  for (polylift::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

inline bool meq(const polylift::Mat& a, const polylift::Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (polylift::Index i = 0; i < a.rows(); ++i) {
    for (polylift::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

// Slack matrix of the homogenization cone of a full-dimensional line-free
// polyhedron: inequality rows [A | -b] plus nonnegativity of the
// homogenizing coordinate, generator columns apex, (v, 1), (r, 0).  The
// extra row marks the point columns with exact 0/1 entries, which is what
// the slack identification criterion expects of an unbounded set's slack.
inline polylift::SlackMatrix hom_slack(const polylift::Polyhedron& p) {
  using polylift::Index;
  using polylift::Scalar;
  const polylift::HRep h = p.minimal_h();
  const polylift::VRep v = p.vrep();
  const Index n = p.ambient_dim();
  polylift::HRep hh;
  hh.n = n + 1;
  hh.a = polylift::Mat::Zero(h.a.rows() + 1, n + 1);
  hh.b = polylift::Vec::Zero(h.a.rows() + 1);
  for (Index i = 0; i < h.a.rows(); ++i) {
    for (Index j = 0; j < n; ++j) hh.a(i, j) = h.a(i, j);
    hh.a(i, n) = -h.b(i);
  }
  hh.a(h.a.rows(), n) = Scalar(-1);
  polylift::VRep vv;
  vv.n = n + 1;
  vv.points.push_back(polylift::Vec::Zero(n + 1));
  for (const polylift::Vec& pt : v.points) {
    polylift::Vec r(n + 1);
    for (Index j = 0; j < n; ++j) r(j) = pt(j);
    r(n) = Scalar(1);
    vv.rays.push_back(r);
  }
  for (const polylift::Vec& ry : v.rays) {
    polylift::Vec r = polylift::Vec::Zero(n + 1);
    for (Index j = 0; j < n; ++j) r(j) = ry(j);
    vv.rays.push_back(r);
  }
  polylift::HRep hcopy = hh;
  const polylift::Polyhedron hp = polylift::Polyhedron::from_h(std::move(hcopy));
  return polylift::build_slack(hp, hh, vv);
}

}  // namespace test_util
