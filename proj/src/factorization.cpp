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

#include "polylift/factorization.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "polylift/errors.hpp"
#include "polylift/linalg.hpp"

namespace polylift {

namespace {

constexpr Index kRectangleCap = 12;
constexpr Index kPeelCap = 16;
constexpr long kDenominatorCap = 1000000;

void check_factor_shape(const ConeKind& cone, const Mat& x,
                        const char* what) {
  const bool ok = cone.is_orthant()
                      ? (x.rows() == cone.size && x.cols() == 1)
                      : (x.rows() == cone.size && x.cols() == cone.size);
  if (!ok) {
    throw DimensionMismatchError(std::string(what) +
                                 ": factor shape does not match the cone");
  }
}

}  // namespace

bool is_psd_matrix(const Mat& a) {
  const Index n = a.rows();
  if (a.cols() != n) return false;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i)) return false;
    }
  }
  Mat w = a;
  std::vector<Index> act(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) act[static_cast<std::size_t>(i)] = i;
  while (!act.empty()) {
    const Index i0 = act.front();
    const int s = w(i0, i0).sign();
    if (s < 0) return false;
    if (s == 0) {
      // A zero diagonal entry of a psd matrix forces its whole row to zero.
      for (Index j : act) {
        if (!w(i0, j).is_zero()) return false;
      }
      act.erase(act.begin());
      continue;
    }
    const Scalar d = w(i0, i0);
    act.erase(act.begin());
    for (Index j : act) {
      for (Index k : act) {
        w(j, k) -= w(j, i0) * w(i0, k) / d;
      }
    }
  }
  return true;
}

bool is_pd_matrix(const Mat& a) {
  const Index n = a.rows();
  if (a.cols() != n) return false;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i)) return false;
    }
  }
  Mat w = a;
  std::vector<Index> act(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) act[static_cast<std::size_t>(i)] = i;
  while (!act.empty()) {
    const Index i0 = act.front();
    if (w(i0, i0).sign() <= 0) return false;
    const Scalar d = w(i0, i0);
    act.erase(act.begin());
    for (Index j : act) {
      for (Index k : act) {
        w(j, k) -= w(j, i0) * w(i0, k) / d;
      }
    }
  }
  return true;
}

bool cone_contains(const ConeKind& cone, const Mat& x) {
  check_factor_shape(cone, x, "cone_contains");
  if (cone.is_orthant()) {
    for (Index i = 0; i < x.rows(); ++i) {
      if (x(i, 0).sign() < 0) return false;
    }
    return true;
  }
  return is_psd_matrix(x);
}

Scalar cone_inner(const ConeKind& cone, const Mat& a, const Mat& b) {
  check_factor_shape(cone, a, "cone_inner");
  check_factor_shape(cone, b, "cone_inner");
  Scalar s(0);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      s += a(i, j) * b(i, j);
    }
  }
  return s;
}

VerifyOutcome verify_factorization(const Mat& m, const Factorization& f) {
  if (static_cast<Index>(f.a_factors.size()) != m.rows() ||
      static_cast<Index>(f.b_factors.size()) != m.cols()) {
    throw DimensionMismatchError(
        "verify_factorization: factor counts do not match the matrix");
  }
  VerifyOutcome out;
  for (std::size_t i = 0; i < f.a_factors.size(); ++i) {
    if (!cone_contains(f.cone, f.a_factors[i])) {
      out.violation = "a-factor " + std::to_string(i) + " is not in the cone";
      return out;
    }
  }
  for (std::size_t j = 0; j < f.b_factors.size(); ++j) {
    if (!cone_contains(f.cone, f.b_factors[j])) {
      out.violation = "b-factor " + std::to_string(j) + " is not in the cone";
      return out;
    }
  }
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const Scalar v = cone_inner(f.cone,
                                  f.a_factors[static_cast<std::size_t>(i)],
                                  f.b_factors[static_cast<std::size_t>(j)]);
      if (v != m(i, j)) {
        out.violation = "entry (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") pairs to " + print_scalar(v) +
                        ", matrix has " + print_scalar(m(i, j));
        return out;
      }
    }
  }
  if (f.lineality) {
    const LinealityFactors& lf = *f.lineality;
    const Index s = lf.lines.cols();
    if (static_cast<Index>(lf.a3.size()) != s ||
        static_cast<Index>(lf.a3_minus.size()) != s ||
        static_cast<Index>(lf.f.size()) != s) {
      throw DimensionMismatchError(
          "verify_factorization: lineality factor counts do not match the "
          "line basis");
    }
    for (Index i = 0; i < s; ++i) {
      const std::size_t iu = static_cast<std::size_t>(i);
      if (!cone_contains(f.cone, lf.a3[iu])) {
        out.violation =
            "line factor +" + std::to_string(i) + " is not in the cone";
        return out;
      }
      if (!cone_contains(f.cone, lf.a3_minus[iu])) {
        out.violation =
            "line factor -" + std::to_string(i) + " is not in the cone";
        return out;
      }
    }
    // Line witnesses must lie on every homogeneous row hyperplane, so they
    // pair to zero with the row factors (not the column ones).
    for (Index i = 0; i < s; ++i) {
      const std::size_t iu = static_cast<std::size_t>(i);
      for (std::size_t j = 0; j < f.a_factors.size(); ++j) {
        if (!cone_inner(f.cone, lf.a3[iu], f.a_factors[j]).is_zero()) {
          out.violation = "line factor +" + std::to_string(i) +
                          " does not annihilate row factor " +
                          std::to_string(j);
          return out;
        }
        if (!cone_inner(f.cone, lf.a3_minus[iu], f.a_factors[j]).is_zero()) {
          out.violation = "line factor -" + std::to_string(i) +
                          " does not annihilate row factor " +
                          std::to_string(j);
          return out;
        }
      }
    }
    for (std::size_t j = 0; j < f.b_factors.size(); ++j) {
      for (std::size_t i = 0; i < lf.f.size(); ++i) {
        if (!cone_inner(f.cone, f.b_factors[j], lf.f[i]).is_zero()) {
          out.violation = "column factor " + std::to_string(j) +
                          " does not annihilate line pairing " +
                          std::to_string(i);
          return out;
        }
      }
    }
    for (Index i = 0; i < s; ++i) {
      for (Index j = 0; j < s; ++j) {
        const Scalar want = dot(lf.lines.col(i), lf.lines.col(j));
        const Scalar got =
            cone_inner(f.cone, lf.a3[static_cast<std::size_t>(i)],
                       lf.f[static_cast<std::size_t>(j)]);
        if (got != want) {
          out.violation = "line pairing (+" + std::to_string(i) + ", " +
                          std::to_string(j) + ") is " + print_scalar(got) +
                          ", expected " + print_scalar(want);
          return out;
        }
        const Scalar got_minus =
            cone_inner(f.cone, lf.a3_minus[static_cast<std::size_t>(i)],
                       lf.f[static_cast<std::size_t>(j)]);
        if (got_minus != -want) {
          out.violation = "line pairing (-" + std::to_string(i) + ", " +
                          std::to_string(j) + ") is " + print_scalar(got_minus) +
                          ", expected " + print_scalar(-want);
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

bool psd_verify_family(const std::vector<Mat>& a_coeffs, const Mat& b,
                       const std::vector<Scalar>& target_coeffs,
                       const std::vector<Scalar>& samples) {
  const Index k = b.rows();
  if (b.cols() != k) {
    throw DimensionMismatchError("psd_verify_family: second factor must be "
                                 "square");
  }
  for (const Mat& c : a_coeffs) {
    if (c.rows() != k || c.cols() != k) {
      throw DimensionMismatchError(
          "psd_verify_family: coefficient shapes must match the second "
          "factor");
    }
  }
  const std::size_t need =
      std::max<std::size_t>(std::max(a_coeffs.size(), target_coeffs.size()),
                            1);
  std::vector<Scalar> distinct;
  for (const Scalar& t : samples) {
    bool seen = false;
    for (const Scalar& u : distinct) {
      if (u == t) {
        seen = true;
        break;
      }
    }
    if (!seen) distinct.push_back(t);
  }
  if (distinct.size() < need) {
    throw TooFewSamplesError(
        "psd_verify_family: need at least " + std::to_string(need) +
        " distinct samples, got " + std::to_string(distinct.size()));
  }

  const ConeKind cone = ConeKind::psd(k);
  for (const Scalar& t : distinct) {
    // Horner evaluation of the matrix family and the target polynomial.
    Mat at(k, k);
    at.setConstant(Scalar(0));
    for (std::size_t d = a_coeffs.size(); d-- > 0;) {
      at = at * t;
      at += a_coeffs[d];
    }
    Scalar target(0);
    for (std::size_t d = target_coeffs.size(); d-- > 0;) {
      target = target * t + target_coeffs[d];
    }
    if (cone_inner(cone, at, b) != target) return false;
    if (!is_psd_matrix(at)) return false;
  }
  return true;
}

namespace {

struct SupportView {
  std::vector<Index> rows;  // original indices with support
  std::vector<Index> cols;
  std::vector<std::uint32_t> row_masks;  // per support row, over support cols
};

SupportView support_of(const Mat& m) {
  SupportView s;
  std::vector<bool> row_used(static_cast<std::size_t>(m.rows()), false);
  std::vector<bool> col_used(static_cast<std::size_t>(m.cols()), false);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) {
        row_used[static_cast<std::size_t>(i)] = true;
        col_used[static_cast<std::size_t>(j)] = true;
      }
    }
  }
  for (Index i = 0; i < m.rows(); ++i) {
    if (row_used[static_cast<std::size_t>(i)]) s.rows.push_back(i);
  }
  for (Index j = 0; j < m.cols(); ++j) {
    if (col_used[static_cast<std::size_t>(j)]) s.cols.push_back(j);
  }
  for (Index i : s.rows) {
    std::uint32_t mask = 0;
    for (std::size_t jj = 0; jj < s.cols.size(); ++jj) {
      if (!m(i, s.cols[jj]).is_zero()) mask |= std::uint32_t{1} << jj;
    }
    s.row_masks.push_back(mask);
  }
  return s;
}

using CellSet = std::bitset<160>;

struct CoverProblem {
  std::vector<CellSet> rect_cells;  // per rectangle, the cells it covers
  std::vector<std::vector<Index>> cell_rects;  // per cell, covering rects
  std::size_t num_cells = 0;
};

void cover_branch(const CoverProblem& pr, const CellSet& covered,
                  Index chosen, Index* best) {
  if (chosen >= *best) return;
  std::size_t pick = pr.num_cells;
  std::size_t pick_count = SIZE_MAX;
  for (std::size_t c = 0; c < pr.num_cells; ++c) {
    if (covered.test(c)) continue;
    const std::size_t count = pr.cell_rects[c].size();
    if (count < pick_count) {
      pick = c;
      pick_count = count;
    }
  }
  if (pick == pr.num_cells) {
    *best = chosen;
    return;
  }
  for (Index r : pr.cell_rects[pick]) {
    cover_branch(pr, covered | pr.rect_cells[static_cast<std::size_t>(r)],
                 chosen + 1, best);
  }
}

}  // namespace

Index rectangle_cover_bound(const Mat& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).sign() < 0) {
        throw RepresentationMismatchError(
            "rectangle_cover_bound: matrix has negative entries");
      }
    }
  }
  const SupportView s = support_of(m);
  if (s.rows.empty()) return 0;
  if (static_cast<Index>(s.rows.size()) > kRectangleCap ||
      static_cast<Index>(s.cols.size()) > kRectangleCap) {
    throw SizeCapError("rectangle_cover_bound: support exceeds 12x12");
  }
  const std::size_t nr = s.rows.size();
  const std::size_t nc = s.cols.size();

  // Maximal all-positive rectangles: every one arises as (rows positive on
  // C, column closure of those rows) for some column subset C.
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rects;
  for (std::uint32_t csub = 1; csub < (std::uint32_t{1} << nc); ++csub) {
    std::uint32_t rmask = 0;
    std::uint32_t closure = (std::uint32_t{1} << nc) - 1;
    for (std::size_t ii = 0; ii < nr; ++ii) {
      if ((s.row_masks[ii] & csub) == csub) {
        rmask |= std::uint32_t{1} << ii;
        closure &= s.row_masks[ii];
      }
    }
    if (rmask == 0) continue;
    if (seen.insert({rmask, closure}).second) {
      rects.push_back({rmask, closure});
    }
  }

  // Set cover of the support cells by the maximal rectangles.
  CoverProblem pr;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t ii = 0; ii < nr; ++ii) {
    for (std::size_t jj = 0; jj < nc; ++jj) {
      if (s.row_masks[ii] & (std::uint32_t{1} << jj)) cells.push_back({ii, jj});
    }
  }
  pr.num_cells = cells.size();
  pr.rect_cells.resize(rects.size());
  pr.cell_rects.resize(cells.size());
  for (std::size_t r = 0; r < rects.size(); ++r) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto [ii, jj] = cells[c];
      if ((rects[r].first & (std::uint32_t{1} << ii)) &&
          (rects[r].second & (std::uint32_t{1} << jj))) {
        pr.rect_cells[r].set(c);
        pr.cell_rects[c].push_back(static_cast<Index>(r));
      }
    }
  }

  // Greedy start for the upper bound.
  CellSet covered;
  Index greedy = 0;
  while (true) {
    std::size_t best_r = rects.size();
    std::size_t best_gain = 0;
    for (std::size_t r = 0; r < rects.size(); ++r) {
      const std::size_t gain = (pr.rect_cells[r] & ~covered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best_r = r;
      }
    }
    if (best_r == rects.size()) break;
    covered |= pr.rect_cells[best_r];
    ++greedy;
    if (covered.count() == pr.num_cells) break;
  }

  Index best = greedy;
  cover_branch(pr, CellSet{}, 0, &best);
  return best;
}

namespace {

struct PeelState {
  Index value = 0;
  Index peeled = 0;
  std::string base_kind;
  Index base_value = 0;
};

Mat submatrix(const Mat& m, std::uint32_t row_mask, std::uint32_t col_mask) {
  std::vector<Index> rows, cols;
  for (Index i = 0; i < m.rows(); ++i) {
    if (row_mask & (std::uint32_t{1} << i)) rows.push_back(i);
  }
  for (Index j = 0; j < m.cols(); ++j) {
    if (col_mask & (std::uint32_t{1} << j)) cols.push_back(j);
  }
  Mat sub(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      sub(static_cast<Index>(a), static_cast<Index>(b)) = m(rows[a], cols[b]);
    }
  }
  return sub;
}

PeelState peel_recurse(const Mat& m, std::uint32_t row_mask,
                       std::uint32_t col_mask,
                       std::map<std::pair<std::uint32_t, std::uint32_t>,
                                PeelState>* memo) {
  const auto key = std::make_pair(row_mask, col_mask);
  auto it = memo->find(key);
  if (it != memo->end()) return it->second;

  const Mat sub = submatrix(m, row_mask, col_mask);
  PeelState best;
  best.base_kind = "rank";
  best.base_value = exact_rank(sub);
  best.value = best.base_value;
  try {
    const Index rect = rectangle_cover_bound(sub);
    if (rect >= best.value) {
      best.base_kind = "rectangle";
      best.base_value = rect;
      best.value = rect;
    }
  } catch (const Error&) {
    // Support too large (or entries out of range): rank base stands.
  }

  // Rows whose support is one cell, then columns; peeling removes the row
  // and its column and adds one to the bound.
  for (int pass = 0; pass < 2; ++pass) {
    for (Index i = 0; i < (pass == 0 ? m.rows() : m.cols()); ++i) {
      const std::uint32_t self = std::uint32_t{1} << i;
      if (!((pass == 0 ? row_mask : col_mask) & self)) continue;
      Index hit = -1;
      int count = 0;
      const Index other_count = pass == 0 ? m.cols() : m.rows();
      const std::uint32_t other_mask = pass == 0 ? col_mask : row_mask;
      for (Index j = 0; j < other_count && count < 2; ++j) {
        if (!(other_mask & (std::uint32_t{1} << j))) continue;
        const Scalar& v = pass == 0 ? m(i, j) : m(j, i);
        if (!v.is_zero()) {
          ++count;
          hit = j;
        }
      }
      if (count != 1) continue;
      const std::uint32_t nrow = pass == 0 ? (row_mask & ~self)
                                           : (row_mask & ~(std::uint32_t{1} << hit));
      const std::uint32_t ncol = pass == 0 ? (col_mask & ~(std::uint32_t{1} << hit))
                                           : (col_mask & ~self);
      const PeelState child = peel_recurse(m, nrow, ncol, memo);
      // Ties prefer the peel derivation: it names the structural argument.
      if (child.value + 1 >= best.value) {
        best.value = child.value + 1;
        best.peeled = child.peeled + 1;
        best.base_kind = child.base_kind;
        best.base_value = child.base_value;
      }
    }
  }

  (*memo)[key] = best;
  return best;
}

}  // namespace

std::string LowerBoundInfo::describe() const {
  if (peeled == 0) return base_kind + " " + std::to_string(value);
  return "block " + std::to_string(value) + " = " + base_kind + " " +
         std::to_string(base_value) + " + " + std::to_string(peeled);
}

LowerBoundInfo block_augmentation_info(const Mat& m) {
  LowerBoundInfo info;
  if (m.rows() == 0 || m.cols() == 0) {
    info.base_kind = "rank";
    return info;
  }
  if (m.rows() > kPeelCap || m.cols() > kPeelCap) {
    // Too large for the peel search: fall back to the rank bound alone
    // (the rectangle bound has its own, smaller cap).
    info.base_kind = "rank";
    info.base_value = exact_rank(m);
    info.value = info.base_value;
    try {
      const Index rect = rectangle_cover_bound(m);
      if (rect >= info.value) {
        info.base_kind = "rectangle";
        info.base_value = rect;
        info.value = rect;
      }
    } catch (const Error&) {
    }
    return info;
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, PeelState> memo;
  const std::uint32_t full_rows = (std::uint32_t{1} << m.rows()) - 1;
  const std::uint32_t full_cols = (std::uint32_t{1} << m.cols()) - 1;
  const PeelState st = peel_recurse(m, full_rows, full_cols, &memo);
  info.value = st.value;
  info.peeled = st.peeled;
  info.base_kind = st.base_kind;
  info.base_value = st.base_value;
  return info;
}

Index block_augmentation_bound(const Mat& m) {
  return block_augmentation_info(m).value;
}

namespace {

double scalar_to_double(const Scalar& s) {
  double v = s.rational().get_d();
  if (s.radicand() != 0) {
    v += s.surd().get_d() * std::sqrt(static_cast<double>(s.radicand()));
  }
  return v;
}

// Best continued-fraction convergent of x with denominator at most cap.
mpq_class cf_approx(double x, long cap) {
  if (!std::isfinite(x)) return mpq_class(0);
  const bool neg = x < 0;
  mpq_class exact(std::fabs(x));
  exact.canonicalize();
  mpz_class n = exact.get_num(), d = exact.get_den();
  mpz_class hm1 = 1, km1 = 0, hm2 = 0, km2 = 1;
  mpq_class best(0);
  while (d != 0) {
    const mpz_class a = n / d;
    const mpz_class h = a * hm1 + hm2;
    const mpz_class k = a * km1 + km2;
    if (k > cap) break;
    best = mpq_class(h, k);
    best.canonicalize();
    hm2 = hm1;
    km2 = km1;
    hm1 = h;
    km1 = k;
    const mpz_class r = n % d;
    n = d;
    d = r;
  }
  return neg ? mpq_class(-best) : best;
}

mpq_class round_to_den(double x, long den) {
  const double scaled = x * static_cast<double>(den);
  if (!std::isfinite(scaled)) return mpq_class(0);
  mpq_class num(std::nearbyint(scaled));
  num.canonicalize();
  mpq_class out = num / den;
  out.canonicalize();
  return out;
}

using FloatMat = std::vector<std::vector<double>>;

// One exact repair attempt: rationalize the left factor, then solve each
// right-factor column as an exact feasibility problem over the nonnegative
// orthant.
std::optional<Factorization> repair_left(const Mat& m, Index k,
                                         const FloatMat& w_float) {
  const Index p = m.rows();
  const Index q = m.cols();

  std::vector<long> dens;
  for (long d = 1; d <= 24; ++d) dens.push_back(d);
  dens.push_back(0);  // sentinel: continued-fraction rounding

  Mat prev;
  for (long den : dens) {
    Mat w(p, k);
    for (Index i = 0; i < p; ++i) {
      for (Index j = 0; j < k; ++j) {
        const double x = std::max(0.0, w_float[static_cast<std::size_t>(i)]
                                              [static_cast<std::size_t>(j)]);
        w(i, j) = Scalar(den == 0 ? cf_approx(x, kDenominatorCap)
                                  : round_to_den(x, den));
      }
    }
    if (prev.rows() == w.rows()) {
      bool same = true;
      for (Index i = 0; i < p && same; ++i) {
        for (Index j = 0; j < k && same; ++j) {
          if (w(i, j) != prev(i, j)) same = false;
        }
      }
      if (same) continue;
    }
    prev = w;

    std::vector<Mat> b_cols;
    b_cols.reserve(static_cast<std::size_t>(q));
    bool feasible = true;
    for (Index j = 0; j < q && feasible; ++j) {
      HRep h;
      h.n = k;
      h.a = Mat(k, k);
      h.a.setConstant(Scalar(0));
      for (Index t = 0; t < k; ++t) h.a(t, t) = Scalar(-1);
      h.b = Vec(k);
      h.b.setConstant(Scalar(0));
      h.e = w;
      h.f = m.col(j);
      try {
        const VRep sol = h_to_v(h);
        Mat col(k, 1);
        col.col(0) = sol.points.front();
        b_cols.push_back(std::move(col));
      } catch (const EmptyPolyhedronError&) {
        feasible = false;
      }
    }
    if (!feasible) continue;

    Factorization f;
    f.cone = ConeKind::orthant(k);
    f.a_factors.reserve(static_cast<std::size_t>(p));
    for (Index i = 0; i < p; ++i) {
      Mat row(k, 1);
      row.col(0) = w.row(i).transpose();
      f.a_factors.push_back(std::move(row));
    }
    f.b_factors = std::move(b_cols);
    if (verify_factorization(m, f).ok) return f;
  }
  return std::nullopt;
}

// Transposed repair: the roles of the two sides swap, so a candidate right
// factor of m is a candidate left factor of m^T.
std::optional<Factorization> repair_right(const Mat& m, Index k,
                                          const FloatMat& v_float) {
  Mat mt = m.transpose();
  // The transpose of the right factor is a left-factor candidate for m^T.
  const std::size_t q = v_float.empty() ? 0 : v_float[0].size();
  FloatMat left(q, std::vector<double>(static_cast<std::size_t>(k), 0.0));
  for (std::size_t a = 0; a < static_cast<std::size_t>(k); ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      left[b][a] = v_float[a][b];
    }
  }
  auto res = repair_left(mt, k, left);
  if (!res) return std::nullopt;
  // Swap the roles back.
  Factorization f;
  f.cone = res->cone;
  f.a_factors = std::move(res->b_factors);
  f.b_factors = std::move(res->a_factors);
  if (verify_factorization(m, f).ok) return f;
  return std::nullopt;
}

std::optional<Factorization> attempt_restart(const Mat& m, const FloatMat& md,
                                             Index k, std::uint64_t iters,
                                             std::uint64_t seed) {
  const Index p = m.rows();
  const Index q = m.cols();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.05, 1.0);

  FloatMat w(static_cast<std::size_t>(p),
             std::vector<double>(static_cast<std::size_t>(k)));
  FloatMat v(static_cast<std::size_t>(k),
             std::vector<double>(static_cast<std::size_t>(q)));
  for (auto& row : w) {
    for (double& x : row) x = uni(rng);
  }
  for (auto& row : v) {
    for (double& x : row) x = uni(rng);
  }

  const std::uint64_t checkpoint =
      std::max<std::uint64_t>(250, iters / 20);
  const double eps = 1e-12;
  for (std::uint64_t it = 1; it <= iters; ++it) {
    // Multiplicative updates keep both factors nonnegative.
    for (Index a = 0; a < k; ++a) {
      for (Index j = 0; j < q; ++j) {
        double num = 0, denom = 0;
        for (Index i = 0; i < p; ++i) {
          const double wia = w[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(a)];
          num += wia * md[static_cast<std::size_t>(i)]
                        [static_cast<std::size_t>(j)];
          double wv = 0;
          for (Index b = 0; b < k; ++b) {
            wv += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] *
                  v[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
          }
          denom += wia * wv;
        }
        v[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] *=
            num / (denom + eps);
      }
    }
    for (Index i = 0; i < p; ++i) {
      for (Index a = 0; a < k; ++a) {
        double num = 0, denom = 0;
        for (Index j = 0; j < q; ++j) {
          const double vaj = v[static_cast<std::size_t>(a)]
                              [static_cast<std::size_t>(j)];
          num += vaj * md[static_cast<std::size_t>(i)]
                        [static_cast<std::size_t>(j)];
          double wv = 0;
          for (Index b = 0; b < k; ++b) {
            wv += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] *
                  v[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
          }
          denom += vaj * wv;
        }
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] *=
            num / (denom + eps);
      }
    }

    if (it % checkpoint == 0 || it == iters) {
      // Column-normalize a copy of w so the rationalization grids see
      // entries in [0, 1].
      FloatMat wn = w;
      for (Index a = 0; a < k; ++a) {
        double mx = 0;
        for (Index i = 0; i < p; ++i) {
          mx = std::max(mx, wn[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(a)]);
        }
        if (mx > eps) {
          for (Index i = 0; i < p; ++i) {
            wn[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] /= mx;
          }
        }
      }
      if (auto f = repair_left(m, k, wn)) return f;
      FloatMat vn = v;
      for (Index a = 0; a < k; ++a) {
        double mx = 0;
        for (Index j = 0; j < q; ++j) {
          mx = std::max(mx, vn[static_cast<std::size_t>(a)]
                               [static_cast<std::size_t>(j)]);
        }
        if (mx > eps) {
          for (Index j = 0; j < q; ++j) {
            vn[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] /= mx;
          }
        }
      }
      if (auto f = repair_right(m, k, vn)) return f;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Factorization> nn_search(
    const Mat& m, Index k, std::uint64_t budget_iters, std::uint64_t seed,
    int threads, const std::optional<std::pair<Mat, Mat>>& warm_start) {
  const Index p = m.rows();
  const Index q = m.cols();
  if (p == 0 || q == 0 || k < 1) return std::nullopt;

  // Trivial width: one coordinate per row or per column always suffices.
  if (k >= std::min(p, q)) {
    Factorization f;
    f.cone = ConeKind::orthant(k);
    const bool by_cols = q <= p;
    bool nonneg = true;
    for (Index i = 0; i < p && nonneg; ++i) {
      for (Index j = 0; j < q && nonneg; ++j) {
        if (m(i, j).sign() < 0) nonneg = false;
      }
    }
    if (nonneg) {
      for (Index i = 0; i < p; ++i) {
        Mat a(k, 1);
        a.setConstant(Scalar(0));
        if (by_cols) {
          for (Index j = 0; j < q; ++j) a(j, 0) = m(i, j);
        } else {
          a(i, 0) = Scalar(1);
        }
        f.a_factors.push_back(std::move(a));
      }
      for (Index j = 0; j < q; ++j) {
        Mat b(k, 1);
        b.setConstant(Scalar(0));
        if (by_cols) {
          b(j, 0) = Scalar(1);
        } else {
          for (Index i = 0; i < p; ++i) b(i, 0) = m(i, j);
        }
        f.b_factors.push_back(std::move(b));
      }
      if (verify_factorization(m, f).ok) return f;
    }
  }

  if (warm_start) {
    const Mat& u = warm_start->first;
    const Mat& v = warm_start->second;
    if (u.rows() == p && u.cols() == k && v.rows() == k && v.cols() == q) {
      // Exact pass-through first: the warm factors may already work.
      Factorization f;
      f.cone = ConeKind::orthant(k);
      for (Index i = 0; i < p; ++i) {
        Mat a(k, 1);
        a.col(0) = u.row(i).transpose();
        f.a_factors.push_back(std::move(a));
      }
      for (Index j = 0; j < q; ++j) {
        Mat b(k, 1);
        b.col(0) = v.col(j);
        f.b_factors.push_back(std::move(b));
      }
      if (verify_factorization(m, f).ok) return f;
      // Otherwise use the left warm factor as a repair candidate.
      FloatMat wf(static_cast<std::size_t>(p),
                  std::vector<double>(static_cast<std::size_t>(k)));
      for (Index i = 0; i < p; ++i) {
        for (Index j = 0; j < k; ++j) {
          wf[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              scalar_to_double(u(i, j));
        }
      }
      if (auto rf = repair_left(m, k, wf)) return rf;
    }
  }

  FloatMat md(static_cast<std::size_t>(p),
              std::vector<double>(static_cast<std::size_t>(q)));
  for (Index i = 0; i < p; ++i) {
    for (Index j = 0; j < q; ++j) {
      md[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          scalar_to_double(m(i, j));
    }
  }

  constexpr int kRestarts = 10;
  const std::uint64_t per_restart =
      std::max<std::uint64_t>(1, budget_iters / kRestarts);

  if (threads <= 1) {
    for (int r = 0; r < kRestarts; ++r) {
      if (auto f = attempt_restart(m, md, k, per_restart,
                                   seed + static_cast<std::uint64_t>(r))) {
        return f;
      }
    }
    return std::nullopt;
  }

  // Parallel restarts; the lowest restart index that succeeds wins, so the
  // result does not depend on the thread count.
  std::vector<std::optional<Factorization>> results(kRestarts);
  std::atomic<int> next{0};
  std::atomic<int> best_done{kRestarts};
  auto worker = [&]() {
    while (true) {
      const int r = next.fetch_add(1);
      if (r >= kRestarts) return;
      if (r > best_done.load()) continue;
      auto f = attempt_restart(m, md, k, per_restart,
                               seed + static_cast<std::uint64_t>(r));
      if (f) {
        results[static_cast<std::size_t>(r)] = std::move(f);
        int cur = best_done.load();
        while (r < cur && !best_done.compare_exchange_weak(cur, r)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min(threads, kRestarts);
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (int r = 0; r < kRestarts; ++r) {
    if (results[static_cast<std::size_t>(r)]) {
      return results[static_cast<std::size_t>(r)];
    }
  }
  return std::nullopt;
}

NnRankDecision nn_rank_decide(const Mat& m, Index k,
                              std::uint64_t budget_iters, std::uint64_t seed,
                              int threads) {
  NnRankDecision out;
  const Index r = exact_rank(m);
  if (r > k) {
    out.verdict = NnRankDecision::Verdict::no;
    out.bound_reason = "rank " + std::to_string(r);
    out.bound_value = r;
    return out;
  }
  const LowerBoundInfo info = block_augmentation_info(m);
  if (info.value > k) {
    out.verdict = NnRankDecision::Verdict::no;
    out.bound_reason = info.describe();
    out.bound_value = info.value;
    return out;
  }
  if (auto f = nn_search(m, k, budget_iters, seed, threads)) {
    out.verdict = NnRankDecision::Verdict::yes;
    out.certificate = std::move(f);
    return out;
  }
  out.verdict = NnRankDecision::Verdict::unknown;
  return out;
}

Index psd_rank_lower_bound(const Polyhedron& p) {
  if (p.dim() != p.ambient_dim()) {
    throw NotFullDimensionalError(
        "psd_rank_lower_bound: set is not full dimensional");
  }
  if (!p.vrep().lines.empty()) {
    throw LinesPresentError("psd_rank_lower_bound: set contains lines");
  }
  return p.dim();
}

std::optional<Index> shitov_report(const Mat& m) {
  if (exact_rank(m) != 3) return std::nullopt;
  const Index mn = std::min(m.rows(), m.cols());
  return (6 * mn + 6) / 7;
}

}  // namespace polylift
