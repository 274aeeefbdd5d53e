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

#ifndef POLYLIFT_FACTORIZATION_HPP_
#define POLYLIFT_FACTORIZATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polylift/polyhedron.hpp"

namespace polylift {

/// The cone a factorization lives in.  Both supported cones are self-dual,
/// so a-factors and b-factors are checked against the same membership test.
struct ConeKind {
  enum class Family { nonneg_orthant, psd };

  Family family = Family::nonneg_orthant;
  Index size = 1;  // orthant dimension m, or psd matrix side k

  static ConeKind orthant(Index m) {
    return {Family::nonneg_orthant, m};
  }
  static ConeKind psd(Index k) { return {Family::psd, k}; }

  bool is_orthant() const { return family == Family::nonneg_orthant; }

  /// Dimension of the flattened coordinate space a lift's extra variables
  /// range over: m for the orthant, k(k+1)/2 for symmetric matrices.
  Index ambient() const {
    return is_orthant() ? size : size * (size + 1) / 2;
  }
};

/// Whether x belongs to the cone: entrywise nonnegativity for the orthant
/// (x must be size x 1), exact positive semidefiniteness for psd (x must be
/// size x size; asymmetric matrices are simply not members).  Shape
/// violations throw DimensionMismatchError.
bool cone_contains(const ConeKind& cone, const Mat& x);

/// The pairing that factorization identities are stated in: the dot product
/// on the orthant, the trace inner product <a, b> = sum a_ij b_ij on
/// symmetric matrices.
Scalar cone_inner(const ConeKind& cone, const Mat& a, const Mat& b);

/// Exact positive semidefiniteness of a symmetric matrix by symmetric
/// Gaussian elimination: negative pivots refute, zero pivots demand the
/// whole row to vanish.  Requires a square symmetric input (asymmetric
/// input returns false).
bool is_psd_matrix(const Mat& a);

/// Exact positive definiteness: full sequence of strictly positive pivots.
bool is_pd_matrix(const Mat& a);

/// Extra factor data for sets with lineality: per basis line, one pairing
/// element and one K-element for each of the two directions of the line.
/// Witnesses for both directions are required: a single witness per line
/// only certifies one half of it, and the resulting slice can miss the
/// opposite direction entirely.  The basis is carried along so the
/// verification is self-contained.
struct LinealityFactors {
  Mat lines;                    // ambient x s, one basis line per column
  std::vector<Mat> a3;          // s entries in K, one per +line direction
  std::vector<Mat> a3_minus;    // s entries in K, one per -line direction
  std::vector<Mat> f;           // s entries, unconstrained pairing elements
};

/// A cone factorization of a matrix: one a-factor per row, one b-factor per
/// column, with cone_inner(a_i, b_j) meant to reproduce the matrix entries.
/// Factors are stored as size x 1 columns for the orthant and size x size
/// symmetric matrices for psd.
struct Factorization {
  ConeKind cone;
  std::vector<Mat> a_factors;
  std::vector<Mat> b_factors;
  std::optional<LinealityFactors> lineality;
};

/// Outcome of exact verification; on failure, violation names the first
/// condition that broke (deterministic scan order).
struct VerifyOutcome {
  bool ok = false;
  std::string violation;
};

/// Checks a factorization against its target matrix exactly: every a-factor
/// and b-factor in the cone, every pairing equal to the matrix entry, and,
/// when lineality data is present, the extra conditions: a3 and a3_minus
/// entries in the cone, <a3(+/-)_i, a_j> = 0 against every row factor,
/// <b_j, f_i> = 0 against every column factor, <a3_i, f_j> = <l_i, l_j>,
/// and <a3_minus_i, f_j> = -<l_i, l_j>.  Throws DimensionMismatchError on
/// shape mismatches.
VerifyOutcome verify_factorization(const Mat& m, const Factorization& f);

/// Checks a one-parameter family identity sum_d a_coeffs[d] t^d against a
/// constant second factor: at every sample t the pairing
/// <A(t), b> must equal target(t) = sum_d target_coeffs[d] t^d, and A(t)
/// must be exactly psd.  At least deg+1 distinct samples are required
/// (TooFewSamplesError), which makes the sampled identity a polynomial
/// identity.
bool psd_verify_family(const std::vector<Mat>& a_coeffs, const Mat& b,
                       const std::vector<Scalar>& target_coeffs,
                       const std::vector<Scalar>& samples);

/// Exact minimum number of all-positive combinatorial rectangles covering
/// the support of a nonnegative matrix; a lower bound on nonnegative rank.
/// Branch and bound over the maximal rectangles.  Throws SizeCapError when
/// the support touches more than 12 rows or 12 columns.
Index rectangle_cover_bound(const Mat& m);

/// How a combinatorial lower bound was obtained: `peeled` rows/columns whose
/// support is a single entry were split off (each adds one to any cone
/// factorization), and the remaining core was bounded by base_kind
/// ("rectangle" or "rank") with base_value.
struct LowerBoundInfo {
  Index value = 0;
  Index peeled = 0;
  std::string base_kind;
  Index base_value = 0;

  std::string describe() const;
};

/// Best lower bound on nonnegative rank from single-support peeling plus
/// base bounds (exact rank always; rectangle cover when the support fits its
/// cap).  All peel orders are explored with memoization; never throws.
LowerBoundInfo block_augmentation_info(const Mat& m);
Index block_augmentation_bound(const Mat& m);

/// Search for an orthant factorization of width k: floating multiplicative
/// updates from seeded random restarts, rationalization of the left factor
/// (small denominators first, then continued-fraction rounding capped at
/// 1e6), exact feasibility repair of the right factor column by column, and
/// full exact re-verification; both orientations are tried.  Returns the
/// first verified factorization by restart order (independent of thread
/// count), or nullopt when the iteration budget runs out -- absence proves
/// nothing.  An optional warm start is rationalized and repaired before any
/// random restart spends budget.
std::optional<Factorization> nn_search(
    const Mat& m, Index k, std::uint64_t budget_iters = 1000000,
    std::uint64_t seed = 0, int threads = 1,
    const std::optional<std::pair<Mat, Mat>>& warm_start = std::nullopt);

/// Three-way nonnegative-rank decision at threshold k.
struct NnRankDecision {
  enum class Verdict { yes, no, unknown };
  Verdict verdict = Verdict::unknown;
  std::optional<Factorization> certificate;  // for yes
  std::string bound_reason;                  // for no
  Index bound_value = 0;                     // for no
};

/// Decides whether nonnegative rank <= k: no when the exact rank or a
/// combinatorial lower bound exceeds k (with the bound as certificate), yes
/// when the search produces an exactly verified factorization, unknown
/// otherwise.
NnRankDecision nn_rank_decide(const Mat& m, Index k,
                              std::uint64_t budget_iters = 1000000,
                              std::uint64_t seed = 0, int threads = 1);

/// Lower bound on the psd rank of the slack of a full-dimensional line-free
/// polyhedron: its dimension.  Throws LinesPresentError or
/// NotFullDimensionalError.
Index psd_rank_lower_bound(const Polyhedron& p);

/// For matrices of exact rank three, the non-constructive nonnegative-rank
/// upper bound ceil(6 * min(rows, cols) / 7); absent for any other rank.
std::optional<Index> shitov_report(const Mat& m);

}  // namespace polylift

#endif  // POLYLIFT_FACTORIZATION_HPP_
