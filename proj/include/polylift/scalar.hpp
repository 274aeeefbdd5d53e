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

#ifndef POLYLIFT_SCALAR_HPP_
#define POLYLIFT_SCALAR_HPP_

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "polylift/errors.hpp"

namespace polylift {

/// An element of Q or of a real quadratic extension Q(sqrt(d)), stored as
/// rational() + surd() * sqrt(radicand()) with arbitrary-precision rational
/// coefficients.  The radicand is a square-free integer >= 2, or 0 for plain
/// rationals; a value with surd() == 0 always normalizes its radicand to 0.
/// All arithmetic and comparisons are exact.  Values from different quadratic
/// extensions must not meet in one expression: mixing radicands throws
/// DomainMismatchError.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(int v) : a_(v), b_(0), d_(0) {}          // NOLINT(runtime/explicit)
  Scalar(long v) : a_(v), b_(0), d_(0) {}         // NOLINT(runtime/explicit)
  Scalar(const mpq_class& v) : a_(v), b_(0), d_(0) {  // NOLINT
    a_.canonicalize();
  }

  /// p/q as an exact rational.  q must be nonzero.
  Scalar(long p, long q);

  /// rational + surd * sqrt(radicand).  radicand must be 0 (with surd == 0
  /// implied rational) or a square-free integer >= 2.
  Scalar(mpq_class rational, mpq_class surd, std::int64_t radicand);

  const mpq_class& rational() const { return a_; }
  const mpq_class& surd() const { return b_; }
  std::int64_t radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Exact sign in {-1, 0, +1}.  When the two coefficients disagree in sign
  /// the result follows sign(rational) * sign(rational^2 - surd^2 * radicand),
  /// which compares |rational| against |surd| * sqrt(radicand) without leaving
  /// the field.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_, d_, NoCheck()); }
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Multiplicative inverse; throws on zero.
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return (*this - o).sign() < 0; }
  bool operator>(const Scalar& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const Scalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const Scalar& o) const { return (*this - o).sign() >= 0; }

  /// Nearest double; for diagnostics and the floating search only.
  double to_double() const;

  /// Floating value at `prec` bits of precision (exactness cross-checks).
  mpf_class to_mpf(int prec = 256) const;

 private:
  struct NoCheck {};
  Scalar(mpq_class a, mpq_class b, std::int64_t d, NoCheck) noexcept
      : a_(std::move(a)), b_(std::move(b)), d_(b_ == 0 ? 0 : d) {}

  /// Common radicand of two operands, or a throw when they differ.
  static std::int64_t merged_radicand(std::int64_t x, std::int64_t y);

  mpq_class a_;       // rational part
  mpq_class b_;       // coefficient of sqrt(d_)
  std::int64_t d_;    // square-free radicand, 0 for plain rationals
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

/// Renders the canonical whitespace-free text form: "p", "p/q", or
/// "p/q+r/s*sqrt(d)" (with "-" joining a negative surd coefficient).
std::string print_scalar(const Scalar& s);

/// Parses the forms emitted by print_scalar plus the obvious leniencies
/// (optional "+", a missing rational part, "sqrt(d)" without coefficient,
/// surrounding whitespace).  Throws ParseError on malformed input and on
/// radicands that are not square-free integers >= 2.
Scalar parse_scalar(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Best rational approximation of x with denominator <= max_denominator,
/// by continued-fraction convergents.  x must be finite.
mpq_class rationalize(double x, std::int64_t max_denominator);

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

}  // namespace polylift

namespace Eigen {

template <>
struct NumTraits<polylift::Scalar> {
  typedef polylift::Scalar Real;
  typedef polylift::Scalar NonInteger;
  typedef polylift::Scalar Nested;
  typedef polylift::Scalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // POLYLIFT_SCALAR_HPP_
