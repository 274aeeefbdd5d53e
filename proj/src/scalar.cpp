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

#include "polylift/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <utility>

namespace polylift {

namespace {

bool is_square_free(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

void check_radicand(std::int64_t d) {
  if (d == 0) return;
  if (d < 2 || !is_square_free(d)) {
    throw ParseError("radicand must be a square-free integer >= 2, got " +
                     std::to_string(d));
  }
}

}  // namespace

Scalar::Scalar(long p, long q) : a_(p, q), b_(0), d_(0) {
  if (q == 0) throw Error("rational with zero denominator");
  a_.canonicalize();
}

Scalar::Scalar(mpq_class rational, mpq_class surd, std::int64_t radicand)
    : a_(std::move(rational)), b_(std::move(surd)), d_(radicand) {
  if (a_.get_den() == 0 || b_.get_den() == 0) {
    throw Error("rational with zero denominator");
  }
  a_.canonicalize();
  b_.canonicalize();
  if (b_ == 0) {
    d_ = 0;
  } else {
    if (d_ == 0) throw Error("nonzero surd coefficient with radicand 0");
    check_radicand(d_);
  }
}

std::int64_t Scalar::merged_radicand(std::int64_t x, std::int64_t y) {
  if (x == 0) return y;
  if (y == 0 || x == y) return x;
  throw DomainMismatchError("cannot mix sqrt(" + std::to_string(x) +
                            ") and sqrt(" + std::to_string(y) + ")");
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d without leaving the field.
  const mpq_class t = a_ * a_ - b_ * b_ * d_;
  return sa * sgn(t);
}

Scalar Scalar::operator+(const Scalar& o) const {
  const std::int64_t d = merged_radicand(d_, o.d_);
  return Scalar(a_ + o.a_, b_ + o.b_, d, NoCheck());
}

Scalar Scalar::operator-(const Scalar& o) const {
  const std::int64_t d = merged_radicand(d_, o.d_);
  return Scalar(a_ - o.a_, b_ - o.b_, d, NoCheck());
}

Scalar Scalar::operator*(const Scalar& o) const {
  const std::int64_t d = merged_radicand(d_, o.d_);
  return Scalar(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d,
                NoCheck());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d).  The denominator
  // cannot vanish for a nonzero element: sqrt(d) is irrational.
  const mpq_class den = a_ * a_ - b_ * b_ * d_;
  return Scalar(a_ / den, -b_ / den, d_, NoCheck());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (a_ != o.a_ || b_ != o.b_) return false;
  // Equal coefficient pairs: radicands agree unless both surds are zero.
  return b_ == 0 || d_ == o.d_;
}

double Scalar::to_double() const {
  double v = a_.get_d();
  if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

mpf_class Scalar::to_mpf(int prec) const {
  mpf_class v(a_, prec);
  if (d_ != 0) {
    mpf_class root(d_, prec);
    root = sqrt(root);
    v += mpf_class(b_, prec) * root;
  }
  return v;
}

namespace {

std::string print_rational(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string print_scalar(const Scalar& s) {
  if (s.is_rational()) return print_rational(s.rational());
  std::string out = print_rational(s.rational());
  const mpq_class& b = s.surd();
  out += (b < 0) ? '-' : '+';
  out += print_rational(mpq_class(::abs(b)));
  out += "*sqrt(" + std::to_string(s.radicand()) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << print_scalar(s);
}

namespace {

/// Minimal recursive-descent reader over the scalar grammar
///   scalar := [sign] term { sign term }
///   term   := rational [ '*'? surd ] | surd
///   surd   := "sqrt(" integer ")"
/// Terms of the same kind accumulate; radicands must agree.
class ScalarReader {
 public:
  explicit ScalarReader(const std::string& text) : text_(text) {}

  Scalar read() {
    skip_space();
    if (at_end()) throw ParseError("empty scalar");
    mpq_class rational = 0;
    mpq_class surd = 0;
    std::int64_t radicand = 0;
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        break;  // no joining sign: end of expression
      }
      read_term(sign, &rational, &surd, &radicand);
      first = false;
      skip_space();
      if (at_end()) break;
    }
    skip_space();
    if (!at_end()) {
      throw ParseError("trailing characters in scalar: '" + text_ + "'");
    }
    if (surd == 0) radicand = 0;
    return Scalar(rational, surd, radicand);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  bool starts_sqrt() const { return text_.compare(pos_, 5, "sqrt(") == 0; }

  void read_term(int sign, mpq_class* rational, mpq_class* surd,
                 std::int64_t* radicand) {
    if (starts_sqrt()) {
      add_surd(sign * mpq_class(1), read_sqrt(), surd, radicand);
      return;
    }
    mpq_class coeff = read_rational();
    skip_space();
    bool has_star = false;
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      has_star = true;
    }
    if (starts_sqrt()) {
      add_surd(sign * coeff, read_sqrt(), surd, radicand);
    } else if (has_star) {
      throw ParseError("expected sqrt(...) after '*' in '" + text_ + "'");
    } else {
      *rational += sign * coeff;
    }
  }

  void add_surd(const mpq_class& coeff, std::int64_t d, mpq_class* surd,
                std::int64_t* radicand) {
    check_radicand(d);
    if (*radicand != 0 && *radicand != d) {
      throw DomainMismatchError("mixed radicands in scalar '" + text_ + "'");
    }
    *radicand = d;
    *surd += coeff;
  }

  std::int64_t read_sqrt() {
    pos_ += 5;  // "sqrt("
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError("missing radicand in '" + text_ + "'");
    std::int64_t d = 0;
    try {
      d = std::stoll(text_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      throw ParseError("radicand out of range in '" + text_ + "'");
    }
    skip_space();
    if (at_end() || peek() != ')') {
      throw ParseError("missing ')' in '" + text_ + "'");
    }
    ++pos_;
    return d;
  }

  mpq_class read_rational() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError("expected number at position " + std::to_string(pos_) +
                       " in '" + text_ + "'");
    }
    std::string num = text_.substr(start, pos_ - start);
    std::string den = "1";
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        ++pos_;
      }
      if (pos_ == dstart) {
        throw ParseError("missing denominator in '" + text_ + "'");
      }
      den = text_.substr(dstart, pos_ - dstart);
    }
    mpq_class q;
    if (q.set_str(num + "/" + den, 10) != 0 || q.get_den() == 0) {
      throw ParseError("bad rational in '" + text_ + "'");
    }
    q.canonicalize();
    return q;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
  return ScalarReader(text).read();
}

mpq_class rationalize(double x, std::int64_t max_denominator) {
  if (!std::isfinite(x)) throw Error("cannot rationalize a non-finite value");
  const bool negative = x < 0;
  double v = negative ? -x : x;
  // Continued-fraction convergents p/q of v; stop before q exceeds the cap.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    const double floor_part = std::floor(frac);
    if (floor_part > 9.2e18) break;
    mpz_class a(static_cast<long>(floor_part));
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > max_denominator) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double rem = frac - floor_part;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return mpq_class(0);
  mpq_class result(p1, q1);
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

}  // namespace polylift
