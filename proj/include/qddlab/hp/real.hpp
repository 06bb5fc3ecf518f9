// Copyright 2026 The qddlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

namespace qddlab::hp {

/// Process-wide working precision, in decimal digits (default 120).
/// Values created after a change pick up the new precision; existing
/// values keep the precision they were created with.  MPFR rounds every
/// operation correctly, so results are bit-reproducible across platforms
/// for a fixed digit count.
void set_decimal_digits(int digits);
int decimal_digits();
mpfr_prec_t working_bits();

/// RAII scope guard for tests that need a non-default precision.
class DigitsGuard {
 public:
  explicit DigitsGuard(int digits);
  ~DigitsGuard();
  DigitsGuard(const DigitsGuard&) = delete;
  DigitsGuard& operator=(const DigitsGuard&) = delete;

 private:
  int saved_;
};

/// Arbitrary-precision real number backed by an mpfr_t.
class Real {
 public:
  Real();
  Real(long v);                  // NOLINT: implicit by design
  Real(int v) : Real(static_cast<long>(v)) {}
  Real(unsigned long v);
  Real(double v);
  explicit Real(const std::string& decimal);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  /// mantissa * 2^exp2, exact (used for reproducible dyadic uniforms).
  static Real dyadic(std::uint64_t mantissa, int exp2);
  static Real pi();
  /// 10^e, correctly rounded.
  static Real pow10(long e);

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal string with the given number of significant digits, "%.*Re" style.
  std::string str(int sig_digits = 30) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real exp(const Real& x);
Real abs(const Real& x);
Real pow_si(const Real& x, long e);

/// 10^(-(decimal_digits() - guard_digits)): the standard tolerance ladder.
Real tol(int guard_digits);

/// Strict-weak ordering for map keys (total order; NaN never occurs here).
struct RealLess {
  bool operator()(const Real& a, const Real& b) const { return mpfr_cmp(a.raw(), b.raw()) < 0; }
};

}  // namespace qddlab::hp
