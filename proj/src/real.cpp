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

#include "qddlab/hp/real.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace qddlab::hp {

namespace {

std::atomic<int> g_digits{120};

mpfr_prec_t bits_for(int digits) {
  // 64 guard bits on top of the requested decimal precision keep rounding
  // noise well below the digits-10 tolerance ladder even after long
  // products of matrix operations.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 64;
}

}  // namespace

void set_decimal_digits(int digits) {
  if (digits < 10 || digits > 10000) {
    throw std::invalid_argument("set_decimal_digits: digits must be in [10, 10000]");
  }
  g_digits.store(digits, std::memory_order_relaxed);
}

int decimal_digits() { return g_digits.load(std::memory_order_relaxed); }

mpfr_prec_t working_bits() { return bits_for(decimal_digits()); }

DigitsGuard::DigitsGuard(int digits) : saved_(decimal_digits()) { set_decimal_digits(digits); }
DigitsGuard::~DigitsGuard() { set_decimal_digits(saved_); }

Real::Real() { mpfr_init2(v_, working_bits()); mpfr_set_zero(v_, 1); }

Real::Real(long v) { mpfr_init2(v_, working_bits()); mpfr_set_si(v_, v, MPFR_RNDN); }

Real::Real(unsigned long v) { mpfr_init2(v_, working_bits()); mpfr_set_ui(v_, v, MPFR_RNDN); }

Real::Real(double v) { mpfr_init2(v_, working_bits()); mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(const std::string& decimal) {
  mpfr_init2(v_, working_bits());
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0 && mpfr_nan_p(v_)) {
    mpfr_clear(v_);
    throw std::invalid_argument("Real: cannot parse decimal string '" + decimal + "'");
  }
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::dyadic(std::uint64_t mantissa, int exp2) {
  Real r;
  mpfr_set_uj_2exp(r.v_, static_cast<uintmax_t>(mantissa), exp2, MPFR_RNDN);
  return r;
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow10(long e) {
  Real r(1L);
  Real ten(10L);
  mpfr_pow_si(r.raw(), ten.raw(), e, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int sig_digits) const {
  if (sig_digits < 2) sig_digits = 2;
  std::vector<char> buf(static_cast<size_t>(sig_digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", sig_digits - 1, v_);
  return std::string(buf.data());
}

Real sqrt(const Real& x) { Real r; mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real sin(const Real& x) { Real r; mpfr_sin(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real cos(const Real& x) { Real r; mpfr_cos(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real log(const Real& x) { Real r; mpfr_log(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real log10(const Real& x) { Real r; mpfr_log10(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real exp(const Real& x) { Real r; mpfr_exp(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real abs(const Real& x) { Real r; mpfr_abs(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real pow_si(const Real& x, long e) { Real r; mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN); return r; }

Real tol(int guard_digits) { return Real::pow10(-(decimal_digits() - guard_digits)); }

}  // namespace qddlab::hp
