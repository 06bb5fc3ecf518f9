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

#include "qddlab/hp/real.hpp"

namespace qddlab::hp {

/// Arbitrary-precision complex number.  std::complex requires a built-in
/// floating type, so we carry the pair ourselves.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)) {}  // NOLINT: implicit by design
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r) : re(r) {}  // NOLINT

  static Complex i() { return Complex(Real(0L), Real(1L)); }

  Complex conj() const { return Complex(re, -im); }
  /// |z|^2, exact up to one rounding per operation.
  Real abs2() const { return re * re + im * im; }
  Real abs() const { return sqrt(abs2()); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
  Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }
  Complex operator-() const { return Complex(-re, -im); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator*(const Real& s, Complex a) { return a *= s; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

}  // namespace qddlab::hp
