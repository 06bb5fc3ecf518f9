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

#include "qddlab/hp/qubit.hpp"

#include <stdexcept>

namespace qddlab::hp {

namespace {

void require_qubit_state(const Matrix& rho, const char* who) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw std::invalid_argument(std::string(who) + ": expected a 2x2 density matrix");
  }
  Real t = tol(15);
  if (hermiticity_defect(rho) > t) {
    throw std::invalid_argument(std::string(who) + ": matrix not Hermitian within tolerance");
  }
  Complex tr = rho.trace();
  if (abs(tr.re - Real(1L)) > t || abs(tr.im) > t) {
    throw std::invalid_argument(std::string(who) + ": trace differs from 1 beyond tolerance");
  }
}

Real det2_real(const Matrix& rho) {
  // det of a Hermitian 2x2: rho00*rho11 - |rho01|^2 (real).
  return rho.at(0, 0).re * rho.at(1, 1).re - rho.at(0, 1).abs2();
}

}  // namespace

std::array<Real, 3> bloch_vector(const Matrix& rho) {
  Real two(2L);
  return {two * rho.at(0, 1).re, -(two * rho.at(0, 1).im), rho.at(0, 0).re - rho.at(1, 1).re};
}

Real trace_distance(const Matrix& rho1, const Matrix& rho2) {
  require_qubit_state(rho1, "trace_distance");
  require_qubit_state(rho2, "trace_distance");
  auto b1 = bloch_vector(rho1);
  auto b2 = bloch_vector(rho2);
  Real s(0L);
  for (int i = 0; i < 3; ++i) {
    Real d = b1[i] - b2[i];
    s += d * d;
  }
  return sqrt(s) * Real(0.5);
}

Real fidelity(const Matrix& rho1, const Matrix& rho2) {
  require_qubit_state(rho1, "fidelity");
  require_qubit_state(rho2, "fidelity");
  Complex overlap = multiply(rho1, rho2).trace();
  Real d1 = det2_real(rho1);
  Real d2 = det2_real(rho2);
  // Clamp determinants that are negative only through rounding.
  Real zero(0L);
  if (d1 < zero) d1 = zero;
  if (d2 < zero) d2 = zero;
  Real f2 = overlap.re + Real(2L) * sqrt(d1 * d2);
  if (f2 < zero) f2 = zero;
  Real one(1L);
  if (f2 > one) f2 = one;
  return sqrt(f2);
}

Real spectral_norm_estimate(const Matrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("spectral_norm_estimate: not square");
  const std::size_t n = h.rows();
  if (n == 0) return Real(0L);
  Real defect_scale = h.max_abs();
  if (defect_scale.is_zero()) return Real(0L);
  Real herm_tol = tol(15);
  if (defect_scale > Real(1L)) herm_tol *= defect_scale;
  if (hermiticity_defect(h) > herm_tol) {
    throw std::invalid_argument("spectral_norm_estimate: input not Hermitian within tolerance");
  }

  // Iterating on H^2 removes the +-lambda sign ambiguity of Hermitian
  // spectra; the Rayleigh quotient then converges monotonically from below.
  StateVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Fixed, documented start vector: 1 + i/(n+1), mildly asymmetric so it
    // is never orthogonal to the top eigenspace in practice.
    v[i] = Complex(Real(1L) + Real(long(i)) / Real(long(n + 1)));
  }
  v.normalize();

  Real rel_tol("1e-6");
  Real prev(0L);
  Real rq(0L);
  for (int it = 0; it < 400; ++it) {
    StateVector w = matvec(h, v);
    w = matvec(h, w);
    // Rayleigh quotient of H^2 at unit v.
    Real num(0L);
    for (std::size_t i = 0; i < n; ++i) num += (w[i] * v[i].conj()).re;
    if (num <= Real(0L)) return Real(0L);  // H v = 0 exactly
    rq = sqrt(num);
    Real wnorm = w.norm();
    if (wnorm.is_zero()) return Real(0L);
    Real inv = Real(1L) / wnorm;
    for (std::size_t i = 0; i < n; ++i) w[i] *= inv;
    v = w;
    if (it > 0 && abs(rq - prev) <= rel_tol * rq) break;
    prev = rq;
  }
  return rq * Real("1.001");
}

}  // namespace qddlab::hp
