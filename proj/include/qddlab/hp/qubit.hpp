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

#include <array>

#include "qddlab/hp/matrix.hpp"

namespace qddlab::hp {

/// Bloch vector (tr(rho X), tr(rho Y), tr(rho Z)) of a 2x2 density matrix.
std::array<Real, 3> bloch_vector(const Matrix& rho);

/// Trace-norm distance (1/2)||rho1 - rho2||_1 between qubit states, via the
/// closed Bloch form: half the Euclidean distance between Bloch vectors.
/// Requires 2x2 Hermitian unit-trace inputs (checked within 10^-(digits-15)).
Real trace_distance(const Matrix& rho1, const Matrix& rho2);

/// Uhlmann fidelity tr sqrt(sqrt(rho1) rho2 sqrt(rho1)) via the qubit
/// closed form F^2 = tr(rho1 rho2) + 2 sqrt(det rho1 det rho2).
Real fidelity(const Matrix& rho1, const Matrix& rho2);

/// Estimate of the largest absolute eigenvalue of a Hermitian matrix:
/// power iteration on H^2 from a fixed deterministic start vector, run to
/// a relative Rayleigh-quotient tolerance of 1e-6, then inflated by 1e-3.
/// Only gates the pulse-rate convergence condition, so 3 digits suffice.
Real spectral_norm_estimate(const Matrix& h);

}  // namespace qddlab::hp
