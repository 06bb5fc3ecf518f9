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

#include <string>

namespace qddlab::seq {

/// Instantaneous pi-pulse applied to the system qubit.
enum class PulseAxis : unsigned char { Identity = 0, X = 1, Y = 2, Z = 3 };

/// Pauli product modulo global phase: closed, abelian on the axis labels
/// (X*Y = Y*X = Z up to phase, a*a = Identity).
constexpr PulseAxis operator*(PulseAxis a, PulseAxis b) {
  int ia = static_cast<int>(a), ib = static_cast<int>(b);
  if (ia == ib) return PulseAxis::Identity;
  if (ia == 0) return b;
  if (ib == 0) return a;
  return static_cast<PulseAxis>(6 - ia - ib);
}

constexpr char axis_char(PulseAxis a) {
  switch (a) {
    case PulseAxis::Identity: return 'I';
    case PulseAxis::X: return 'X';
    case PulseAxis::Y: return 'Y';
    case PulseAxis::Z: return 'Z';
  }
  return '?';
}

/// Parses one of I, X, Y, Z; throws std::invalid_argument otherwise.
PulseAxis axis_from_char(char c);

inline std::string axis_name(PulseAxis a) { return std::string(1, axis_char(a)); }

}  // namespace qddlab::seq
