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

#include <cstddef>
#include <vector>

#include "qddlab/hp/complex.hpp"

namespace qddlab::hp {

/// Dense row-major complex matrix at working precision.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Real& s);
  Matrix& operator*=(const Complex& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Real& s) { return a *= s; }
  friend Matrix operator*(Matrix a, const Complex& s) { return a *= s; }

  Matrix dagger() const;
  Complex trace() const;

  /// max_{ij} max(|Re|, |Im|) — cheap entrywise norm used for tolerances.
  Real max_abs() const;
  /// max_i sum_j (|Re|+|Im|): an upper bound on the spectral norm.
  Real inf_norm_bound() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> a_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// ||A - A^dagger||_max, for Hermiticity checks.
Real hermiticity_defect(const Matrix& a);

/// exp(-i H t) for Hermitian H, by scaling-and-squaring with a Taylor
/// series whose truncation error is bounded a priori below
/// 10^-(digits+10), leaving the full digits-10 budget for the caller.
/// Throws std::invalid_argument if H is not square or not Hermitian
/// within 10^-(digits-15) * max(1, ||H||_max).
Matrix mat_exp_i(const Matrix& h, const Real& t);

/// Pure joint state of the system qubit (first tensor factor) and bath.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim) : a_(dim) {}

  std::size_t dim() const { return a_.size(); }
  Complex& operator[](std::size_t i) { return a_[i]; }
  const Complex& operator[](std::size_t i) const { return a_[i]; }

  Real norm() const;
  void normalize();

 private:
  std::vector<Complex> a_;
};

StateVector matvec(const Matrix& a, const StateVector& v);

/// Reduced 2x2 density matrix of the system qubit: tr_B |psi><psi|.
/// The vector length must be 2^(1+n_bath) with the system as the first
/// tensor factor (index = s * 2^n_bath + b).
Matrix partial_trace_bath(const StateVector& psi, int n_bath);

}  // namespace qddlab::hp
