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

#include "qddlab/hp/matrix.hpp"

#include <stdexcept>
#include <string>

namespace qddlab::hp {

namespace {

// Scratch pad of raw mpfr temporaries for the hot kernels.  One pad per
// call site, never shared between threads.
struct Scratch {
  mpfr_t t1, t2, acc_re, acc_im;
  Scratch() {
    mpfr_prec_t p = working_bits();
    mpfr_init2(t1, p);
    mpfr_init2(t2, p);
    mpfr_init2(acc_re, p);
    mpfr_init2(acc_im, p);
  }
  ~Scratch() {
    mpfr_clear(t1);
    mpfr_clear(t2);
    mpfr_clear(acc_re);
    mpfr_clear(acc_im);
  }
  void reset_acc() {
    mpfr_set_zero(acc_re, 1);
    mpfr_set_zero(acc_im, 1);
  }
  // acc += a * b (complex multiply-accumulate, 4 mul + 4 add)
  void cfma(const Complex& a, const Complex& b) {
    mpfr_mul(t1, a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_add(acc_re, acc_re, t1, MPFR_RNDN);
    mpfr_mul(t1, a.re.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_add(acc_im, acc_im, t1, MPFR_RNDN);
  }
  // acc += conj(a) * b
  void cfma_conj(const Complex& a, const Complex& b) {
    mpfr_mul(t1, a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_add(acc_re, acc_re, t1, MPFR_RNDN);
    mpfr_mul(t1, a.re.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_add(acc_im, acc_im, t1, MPFR_RNDN);
  }
  void store_acc(Complex& out) {
    mpfr_set(out.re.raw(), acc_re, MPFR_RNDN);
    mpfr_set(out.im.raw(), acc_im, MPFR_RNDN);
  }
};

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(Real(1L));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "Matrix::operator+=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "Matrix::operator-=");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Real& s) {
  for (auto& z : a_) z *= s;
  return *this;
}

Matrix& Matrix::operator*=(const Complex& s) {
  for (auto& z : a_) z *= s;
  return *this;
}

Matrix Matrix::dagger() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
  return m;
}

Complex Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::trace: not square");
  Complex t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Real Matrix::max_abs() const {
  Real m(0L);
  for (const auto& z : a_) {
    Real ar = abs(z.re), ai = abs(z.im);
    if (ar > m) m = ar;
    if (ai > m) m = ai;
  }
  return m;
}

Real Matrix::inf_norm_bound() const {
  Real best(0L);
  for (std::size_t r = 0; r < rows_; ++r) {
    Real s(0L);
    for (std::size_t c = 0; c < cols_; ++c) s += abs(at(r, c).re) + abs(at(r, c).im);
    if (s > best) best = s;
  }
  return best;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
  Matrix out(a.rows(), b.cols());
  Scratch s;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      s.reset_acc();
      for (std::size_t k = 0; k < a.cols(); ++k) s.cfma(a.at(i, k), b.at(k, j));
      s.store_acc(out.at(i, j));
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac)
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out.at(ar * b.rows() + br, ac * b.cols() + bc) = a.at(ar, ac) * b.at(br, bc);
  return out;
}

Real hermiticity_defect(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermiticity_defect: not square");
  Real worst(0L);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = r; c < a.cols(); ++c) {
      Complex d = a.at(r, c) - a.at(c, r).conj();
      Real m = abs(d.re), mi = abs(d.im);
      if (m > worst) worst = m;
      if (mi > worst) worst = mi;
    }
  }
  return worst;
}

Matrix mat_exp_i(const Matrix& h, const Real& t) {
  if (h.rows() != h.cols()) throw std::invalid_argument("mat_exp_i: matrix not square");
  Real scale = h.max_abs();
  Real herm_tol = tol(15);
  if (scale > Real(1L)) herm_tol *= scale;
  if (hermiticity_defect(h) > herm_tol) {
    throw std::invalid_argument("mat_exp_i: input not Hermitian within tolerance");
  }

  const std::size_t n = h.rows();
  // A = -i H t
  Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a.at(r, c) = Complex(h.at(r, c).im * t, -(h.at(r, c).re * t));

  // Scale so ||A/2^s|| <= 1/4, then square back.
  Real norm = a.inf_norm_bound();
  int squarings = 0;
  Real quarter = Real::dyadic(1, -2);
  Real half(0.5);
  while (norm > quarter) {
    norm *= half;
    ++squarings;
  }
  if (squarings > 0) {
    Real f = Real::dyadic(1, -squarings);
    a *= f;
    norm = a.inf_norm_bound();
  }

  // Taylor sum with rigorous remainder: ||term_k|| <= ||B||^k / k!, and the
  // tail after N is < 2 ||B||^(N+1)/(N+1)! once ||B|| <= 1/4.  Each squaring
  // at most doubles the error, so spend log10(2) extra digits per squaring.
  int extra_digits = (squarings * 31) / 100 + 1;
  Real target = Real::pow10(-(decimal_digits() + 10 + extra_digits));
  Matrix sum = Matrix::identity(n);
  Matrix term = a;
  Real term_bound = norm;
  long k = 1;
  while (true) {
    sum += term;
    if (term_bound + term_bound < target) break;
    ++k;
    if (k > 10000) throw std::runtime_error("mat_exp_i: Taylor series failed to converge");
    term = multiply(term, a);
    Real invk = Real(1L) / Real(k);
    term *= invk;
    term_bound = term_bound * norm * invk;
  }

  for (int s = 0; s < squarings; ++s) sum = multiply(sum, sum);
  return sum;
}

Real StateVector::norm() const {
  Real s(0L);
  for (const auto& z : a_) s += z.abs2();
  return sqrt(s);
}

void StateVector::normalize() {
  Real n = norm();
  if (n.is_zero()) throw std::invalid_argument("StateVector::normalize: zero vector");
  Real inv = Real(1L) / n;
  for (auto& z : a_) z *= inv;
}

StateVector matvec(const Matrix& a, const StateVector& v) {
  if (a.cols() != v.dim()) throw std::invalid_argument("matvec: dimension mismatch");
  StateVector out(a.rows());
  Scratch s;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s.reset_acc();
    for (std::size_t k = 0; k < a.cols(); ++k) s.cfma(a.at(i, k), v[k]);
    s.store_acc(out[i]);
  }
  return out;
}

Matrix partial_trace_bath(const StateVector& psi, int n_bath) {
  if (n_bath < 0) throw std::invalid_argument("partial_trace_bath: negative bath size");
  const std::size_t dim = psi.dim();
  const std::size_t bath_dim = std::size_t(1) << n_bath;
  if (dim != 2 * bath_dim) {
    throw std::invalid_argument("partial_trace_bath: vector length is not 2^(1+n_bath)");
  }
  Matrix rho(2, 2);
  Scratch s;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      s.reset_acc();
      // rho_{rc} = sum_b psi[r,b] conj(psi[c,b])
      for (std::size_t b = 0; b < bath_dim; ++b) s.cfma_conj(psi[c * bath_dim + b], psi[r * bath_dim + b]);
      s.store_acc(rho.at(r, c));
    }
  }
  return rho;
}

}  // namespace qddlab::hp
