#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qmi/matrix.hpp"
#include "qmi/tolerance.hpp"

namespace qmi {

/// Hermitian operator a with 0 <= a <= I. Validated at construction; every
/// operation below may assume validity.
class Effect {
 public:
  explicit Effect(Matrix m, Tolerance tol = current_tolerance()) : m_(std::move(m)) {
    if (!is_hermitian(m_, tol)) throw std::invalid_argument("Effect: matrix is not Hermitian within eps");
    const EigenSystem es = herm_eigendecompose(m_, tol);
    if (es.values.front() < -tol.eps)
      throw std::invalid_argument("Effect: eigenvalue " + std::to_string(es.values.front()) +
                                  " below -eps");
    if (es.values.back() > 1.0 + tol.eps)
      throw std::invalid_argument("Effect: eigenvalue " + std::to_string(es.values.back()) +
                                  " above 1+eps");
  }

  static Effect zero(int dim) { return Effect(Matrix::zero(dim)); }
  static Effect identity(int dim) { return Effect(Matrix::identity(dim)); }

  int dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// PSD operator with trace <= 1.
class PartialState {
 public:
  explicit PartialState(Matrix m, Tolerance tol = current_tolerance()) : m_(std::move(m)) {
    if (!is_hermitian(m_, tol))
      throw std::invalid_argument("PartialState: matrix is not Hermitian within eps");
    if (min_eigenvalue(m_, tol) < -tol.eps)
      throw std::invalid_argument("PartialState: matrix is not PSD within eps");
    const Complex t = qmi::trace(m_);
    if (t.real() > 1.0 + tol.eps)
      throw std::invalid_argument("PartialState: trace " + std::to_string(t.real()) +
                                  " above 1+eps");
  }

  int dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  double trace() const { return qmi::trace(m_).real(); }

 private:
  Matrix m_;
};

/// PSD operator with trace = 1.
class State {
 public:
  explicit State(Matrix m, Tolerance tol = current_tolerance()) : m_(std::move(m)) {
    if (!is_hermitian(m_, tol)) throw std::invalid_argument("State: matrix is not Hermitian within eps");
    if (min_eigenvalue(m_, tol) < -tol.eps)
      throw std::invalid_argument("State: matrix is not PSD within eps");
    const double t = qmi::trace(m_).real();
    if (std::abs(t - 1.0) > tol.eps)
      throw std::invalid_argument("State: trace " + std::to_string(t) + " differs from 1");
  }

  int dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  PartialState partial() const { return PartialState(m_); }

 private:
  Matrix m_;
};

/// a' = I - a
inline Effect complement(const Effect& a, Tolerance tol = current_tolerance()) {
  return Effect(Matrix::identity(a.dim()) - a.matrix(), tol);
}

/// a ⟂ b iff a + b <= I.
inline bool effect_perp(const Effect& a, const Effect& b, Tolerance tol = current_tolerance()) {
  require_same_dim(a.matrix(), b.matrix(), "effect_perp");
  return max_eigenvalue(a.matrix() + b.matrix(), tol) <= 1.0 + tol.eps;
}

/// a ⊕ b = a + b, defined only when a ⟂ b.
inline Effect effect_oplus(const Effect& a, const Effect& b, Tolerance tol = current_tolerance()) {
  require_same_dim(a.matrix(), b.matrix(), "effect_oplus");
  if (!effect_perp(a, b, tol))
    throw std::invalid_argument("effect_oplus: effects are not perpendicular (a+b exceeds I)");
  return Effect(a.matrix() + b.matrix(), tol);
}

/// Standard sequential product a∘b = a^{1/2} b a^{1/2}.
inline Effect seq_product(const Effect& a, const Effect& b, Tolerance tol = current_tolerance()) {
  require_same_dim(a.matrix(), b.matrix(), "seq_product");
  const Matrix root = psd_sqrt(a.matrix(), tol);
  return Effect(hermitize(root * b.matrix() * root), tol);
}

inline State normalize(const PartialState& p, Tolerance tol = current_tolerance()) {
  const double t = p.trace();
  if (t <= tol.eps)
    throw std::invalid_argument("normalize: trace " + std::to_string(t) +
                                " too small (zero partial state)");
  return State(Complex(1.0 / t, 0.0) * p.matrix(), tol);
}

/// tr(ρ a); Hermiticity forces the trace real, and a residual imaginary part
/// above eps signals an upstream bug.
inline double effect_prob(const State& rho, const Effect& a, Tolerance tol = current_tolerance()) {
  require_same_dim(rho.matrix(), a.matrix(), "effect_prob");
  const Complex t = trace(rho.matrix() * a.matrix());
  if (std::abs(t.imag()) > tol.eps)
    throw std::runtime_error("effect_prob: non-real probability, imag = " +
                             std::to_string(t.imag()));
  return t.real();
}

}  // namespace qmi
