#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmi/tolerance.hpp"

namespace qmi {

using Complex = std::complex<double>;
using Vec = std::vector<Complex>;

/// Dense square complex matrix, row-major. Dimension is fixed at construction.
class Matrix {
 public:
  explicit Matrix(int dim) : dim_(checked_dim(dim)), e_(count(dim)) {}

  Matrix(int dim, Vec entries) : dim_(checked_dim(dim)), e_(std::move(entries)) {
    if (e_.size() != count(dim_))
      throw std::invalid_argument("Matrix: expected " + std::to_string(dim_ * dim_) +
                                  " entries, got " + std::to_string(e_.size()));
    for (const Complex& z : e_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("Matrix: non-finite entry");
  }

  static Matrix zero(int dim) { return Matrix(dim); }

  static Matrix identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diag(const std::vector<double>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) { return e_[idx(r, c)]; }
  const Complex& operator()(int r, int c) const { return e_[idx(r, c)]; }

  const Vec& entries() const { return e_; }

 private:
  static int checked_dim(int dim) {
    if (dim <= 0) throw std::invalid_argument("Matrix: dimension must be positive");
    return dim;
  }
  static std::size_t count(int dim) {
    return static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  }
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(c);
  }

  int dim_;
  Vec e_;
};

inline void require_same_dim(const Matrix& a, const Matrix& b, const char* who) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "operator+");
  Matrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "operator-");
  Matrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

inline Matrix operator*(Complex s, const Matrix& a) {
  Matrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
  return r;
}

inline Matrix operator*(const Matrix& a, Complex s) { return s * a; }

/// Standard matrix product.
inline Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "matmul");
  const int d = a.dim();
  Matrix r(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < d; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) { return a * b; }

/// Conjugate transpose.
inline Matrix adjoint(const Matrix& a) {
  Matrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline Complex trace(const Matrix& a) {
  Complex t{};
  for (int i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

/// Largest entry magnitude.
inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

/// True iff the max-entry absolute difference is within eps.
inline bool approx_eq(const Matrix& a, const Matrix& b, Tolerance tol = current_tolerance()) {
  return max_abs_diff(a, b) <= tol.eps;
}

inline bool is_hermitian(const Matrix& a, Tolerance tol = current_tolerance()) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol.eps) return false;
  return true;
}

/// (A + A†)/2; removes roundoff skew before spectral work.
inline Matrix hermitize(const Matrix& a) {
  Matrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return r;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Vec column(const Matrix& m, int j) {
  Vec v(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) v[static_cast<std::size_t>(i)] = m(i, j);
  return v;
}

/// |u><v|
inline Matrix outer(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("outer: length mismatch");
  Matrix r(static_cast<int>(u.size()));
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j)
      r(i, j) = u[static_cast<std::size_t>(i)] * std::conj(v[static_cast<std::size_t>(j)]);
  return r;
}

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns; A = V diag(values) V†
};

namespace detail {

inline double offdiag_frobenius(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

inline constexpr double kJacobiOffdiagTol = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Eigenvalues ascending,
/// eigenvector columns aligned; converges when the off-diagonal Frobenius norm
/// drops below kJacobiOffdiagTol.
inline EigenSystem herm_eigendecompose(const Matrix& input, Tolerance tol = current_tolerance()) {
  if (!is_hermitian(input, tol))
    throw std::invalid_argument("herm_eigendecompose: matrix is not Hermitian within eps");
  const int d = input.dim();
  Matrix a = hermitize(input);
  Matrix v = Matrix::identity(d);

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (detail::offdiag_frobenius(a) < kJacobiOffdiagTol) break;
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const Complex apq = a(p, q);
        const double absb = std::abs(apq);
        if (absb == 0.0) continue;
        const Complex phase = apq / absb;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * absb);
        const double t =
            (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                         : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- U† A U with U = [[c, s·phase], [-s·conj(phase), c]] on rows/cols (p,q).
        for (int r = 0; r < d; ++r) {
          const Complex arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * std::conj(phase) * arq;
          a(r, q) = s * phase * arp + c * arq;
        }
        for (int r = 0; r < d; ++r) {
          const Complex apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - s * phase * aqr;
          a(q, r) = s * std::conj(phase) * apr + c * aqr;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
        for (int r = 0; r < d; ++r) {
          const Complex vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * std::conj(phase) * vrq;
          v(r, q) = s * phase * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es{std::vector<double>(static_cast<std::size_t>(d)), Matrix(d)};
  for (int k = 0; k < d; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    es.values[static_cast<std::size_t>(k)] = a(src, src).real();
    for (int r = 0; r < d; ++r) es.vectors(r, k) = v(r, src);
  }
  return es;
}

/// V f(diag) V† for a Hermitian input.
template <typename Fn>
inline Matrix spectral_map(const Matrix& a, Fn&& f, Tolerance tol = current_tolerance()) {
  const EigenSystem es = herm_eigendecompose(a, tol);
  const int d = a.dim();
  Matrix r(d);
  for (int k = 0; k < d; ++k) {
    const double fv = f(es.values[static_cast<std::size_t>(k)]);
    if (fv == 0.0) continue;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        r(i, j) += fv * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return hermitize(r);
}

inline double min_eigenvalue(const Matrix& a, Tolerance tol = current_tolerance()) {
  return herm_eigendecompose(a, tol).values.front();
}

inline double max_eigenvalue(const Matrix& a, Tolerance tol = current_tolerance()) {
  return herm_eigendecompose(a, tol).values.back();
}

/// Unique PSD square root. Eigenvalues in [-eps, 0) are clamped to 0;
/// anything below -eps is rejected.
inline Matrix psd_sqrt(const Matrix& a, Tolerance tol = current_tolerance()) {
  const EigenSystem es = herm_eigendecompose(a, tol);
  if (es.values.front() < -tol.eps)
    throw std::invalid_argument("psd_sqrt: eigenvalue " + std::to_string(es.values.front()) +
                                " below -eps; matrix is not PSD");
  const int d = a.dim();
  Matrix r(d);
  for (int k = 0; k < d; ++k) {
    const double lam = std::max(0.0, es.values[static_cast<std::size_t>(k)]);
    if (lam == 0.0) continue;
    const double root = std::sqrt(lam);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        r(i, j) += root * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return hermitize(r);
}

/// Spectral pseudo inverse square root; eigenvalues <= cutoff contribute 0.
inline Matrix psd_inv_sqrt(const Matrix& a, double cutoff = 1e-12,
                           Tolerance tol = current_tolerance()) {
  return spectral_map(
      a, [cutoff](double lam) { return lam > cutoff ? 1.0 / std::sqrt(lam) : 0.0; }, tol);
}

}  // namespace qmi
