#pragma once

// Dense complex matrices in row-major double precision, with the
// tolerance-aware predicates used throughout: unitarity, unit line sums
// (the group XU(n)), and double stochasticity. All comparisons are
// entrywise absolute against a single tolerance; the residual norm is
// always the max entrywise modulus.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "birkhoff/permutation.hpp"

namespace birkhoff {

using Complex = std::complex<double>;

struct Tolerance {
  double abs_eps = 1e-10;
  Tolerance() = default;
  Tolerance(double eps) : abs_eps(eps) {  // NOLINT: implicit by design
    if (!(eps >= 0.0)) throw std::invalid_argument("Tolerance: abs_eps must be non-negative");
  }
};

class CMatrix {
public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<Complex>& data() const { return a_; }

  CMatrix operator+(const CMatrix& b) const {
    require_same_shape(b, "operator+");
    CMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + b.a_[k];
    return r;
  }

  CMatrix operator-(const CMatrix& b) const {
    require_same_shape(b, "operator-");
    CMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - b.a_[k];
    return r;
  }

  CMatrix operator*(const CMatrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("CMatrix::operator*: shape mismatch");
    CMatrix r(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Complex aik = a_[i * cols_ + k];
        if (aik == Complex(0.0, 0.0)) continue;
        const Complex* brow = &b.a_[k * b.cols_];
        Complex* rrow = &r.a_[i * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) rrow[j] += aik * brow[j];
      }
    }
    return r;
  }

  friend CMatrix operator*(Complex s, const CMatrix& m) {
    CMatrix r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = s * m.a_[k];
    return r;
  }

  CMatrix adjoint() const {
    CMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj(a_[i * cols_ + j]);
    return r;
  }

  Complex trace() const {
    if (!is_square()) throw std::invalid_argument("CMatrix::trace: non-square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += a_[i * cols_ + i];
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

private:
  void require_same_shape(const CMatrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::invalid_argument(std::string("CMatrix::") + op + ": shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> a_;
};

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

// ||A†A - I||_max
inline double unitarity_residual(const CMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("unitarity_residual: non-square matrix");
  return max_abs_diff(a.adjoint() * a, CMatrix::identity(a.rows()));
}

// max over all rows and columns of |line sum - 1|
inline double line_sum_residual(const CMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("line_sum_residual: non-square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      row += a(i, j);
      col += a(j, i);
    }
    worst = std::max({worst, std::abs(row - 1.0), std::abs(col - 1.0)});
  }
  return worst;
}

inline bool is_unitary(const CMatrix& a, Tolerance tol = {}) {
  return unitarity_residual(a) <= tol.abs_eps;
}

// Membership in XU(n): unitary with all 2n line sums equal to 1.
inline bool is_xu(const CMatrix& a, Tolerance tol = {}) {
  return is_unitary(a, tol) && line_sum_residual(a) <= tol.abs_eps;
}

inline bool is_doubly_stochastic(const CMatrix& a, Tolerance tol = {}) {
  if (!a.is_square()) throw std::invalid_argument("is_doubly_stochastic: non-square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex z = a(i, j);
      if (std::abs(z.imag()) > tol.abs_eps) return false;
      if (z.real() < -tol.abs_eps || z.real() > 1.0 + tol.abs_eps) return false;
    }
  return line_sum_residual(a) <= tol.abs_eps;
}

// P(sigma) has entry 1 at (sigma(i), i), so P maps e_i to e_sigma(i) and
// P(sigma*tau) = P(sigma) P(tau).
inline CMatrix permutation_matrix(const Permutation& sigma) {
  const std::size_t n = sigma.degree();
  CMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    p(static_cast<std::size_t>(sigma.images()[i] - 1), i) = 1.0;
  return p;
}

// F(j,k) = omega^(jk) / sqrt(n), omega = exp(2*pi*i/n), 0-based exponents.
inline CMatrix fourier_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("fourier_matrix: n must be at least 1");
  CMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      // reduce jk mod n before exponentiation to keep phases exact-ish
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) /
                           static_cast<double>(n);
      f(j, k) = Complex(std::cos(angle), std::sin(angle)) * scale;
    }
  return f;
}

// F† X F. For X in XU(n) the result is block diagonal 1 (+) U with
// U in U(n-1); the (0,0) entry is the unit line sum.
inline CMatrix conjugate_by_fourier(const CMatrix& x, Tolerance tol = {}) {
  if (!x.is_square()) throw std::invalid_argument("conjugate_by_fourier: non-square matrix");
  if (!is_xu(x, tol))
    throw std::invalid_argument("conjugate_by_fourier: input is not in XU(n) at the given tolerance");
  const CMatrix f = fourier_matrix(x.rows());
  return f.adjoint() * x * f;
}

namespace detail {

// Deterministic N(0,1) pairs from raw mt19937_64 output (Box-Muller).
// std::normal_distribution is implementation-defined, which would make
// seeded outputs differ across standard libraries.
inline double uniform_unit(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 1.0) * 0x1p-53;  // (0, 1]
}

inline std::pair<double, double> gaussian_pair(std::mt19937_64& gen) {
  const double u1 = uniform_unit(gen);
  const double u2 = uniform_unit(gen);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace detail

// Haar-distributed m x m unitary: QR of a complex Ginibre sample via
// modified Gram-Schmidt (run twice for orthogonality), which yields the
// unique R with positive real diagonal.
inline CMatrix random_unitary(std::size_t m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random_unitary: m must be at least 1");
  std::mt19937_64 gen(seed);
  CMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto [re, im] = detail::gaussian_pair(gen);
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  CMatrix q(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Complex> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = g(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < m; ++i) proj += std::conj(q(i, k)) * v[i];
        for (std::size_t i = 0; i < m; ++i) v[i] -= proj * q(i, k);
      }
    }
    double norm = 0.0;
    for (const Complex& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::runtime_error("random_unitary: degenerate sample");
    for (std::size_t i = 0; i < m; ++i) q(i, j) = v[i] / norm;
  }
  return q;
}

}  // namespace birkhoff
