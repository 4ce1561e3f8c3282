#pragma once

// XU(n): the group of n x n unitary matrices whose 2n line sums all equal 1.
// Fourier conjugation identifies it with U(n-1), which gives both the
// embedding map and the Haar sampler. The classification helper encodes
// the fact that the intersection of XU(n) with the doubly stochastic
// matrices is exactly the permutation matrices.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "birkhoff/cmatrix.hpp"
#include "birkhoff/permutation.hpp"

namespace birkhoff {

// A matrix certified to lie in XU(n) at construction time; operations
// downstream trust the certificate instead of re-checking.
class XUMatrix {
public:
  explicit XUMatrix(CMatrix m, Tolerance tol = {}) : m_(std::move(m)), tol_(tol) {
    if (!m_.is_square()) throw std::invalid_argument("XUMatrix: non-square matrix");
    if (!is_xu(m_, tol_))
      throw std::invalid_argument("XUMatrix: matrix is not in XU(n) at the given tolerance");
  }

  const CMatrix& matrix() const { return m_; }
  Tolerance certified_tolerance() const { return tol_; }
  std::size_t size() const { return m_.rows(); }

  operator const CMatrix&() const { return m_; }  // NOLINT: intentional view

private:
  CMatrix m_;
  Tolerance tol_;
};

// U(n-1) -> XU(n): F (1 (+) U) F†. Round-tripping through
// conjugate_by_fourier recovers U.
inline XUMatrix embed_unitary(const CMatrix& u, Tolerance tol = {}) {
  if (!u.is_square()) throw std::invalid_argument("embed_unitary: non-square matrix");
  const std::size_t n = u.rows() + 1;
  if (u.rows() > 0 && !is_unitary(u, tol))
    throw std::invalid_argument("embed_unitary: input is not unitary at the given tolerance");
  CMatrix block(n, n);
  block(0, 0) = 1.0;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) block(i + 1, j + 1) = u(i, j);
  const CMatrix f = fourier_matrix(n);
  return XUMatrix(f * block * f.adjoint(), tol);
}

// Haar-random XU(n) via the isomorphism; deterministic per seed.
inline XUMatrix random_xu(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_xu: n must be at least 1");
  if (n == 1) return XUMatrix(CMatrix::identity(1));
  return embed_unitary(random_unitary(n - 1, seed));
}

// Recovers the permutation if every entry is within tol of 0 or 1 with
// exactly one 1 per row and per column; empty otherwise.
inline std::optional<Permutation> is_permutation_matrix(const CMatrix& a, Tolerance tol = {}) {
  if (!a.is_square()) return std::nullopt;
  const std::size_t n = a.rows();
  if (n == 0) return std::nullopt;
  std::vector<int> images(n, 0);
  std::vector<bool> row_used(n, false);
  for (std::size_t col = 0; col < n; ++col) {
    int hit = -1;
    for (std::size_t row = 0; row < n; ++row) {
      const double d0 = std::abs(a(row, col));
      const double d1 = std::abs(a(row, col) - Complex(1.0, 0.0));
      if (d1 <= tol.abs_eps) {
        if (hit >= 0) return std::nullopt;  // two ones in a column
        hit = static_cast<int>(row);
      } else if (d0 > tol.abs_eps) {
        return std::nullopt;  // entry near neither 0 nor 1
      }
    }
    if (hit < 0 || row_used[static_cast<std::size_t>(hit)]) return std::nullopt;
    row_used[static_cast<std::size_t>(hit)] = true;
    images[col] = hit + 1;  // entry 1 at (sigma(col), col)
  }
  return Permutation(std::move(images));
}

enum class MatrixClass { XUOnly, DSOnly, Both, Neither };

inline const char* matrix_class_name(MatrixClass c) {
  switch (c) {
    case MatrixClass::XUOnly: return "xu-only";
    case MatrixClass::DSOnly: return "ds-only";
    case MatrixClass::Both: return "both";
    case MatrixClass::Neither: return "neither";
  }
  return "?";
}

struct ClassifyReport {
  MatrixClass verdict = MatrixClass::Neither;
  // Populated whenever the verdict is Both; a matrix that is both unitary
  // with unit line sums and doubly stochastic must be a permutation matrix.
  std::optional<Permutation> permutation;
};

inline ClassifyReport classify_matrix(const CMatrix& a, Tolerance tol = {}) {
  if (!a.is_square()) throw std::invalid_argument("classify_matrix: non-square matrix");
  const bool xu = is_xu(a, tol);
  const bool ds = is_doubly_stochastic(a, tol);
  ClassifyReport report;
  if (xu && ds) {
    report.verdict = MatrixClass::Both;
    report.permutation = is_permutation_matrix(a, tol);
  } else if (xu) {
    report.verdict = MatrixClass::XUOnly;
  } else if (ds) {
    report.verdict = MatrixClass::DSOnly;
  } else {
    report.verdict = MatrixClass::Neither;
  }
  return report;
}

}  // namespace birkhoff
