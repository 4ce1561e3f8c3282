#pragma once

// Unitary Birkhoff decompositions: given X in XU(n), produce complex
// weights c_sigma over S_n with
//
//     X = sum_sigma c_sigma P_sigma,   sum c_sigma = 1,   sum |c_sigma|^2 = 1.
//
// The coefficients come from the trace formula
//
//     c_sigma = (1/n!) sum_nu n_nu Tr(D^(nu)(sigma)† U^(nu)),
//
// where U^(0) = 1 and U^(1) (attached to the standard irrep) are forced
// by the Fourier block diagonalization of X, and every other U^(nu) is a
// free unitary of the irrep's dimension. The strategies below are the
// named choices of that freedom; three of them collapse to closed forms
// that involve only the standard representation and therefore run without
// building the full irrep table.

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "birkhoff/cmatrix.hpp"
#include "birkhoff/irreps.hpp"
#include "birkhoff/permutation.hpp"

namespace birkhoff {

// Free unitaries U^(nu) keyed by irrep table index (>= 2); missing
// entries default to the identity.
struct GeneralChoice {
  std::map<std::size_t, CMatrix> unitaries;
};

// U^(nu) = D^(nu)(tau) for every free irrep. The weights collapse to
//   c_sigma = delta(sigma,tau) - ((n-1)/n!) chi(sigma^-1 tau)
//             + ((n-1)/n!) Tr(D(sigma^-1) U)
// with chi and D the standard character and representation.
struct CanonicalTauChoice {
  std::optional<Permutation> tau;  // empty means the identity
};

// tau = id with the sign-twisted standard block forced equal to the
// standard one; all weight lands on even permutations.
struct EvenOnlyChoice {};

// tau = id with the sign-twisted standard block forced to the negated
// standard one; even weights depend only on characters, odd weights carry
// all the dependence on X.
struct EvenOddSplitChoice {};

using StrategyChoice =
    std::variant<GeneralChoice, CanonicalTauChoice, EvenOnlyChoice, EvenOddSplitChoice>;

inline std::string strategy_name(const StrategyChoice& choice) {
  if (std::holds_alternative<GeneralChoice>(choice)) return "general";
  if (std::holds_alternative<CanonicalTauChoice>(choice)) return "canonical-tau";
  if (std::holds_alternative<EvenOnlyChoice>(choice)) return "even-only";
  return "even-odd-split";
}

struct BirkhoffWeights {
  int degree = 0;
  // Complete over S_n in lexicographic enumeration order; zeros stored.
  std::vector<Complex> weights;
  StrategyChoice strategy;
  // Max entrywise error of sum c_sigma P_sigma against the decomposed input.
  double residual = 0.0;

  Complex weight(const Permutation& sigma) const { return weights.at(permutation_rank(sigma)); }

  Complex weight_sum() const {
    Complex s = 0.0;
    for (const Complex& c : weights) s += c;
    return s;
  }

  double weight_sq_sum() const {
    double s = 0.0;
    for (const Complex& c : weights) s += std::norm(c);
    return s;
  }
};

inline CMatrix reconstruct(const BirkhoffWeights& w) {
  const std::size_t n = static_cast<std::size_t>(w.degree);
  if (w.weights.size() != static_cast<std::size_t>(factorial(w.degree)))
    throw std::invalid_argument("reconstruct: incomplete weight vector");
  CMatrix x(n, n);
  const auto sn = enumerate_sn(w.degree);
  for (std::size_t s = 0; s < sn.size(); ++s) {
    const Complex c = w.weights[s];
    if (c == Complex(0.0, 0.0)) continue;
    for (std::size_t i = 0; i < n; ++i)
      x(static_cast<std::size_t>(sn[s].images()[i] - 1), i) += c;
  }
  return x;
}

namespace detail {

inline void require_xu_input(const CMatrix& x, Tolerance tol, const char* where) {
  if (!x.is_square()) throw std::invalid_argument(std::string(where) + ": non-square matrix");
  if (!is_xu(x, tol))
    throw std::invalid_argument(std::string(where) +
                                ": input is not in XU(n) at the given tolerance");
}

// Lower-right (n-1)x(n-1) block of F† X F: the forced standard-irrep
// unitary U^(1).
inline CMatrix extract_standard_block(const CMatrix& x) {
  const CMatrix f = fourier_matrix(x.rows());
  const CMatrix b = f.adjoint() * x * f;
  CMatrix u(x.rows() - 1, x.cols() - 1);
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = b(i + 1, j + 1);
  return u;
}

// F (1 (+) U) F†: the XU matrix whose standard block is U. Evaluating
// Tr(D(sigma^-1) U) for the Fourier-basis standard representation D then
// reduces, by similarity invariance of the trace, to
//   Tr(P(sigma^-1) M) - 1 = sum_j M(sigma(j), j) - 1.
inline CMatrix standard_block_embedding(const CMatrix& u) {
  const std::size_t n = u.rows() + 1;
  CMatrix block(n, n);
  block(0, 0) = 1.0;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) block(i + 1, j + 1) = u(i, j);
  const CMatrix f = fourier_matrix(n);
  return f * block * f.adjoint();
}

inline Complex standard_trace_term(const CMatrix& m, const Permutation& sigma) {
  Complex acc = 0.0;
  for (std::size_t j = 0; j < m.rows(); ++j)
    acc += m(static_cast<std::size_t>(sigma.images()[j] - 1), j);
  return acc - 1.0;
}

// Tr(A† B) without forming the product.
inline Complex adjoint_trace(const CMatrix& a, const CMatrix& b) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) acc += std::conj(a(i, j)) * b(i, j);
  return acc;
}

inline BirkhoffWeights finish(int n, std::vector<Complex> weights, StrategyChoice strategy,
                              const CMatrix& x) {
  BirkhoffWeights w;
  w.degree = n;
  w.weights = std::move(weights);
  w.strategy = std::move(strategy);
  w.residual = max_abs_diff(x, reconstruct(w));
  return w;
}

}  // namespace detail

inline BirkhoffWeights decompose_general(const CMatrix& x, const CanonicalTauChoice& choice,
                                         Tolerance tol = {}) {
  detail::require_xu_input(x, tol, "decompose_general");
  const int n = static_cast<int>(x.rows());
  if (n > kMaxEnumerationDegree)
    throw std::invalid_argument("decompose_general: degree above the enumeration bound");
  const Permutation tau = choice.tau.value_or(Permutation::identity(static_cast<std::size_t>(n)));
  if (tau.degree() != static_cast<std::size_t>(n))
    throw std::invalid_argument("decompose_general: tau degree mismatch");

  if (n == 1) return detail::finish(1, {Complex(1.0, 0.0)}, CanonicalTauChoice{tau}, x);

  const CMatrix m = detail::standard_block_embedding(detail::extract_standard_block(x));
  const double coef = static_cast<double>(n - 1) / static_cast<double>(factorial(n));
  const auto sn = enumerate_sn(n);
  std::vector<Complex> weights(sn.size());
  for (std::size_t s = 0; s < sn.size(); ++s) {
    const Permutation& sigma = sn[s];
    const double chi =
        static_cast<double>(character_standard(n, sigma.inverse().compose(tau)));
    const Complex tr = detail::standard_trace_term(m, sigma);
    weights[s] = (sigma == tau ? 1.0 : 0.0) - coef * chi + coef * tr;
  }
  return detail::finish(n, std::move(weights), CanonicalTauChoice{tau}, x);
}

inline BirkhoffWeights decompose_general(const CMatrix& x, const GeneralChoice& choice,
                                         Tolerance tol = {}) {
  detail::require_xu_input(x, tol, "decompose_general");
  const int n = static_cast<int>(x.rows());
  if (n < 2 || n > kMaxIrrepTableDegree)
    throw std::invalid_argument("decompose_general: general choice needs n in 2..6");

  const IrrepTable table = irrep_table(n);
  std::vector<CMatrix> unitaries;
  unitaries.push_back(CMatrix::identity(1));
  unitaries.push_back(detail::extract_standard_block(x));
  for (std::size_t k = 2; k < table.size(); ++k) {
    const auto it = choice.unitaries.find(k);
    if (it == choice.unitaries.end()) {
      unitaries.push_back(CMatrix::identity(table[k].dim()));
      continue;
    }
    if (it->second.rows() != table[k].dim() || it->second.cols() != table[k].dim())
      throw std::invalid_argument("decompose_general: custom unitary has wrong dimension");
    if (!is_unitary(it->second, tol))
      throw std::invalid_argument("decompose_general: custom matrix is not unitary");
    unitaries.push_back(it->second);
  }
  for (const auto& [k, u] : choice.unitaries)
    if (k < 2 || k >= table.size())
      throw std::invalid_argument("decompose_general: custom unitary index out of range");

  const auto sn = enumerate_sn(n);
  std::vector<Complex> weights(sn.size());
  const double order = static_cast<double>(factorial(n));
  for (std::size_t s = 0; s < sn.size(); ++s) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < table.size(); ++k) {
      const CMatrix d = table[k].matrix(sn[s]);
      acc += static_cast<double>(table[k].dim()) * detail::adjoint_trace(d, unitaries[k]);
    }
    weights[s] = acc / order;
  }
  return detail::finish(n, std::move(weights), choice, x);
}

// Weighted sum over even permutations only; the free sign-twisted
// standard block is tied to the standard one, which cancels every odd
// coefficient identically (so odd weights are constructed zeros).
inline BirkhoffWeights decompose_even_only(const CMatrix& x, Tolerance tol = {}) {
  detail::require_xu_input(x, tol, "decompose_even_only");
  const int n = static_cast<int>(x.rows());
  if (n < 4 || n > kMaxEnumerationDegree)
    throw std::invalid_argument(
        "decompose_even_only: needs n in 4..8 (the sign-twisted standard irrep is only "
        "inequivalent from n = 4 on)");

  const CMatrix m = detail::standard_block_embedding(detail::extract_standard_block(x));
  const double coef = 2.0 * static_cast<double>(n - 1) / static_cast<double>(factorial(n));
  const auto sn = enumerate_sn(n);
  std::vector<Complex> weights(sn.size(), Complex(0.0, 0.0));
  for (std::size_t s = 0; s < sn.size(); ++s) {
    const Permutation& sigma = sn[s];
    if (!sigma.is_even()) continue;
    const double chi = static_cast<double>(character_standard(n, sigma));
    const Complex tr = detail::standard_trace_term(m, sigma);
    weights[s] = (sigma.is_identity() ? 1.0 : 0.0) - coef * chi + coef * tr;
  }
  return detail::finish(n, std::move(weights), EvenOnlyChoice{}, x);
}

// Even weights depend only on the standard character (identical for every
// input of the same degree); odd weights carry all the dependence on X.
inline BirkhoffWeights decompose_even_odd_split(const CMatrix& x, Tolerance tol = {}) {
  detail::require_xu_input(x, tol, "decompose_even_odd_split");
  const int n = static_cast<int>(x.rows());
  if (n < 4 || n > kMaxEnumerationDegree)
    throw std::invalid_argument(
        "decompose_even_odd_split: needs n in 4..8 (the sign-twisted standard irrep is only "
        "inequivalent from n = 4 on)");

  const CMatrix m = detail::standard_block_embedding(detail::extract_standard_block(x));
  const double coef = 2.0 * static_cast<double>(n - 1) / static_cast<double>(factorial(n));
  const auto sn = enumerate_sn(n);
  std::vector<Complex> weights(sn.size());
  for (std::size_t s = 0; s < sn.size(); ++s) {
    const Permutation& sigma = sn[s];
    if (sigma.is_even()) {
      const double chi = static_cast<double>(character_standard(n, sigma));
      weights[s] = (sigma.is_identity() ? 1.0 : 0.0) - coef * chi;
    } else {
      weights[s] = coef * detail::standard_trace_term(m, sigma);
    }
  }
  return detail::finish(n, std::move(weights), EvenOddSplitChoice{}, x);
}

inline BirkhoffWeights decompose(const CMatrix& x, const StrategyChoice& choice,
                                 Tolerance tol = {}) {
  return std::visit(
      [&](const auto& c) -> BirkhoffWeights {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, GeneralChoice>)
          return decompose_general(x, c, tol);
        else if constexpr (std::is_same_v<T, CanonicalTauChoice>)
          return decompose_general(x, c, tol);
        else if constexpr (std::is_same_v<T, EvenOnlyChoice>)
          return decompose_even_only(x, tol);
        else
          return decompose_even_odd_split(x, tol);
      },
      choice);
}

// --------------------------------------------------------------------------
// Group circulant and verification.

inline constexpr int kMaxCirculantDegree = 5;  // n! x n! dense

// circ(c) has entry c_{g^-1 h} at (g, h), rows and columns in enumeration
// order. For weight vectors produced by the trace formula it is unitary.
inline CMatrix group_circulant(const BirkhoffWeights& w) {
  if (w.degree < 1 || w.degree > kMaxCirculantDegree)
    throw std::invalid_argument("group_circulant: degree must be in 1..5");
  const auto sn = enumerate_sn(w.degree);
  if (w.weights.size() != sn.size())
    throw std::invalid_argument("group_circulant: incomplete weight vector");
  CMatrix c(sn.size(), sn.size());
  for (std::size_t g = 0; g < sn.size(); ++g) {
    const Permutation ginv = sn[g].inverse();
    for (std::size_t h = 0; h < sn.size(); ++h)
      c(g, h) = w.weights[permutation_rank(ginv.compose(sn[h]))];
  }
  return c;
}

struct VerifyReport {
  double weight_sum_residual = 0.0;      // |sum c - 1|
  double sq_sum_residual = 0.0;          // |sum |c|^2 - 1|
  double reconstruction_residual = 0.0;  // ||X - sum c P||_max
  std::optional<double> circulant_residual;  // ||C†C - I||_max when computed

  bool weight_sum_ok = false;
  bool sq_sum_ok = false;
  bool reconstruction_ok = false;
  bool circulant_ok = true;  // vacuously true when not computed

  bool all_ok() const {
    return weight_sum_ok && sq_sum_ok && reconstruction_ok && circulant_ok;
  }
};

// Failures are report entries, never exceptions.
inline VerifyReport verify(const BirkhoffWeights& w, const CMatrix& x, Tolerance tol = {},
                           bool check_circulant = false) {
  VerifyReport report;
  report.weight_sum_residual = std::abs(w.weight_sum() - Complex(1.0, 0.0));
  report.sq_sum_residual = std::abs(w.weight_sq_sum() - 1.0);
  report.reconstruction_residual = max_abs_diff(x, reconstruct(w));
  report.weight_sum_ok = report.weight_sum_residual <= tol.abs_eps;
  report.sq_sum_ok = report.sq_sum_residual <= tol.abs_eps;
  report.reconstruction_ok = report.reconstruction_residual <= tol.abs_eps;
  if (check_circulant && w.degree <= kMaxCirculantDegree) {
    report.circulant_residual = unitarity_residual(group_circulant(w));
    report.circulant_ok = *report.circulant_residual <= tol.abs_eps;
  }
  return report;
}

// Greedy nearest-neighbor multiset comparison, each expected value
// consumed once. Order-insensitive golden comparisons use this.
inline bool weights_match_multiset(std::vector<Complex> got, std::vector<Complex> expected,
                                   double tol = 1e-9) {
  if (got.size() != expected.size()) return false;
  for (const Complex& g : got) {
    std::size_t best = expected.size();
    double best_dist = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const double dist = std::abs(expected[i] - g);
      if (best == expected.size() || dist < best_dist) {
        best = i;
        best_dist = dist;
      }
    }
    if (best == expected.size() || best_dist > tol) return false;
    expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return expected.empty();
}

}  // namespace birkhoff
