#pragma once

// Irreducible representations of the symmetric group S_n.
//
// The (n-1)-dimensional standard representation is realized as the
// nontrivial Fourier block of the permutation matrices, so that it is
// literally the block extracted by conjugate_by_fourier. Its sign twist
// (the "anti-standard" realization, inequivalent for n >= 4) reuses the
// same matrices. Every other irrep is realized in Young's orthogonal
// form, which is real, orthogonal, and exact up to rounding.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "birkhoff/cmatrix.hpp"
#include "birkhoff/partition.hpp"
#include "birkhoff/permutation.hpp"

namespace birkhoff {

// --------------------------------------------------------------------------
// Standard representation as the lower-right (n-1)x(n-1) Fourier block:
// D(sigma)_{ab} = (F† P_sigma F)_{a+1,b+1} = (1/n) sum_k w^(k(b+1) - sigma(k)(a+1)).
// Computed directly from the phase sums rather than by two matrix products.
inline CMatrix standard_rep(int n, const Permutation& sigma) {
  if (n < 2) throw std::invalid_argument("standard_rep: n must be at least 2");
  if (sigma.degree() != static_cast<std::size_t>(n))
    throw std::invalid_argument("standard_rep: degree mismatch");
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Complex> omega(un);
  for (std::size_t r = 0; r < un; ++r) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    omega[r] = Complex(std::cos(angle), std::sin(angle));
  }
  CMatrix d(un - 1, un - 1);
  for (std::size_t a = 0; a + 1 < un; ++a)
    for (std::size_t b = 0; b + 1 < un; ++b) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < un; ++k) {
        const std::size_t sk = static_cast<std::size_t>(sigma.images()[k] - 1);
        const long long e = static_cast<long long>(k * (b + 1)) -
                            static_cast<long long>(sk * (a + 1));
        acc += omega[static_cast<std::size_t>(((e % n) + n) % n)];
      }
      d(a, b) = acc / static_cast<double>(n);
    }
  return d;
}

// sign(sigma) * standard_rep(sigma). A genuine irrep inequivalent to the
// standard one only for n >= 4; for n = 2 it collapses to the trivial
// representation and for n = 3 it is equivalent to the standard one.
inline CMatrix anti_standard_rep(int n, const Permutation& sigma) {
  return Complex(sigma.sign(), 0.0) * standard_rep(n, sigma);
}

// Character of the standard representation, fix(sigma) - 1, in exact
// integer arithmetic (no matrix is built).
inline long long character_standard(int n, const Permutation& sigma) {
  if (sigma.degree() != static_cast<std::size_t>(n))
    throw std::invalid_argument("character_standard: degree mismatch");
  return static_cast<long long>(sigma.fixed_points()) - 1;
}

// sum over S_n of |fix(sigma) - 1|^2; equals n! exactly, which is the
// character-orthogonality criterion for irreducibility.
inline long long character_sum_check(int n) {
  if (n < 2 || n > kMaxEnumerationDegree)
    throw std::invalid_argument("character_sum_check: n must be in 2..8");
  long long acc = 0;
  for (const Permutation& sigma : enumerate_sn(n)) {
    const long long chi = character_standard(n, sigma);
    acc += chi * chi;
  }
  return acc;
}

// --------------------------------------------------------------------------
// Young's orthogonal form.

namespace detail {

// A standard Young tableau is determined by the row of each entry.
using TableauRows = std::vector<int>;  // row_of[k-1] = 0-based row of entry k

struct YoungData {
  Partition shape;
  std::size_t dim = 0;
  std::vector<TableauRows> tableaux;   // in last-letter order
  std::vector<CMatrix> generators;     // D(s_k) for adjacent transpositions s_1..s_{n-1}
};

inline std::vector<TableauRows> standard_tableaux(const Partition& shape) {
  const int n = shape.sum();
  const std::size_t nrows = shape.size();
  std::vector<int> fill(nrows, 0);  // current length of each row
  std::vector<int> row_of(static_cast<std::size_t>(n), -1);
  std::vector<TableauRows> out;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.push_back(row_of);
      return;
    }
    for (std::size_t r = 0; r < nrows; ++r) {
      const int c = fill[r];
      if (c < shape[r] && (r == 0 || fill[r - 1] > c)) {
        fill[r]++;
        row_of[static_cast<std::size_t>(k - 1)] = static_cast<int>(r);
        self(self, k + 1);
        fill[r]--;
      }
    }
  };
  rec(rec, 1);
  // Last-letter order: compare rows of the largest entries first, larger
  // row number first.
  std::sort(out.begin(), out.end(), [n](const TableauRows& a, const TableauRows& b) {
    for (int k = n - 1; k >= 0; --k) {
      const std::size_t i = static_cast<std::size_t>(k);
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  });
  return out;
}

// Column of entry k, recovered from the row assignment: entries of a row
// appear in increasing order, so the column is the count of smaller
// entries sharing the row.
inline int column_of(const TableauRows& t, int k) {
  int col = 0;
  for (int j = 1; j < k; ++j)
    if (t[static_cast<std::size_t>(j - 1)] == t[static_cast<std::size_t>(k - 1)]) ++col;
  return col;
}

inline std::shared_ptr<const YoungData> make_young_data(const Partition& shape) {
  const int n = shape.sum();
  if (n < 1) throw std::invalid_argument("young form: empty shape");
  auto data = std::make_shared<YoungData>();
  data->shape = shape;
  data->tableaux = standard_tableaux(shape);
  data->dim = data->tableaux.size();
  std::map<TableauRows, std::size_t> index;
  for (std::size_t t = 0; t < data->dim; ++t) index[data->tableaux[t]] = t;

  data->generators.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k < n; ++k) {
    CMatrix m(data->dim, data->dim);
    for (std::size_t t = 0; t < data->dim; ++t) {
      const TableauRows& tab = data->tableaux[t];
      const int r1 = tab[static_cast<std::size_t>(k - 1)];
      const int r2 = tab[static_cast<std::size_t>(k)];
      const int c1 = column_of(tab, k);
      const int c2 = column_of(tab, k + 1);
      // axial distance between the boxes of k+1 and k
      const int dist = (c2 - r2) - (c1 - r1);
      m(t, t) = 1.0 / static_cast<double>(dist);
      if (dist != 1 && dist != -1) {
        TableauRows swapped = tab;
        std::swap(swapped[static_cast<std::size_t>(k - 1)], swapped[static_cast<std::size_t>(k)]);
        const auto it = index.find(swapped);
        if (it == index.end())
          throw std::logic_error("young form: swapped tableau not standard");
        const double off =
            std::sqrt(1.0 - 1.0 / (static_cast<double>(dist) * static_cast<double>(dist)));
        m(it->second, t) = off;
      }
    }
    data->generators.push_back(std::move(m));
  }
  return data;
}

// Factor sigma into adjacent transpositions s_k = (k, k+1) by bubble
// sorting the one-line form; D(sigma) is the product of the generator
// matrices over the returned sequence, left to right.
inline std::vector<int> adjacent_factorization(const Permutation& sigma) {
  std::vector<int> a = sigma.images();
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        swaps.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  // sigma * s_{k1} * ... * s_{km} = id  =>  sigma = s_{km} * ... * s_{k1}
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

inline CMatrix evaluate_young(const YoungData& data, const Permutation& sigma) {
  CMatrix m = CMatrix::identity(data.dim);
  for (int k : adjacent_factorization(sigma))
    m = m * data.generators[static_cast<std::size_t>(k - 1)];
  return m;
}

}  // namespace detail

// Young's orthogonal realization of the irrep labeled by a partition of n.
// Dimension equals the number of standard tableaux of that shape; single
// row gives the trivial irrep, single column the sign irrep.
inline CMatrix young_orthogonal_rep(const Partition& shape, const Permutation& sigma) {
  if (shape.sum() != static_cast<int>(sigma.degree()))
    throw std::invalid_argument("young_orthogonal_rep: shape does not partition the degree");
  const auto data = detail::make_young_data(shape);
  return detail::evaluate_young(*data, sigma);
}

// --------------------------------------------------------------------------
// Irreps and the full table.

enum class Realization { Scalar, FourierStandard, SignTwistedStandard, YoungOrthogonal };

inline const char* realization_name(Realization r) {
  switch (r) {
    case Realization::Scalar: return "scalar";
    case Realization::FourierStandard: return "fourier-standard";
    case Realization::SignTwistedStandard: return "sign-twisted-standard";
    case Realization::YoungOrthogonal: return "young-orthogonal";
  }
  return "?";
}

class Irrep {
public:
  static Irrep trivial(int n) {
    return Irrep(Kind::Trivial, n, Partition({n}), 1, Realization::Scalar);
  }
  static Irrep sign_irrep(int n) {
    return Irrep(Kind::Sign, n, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), 1,
                 Realization::Scalar);
  }
  static Irrep fourier_standard(int n) {
    Partition label = n >= 3 ? Partition({n - 1, 1}) : Partition({1, 1});
    return Irrep(Kind::Standard, n, std::move(label), static_cast<std::size_t>(n - 1),
                 Realization::FourierStandard);
  }
  static Irrep anti_standard(int n) {
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<std::size_t>(n - 2), 1);
    return Irrep(Kind::AntiStandard, n, Partition(std::move(parts)),
                 static_cast<std::size_t>(n - 1), Realization::SignTwistedStandard);
  }
  static Irrep young(int n, const Partition& shape) {
    auto data = detail::make_young_data(shape);
    Irrep ir(Kind::Young, n, shape, data->dim, Realization::YoungOrthogonal);
    ir.young_ = std::move(data);
    return ir;
  }

  const Partition& label() const { return label_; }
  std::size_t dim() const { return dim_; }
  Realization realization() const { return realization_; }
  int degree() const { return n_; }

  CMatrix matrix(const Permutation& sigma) const {
    if (sigma.degree() != static_cast<std::size_t>(n_))
      throw std::invalid_argument("Irrep::matrix: degree mismatch");
    switch (kind_) {
      case Kind::Trivial: {
        CMatrix m(1, 1);
        m(0, 0) = 1.0;
        return m;
      }
      case Kind::Sign: {
        CMatrix m(1, 1);
        m(0, 0) = Complex(sigma.sign(), 0.0);
        return m;
      }
      case Kind::Standard:
        return standard_rep(n_, sigma);
      case Kind::AntiStandard:
        return anti_standard_rep(n_, sigma);
      case Kind::Young:
        return detail::evaluate_young(*young_, sigma);
    }
    throw std::logic_error("Irrep::matrix: bad kind");
  }

private:
  enum class Kind { Trivial, Sign, Standard, AntiStandard, Young };

  Irrep(Kind kind, int n, Partition label, std::size_t dim, Realization realization)
      : kind_(kind), n_(n), label_(std::move(label)), dim_(dim), realization_(realization) {}

  Kind kind_;
  int n_;
  Partition label_;
  std::size_t dim_;
  Realization realization_;
  std::shared_ptr<const detail::YoungData> young_;
};

inline Complex character(const Irrep& irrep, const Permutation& sigma) {
  return irrep.matrix(sigma).trace();
}

struct ConjugacyClass {
  CycleType type;
  Permutation representative;
  long long size = 0;
};

// One canonical representative per cycle type: consecutive cycles
// a -> a+1 -> ... -> a+len-1 -> a. Classes are listed with cycle types in
// lexicographically descending order.
inline std::vector<ConjugacyClass> conjugacy_classes(int n) {
  if (n < 1 || n > kMaxEnumerationDegree)
    throw std::invalid_argument("conjugacy_classes: n must be in 1..8");
  std::vector<ConjugacyClass> out;
  for (const Partition& type : all_partitions(n)) {
    std::vector<int> im(static_cast<std::size_t>(n));
    int base = 1;
    for (std::size_t p = 0; p < type.size(); ++p) {
      const int len = type[p];
      for (int i = 0; i < len; ++i)
        im[static_cast<std::size_t>(base - 1 + i)] = (i + 1 < len) ? base + i + 1 : base;
      base += len;
    }
    // |class| = n! / prod_j (j^{m_j} m_j!) over part multiplicities m_j
    long long z = 1;
    int run = 1;
    for (std::size_t p = 0; p < type.size(); ++p) {
      z *= type[p];
      if (p + 1 < type.size() && type[p + 1] == type[p]) {
        ++run;
        z *= run;
      } else {
        run = 1;
      }
    }
    out.push_back(ConjugacyClass{type, Permutation(std::move(im)), factorial(n) / z});
  }
  return out;
}

class IrrepTable {
public:
  int degree() const { return n_; }
  std::size_t size() const { return irreps_.size(); }
  const Irrep& operator[](std::size_t i) const { return irreps_.at(i); }
  const std::vector<Irrep>& irreps() const { return irreps_; }

  long long dimension_sum() const {
    long long s = 0;
    for (const Irrep& ir : irreps_) s += static_cast<long long>(ir.dim());
    return s;
  }
  long long dimension_square_sum() const {
    long long s = 0;
    for (const Irrep& ir : irreps_)
      s += static_cast<long long>(ir.dim()) * static_cast<long long>(ir.dim());
    return s;
  }

private:
  friend IrrepTable irrep_table(int n);
  IrrepTable(int n, std::vector<Irrep> irreps) : n_(n), irreps_(std::move(irreps)) {}

  int n_;
  std::vector<Irrep> irreps_;
};

// The full-table bound: the square-sum of dimensions is n!, so the table
// backs an n! x n! dense matrix; beyond n = 6 the standard-only
// decomposition paths are the supported route.
inline constexpr int kMaxIrrepTableDegree = 6;

// Table layout: index 0 is the trivial irrep, index 1 the Fourier-basis
// standard irrep; the remaining partitions follow in lexicographically
// descending order, with (2,1,...,1) realized as the sign-twisted
// standard matrices (n >= 4) and (1,...,1) as the scalar sign irrep.
inline IrrepTable irrep_table(int n) {
  if (n < 2 || n > kMaxIrrepTableDegree)
    throw std::invalid_argument("irrep_table: n must be in 2..6");

  const Partition standard_label = n >= 3 ? Partition({n - 1, 1}) : Partition({1, 1});
  std::vector<int> hook{2};
  hook.insert(hook.end(), static_cast<std::size_t>(n - 2), 1);
  const Partition anti_label(std::move(hook));
  const Partition sign_label(std::vector<int>(static_cast<std::size_t>(n), 1));

  // The identification of these partitions with the standard character and
  // its sign twist is checked on one representative per conjugacy class
  // rather than assumed.
  const auto classes = conjugacy_classes(n);
  {
    const auto data = detail::make_young_data(standard_label);
    for (const ConjugacyClass& cls : classes) {
      const Complex tr = detail::evaluate_young(*data, cls.representative).trace();
      const auto expect = static_cast<double>(character_standard(n, cls.representative));
      if (std::abs(tr - expect) > 1e-9)
        throw std::logic_error("irrep_table: standard character identification failed");
    }
  }
  if (n >= 4) {
    const auto data = detail::make_young_data(anti_label);
    for (const ConjugacyClass& cls : classes) {
      const Complex tr = detail::evaluate_young(*data, cls.representative).trace();
      const auto expect = static_cast<double>(cls.representative.sign() *
                                              character_standard(n, cls.representative));
      if (std::abs(tr - expect) > 1e-9)
        throw std::logic_error("irrep_table: anti-standard character identification failed");
    }
  }

  std::vector<Irrep> irreps;
  irreps.push_back(Irrep::trivial(n));
  irreps.push_back(Irrep::fourier_standard(n));
  for (const Partition& shape : all_partitions(n)) {
    if (shape == Partition({n}) || shape == standard_label) continue;
    if (n >= 4 && shape == anti_label)
      irreps.push_back(Irrep::anti_standard(n));
    else if (shape == sign_label)
      irreps.push_back(Irrep::sign_irrep(n));
    else
      irreps.push_back(Irrep::young(n, shape));
  }

  IrrepTable table(n, std::move(irreps));
  if (table.dimension_square_sum() != factorial(n) ||
      table.dimension_sum() != involution_count(n))
    throw std::logic_error("irrep_table: dimension identities failed");
  return table;
}

// The n! x n! matrix with entries sqrt(n_nu/n!) D^(nu)_{ij}(sigma); rows
// indexed by (nu, i, j) in table order, columns by enumerate_sn order.
// Schur orthogonality makes it unitary.
inline CMatrix regular_rep_matrix(int n) {
  if (n < 2 || n > 5)
    throw std::invalid_argument("regular_rep_matrix: n must be in 2..5");
  const IrrepTable table = irrep_table(n);
  const auto sn = enumerate_sn(n);
  const std::size_t order = sn.size();
  CMatrix d(order, order);
  std::size_t row = 0;
  for (const Irrep& ir : table.irreps()) {
    const double scale = std::sqrt(static_cast<double>(ir.dim()) / static_cast<double>(order));
    for (std::size_t col = 0; col < order; ++col) {
      const CMatrix m = ir.matrix(sn[col]);
      for (std::size_t i = 0; i < ir.dim(); ++i)
        for (std::size_t j = 0; j < ir.dim(); ++j)
          d(row + i * ir.dim() + j, col) = scale * m(i, j);
    }
    row += ir.dim() * ir.dim();
  }
  return d;
}

}  // namespace birkhoff
