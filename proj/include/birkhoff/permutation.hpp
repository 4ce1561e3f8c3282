#pragma once

// Elements of the symmetric group S_n, stored in one-line notation with
// 1-based images: sigma(i) = images[i-1].
//
// Composition is function composition, (sigma*tau)(i) = sigma(tau(i)),
// so that permutation matrices built from these (see cmatrix.hpp) form a
// left action: P(sigma*tau) = P(sigma) P(tau).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "birkhoff/partition.hpp"

namespace birkhoff {

// Enumeration-based operations are capped here; 8! = 40320 keeps dense
// weight vectors trivial in memory.
inline constexpr int kMaxEnumerationDegree = 8;

inline long long factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: n out of range");
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Cycle types are partitions of n (weakly decreasing cycle lengths).
using CycleType = Partition;

class Permutation {
public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n == 0) throw std::invalid_argument("Permutation: degree must be at least 1");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("Permutation: images must be a bijection on 1..n");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> im(n);
    for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<int>(i) + 1;
    return Permutation(std::move(im));
  }

  // Text form "[2,1,3]". Whitespace around entries is tolerated.
  static Permutation parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    if (text.size() < 3 || text.front() != '[' || text.back() != ']')
      throw std::invalid_argument("Permutation::parse: expected \"[i1,i2,...]\"");
    text = text.substr(1, text.size() - 2);
    std::vector<int> im;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - pos));
      if (tok.empty()) throw std::invalid_argument("Permutation::parse: empty entry");
      int value = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw std::invalid_argument("Permutation::parse: non-digit entry");
        value = value * 10 + (c - '0');
        if (value > 1000) throw std::invalid_argument("Permutation::parse: entry too large");
      }
      im.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Permutation(std::move(im));  // constructor rejects non-bijections
  }

  std::size_t degree() const { return images_.size(); }
  const std::vector<int>& images() const { return images_; }

  // 1-based application, sigma(i).
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  // (sigma*tau)(i) = sigma(tau(i)).
  Permutation compose(const Permutation& tau) const {
    if (degree() != tau.degree())
      throw std::invalid_argument("Permutation::compose: degree mismatch");
    std::vector<int> im(degree());
    for (std::size_t i = 0; i < degree(); ++i)
      im[i] = images_[static_cast<std::size_t>(tau.images_[i] - 1)];
    return Permutation(std::move(im));
  }

  Permutation operator*(const Permutation& tau) const { return compose(tau); }

  Permutation inverse() const {
    std::vector<int> im(degree());
    for (std::size_t i = 0; i < degree(); ++i)
      im[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(im));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  std::size_t fixed_points() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < degree(); ++i)
      if (images_[i] == static_cast<int>(i) + 1) ++count;
    return count;
  }

  // Parity of (degree - number of cycles).
  bool is_even() const { return (degree() - cycle_count()) % 2 == 0; }
  int sign() const { return is_even() ? 1 : -1; }

  CycleType cycle_type() const {
    std::vector<bool> seen(degree(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = static_cast<std::size_t>(images_[j] - 1);
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return CycleType(std::move(lengths));
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < degree(); ++i) {
      if (i) s += ',';
      s += std::to_string(images_[i]);
    }
    s += ']';
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on one-line images; this is the enumeration order.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::size_t cycle_count() const {
    std::vector<bool> seen(degree(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = static_cast<std::size_t>(images_[j] - 1);
      }
    }
    return cycles;
  }

  std::vector<int> images_;
};

// All n! permutations in lexicographic one-line order; index 0 is the identity.
inline std::vector<Permutation> enumerate_sn(int n) {
  if (n < 1 || n > kMaxEnumerationDegree)
    throw std::invalid_argument("enumerate_sn: degree must be in 1..8");
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// Lexicographic rank via the Lehmer code; enumerate_sn(n)[rank] == sigma.
inline std::size_t permutation_rank(const Permutation& sigma) {
  const auto& im = sigma.images();
  const std::size_t n = im.size();
  std::size_t rank = 0;
  long long f = factorial(static_cast<int>(n) - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (im[j] < im[i]) ++smaller;
    rank += smaller * static_cast<std::size_t>(f);
    f /= static_cast<long long>(n - 1 - i);
  }
  return rank;
}

// Number of involutions (sigma^2 = id) in S_n, by the classical recurrence
// I(n) = I(n-1) + (n-1) I(n-2). Equals the sum of irrep dimensions.
inline long long involution_count(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("involution_count: n out of range");
  long long a = 1, b = 1;  // I(0), I(1)
  for (int k = 2; k <= n; ++k) {
    long long c = b + static_cast<long long>(k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace birkhoff
