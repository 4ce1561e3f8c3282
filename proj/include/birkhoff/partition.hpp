#pragma once

// Integer partitions. Used both as cycle types of permutations and as
// labels for the irreducible representations of S_n.

#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace birkhoff {

class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic order on the part lists.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
};

// All partitions of n, in lexicographically descending order:
// (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("all_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxp) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(left, maxp); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace birkhoff
