#pragma once

#include <string>
#include <vector>

namespace equichi {

// Integer partition: weakly decreasing positive parts. The empty partition
// (weight 0) is valid and canonical. Indexes both power-sum monomials and
// Schur functions.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // (k)
  static Partition single(int part);
  // (k, k, ..., k) with `count` copies
  static Partition rectangle(int part, int count);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  // Multiset union of parts: the power-sum product p_a * p_b.
  Partition concat(const Partition& other) const;
  // Every part multiplied by k (the Adams operation on the p-basis index).
  Partition scaled(int k) const;

  // Orders by weight, then reverse-lexicographically within a weight, so the
  // partitions of 4 run (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
    return a.parts_ > b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  std::string str() const;  // "(3,1)", "()" for the empty partition

private:
  std::vector<int> parts_;  // sorted weakly decreasing
  int weight_ = 0;
};

// All partitions of n in reverse-lexicographic order, deterministically.
std::vector<Partition> partitions_of(int n);

}  // namespace equichi
