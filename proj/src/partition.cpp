#include "equichi/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace equichi {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::domain_error("Partition: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::single(int part) { return Partition(std::vector<int>{part}); }

Partition Partition::rectangle(int part, int count) {
  if (count < 0) throw std::domain_error("Partition: negative part count");
  return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
}

Partition Partition::concat(const Partition& other) const {
  std::vector<int> merged(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             merged.begin(), std::greater<>());
  Partition r;
  r.parts_ = std::move(merged);
  r.weight_ = weight_ + other.weight_;
  return r;
}

Partition Partition::scaled(int k) const {
  if (k < 1) throw std::domain_error("Partition: scale factor must be positive");
  Partition r = *this;
  for (int& p : r.parts_) p *= k;
  r.weight_ = weight_ * k;
  return r;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  s += ")";
  return s;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    stack.push_back(part);
    emit_partitions(remaining - part, part, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::domain_error("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> stack;
  emit_partitions(n, n, stack, out);
  return out;
}

}  // namespace equichi
