#include "axkatz/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace axkatz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("partition must have at least one part");
  for (int part : parts_)
    if (part < 1)
      throw ValidationError("partition parts must be positive, got " + std::to_string(part));
  std::ranges::sort(parts_, std::greater<>{});
}

int Partition::total() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

Partition conjugate(const Partition& partition) {
  std::vector<int> columns(static_cast<std::size_t>(partition.largest()), 0);
  for (int part : partition.parts())
    for (int j = 0; j < part; ++j) ++columns[static_cast<std::size_t>(j)];
  return Partition(std::move(columns));
}

Partition truncate(const Partition& partition, int level) {
  if (level < 1) throw ValidationError("truncation level must be >= 1");
  std::vector<int> parts(partition.parts().begin(), partition.parts().end());
  for (int& part : parts) part = std::min(part, level);
  return Partition(std::move(parts));
}

BigInt geometric_sum(const Partition& partition, std::uint64_t p) {
  BigInt sum = 0;
  for (int part : partition.parts()) sum += repunit(p, static_cast<std::uint64_t>(part));
  return sum;
}

WeightSequence::WeightSequence(const Partition& partition, std::uint64_t p) : p_(p) {
  const Partition columns = conjugate(partition);
  BigInt weight = 1;
  for (int count : columns.parts()) {
    weights_.insert(weights_.end(), static_cast<std::size_t>(count), weight);
    weight *= p;
  }
  prefix_.reserve(weights_.size() + 1);
  prefix_.emplace_back(0);
  for (const BigInt& w : weights_) prefix_.push_back(prefix_.back() + w);
}

std::size_t WeightSequence::max_prefix_within(const BigInt& budget) const {
  // prefix_ is strictly increasing, so the answer is one before the first
  // prefix exceeding the budget.
  auto it = std::upper_bound(prefix_.begin(), prefix_.end(), budget);
  if (it == prefix_.begin()) return 0;
  return static_cast<std::size_t>(std::distance(prefix_.begin(), it)) - 1;
}

WeightSequence weight_sequence(const Partition& partition, std::uint64_t p) {
  return WeightSequence(partition, p);
}

namespace {

void extend(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int total) {
  if (total < 1) throw ValidationError("partitions_of needs total >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(total, total, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_total) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_total; ++n)
    for (Partition& p : partitions_of(n)) out.push_back(std::move(p));
  return out;
}

std::pair<BigInt, BigInt> conjugation_identity_sides(const Partition& partition, int m,
                                                     const BigInt& x) {
  if (m < 1 || m > partition.largest())
    throw ValidationError("m must lie in [1, " + std::to_string(partition.largest()) + "]");
  const Partition columns = conjugate(partition);

  BigInt lhs = 0;
  BigInt x_power = pow(x, static_cast<unsigned>(m));
  for (int j = m; j <= partition.largest(); ++j) {
    lhs += columns[static_cast<std::size_t>(j - 1)] * x_power;
    x_power *= x;
  }

  BigInt rhs = 0;
  const int rows = columns[static_cast<std::size_t>(m - 1)];
  for (int i = 0; i < rows; ++i) {
    x_power = pow(x, static_cast<unsigned>(m));
    for (int k = m; k <= partition[static_cast<std::size_t>(i)]; ++k) {
      rhs += x_power;
      x_power *= x;
    }
  }
  return {lhs, rhs};
}

}  // namespace axkatz
