#ifndef AXKATZ_PARTITIONS_HPP
#define AXKATZ_PARTITIONS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "axkatz/numeric.hpp"

namespace axkatz {

/// A weakly decreasing sequence of positive integers (an integer partition of
/// its total). Construction sorts the input; the value is immutable afterwards.
class Partition {
 public:
  /// Throws ValidationError on an empty input or a non-positive entry.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const noexcept { return parts_.front(); }
  int total() const noexcept;
  bool is_constant() const noexcept { return parts_.front() == parts_.back(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition make_partition(std::vector<int> parts);

/// Column counts of the Ferrers diagram: result[j] = #{i : parts[i] >= j+1}.
Partition conjugate(const Partition& partition);

/// Componentwise min(parts[i], level); level >= 1.
Partition truncate(const Partition& partition, int level);

/// Sum over parts of (p^a - 1)/(p - 1).
BigInt geometric_sum(const Partition& partition, std::uint64_t p);

/// The Ferrers dots read column by column (left to right), each dot in column
/// j (0-based) weighing p^j. weights() is weakly increasing; prefix(t) is the
/// least total weight of any t dots forming a sub-diagram.
class WeightSequence {
 public:
  WeightSequence(const Partition& partition, std::uint64_t p);

  std::uint64_t prime() const noexcept { return p_; }
  std::size_t size() const noexcept { return weights_.size(); }
  const std::vector<BigInt>& weights() const noexcept { return weights_; }
  const BigInt& operator[](std::size_t t) const { return weights_[t]; }

  /// D_1 + ... + D_t for t in [0, size()].
  const BigInt& prefix(std::size_t t) const { return prefix_[t]; }
  const BigInt& total() const noexcept { return prefix_.back(); }

  /// max{0 <= t <= size() : prefix(t) <= budget}; 0 when budget < 0.
  std::size_t max_prefix_within(const BigInt& budget) const;

 private:
  std::uint64_t p_;
  std::vector<BigInt> weights_;
  std::vector<BigInt> prefix_;
};

WeightSequence weight_sequence(const Partition& partition, std::uint64_t p);

/// Every partition of `total` (total >= 1), in reverse lexicographic order.
std::vector<Partition> partitions_of(int total);
/// Every partition of 1, 2, ..., max_total.
std::vector<Partition> partitions_up_to(int max_total);

/// Both sides of the conjugation identity
///   a'_m x^m + ... + a'_{a_1} x^{a_1} = sum_{i <= a'_m} (x^m + ... + x^{a_i})
/// evaluated at x, for 1 <= m <= largest part.
std::pair<BigInt, BigInt> conjugation_identity_sides(const Partition& partition, int m,
                                                     const BigInt& x);

}  // namespace axkatz

#endif  // AXKATZ_PARTITIONS_HPP
