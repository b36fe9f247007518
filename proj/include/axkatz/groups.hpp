#ifndef AXKATZ_GROUPS_HPP
#define AXKATZ_GROUPS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "axkatz/numeric.hpp"
#include "axkatz/partitions.hpp"

namespace axkatz {

/// Coordinates of an element of (+) Z/m_i, each in [0, m_i).
using GroupElement = std::vector<std::uint64_t>;

/// Enumeration limit for element and table loops. Defaults to 10^6 and can be
/// overridden with the AXKATZ_ENUM_LIMIT environment variable.
std::uint64_t default_enumeration_limit();

/// A finite abelian group (+)_i Z/m_i with every m_i >= 2, in the given factor
/// order. The empty factor list is the trivial group.
class AbelianShape {
 public:
  AbelianShape() = default;
  explicit AbelianShape(std::vector<std::uint64_t> factors);

  const std::vector<std::uint64_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  bool is_trivial() const noexcept { return factors_.empty(); }
  /// Throws ResourceError if the order does not fit in 64 bits.
  std::uint64_t order() const;
  /// Least common multiple of the factors (1 for the trivial group).
  std::uint64_t exponent() const;

  /// The prime p if every factor is a power of p.
  bool is_p_group(std::uint64_t p) const;

  bool contains(std::span<const std::uint64_t> element) const;
  GroupElement add(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const;
  GroupElement subtract(std::span<const std::uint64_t> a,
                        std::span<const std::uint64_t> b) const;
  GroupElement zero() const { return GroupElement(factors_.size(), 0); }

  /// Row-major mixed-radix position (last coordinate fastest).
  std::uint64_t index_of(std::span<const std::uint64_t> element) const;
  GroupElement element_at(std::uint64_t index) const;

  friend bool operator==(const AbelianShape&, const AbelianShape&) = default;

 private:
  std::vector<std::uint64_t> factors_;
};

/// (+)_i Z/p^{alpha_i}, exponents weakly decreasing.
class PGroupShape {
 public:
  PGroupShape(Prime p, Partition exponents);

  Prime prime() const noexcept { return p_; }
  const Partition& exponents() const noexcept { return exponents_; }
  std::size_t rank() const noexcept { return exponents_.length(); }
  BigInt order() const;
  /// Moduli p^{alpha_i} in partition order.
  std::vector<std::uint64_t> moduli() const;
  AbelianShape as_abelian() const { return AbelianShape(moduli()); }

  friend bool operator==(const PGroupShape&, const PGroupShape&) = default;

 private:
  Prime p_;
  Partition exponents_;
};

/// Reads an abelian shape whose factors are all powers of one prime as a
/// p-group. Factor order is normalised to decreasing exponents.
PGroupShape to_pgroup(const AbelianShape& shape);

/// The l-primary part of an abelian shape. Coordinates are ordered by
/// decreasing exponent; source_factor[c] names the factor of the original
/// shape that coordinate c came from, and idempotent[c] is the CRT unit that
/// is 1 modulo l^e and 0 modulo the cofactor, so that x -> idempotent*x
/// projects that factor onto its l-part.
struct PrimaryComponent {
  PGroupShape shape;
  std::vector<std::size_t> source_factor;
  std::vector<std::uint64_t> idempotent;
};

/// Sylow decomposition. Throws ValidationError for the trivial group.
std::map<std::uint64_t, PrimaryComponent> primary_decomposition(const AbelianShape& shape);

/// Same, but a trivial shape yields an empty map instead of an error.
std::map<std::uint64_t, PrimaryComponent> primary_components(const AbelianShape& shape);

/// All elements in index order. Throws ResourceError above `limit`.
std::vector<GroupElement> enumerate_elements(const AbelianShape& shape,
                                             std::uint64_t limit = default_enumeration_limit());

/// delta_p(alpha, beta) = sum_i (p^{alpha_i} - 1) + (beta - 1)(p - 1) p^{alpha_1 - 1}:
/// the largest functional degree of a map from the p-group into a p-group of
/// exponent p^beta.
BigInt delta_max(const PGroupShape& domain, unsigned beta);

}  // namespace axkatz

#endif  // AXKATZ_GROUPS_HPP
