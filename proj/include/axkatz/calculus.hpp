#ifndef AXKATZ_CALCULUS_HPP
#define AXKATZ_CALCULUS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "axkatz/extended_degree.hpp"
#include "axkatz/groups.hpp"
#include "axkatz/numeric.hpp"

namespace axkatz {

using MultiIndex = std::vector<std::uint64_t>;

/// A total function A -> B stored as a value table in enumerate_elements(A)
/// order. The table is flat: entry x occupies values[x*k, x*k + k) where k is
/// the codomain rank. The domain may be trivial (one element).
class FiniteMap {
 public:
  FiniteMap(AbelianShape domain, AbelianShape codomain, std::vector<std::uint64_t> values);

  static FiniteMap zero(AbelianShape domain, AbelianShape codomain);
  /// Tabulates fn over the domain.
  static FiniteMap from_function(AbelianShape domain, AbelianShape codomain,
                                 const std::function<GroupElement(const GroupElement&)>& fn);

  const AbelianShape& domain() const noexcept { return domain_; }
  const AbelianShape& codomain() const noexcept { return codomain_; }
  std::uint64_t size() const noexcept { return size_; }
  std::span<const std::uint64_t> values() const noexcept { return values_; }

  std::span<const std::uint64_t> at_index(std::uint64_t index) const;
  std::span<const std::uint64_t> operator()(std::span<const std::uint64_t> x) const {
    return at_index(domain_.index_of(x));
  }

  bool is_zero() const noexcept;
  /// Values of codomain coordinate c, one per domain element.
  std::vector<std::uint64_t> coordinate(std::size_t c) const;

  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

 private:
  AbelianShape domain_;
  AbelianShape codomain_;
  std::uint64_t size_;
  std::vector<std::uint64_t> values_;
};

/// (Delta_a f)(x) = f(x + a) - f(x).
FiniteMap difference(const FiniteMap& f, std::span<const std::uint64_t> a);

/// Applies Delta_{e_i} n_i times for every domain coordinate i.
FiniteMap iterated_difference(const FiniteMap& f, std::span<const std::uint64_t> n);

/// Degree search for one cyclic codomain coordinate Z/q of a map between
/// p-groups. Holds scratch tables so that repeated calls allocate nothing;
/// one instance per thread.
class PGroupDegreeEvaluator {
 public:
  /// domain_moduli are powers of p; q = p^b with b >= 1.
  PGroupDegreeEvaluator(std::vector<std::uint64_t> domain_moduli, std::uint64_t q);

  /// Exact degree of a table with entries in [0, q). Raises InternalError if
  /// a nonzero difference exceeds the maximal degree.
  ExtendedDegree operator()(std::span<const std::uint64_t> table);

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  void descend(std::size_t depth, std::size_t min_axis);
  void apply(std::span<const std::uint64_t> in, std::span<std::uint64_t> out,
             std::size_t axis) const;

  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t q_;
  std::uint64_t size_;
  std::uint64_t cap_;
  std::uint64_t best_ = 0;
  std::vector<std::vector<std::uint64_t>> levels_;
};

/// Splits f into its primary components when it has one, i.e. when the
/// l-part of f(x) depends only on the l-part of x for every prime l dividing
/// |A| or |B|. Each component goes from A[l^inf] to B[l^inf], both listed
/// with decreasing exponents; a prime missing from A gives a trivial domain
/// and a prime missing from B a trivial codomain. Returns false when f does
/// not factor.
bool primary_parts(const FiniteMap& f, std::map<std::uint64_t, FiniteMap>& parts);

/// Reassembles a map from primary components produced for (domain, codomain).
FiniteMap assemble_primary(const AbelianShape& domain, const AbelianShape& codomain,
                           const std::map<std::uint64_t, FiniteMap>& parts);

/// Exact functional degree: -inf for the zero map, inf when f does not factor
/// through primary components, otherwise the largest component degree.
ExtendedDegree functional_degree(const FiniteMap& f);

struct SeriesCoefficients {
  AbelianShape domain;
  AbelianShape codomain;
  std::uint64_t degree_bound = 0;
  /// Nonzero coefficients only.
  std::map<MultiIndex, GroupElement> coeffs;
};

/// c(n) = Delta^n f(0) for all |n| <= the maximal degree. Domain and codomain
/// must be p-groups for one prime p.
SeriesCoefficients series_coefficients(const FiniteMap& f);

/// f(x) = sum_{|n| <= d} C(x_1, n_1)...C(x_N, n_N) c(n) on canonical
/// representatives. Throws ValidationError if the support exceeds d.
FiniteMap reconstruct(const SeriesCoefficients& series, std::uint64_t d);

/// An integer-valued binomial series in N variables.
class IntSeries {
 public:
  IntSeries(std::size_t arity, std::uint64_t degree_bound);

  std::size_t arity() const noexcept { return arity_; }
  std::uint64_t degree_bound() const noexcept { return degree_bound_; }
  const std::map<MultiIndex, BigInt>& coeffs() const noexcept { return coeffs_; }

  void set(const MultiIndex& n, BigInt value);
  BigInt coefficient(const MultiIndex& n) const;

  BigInt evaluate(std::span<const BigInt> x) const;
  BigInt evaluate(std::span<const std::uint64_t> x) const;
  ExtendedDegree degree() const;

 private:
  std::size_t arity_;
  std::uint64_t degree_bound_;
  std::map<MultiIndex, BigInt> coeffs_;
};

/// Lift of f: A -> Z/p^b with coefficients the canonical representatives of
/// c(n) in [0, p^b).
IntSeries proper_lift(const FiniteMap& f);

/// Delta^n F(0) computed by the alternating sum over k <= n.
BigInt lift_delta0(const IntSeries& series, std::span<const std::uint64_t> n);

/// Pointwise product of maps into one ring Z/q; the domain is the direct sum
/// of the factor domains.
FiniteMap tensor_product(std::span<const FiniteMap> maps);
IntSeries tensor_product(std::span<const IntSeries> series);

/// Sum of all values of f.
GroupElement integral(const FiniteMap& f);
/// Sum of F over the box [0, m_1) x ... x [0, m_N), by the hockey-stick
/// identity sum_{x < m} C(x, n) = C(m, n + 1).
BigInt integral(const IntSeries& series, std::span<const std::uint64_t> box);
/// Sum of fn over the box by direct enumeration.
BigInt integral(std::span<const std::uint64_t> box,
                const std::function<BigInt(std::span<const std::uint64_t>)>& fn);

struct ZeroCount {
  std::uint64_t count = 0;
  /// ord_l(count) for every prime l dividing |A|; inf when count = 0.
  std::map<std::uint64_t, ExtendedDegree> ord;
};

ExtendedDegree ord_of_count(std::uint64_t count, std::uint64_t p);

/// Size of the common zero set of maps sharing the given domain.
ZeroCount zero_count(const AbelianShape& domain, std::span<const FiniteMap> system);

}  // namespace axkatz

#endif  // AXKATZ_CALCULUS_HPP
