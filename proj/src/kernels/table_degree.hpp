#ifndef AXKATZ_SRC_KERNELS_TABLE_DEGREE_HPP
#define AXKATZ_SRC_KERNELS_TABLE_DEGREE_HPP

#include <memory>
#include <span>
#include <vector>

#include "axkatz/calculus.hpp"

namespace axkatz::detail {

// Degree of a decoded value table. Uses the p-group evaluator per codomain
// coordinate when A and B are p-groups for one prime, otherwise falls back to
// functional_degree. Not thread-safe; one per thread.
class TableDegree {
 public:
  TableDegree(const AbelianShape& A, const AbelianShape& B) : A_(A), B_(B) {
    if (B.is_trivial() || A.is_trivial()) return;
    const auto fac = factorize(B.exponent());
    if (fac.size() != 1 || !A.is_p_group(fac.front().first)) return;
    for (std::uint64_t q : B.factors())
      evaluators_.push_back(std::make_unique<PGroupDegreeEvaluator>(A.factors(), q));
    column_.resize(A.order());
  }

  ExtendedDegree operator()(std::span<const std::uint64_t> values) {
    if (evaluators_.empty()) {
      if (B_.is_trivial()) return ExtendedDegree::minus_infinity();
      return functional_degree(
          FiniteMap(A_, B_, std::vector<std::uint64_t>(values.begin(), values.end())));
    }
    const std::size_t k = B_.rank();
    ExtendedDegree best = ExtendedDegree::minus_infinity();
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t x = 0; x < column_.size(); ++x) column_[x] = values[x * k + c];
      best = std::max(best, (*evaluators_[c])(column_));
    }
    return best;
  }

 private:
  const AbelianShape& A_;
  const AbelianShape& B_;
  std::vector<std::unique_ptr<PGroupDegreeEvaluator>> evaluators_;
  std::vector<std::uint64_t> column_;
};

inline std::uint64_t popcount_and(std::span<const ZeroSetFamily> families,
                                  std::span<const std::size_t> pick, std::size_t words) {
  std::uint64_t count = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t acc = ~std::uint64_t{0};
    for (std::size_t j = 0; j < families.size(); ++j) acc &= families[j][pick[j]][w];
    count += static_cast<std::uint64_t>(__builtin_popcountll(acc));
  }
  return count;
}

inline std::uint64_t tuple_total(std::span<const ZeroSetFamily> families) {
  std::uint64_t total = 1;
  for (const ZeroSetFamily& f : families) {
    if (f.count != 0 && total > UINT64_MAX / f.count)
      throw ResourceError("tuple count exceeds 64 bits");
    total *= f.count;
  }
  return total;
}

inline std::uint64_t system_zero_count(const PolySystem& s) {
  std::vector<std::uint64_t> x(s.vars, 0);
  std::uint64_t count = 0;
  const std::uint64_t total = checked_pow(s.modulus, s.vars);
  for (std::uint64_t k = 0; k < total; ++k) {
    bool zero = true;
    for (const Polynomial& p : s.polys)
      if (evaluate(p, s.modulus, x) != 0) {
        zero = false;
        break;
      }
    count += zero;
    for (std::size_t i = x.size(); i-- > 0;) {
      if (++x[i] < s.modulus) break;
      x[i] = 0;
    }
  }
  return count;
}

}  // namespace axkatz::detail

#endif  // AXKATZ_SRC_KERNELS_TABLE_DEGREE_HPP
