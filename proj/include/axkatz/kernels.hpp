#ifndef AXKATZ_KERNELS_HPP
#define AXKATZ_KERNELS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "axkatz/extended_degree.hpp"
#include "axkatz/groups.hpp"
#include "axkatz/poly.hpp"

// Data-parallel loops behind the oracle. Every kernel has a plain serial
// version and an OpenMP version; both must return identical results for any
// thread count.

namespace axkatz {

enum class Execution { serial, parallel };

/// Table t of B^A assigns to the element with index x the element of B with
/// index floor(t / |B|^x) mod |B|.
void decode_table(const AbelianShape& A, const AbelianShape& B, std::uint64_t t,
                  std::vector<std::uint64_t>& values);

/// Functional degrees of tables [begin, end) of B^A.
std::vector<ExtendedDegree> table_degrees(const AbelianShape& A, const AbelianShape& B,
                                          std::uint64_t begin, std::uint64_t end,
                                          Execution exec = Execution::parallel);

/// Bitsets of the zero sets of a list of maps on a common domain, each
/// padded to `words` 64-bit words.
struct ZeroSetFamily {
  std::size_t words = 0;
  std::size_t count = 0;
  std::vector<std::uint64_t> bits;
  std::span<const std::uint64_t> operator[](std::size_t i) const {
    return std::span<const std::uint64_t>(bits).subspan(i * words, words);
  }
};

struct TupleScan {
  std::uint64_t tuples = 0;
  ExtendedDegree min_ord = ExtendedDegree::infinity();
  /// First tuple in lexicographic order (first family slowest) attaining
  /// min_ord; empty when there are no tuples.
  std::vector<std::size_t> argmin;
  std::uint64_t argmin_count = 0;
};

/// Minimum of ord_p(#(Z_1 & ... & Z_r)) over all tuples, one zero set per family.
TupleScan min_ord_over_tuples(std::span<const ZeroSetFamily> families, std::uint64_t p,
                              Execution exec = Execution::parallel);

/// Zero counts of polynomial systems over (Z/m)^n.
std::vector<std::uint64_t> poly_zero_counts(std::span<const PolySystem> systems,
                                            Execution exec = Execution::parallel);

/// Min-plus convolution of per-coordinate cost tables: result[s] is the least
/// sum of costs[i][n_i] over tuples with n_1 + ... + n_N = s.
std::vector<std::uint64_t> min_plus_convolution(
    std::span<const std::vector<std::uint64_t>> costs, Execution exec = Execution::parallel);

struct IndexedMin {
  ExtendedDegree value = ExtendedDegree::infinity();
  std::uint64_t index = 0;
  bool found = false;
};

/// Minimum of fn(i) over i in [0, count) with the smallest attaining index.
/// fn returns -inf to mark an index as skipped.
IndexedMin indexed_min(std::uint64_t count, const std::function<ExtendedDegree(std::uint64_t)>& fn,
                       Execution exec = Execution::parallel);

namespace serial {
std::vector<ExtendedDegree> table_degrees(const AbelianShape& A, const AbelianShape& B,
                                          std::uint64_t begin, std::uint64_t end);
TupleScan min_ord_over_tuples(std::span<const ZeroSetFamily> families, std::uint64_t p);
std::vector<std::uint64_t> poly_zero_counts(std::span<const PolySystem> systems);
std::vector<std::uint64_t> min_plus_convolution(std::span<const std::vector<std::uint64_t>> costs);
IndexedMin indexed_min(std::uint64_t count, const std::function<ExtendedDegree(std::uint64_t)>& fn);
}  // namespace serial

namespace omp {
std::vector<ExtendedDegree> table_degrees(const AbelianShape& A, const AbelianShape& B,
                                          std::uint64_t begin, std::uint64_t end);
TupleScan min_ord_over_tuples(std::span<const ZeroSetFamily> families, std::uint64_t p);
std::vector<std::uint64_t> poly_zero_counts(std::span<const PolySystem> systems);
std::vector<std::uint64_t> min_plus_convolution(std::span<const std::vector<std::uint64_t>> costs);
IndexedMin indexed_min(std::uint64_t count, const std::function<ExtendedDegree(std::uint64_t)>& fn);
}  // namespace omp

}  // namespace axkatz

#endif  // AXKATZ_KERNELS_HPP
