#include "axkatz/kernels.hpp"

namespace axkatz {

void decode_table(const AbelianShape& A, const AbelianShape& B, std::uint64_t t,
                  std::vector<std::uint64_t>& values) {
  const std::uint64_t size = A.order();
  const std::uint64_t base = B.order();
  const std::size_t k = B.rank();
  values.resize(size * k);
  for (std::uint64_t x = 0; x < size; ++x) {
    std::uint64_t digit = t % base;
    t /= base;
    for (std::size_t c = k; c-- > 0;) {
      values[x * k + c] = digit % B.factors()[c];
      digit /= B.factors()[c];
    }
  }
}

std::vector<ExtendedDegree> table_degrees(const AbelianShape& A, const AbelianShape& B,
                                          std::uint64_t begin, std::uint64_t end,
                                          Execution exec) {
  return exec == Execution::serial ? serial::table_degrees(A, B, begin, end)
                                   : omp::table_degrees(A, B, begin, end);
}

TupleScan min_ord_over_tuples(std::span<const ZeroSetFamily> families, std::uint64_t p,
                              Execution exec) {
  return exec == Execution::serial ? serial::min_ord_over_tuples(families, p)
                                   : omp::min_ord_over_tuples(families, p);
}

std::vector<std::uint64_t> poly_zero_counts(std::span<const PolySystem> systems,
                                            Execution exec) {
  return exec == Execution::serial ? serial::poly_zero_counts(systems)
                                   : omp::poly_zero_counts(systems);
}

std::vector<std::uint64_t> min_plus_convolution(std::span<const std::vector<std::uint64_t>> costs,
                                                Execution exec) {
  return exec == Execution::serial ? serial::min_plus_convolution(costs)
                                   : omp::min_plus_convolution(costs);
}

IndexedMin indexed_min(std::uint64_t count,
                       const std::function<ExtendedDegree(std::uint64_t)>& fn, Execution exec) {
  return exec == Execution::serial ? serial::indexed_min(count, fn) : omp::indexed_min(count, fn);
}

}  // namespace axkatz
