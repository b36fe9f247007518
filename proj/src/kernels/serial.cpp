#include <algorithm>
#include <limits>

#include "axkatz/kernels.hpp"
#include "table_degree.hpp"

namespace axkatz::serial {

std::vector<ExtendedDegree> table_degrees(const AbelianShape& A, const AbelianShape& B,
                                          std::uint64_t begin, std::uint64_t end) {
  std::vector<ExtendedDegree> out;
  out.reserve(end - begin);
  detail::TableDegree degree(A, B);
  std::vector<std::uint64_t> values;
  for (std::uint64_t t = begin; t < end; ++t) {
    decode_table(A, B, t, values);
    out.push_back(degree(values));
  }
  return out;
}

TupleScan min_ord_over_tuples(std::span<const ZeroSetFamily> families, std::uint64_t p) {
  TupleScan scan;
  if (families.empty()) return scan;
  scan.tuples = detail::tuple_total(families);
  if (scan.tuples == 0) return scan;
  const std::size_t words = families.front().words;
  std::vector<std::size_t> pick(families.size(), 0);
  for (std::uint64_t t = 0; t < scan.tuples; ++t) {
    const ExtendedDegree v = ord_of_count(detail::popcount_and(families, pick, words), p);
    if (v < scan.min_ord || scan.argmin.empty()) {
      scan.min_ord = v;
      scan.argmin = pick;
      scan.argmin_count = 1;
    } else if (v == scan.min_ord) {
      ++scan.argmin_count;
    }
    for (std::size_t j = pick.size(); j-- > 0;) {
      if (++pick[j] < families[j].count) break;
      pick[j] = 0;
    }
  }
  return scan;
}

std::vector<std::uint64_t> poly_zero_counts(std::span<const PolySystem> systems) {
  std::vector<std::uint64_t> out;
  out.reserve(systems.size());
  for (const PolySystem& s : systems) out.push_back(detail::system_zero_count(s));
  return out;
}

std::vector<std::uint64_t> min_plus_convolution(std::span<const std::vector<std::uint64_t>> costs) {
  constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> acc{0};
  for (const auto& next : costs) {
    std::vector<std::uint64_t> merged(acc.size() + next.size() - 1, inf);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (acc[a] == inf) continue;
      for (std::size_t b = 0; b < next.size(); ++b)
        if (next[b] != inf) merged[a + b] = std::min(merged[a + b], acc[a] + next[b]);
    }
    acc = std::move(merged);
  }
  return acc;
}

IndexedMin indexed_min(std::uint64_t count,
                       const std::function<ExtendedDegree(std::uint64_t)>& fn) {
  IndexedMin best;
  for (std::uint64_t i = 0; i < count; ++i) {
    const ExtendedDegree v = fn(i);
    if (v.is_minus_infinity()) continue;
    if (!best.found || v < best.value) best = {v, i, true};
  }
  return best;
}

}  // namespace axkatz::serial
