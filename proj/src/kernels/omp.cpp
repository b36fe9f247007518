#include <omp.h>

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>

#include "axkatz/kernels.hpp"
#include "table_degree.hpp"

namespace axkatz::omp {

namespace {

// Keeps the first exception thrown inside a parallel region and rethrows it
// after the region ends.
class ErrorSlot {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace

std::vector<ExtendedDegree> table_degrees(const AbelianShape& A, const AbelianShape& B,
                                          std::uint64_t begin, std::uint64_t end) {
  std::vector<ExtendedDegree> out(end - begin);
  ErrorSlot errors;
#pragma omp parallel
  {
    errors.run([&] {
      detail::TableDegree degree(A, B);
      std::vector<std::uint64_t> values;
#pragma omp for schedule(dynamic, 256)
      for (std::uint64_t t = begin; t < end; ++t) {
        errors.run([&] {
          decode_table(A, B, t, values);
          out[t - begin] = degree(values);
        });
      }
    });
  }
  errors.rethrow();
  return out;
}

TupleScan min_ord_over_tuples(std::span<const ZeroSetFamily> families, std::uint64_t p) {
  TupleScan scan;
  if (families.empty()) return scan;
  scan.tuples = detail::tuple_total(families);
  if (scan.tuples == 0) return scan;
  const std::size_t words = families.front().words;
  const std::uint64_t total = scan.tuples;
  std::uint64_t best_index = std::numeric_limits<std::uint64_t>::max();

#pragma omp parallel
  {
    ExtendedDegree local_min = ExtendedDegree::infinity();
    std::uint64_t local_index = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t local_count = 0;
    std::vector<std::size_t> pick(families.size());
#pragma omp for schedule(static)
    for (std::uint64_t t = 0; t < total; ++t) {
      std::uint64_t rest = t;
      for (std::size_t j = pick.size(); j-- > 0;) {
        pick[j] = rest % families[j].count;
        rest /= families[j].count;
      }
      const ExtendedDegree v = ord_of_count(detail::popcount_and(families, pick, words), p);
      if (v < local_min || local_count == 0) {
        local_min = v;
        local_index = t;
        local_count = 1;
      } else if (v == local_min) {
        ++local_count;
      }
    }
#pragma omp critical
    {
      if (local_count > 0) {
        if (scan.argmin_count == 0 || local_min < scan.min_ord) {
          scan.min_ord = local_min;
          best_index = local_index;
          scan.argmin_count = local_count;
        } else if (local_min == scan.min_ord) {
          best_index = std::min(best_index, local_index);
          scan.argmin_count += local_count;
        }
      }
    }
  }
  scan.argmin.resize(families.size());
  for (std::size_t j = families.size(); j-- > 0;) {
    scan.argmin[j] = best_index % families[j].count;
    best_index /= families[j].count;
  }
  return scan;
}

std::vector<std::uint64_t> poly_zero_counts(std::span<const PolySystem> systems) {
  std::vector<std::uint64_t> out(systems.size(), 0);
  ErrorSlot errors;
  if (systems.size() == 1) {
    // One large system: split its points instead.
    const PolySystem& s = systems.front();
    std::uint64_t total = 0;
    errors.run([&] { total = checked_pow(s.modulus, s.vars); });
    errors.rethrow();
    std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (std::uint64_t k = 0; k < total; ++k) {
      std::vector<std::uint64_t> x(s.vars);
      std::uint64_t rest = k;
      for (std::size_t i = x.size(); i-- > 0;) {
        x[i] = rest % s.modulus;
        rest /= s.modulus;
      }
      bool zero = true;
      for (const Polynomial& poly : s.polys)
        if (evaluate(poly, s.modulus, x) != 0) {
          zero = false;
          break;
        }
      count += zero;
    }
    out[0] = count;
    return out;
  }
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t i = 0; i < systems.size(); ++i)
    errors.run([&] { out[i] = detail::system_zero_count(systems[i]); });
  errors.rethrow();
  return out;
}

std::vector<std::uint64_t> min_plus_convolution(std::span<const std::vector<std::uint64_t>> costs) {
  constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> acc{0};
  for (const auto& next : costs) {
    const std::size_t n = acc.size() + next.size() - 1;
    std::vector<std::uint64_t> merged(n, inf);
#pragma omp parallel for schedule(static)
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t lo = s >= next.size() ? s - next.size() + 1 : 0;
      const std::size_t hi = std::min(s, acc.size() - 1);
      std::uint64_t best = inf;
      for (std::size_t a = lo; a <= hi; ++a) {
        const std::size_t b = s - a;
        if (acc[a] != inf && next[b] != inf) best = std::min(best, acc[a] + next[b]);
      }
      merged[s] = best;
    }
    acc = std::move(merged);
  }
  return acc;
}

IndexedMin indexed_min(std::uint64_t count,
                       const std::function<ExtendedDegree(std::uint64_t)>& fn) {
  IndexedMin best;
  ErrorSlot errors;
#pragma omp parallel
  {
    IndexedMin local;
#pragma omp for schedule(dynamic, 16)
    for (std::uint64_t i = 0; i < count; ++i) {
      errors.run([&] {
        const ExtendedDegree v = fn(i);
        if (v.is_minus_infinity()) return;
        if (!local.found || v < local.value || (v == local.value && i < local.index))
          local = {v, i, true};
      });
    }
#pragma omp critical
    {
      if (local.found && (!best.found || local.value < best.value ||
                          (local.value == best.value && local.index < best.index)))
        best = local;
    }
  }
  errors.rethrow();
  return best;
}

}  // namespace axkatz::omp
