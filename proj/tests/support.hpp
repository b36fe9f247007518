#ifndef AXKATZ_TESTS_SUPPORT_HPP
#define AXKATZ_TESTS_SUPPORT_HPP

// Test-only reference computations. They use nothing from the library beyond
// BigInt, so they can serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "axkatz/numeric.hpp"

namespace testsupport {

using axkatz::BigInt;
using u64 = std::uint64_t;

inline u64 table_size(const std::vector<u64>& moduli) {
  u64 n = 1;
  for (u64 m : moduli) n *= m;
  return n;
}

inline std::vector<u64> digits(const std::vector<u64>& moduli, u64 index) {
  std::vector<u64> x(moduli.size());
  for (std::size_t i = moduli.size(); i-- > 0;) {
    x[i] = index % moduli[i];
    index /= moduli[i];
  }
  return x;
}

inline u64 undigits(const std::vector<u64>& moduli, const std::vector<u64>& x) {
  u64 index = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) index = index * moduli[i] + x[i];
  return index;
}

/// (Delta_{e_axis} f)(x) = f(x + e_axis) - f(x) for a table into Z/q.
inline std::vector<u64> diff(const std::vector<u64>& moduli, u64 q, const std::vector<u64>& f,
                             std::size_t axis) {
  std::vector<u64> out(f.size());
  for (u64 i = 0; i < f.size(); ++i) {
    auto x = digits(moduli, i);
    x[axis] = (x[axis] + 1) % moduli[axis];
    out[i] = (f[undigits(moduli, x)] + q - f[i]) % q;
  }
  return out;
}

inline bool all_zero(const std::vector<u64>& f) {
  return std::all_of(f.begin(), f.end(), [](u64 v) { return v == 0; });
}

/// Functional degree of a table A -> Z/q (A and q for one prime): the largest
/// k such that some k-fold difference along generators is nonzero, or nullopt
/// for the zero map. Raises if no level vanishes below `guard`.
inline std::optional<u64> naive_fdeg(const std::vector<u64>& moduli, u64 q,
                                     const std::vector<u64>& f, u64 guard = 256) {
  if (all_zero(f)) return std::nullopt;
  struct Node {
    std::vector<u64> table;
    std::size_t min_axis;
  };
  std::vector<Node> level{{f, 0}};
  for (u64 k = 0; k < guard; ++k) {
    std::vector<Node> next;
    for (const Node& node : level)
      for (std::size_t axis = node.min_axis; axis < moduli.size(); ++axis) {
        auto d = diff(moduli, q, node.table, axis);
        if (!all_zero(d)) next.push_back({std::move(d), axis});
      }
    if (next.empty()) return k;
    level = std::move(next);
  }
  throw std::runtime_error("naive_fdeg: no vanishing level");
}

/// Transpose of the Ferrers diagram drawn as a boolean grid.
inline std::vector<int> naive_conjugate(const std::vector<int>& parts) {
  const int rows = static_cast<int>(parts.size());
  const int cols = *std::max_element(parts.begin(), parts.end());
  std::vector<std::vector<bool>> grid(rows, std::vector<bool>(cols, false));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < parts[i]; ++j) grid[i][j] = true;
  std::vector<int> out;
  for (int j = 0; j < cols; ++j) {
    int c = 0;
    for (int i = 0; i < rows; ++i) c += grid[i][j] ? 1 : 0;
    out.push_back(c);
  }
  return out;
}

inline unsigned val(BigInt x, u64 p) {
  unsigned k = 0;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

inline BigInt choose(u64 x, u64 n) {
  if (n > x) return 0;
  BigInt r = 1;
  for (u64 i = 0; i < n; ++i) r = r * (x - i) / (i + 1);
  return r;
}

/// min over n in prod [0, p^{a_i}) with |n| <= D of sum_i ord_p(sum_{x < p^{a_i}} C(x, n_i)),
/// by enumerating every n. D = nullopt means no budget.
inline u64 naive_Vp(u64 p, const std::vector<int>& alpha, std::optional<u64> D) {
  std::vector<std::vector<u64>> cost;
  std::vector<u64> moduli;
  for (int a : alpha) {
    u64 q = 1;
    for (int i = 0; i < a; ++i) q *= p;
    moduli.push_back(q);
    std::vector<u64> c(q);
    for (u64 n = 0; n < q; ++n) {
      BigInt s = 0;
      for (u64 x = 0; x < q; ++x) s += choose(x, n);
      c[n] = val(s, p);
    }
    cost.push_back(std::move(c));
  }
  u64 best = ~u64{0};
  for (u64 i = 0; i < table_size(moduli); ++i) {
    const auto n = digits(moduli, i);
    u64 weight = 0, v = 0;
    for (std::size_t j = 0; j < n.size(); ++j) {
      weight += n[j];
      v += cost[j][n[j]];
    }
    if (!D || weight <= *D) best = std::min(best, v);
  }
  return best;
}

/// Evaluates a polynomial given as (coeff, exps) terms modulo m.
struct Term {
  u64 coeff;
  std::vector<u64> exps;
};

inline u64 eval_terms(const std::vector<Term>& terms, u64 m, const std::vector<u64>& x) {
  u64 s = 0;
  for (const Term& t : terms) {
    u64 v = t.coeff % m;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (u64 e = 0; e < t.exps[i]; ++e) v = v * x[i] % m;
    s = (s + v) % m;
  }
  return s;
}

inline std::vector<u64> random_table(std::mt19937_64& rng, u64 size, u64 q) {
  std::vector<u64> t(size);
  for (u64& v : t) v = rng() % q;
  return t;
}

}  // namespace testsupport

#endif  // AXKATZ_TESTS_SUPPORT_HPP
