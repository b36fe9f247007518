#ifndef AXKATZ_ORACLE_HPP
#define AXKATZ_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "axkatz/bounds.hpp"
#include "axkatz/calculus.hpp"
#include "axkatz/kernels.hpp"
#include "axkatz/poly.hpp"

// Brute-force counterparts of the closed forms. Nothing here calls the
// closed-form functions it is meant to check, except where a report carries
// the claimed value alongside the observed one.

namespace axkatz {

/// Default cap on |B|^|A| for exhaustive enumeration (2^20), overridable with
/// AXKATZ_TABLE_CAP.
std::uint64_t default_table_cap();

struct DegreeBuckets {
  AbelianShape domain;
  AbelianShape codomain;
  std::uint64_t total = 0;
  /// Table indices per degree, ascending (see decode_table).
  std::map<ExtendedDegree, std::vector<std::uint64_t>> buckets;

  FiniteMap map_at(std::uint64_t table) const;
};

/// All maps A -> B grouped by functional degree.
DegreeBuckets functions_by_degree(const AbelianShape& A, const AbelianShape& B,
                                  std::uint64_t cap = default_table_cap(),
                                  Execution exec = Execution::parallel);

/// Largest finite functional degree over all maps A -> B.
std::uint64_t brute_delta(const AbelianShape& A, const AbelianShape& B,
                          std::uint64_t cap = default_table_cap(),
                          Execution exec = Execution::parallel);

/// ord_p(sum_{x < p^a} C(x, n)) for n in [0, p^a), from exact binomial sums
/// (residues modulo p^(a+2) with an exact recount for any residue that
/// vanishes).
std::vector<std::uint64_t> binomial_sum_valuations(Prime p, int a);

/// best[s] = least sum of valuations over n in [p^alpha) with |n| = s,
/// followed by a running minimum, so best[D] is the minimum over |n| <= D.
std::vector<std::uint64_t> brute_Vp_table(Prime p, const Partition& alpha,
                                          Execution exec = Execution::parallel);

/// Minimum over |n| <= D (D = nullopt for inf) by exhaustive search.
std::uint64_t brute_Vp(Prime p, const Partition& alpha, const std::optional<BigInt>& D,
                       Execution exec = Execution::parallel);

/// S(s) evaluated directly, with V extended by its last entry.
std::int64_t S_value(std::span<const BigInt> Lambda, std::span<const BigInt> V, const BigInt& D,
                     std::uint64_t s);
/// min_{0 <= s <= s_max} S(s) and the least minimizing s.
std::pair<std::int64_t, std::uint64_t> brute_smin(std::span<const BigInt> Lambda,
                                                  std::span<const BigInt> V, const BigInt& D,
                                                  std::uint64_t s_max);

struct BruteMinN {
  std::uint64_t min = 0;
  std::vector<BigInt> argmin;
  std::uint64_t points = 0;
};

/// Exhaustive minimum of N over the box [n_hat(beta)], with V_p taken from
/// brute_Vp_table.
BruteMinN brute_min_N(Prime p, const Partition& alpha, const TargetSpec& targets, unsigned beta,
                      std::uint64_t limit = default_enumeration_limit());

enum class VerifyMode { exhaustive, sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t table_cap = default_table_cap();
  std::uint64_t samples = 10'000;
  std::uint64_t tuple_cap = 100'000'000;
  Execution exec = Execution::parallel;
};

struct VerifyReport {
  std::uint64_t p = 2;
  std::vector<int> alpha;
  std::vector<std::pair<AbelianShape, std::uint64_t>> targets;
  BoundReport bound;
  VerifyMode mode = VerifyMode::exhaustive;
  std::uint64_t seed = 0;
  /// Qualifying maps per target (exhaustive) or accepted candidates (sampled).
  std::vector<std::uint64_t> qualifying;
  std::uint64_t systems_tested = 0;
  ExtendedDegree min_ord = ExtendedDegree::infinity();
  std::vector<FiniteMap> witness;
  std::uint64_t witness_count = 0;
  bool vacuous = false;
  bool pass = false;
};

/// Checks ord_p(#Z(f_1, ..., f_r)) >= main_bound over systems with
/// 0 < fdeg(f_j) <= d_j, for maps from A into the p-groups B_j.
VerifyReport verify_main_theorem(const PGroupShape& A,
                                 std::span<const std::pair<AbelianShape, std::uint64_t>> targets,
                                 const VerifyOptions& options = {});

/// A map A -> B built from a seeded stream; the degree is not controlled.
FiniteMap sample_candidate(const AbelianShape& A, const AbelianShape& B, std::uint64_t max_degree,
                           std::uint64_t seed);

/// Deterministic 64-bit stream key for (seed, index).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

struct CoefficientCheck {
  std::size_t map = 0;
  std::uint64_t n = 0;
  ExtendedDegree ord;
  std::uint64_t floor = 0;
};

struct ProofTrace {
  std::uint64_t p = 2;
  unsigned beta = 1;
  std::uint64_t count = 0;
  ExtendedDegree ord_count;
  BigInt integral;
  ExtendedDegree ord_integral;
  /// integral = count mod p^beta.
  bool congruent = false;
  /// ord_p(integral) = ord_p(count); false whenever count = 0.
  bool orders_match = false;
  bool empty_zero_set = false;
  std::vector<CoefficientCheck> coefficients;
  bool coefficients_ok = false;
  /// Every indicator lift has degree at most n_hat_j(beta).
  bool indicator_degrees_ok = false;
};

/// Integral form of the zero count for maps f_j: A -> Z/p^{beta_j}. beta
/// defaults to ord_p(#Z) + 1 (1 when Z is empty) and must exceed ord_p(#Z).
ProofTrace proof_trace(std::span<const FiniteMap> system, std::optional<unsigned> beta = {});

struct PolyZeroCount {
  std::uint64_t count = 0;
  std::map<std::uint64_t, ExtendedDegree> ord;
  /// Bound per prime dividing m (caps max(degree, 1)); for an empty system,
  /// n * ord_l(m).
  std::map<std::uint64_t, std::uint64_t> bound;
  bool holds = false;
};

PolyZeroCount poly_zero_count(const PolySystem& system, Execution exec = Execution::parallel);

}  // namespace axkatz

#endif  // AXKATZ_ORACLE_HPP
