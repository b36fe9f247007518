#ifndef AXKATZ_BOUNDS_HPP
#define AXKATZ_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "axkatz/extended_degree.hpp"
#include "axkatz/groups.hpp"
#include "axkatz/numeric.hpp"
#include "axkatz/partitions.hpp"

namespace axkatz {

/// A cyclic target Z/p^beta with functional degree cap d.
struct Target {
  unsigned beta = 1;
  std::uint64_t d = 1;
  friend bool operator==(const Target&, const Target&) = default;
};

/// Targets ordered by d*p^beta, largest first; ties put larger beta first.
class TargetSpec {
 public:
  TargetSpec(Prime p, std::vector<Target> targets);

  Prime prime() const noexcept { return p_; }
  const std::vector<Target>& targets() const noexcept { return targets_; }
  std::size_t size() const noexcept { return targets_.size(); }
  bool empty() const noexcept { return targets_.empty(); }
  const Target& operator[](std::size_t j) const { return targets_[j]; }

  /// sum_j d_j (p^{beta_j} - 1)/(p - 1).
  BigInt B() const;
  /// d_1 p^{beta_1 - 1}.
  BigInt leading_weight() const;
  /// beta_1 + floor(log_p d_1).
  std::uint64_t L() const;

 private:
  Prime p_;
  std::vector<Target> targets_;
};

/// nu_p(a, n) = a - ord_p(n + 1) for n <= p^a - 1, otherwise inf.
ExtendedDegree nu_p(Prime p, int a, const BigInt& n);
/// Sum over parts; inf absorbs.
ExtendedDegree nu_p(Prime p, const Partition& alpha, std::span<const BigInt> n);

struct VpWitness {
  std::uint64_t value = 0;
  std::uint64_t t = 0;
  std::uint64_t Q = 0;
  std::uint64_t R = 0;
  std::vector<int> mu;
  std::vector<BigInt> n;
  /// sum(alpha_i - mu_i) and the three conjugate-partition rewritings.
  std::array<std::int64_t, 4> alternative_forms{};
};

/// Minimum of nu_p(alpha, n) over |n| <= D, with a minimum point. D = nullopt
/// means D = inf. Raises InternalError if the witness or any alternative form
/// disagrees with the value.
VpWitness Vp(Prime p, const Partition& alpha, const std::optional<BigInt>& D);

/// The same minimum for the constant partition (a_1, ..., a_1) of length N,
/// by the Q, R formula.
std::uint64_t Vp_equal_alpha(Prime p, std::uint64_t N, int a1, const std::optional<BigInt>& D);

struct SminResult {
  std::uint64_t t0 = 0;
  std::uint64_t s0 = 0;
  std::int64_t min = 0;
};

/// Minimizes S(s) = s - max{t : Lambda_1 + ... + Lambda_t <= V_1 + ... + V_s + D}
/// over s >= 0. V is extended past its end by its last entry. Throws
/// ValidationError when the hypotheses (Lambda increasing, V decreasing,
/// Lambda_1 <= V_1, V constant up to s_0) fail.
SminResult smin(std::span<const BigInt> Lambda, std::span<const BigInt> V, const BigInt& D);

/// n_hat_j(beta) = (p^{beta_j} - 1) + (beta - 1) p^{beta_j - 1} (p - 1).
BigInt n_hat(Prime p, const Target& target, unsigned beta);

/// N(n) = sum_j max(ceil((n_j - (p^{beta_j} - 1)) / (p^{beta_j - 1}(p - 1))), 0)
///        + V_p(alpha, sum_j d_j n_j), n indexed like targets.targets().
std::uint64_t eval_N(Prime p, const Partition& alpha, const TargetSpec& targets,
                     std::span<const BigInt> n);

/// ceil((A_breve - B) / (d_1 p^{beta_1 - 1})) clamped at 0.
std::uint64_t min_N_s0(Prime p, const Partition& alpha, const TargetSpec& targets);

/// Minimum of N over the box [n_hat(beta)], through the S-minimization.
/// Requires beta > min_N_s0.
std::uint64_t min_N(Prime p, const Partition& alpha, const TargetSpec& targets, unsigned beta);

enum class BoundCase { first, second };

struct BoundReport {
  std::uint64_t p = 2;
  std::vector<int> alpha;
  std::vector<Target> targets;
  BigInt A;
  BigInt B;
  std::uint64_t L = 0;
  std::vector<int> alpha_breve;
  std::uint64_t alpha_total = 0;
  std::uint64_t alpha_breve_total = 0;
  BigInt A_breve;
  BoundCase bound_case = BoundCase::second;
  /// First case: the ceiling term. Second case: 0.
  std::uint64_t s0 = 0;
  /// Second case: max{1 <= t <= alpha : D_1 + ... + D_t <= B}. First case: 0.
  std::uint64_t t_star = 0;
  std::int64_t raw_bound = 0;
  std::uint64_t bound = 0;
};

/// Lower bound on ord_p(#Z(f_1, ..., f_r)) for maps f_j from
/// (+) Z/p^{alpha_i} to Z/p^{beta_j} with 0 < fdeg(f_j) <= d_j.
BoundReport main_bound(Prime p, const Partition& alpha, const TargetSpec& targets);

/// The same bound for a constant partition via the closed Q, R form.
std::uint64_t equal_alpha_bound(Prime p, std::uint64_t N, int a1, const TargetSpec& targets);

/// Replaces each p-group target B_j with cap d_j by its cyclic factors, each
/// carrying d_j.
TargetSpec expand_targets(Prime p, std::span<const std::pair<AbelianShape, std::uint64_t>> targets);

struct PrimeBound {
  std::uint64_t prime = 2;
  std::vector<int> alpha;
  /// Absent when no target has an l-component; the l-system is then empty.
  std::optional<BoundReport> report;
  std::uint64_t bound = 0;
  bool empty_system = false;
};

/// Per-prime bounds for maps A -> B_j with caps d_j, one entry per prime
/// dividing |A|.
std::map<std::uint64_t, PrimeBound> multi_prime_bounds(
    const AbelianShape& A, std::span<const std::pair<AbelianShape, std::uint64_t>> targets);

/// Per-prime bounds for r polynomials of degrees d_j in n variables over Z/m.
std::map<std::uint64_t, BoundReport> rng_system_bound(std::uint64_t m, std::uint64_t n,
                                                      std::span<const std::uint64_t> degrees);

}  // namespace axkatz

#endif  // AXKATZ_BOUNDS_HPP
