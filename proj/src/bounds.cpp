#include "axkatz/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace axkatz {

TargetSpec::TargetSpec(Prime p, std::vector<Target> targets) : p_(p), targets_(std::move(targets)) {
  for (const Target& t : targets_)
    if (t.beta < 1 || t.d < 1) throw ValidationError("targets need beta >= 1 and d >= 1");
  std::ranges::stable_sort(targets_, [&](const Target& a, const Target& b) {
    const BigInt ka = a.d * big_pow(p_, a.beta);
    const BigInt kb = b.d * big_pow(p_, b.beta);
    if (ka != kb) return ka > kb;
    return a.beta > b.beta;
  });
}

BigInt TargetSpec::B() const {
  BigInt sum = 0;
  for (const Target& t : targets_) sum += t.d * repunit(p_, t.beta);
  return sum;
}

BigInt TargetSpec::leading_weight() const {
  if (targets_.empty()) throw ValidationError("no targets");
  return targets_.front().d * big_pow(p_, targets_.front().beta - 1);
}

std::uint64_t TargetSpec::L() const {
  if (targets_.empty()) throw ValidationError("no targets");
  return targets_.front().beta + floor_log(p_, BigInt(targets_.front().d));
}

ExtendedDegree nu_p(Prime p, int a, const BigInt& n) {
  if (n < 0) throw ValidationError("nu_p needs n >= 0");
  if (n > big_pow(p, static_cast<std::uint64_t>(a)) - 1) return ExtendedDegree::infinity();
  return ExtendedDegree::finite(static_cast<std::uint64_t>(a) - ord(n + 1, p));
}

ExtendedDegree nu_p(Prime p, const Partition& alpha, std::span<const BigInt> n) {
  if (n.size() != alpha.length()) throw ValidationError("nu_p arity mismatch");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const ExtendedDegree v = nu_p(p, alpha[i], n[i]);
    if (v.is_infinity()) return v;
    sum += v.value();
  }
  return ExtendedDegree::finite(sum);
}

VpWitness Vp(Prime p, const Partition& alpha, const std::optional<BigInt>& D) {
  if (D && *D < 0) throw ValidationError("D must be >= 0");
  const WeightSequence ws(alpha, p);
  const Partition conj = conjugate(alpha);
  const auto total = static_cast<std::uint64_t>(alpha.total());
  const std::size_t N = alpha.length();
  const int a1 = alpha.largest();
  // alpha'_j for 1 <= j <= a1, with alpha'_0 = N and alpha'_{a1+1} = 0.
  auto col = [&](std::uint64_t j) -> std::int64_t {
    if (j == 0) return static_cast<std::int64_t>(N);
    if (j > static_cast<std::uint64_t>(a1)) return 0;
    return conj[j - 1];
  };

  VpWitness w;
  // (p - 1) * prefix <= D  <=>  prefix <= floor(D / (p - 1)).
  w.t = D ? ws.max_prefix_within(*D / (p - 1)) : total;
  w.value = total - w.t;

  std::uint64_t covered = 0;
  while (w.Q < static_cast<std::uint64_t>(a1) &&
         covered + static_cast<std::uint64_t>(col(w.Q + 1)) <= w.t) {
    covered += static_cast<std::uint64_t>(col(w.Q + 1));
    ++w.Q;
  }
  w.R = w.t - covered;

  const auto Qi = static_cast<std::int64_t>(w.Q);
  const auto Ri = static_cast<std::int64_t>(w.R);
  const std::int64_t next_col = col(w.Q + 1);
  for (std::size_t i = 1; i <= N; ++i) {
    int mu;
    if (static_cast<std::int64_t>(i) <= Ri)
      mu = static_cast<int>(Qi + 1);
    else if (static_cast<std::int64_t>(i) <= next_col)
      mu = static_cast<int>(Qi);
    else
      mu = alpha[i - 1];
    w.mu.push_back(mu);
    w.n.push_back(big_pow(p, static_cast<std::uint64_t>(mu)) - 1);
  }

  auto row_sum = [&](std::int64_t rows) {
    std::int64_t s = 0;
    for (std::int64_t i = 0; i < rows; ++i) s += alpha[static_cast<std::size_t>(i)];
    return s;
  };
  std::int64_t f1 = 0;
  for (std::size_t i = 0; i < N; ++i) f1 += alpha[i] - w.mu[i];
  const std::int64_t cq = col(w.Q);
  const std::int64_t f2 = row_sum(cq) - cq * Qi - Ri;
  const std::int64_t f3 = row_sum(next_col) - next_col * Qi - Ri;
  std::int64_t f4 = -Ri;
  for (std::uint64_t j = w.Q + 1; j <= static_cast<std::uint64_t>(a1); ++j) f4 += col(j);
  w.alternative_forms = {f1, f2, f3, f4};

  const auto expected = static_cast<std::int64_t>(w.value);
  for (std::int64_t f : w.alternative_forms)
    if (f != expected)
      throw InternalError("alternative form " + std::to_string(f) + " differs from value " +
                          std::to_string(expected));
  const ExtendedDegree at_witness = nu_p(p, alpha, w.n);
  if (at_witness != ExtendedDegree::finite(w.value))
    throw InternalError("witness does not attain the minimum");
  if (D) {
    const BigInt size = std::accumulate(w.n.begin(), w.n.end(), BigInt(0));
    if (size > *D) throw InternalError("witness exceeds the budget");
  }
  return w;
}

std::uint64_t Vp_equal_alpha(Prime p, std::uint64_t N, int a1, const std::optional<BigInt>& D) {
  if (N < 1 || a1 < 1) throw ValidationError("need N >= 1 and a_1 >= 1");
  if (!D) return 0;
  if (*D < 0) throw ValidationError("D must be >= 0");
  std::uint64_t Q = 0;
  while (Q < static_cast<std::uint64_t>(a1) && N * (big_pow(p, Q + 1) - 1) <= *D) ++Q;
  const BigInt R = (*D - N * (big_pow(p, Q) - 1)) / ((p - 1) * big_pow(p, Q));
  const BigInt value = BigInt(N) * (static_cast<std::uint64_t>(a1) - Q) - R;
  return value > 0 ? to_uint64(value) : 0;
}

SminResult smin(std::span<const BigInt> Lambda, std::span<const BigInt> V, const BigInt& D) {
  if (Lambda.empty() || V.empty()) throw ValidationError("Lambda and V must be nonempty");
  if (D < 0) throw ValidationError("D must be >= 0");
  for (std::size_t t = 0; t < Lambda.size(); ++t)
    if (Lambda[t] < 1 || (t > 0 && Lambda[t] < Lambda[t - 1]))
      throw ValidationError("Lambda must be positive and increasing");
  for (std::size_t t = 0; t < V.size(); ++t)
    if (V[t] < 1 || (t > 0 && V[t] > V[t - 1]))
      throw ValidationError("V must be positive and decreasing");
  if (Lambda[0] > V[0]) throw ValidationError("need Lambda_1 <= V_1");

  SminResult r;
  BigInt prefix0 = 0;
  while (r.t0 < Lambda.size() && Lambda[r.t0] <= V[0]) prefix0 += Lambda[r.t0++];
  const BigInt s0 = ceil_div(prefix0 - D, V[0]);
  r.s0 = s0 > 0 ? to_uint64(s0) : 0;

  for (std::uint64_t t = 1; t <= r.s0; ++t) {
    const BigInt& v = t <= V.size() ? V[t - 1] : V.back();
    if (v != V[0]) throw ValidationError("V is not constant on [1, s_0]");
    if (t > V.size()) break;  // the extension repeats V.back() from here on
  }

  if (r.s0 > 0) {
    r.min = static_cast<std::int64_t>(r.s0) - static_cast<std::int64_t>(r.t0);
  } else {
    BigInt prefix = 0;
    std::int64_t t = 0;
    while (static_cast<std::size_t>(t) < Lambda.size() &&
           prefix + Lambda[static_cast<std::size_t>(t)] <= D)
      prefix += Lambda[static_cast<std::size_t>(t++)];
    r.min = -t;
  }
  return r;
}

BigInt n_hat(Prime p, const Target& target, unsigned beta) {
  if (beta < 1) throw ValidationError("beta must be >= 1");
  return big_pow(p, target.beta) - 1 + BigInt(beta - 1) * big_pow(p, target.beta - 1) * (p - 1);
}

std::uint64_t eval_N(Prime p, const Partition& alpha, const TargetSpec& targets,
                     std::span<const BigInt> n) {
  if (n.size() != targets.size()) throw ValidationError("eval_N arity mismatch");
  std::uint64_t sum = 0;
  BigInt weighted = 0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] < 0) throw ValidationError("eval_N needs n >= 0");
    const Target& t = targets[j];
    const BigInt top = n[j] - (big_pow(p, t.beta) - 1);
    const BigInt c = ceil_div(top, big_pow(p, t.beta - 1) * (p - 1));
    if (c > 0) sum += to_uint64(c);
    weighted += t.d * n[j];
  }
  return sum + Vp(p, alpha, weighted).value;
}

std::uint64_t min_N_s0(Prime p, const Partition& alpha, const TargetSpec& targets) {
  const Partition breve = truncate(alpha, static_cast<int>(std::min<std::uint64_t>(
                                             targets.L(), static_cast<std::uint64_t>(alpha.largest()))));
  const BigInt s0 = ceil_div(geometric_sum(breve, p) - targets.B(), targets.leading_weight());
  return s0 > 0 ? to_uint64(s0) : 0;
}

std::uint64_t min_N(Prime p, const Partition& alpha, const TargetSpec& targets, unsigned beta) {
  if (targets.empty()) throw ValidationError("no targets");
  if (beta <= min_N_s0(p, alpha, targets))
    throw ValidationError("beta must exceed s_0 = " + std::to_string(min_N_s0(p, alpha, targets)));
  const WeightSequence ws(alpha, p);
  std::vector<BigInt> V;
  for (const Target& t : targets.targets())
    V.insert(V.end(), beta - 1, t.d * big_pow(p, t.beta - 1));
  if (V.empty()) V.push_back(targets.leading_weight());
  const SminResult r = smin(ws.weights(), V, targets.B());
  return static_cast<std::uint64_t>(r.min + alpha.total());
}

BoundReport main_bound(Prime p, const Partition& alpha, const TargetSpec& targets) {
  if (targets.empty()) throw ValidationError("main_bound needs at least one target");
  BoundReport r;
  r.p = p;
  r.alpha.assign(alpha.parts().begin(), alpha.parts().end());
  r.targets = targets.targets();
  r.A = geometric_sum(alpha, p);
  r.B = targets.B();
  r.L = targets.L();
  const Partition breve =
      truncate(alpha, static_cast<int>(std::min<std::uint64_t>(r.L, static_cast<std::uint64_t>(alpha.largest()))));
  r.alpha_breve.assign(breve.parts().begin(), breve.parts().end());
  r.alpha_total = static_cast<std::uint64_t>(alpha.total());
  r.alpha_breve_total = static_cast<std::uint64_t>(breve.total());
  r.A_breve = geometric_sum(breve, p);

  if (r.A_breve > r.B) {
    r.bound_case = BoundCase::first;
    r.s0 = to_uint64(ceil_div(r.A_breve - r.B, targets.leading_weight()));
    r.raw_bound = static_cast<std::int64_t>(r.s0 + r.alpha_total - r.alpha_breve_total);
  } else {
    r.bound_case = BoundCase::second;
    const WeightSequence ws(alpha, p);
    r.t_star = ws.max_prefix_within(r.B);
    if (r.t_star < 1) throw InternalError("no t >= 1 with D_1 + ... + D_t <= B");
    r.raw_bound = static_cast<std::int64_t>(r.alpha_total) - static_cast<std::int64_t>(r.t_star);
  }
  r.bound = r.raw_bound > 0 ? static_cast<std::uint64_t>(r.raw_bound) : 0;
  return r;
}

std::uint64_t equal_alpha_bound(Prime p, std::uint64_t N, int a1, const TargetSpec& targets) {
  if (targets.empty()) throw ValidationError("equal_alpha_bound needs at least one target");
  if (N < 1 || a1 < 1) throw ValidationError("need N >= 1 and a_1 >= 1");
  const BigInt B = targets.B();
  const std::uint64_t breve = std::min<std::uint64_t>(targets.L(), static_cast<std::uint64_t>(a1));
  const BigInt A_breve = N * repunit(p, breve);
  if (A_breve > B)
    return to_uint64(ceil_div(A_breve - B, targets.leading_weight())) +
           N * (static_cast<std::uint64_t>(a1) - breve);
  const BigInt budget = (p - 1) * B;
  std::uint64_t Q = 0;
  while (Q < static_cast<std::uint64_t>(a1) && N * (big_pow(p, Q + 1) - 1) <= budget) ++Q;
  const BigInt R = (budget - N * (big_pow(p, Q) - 1)) / ((p - 1) * big_pow(p, Q));
  const BigInt value = BigInt(N) * (static_cast<std::uint64_t>(a1) - Q) - R;
  return value > 0 ? to_uint64(value) : 0;
}

TargetSpec expand_targets(Prime p,
                          std::span<const std::pair<AbelianShape, std::uint64_t>> targets) {
  std::vector<Target> out;
  for (const auto& [shape, d] : targets) {
    if (shape.is_trivial() || !shape.is_p_group(p))
      throw ValidationError("target is not a nontrivial " + std::to_string(p.value()) + "-group");
    for (std::uint64_t m : shape.factors()) out.push_back({ord(m, p), d});
  }
  return TargetSpec(p, std::move(out));
}

std::map<std::uint64_t, PrimeBound> multi_prime_bounds(
    const AbelianShape& A, std::span<const std::pair<AbelianShape, std::uint64_t>> targets) {
  const auto a_parts = primary_decomposition(A);
  std::map<std::uint64_t, PrimeBound> out;
  for (const auto& [l, comp] : a_parts) {
    const Prime p(l);
    std::vector<std::pair<AbelianShape, std::uint64_t>> local;
    for (const auto& [B, d] : targets) {
      const auto b_parts = primary_components(B);
      if (auto it = b_parts.find(l); it != b_parts.end())
        local.emplace_back(it->second.shape.as_abelian(), d);
    }
    PrimeBound pb;
    pb.prime = l;
    pb.alpha.assign(comp.shape.exponents().parts().begin(), comp.shape.exponents().parts().end());
    if (local.empty()) {
      // Every map vanishes at l, so the l-part of the zero set is all of A[l^inf].
      pb.empty_system = true;
      pb.bound = static_cast<std::uint64_t>(comp.shape.exponents().total());
    } else {
      pb.report = main_bound(p, comp.shape.exponents(), expand_targets(p, local));
      pb.bound = pb.report->bound;
    }
    out.emplace(l, std::move(pb));
  }
  return out;
}

std::map<std::uint64_t, BoundReport> rng_system_bound(std::uint64_t m, std::uint64_t n,
                                                      std::span<const std::uint64_t> degrees) {
  if (m < 2) throw ValidationError("modulus must be >= 2");
  if (n < 1) throw ValidationError("need at least one variable");
  if (degrees.empty()) throw ValidationError("need at least one polynomial degree");
  std::map<std::uint64_t, BoundReport> out;
  for (auto [l, e] : factorize(m)) {
    const Prime p(l);
    std::vector<Target> targets;
    for (std::uint64_t d : degrees) targets.push_back({e, d});
    const Partition alpha(std::vector<int>(n, static_cast<int>(e)));
    out.emplace(l, main_bound(p, alpha, TargetSpec(p, std::move(targets))));
  }
  return out;
}

}  // namespace axkatz
