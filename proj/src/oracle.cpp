#include "axkatz/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <string>

namespace axkatz {

std::uint64_t default_table_cap() {
  if (const char* env = std::getenv("AXKATZ_TABLE_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError(std::string("bad AXKATZ_TABLE_CAP: ") + env);
    }
  }
  return std::uint64_t{1} << 20;
}

FiniteMap DegreeBuckets::map_at(std::uint64_t table) const {
  std::vector<std::uint64_t> values;
  decode_table(domain, codomain, table, values);
  return FiniteMap(domain, codomain, std::move(values));
}

namespace {

std::uint64_t table_count(const AbelianShape& A, const AbelianShape& B, std::uint64_t cap) {
  const std::uint64_t base = B.order();
  const std::uint64_t size = A.order();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < size; ++i) {
    if (total > cap / base)
      throw ResourceError("|B|^|A| exceeds the exhaustive cap " + std::to_string(cap) +
                          "; use sampled mode or raise AXKATZ_TABLE_CAP");
    total *= base;
  }
  return total;
}

}  // namespace

DegreeBuckets functions_by_degree(const AbelianShape& A, const AbelianShape& B, std::uint64_t cap,
                                  Execution exec) {
  DegreeBuckets out{A, B, table_count(A, B, cap), {}};
  const auto degrees = table_degrees(A, B, 0, out.total, exec);
  for (std::uint64_t t = 0; t < out.total; ++t) out.buckets[degrees[t]].push_back(t);
  return out;
}

std::uint64_t brute_delta(const AbelianShape& A, const AbelianShape& B, std::uint64_t cap,
                          Execution exec) {
  const DegreeBuckets b = functions_by_degree(A, B, cap, exec);
  std::optional<std::uint64_t> best;
  for (const auto& [deg, tables] : b.buckets)
    if (deg.is_finite()) best = deg.value();
  if (!best) throw ValidationError("no map of finite degree");
  return *best;
}

std::vector<std::uint64_t> binomial_sum_valuations(Prime p, int a) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, int>, std::vector<std::uint64_t>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p.value(), a}); it != cache.end()) return it->second;
  }
  const std::uint64_t M = checked_pow(p, static_cast<std::uint64_t>(a));
  const std::uint64_t mod = checked_pow(p, static_cast<std::uint64_t>(a) + 2);
  // row[n] = C(x, n) mod p^(a+2); sums[n] accumulates over x < M.
  std::vector<std::uint64_t> row(M, 0), sums(M, 0);
  row[0] = 1;
  for (std::uint64_t x = 0; x < M; ++x) {
    for (std::uint64_t n = 0; n <= x; ++n) sums[n] = (sums[n] + row[n]) % mod;
    for (std::uint64_t n = std::min(x + 1, M - 1); n > 0; --n) row[n] = (row[n] + row[n - 1]) % mod;
  }
  std::vector<std::uint64_t> out(M);
  for (std::uint64_t n = 0; n < M; ++n) {
    if (sums[n] != 0) {
      out[n] = ord(sums[n], p);
      continue;
    }
    BigInt exact = 0;
    for (std::uint64_t x = n; x < M; ++x) exact += binomial(BigInt(x), n);
    out[n] = ord(exact, p);
  }
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(p.value(), a), out);
  return out;
}

std::vector<std::uint64_t> brute_Vp_table(Prime p, const Partition& alpha, Execution exec) {
  std::vector<std::vector<std::uint64_t>> costs;
  for (int a : alpha.parts()) costs.push_back(binomial_sum_valuations(p, a));
  std::vector<std::uint64_t> best = min_plus_convolution(costs, exec);
  for (std::size_t s = 1; s < best.size(); ++s) best[s] = std::min(best[s], best[s - 1]);
  return best;
}

std::uint64_t brute_Vp(Prime p, const Partition& alpha, const std::optional<BigInt>& D,
                       Execution exec) {
  const auto table = brute_Vp_table(p, alpha, exec);
  if (!D || *D >= table.size() - 1) return table.back();
  if (*D < 0) throw ValidationError("D must be >= 0");
  return table[to_uint64(*D)];
}

std::int64_t S_value(std::span<const BigInt> Lambda, std::span<const BigInt> V, const BigInt& D,
                     std::uint64_t s) {
  BigInt budget = D;
  for (std::uint64_t i = 0; i < s; ++i) budget += i < V.size() ? V[i] : V.back();
  BigInt prefix = 0;
  std::int64_t t = 0;
  for (const BigInt& l : Lambda) {
    if (prefix + l > budget) break;
    prefix += l;
    ++t;
  }
  return static_cast<std::int64_t>(s) - t;
}

std::pair<std::int64_t, std::uint64_t> brute_smin(std::span<const BigInt> Lambda,
                                                  std::span<const BigInt> V, const BigInt& D,
                                                  std::uint64_t s_max) {
  std::pair<std::int64_t, std::uint64_t> best{S_value(Lambda, V, D, 0), 0};
  for (std::uint64_t s = 1; s <= s_max; ++s) {
    const std::int64_t v = S_value(Lambda, V, D, s);
    if (v < best.first) best = {v, s};
  }
  return best;
}

BruteMinN brute_min_N(Prime p, const Partition& alpha, const TargetSpec& targets, unsigned beta,
                      std::uint64_t limit) {
  const std::size_t r = targets.size();
  if (r == 0) throw ValidationError("no targets");
  std::vector<std::uint64_t> top(r);
  BruteMinN out;
  out.points = 1;
  for (std::size_t j = 0; j < r; ++j) {
    top[j] = to_uint64(big_pow(p, targets[j].beta) - 1 +
                       BigInt(beta - 1) * big_pow(p, targets[j].beta - 1) * (p - 1));
    out.points *= top[j] + 1;
    if (out.points > limit) throw ResourceError("N box exceeds the enumeration limit");
  }
  const auto vp = brute_Vp_table(p, alpha, Execution::serial);
  std::vector<std::uint64_t> n(r, 0);
  out.min = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t k = 0; k < out.points; ++k) {
    std::uint64_t value = 0;
    std::uint64_t weighted = 0;
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint64_t q = checked_pow(p, targets[j].beta);
      const std::uint64_t step = q / p * (p - 1);
      if (n[j] + 1 > q) value += (n[j] + 1 - q + step - 1) / step;
      weighted += targets[j].d * n[j];
    }
    value += vp[std::min<std::uint64_t>(weighted, vp.size() - 1)];
    if (value < out.min) {
      out.min = value;
      out.argmin.assign(n.begin(), n.end());
    }
    for (std::size_t j = r; j-- > 0;) {
      if (++n[j] <= top[j]) break;
      n[j] = 0;
    }
  }
  return out;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a combined key.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

FiniteMap random_series_map(const AbelianShape& A, const AbelianShape& B, std::uint64_t degree,
                            std::mt19937_64& rng) {
  SeriesCoefficients series{A, B, degree, {}};
  const std::uint64_t terms = 1 + rng() % 3;
  for (std::uint64_t k = 0; k < terms; ++k) {
    MultiIndex n(A.rank(), 0);
    const std::uint64_t size = degree == 0 ? 0 : rng() % (degree + 1);
    for (std::uint64_t s = 0; s < size && !n.empty(); ++s) ++n[rng() % n.size()];
    GroupElement c(B.rank());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = rng() % B.factors()[j];
    if (std::ranges::any_of(c, [](std::uint64_t v) { return v != 0; })) series.coeffs[n] = c;
  }
  return reconstruct(series, degree);
}

FiniteMap random_affine_map(const AbelianShape& A, const AbelianShape& B, std::mt19937_64& rng) {
  std::vector<std::vector<std::uint64_t>> a(B.rank(), std::vector<std::uint64_t>(A.rank()));
  GroupElement b(B.rank());
  for (std::size_t c = 0; c < B.rank(); ++c) {
    b[c] = rng() % B.factors()[c];
    for (auto& v : a[c]) v = rng() % B.factors()[c];
  }
  return FiniteMap::from_function(A, B, [&](const GroupElement& x) {
    GroupElement y = b;
    for (std::size_t c = 0; c < y.size(); ++c) {
      const std::uint64_t q = B.factors()[c];
      for (std::size_t i = 0; i < x.size(); ++i) y[c] = (y[c] + a[c][i] * (x[i] % q)) % q;
    }
    return y;
  });
}

FiniteMap combine(const FiniteMap& f, const FiniteMap& g, bool multiply) {
  const AbelianShape& B = f.codomain();
  const std::size_t k = B.rank();
  std::vector<std::uint64_t> values(f.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::uint64_t q = B.factors()[i % k];
    values[i] = multiply ? f.values()[i] * g.values()[i] % q : (f.values()[i] + g.values()[i]) % q;
  }
  return FiniteMap(f.domain(), B, std::move(values));
}

}  // namespace

FiniteMap sample_candidate(const AbelianShape& A, const AbelianShape& B, std::uint64_t max_degree,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (rng() % 4) {
    case 0:
      return random_series_map(A, B, max_degree, rng);
    case 1:
      return random_affine_map(A, B, rng);
    case 2: {
      const std::uint64_t split = max_degree == 0 ? 0 : rng() % (max_degree + 1);
      const FiniteMap f = random_series_map(A, B, split, rng);
      return combine(f, random_series_map(A, B, max_degree - split, rng), true);
    }
    default: {
      const FiniteMap f = random_series_map(A, B, max_degree, rng);
      return combine(f, random_affine_map(A, B, rng), false);
    }
  }
}

namespace {

ZeroSetFamily zero_family(const AbelianShape& A, const AbelianShape& B,
                          std::span<const std::uint64_t> tables) {
  ZeroSetFamily fam;
  const std::uint64_t size = A.order();
  const std::size_t k = B.rank();
  fam.words = (size + 63) / 64;
  fam.count = tables.size();
  fam.bits.assign(fam.words * fam.count, 0);
  std::vector<std::uint64_t> values;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    decode_table(A, B, tables[i], values);
    for (std::uint64_t x = 0; x < size; ++x) {
      bool zero = true;
      for (std::size_t c = 0; c < k; ++c) zero &= values[x * k + c] == 0;
      if (zero) fam.bits[i * fam.words + x / 64] |= std::uint64_t{1} << (x % 64);
    }
  }
  return fam;
}

void check_target(const std::pair<AbelianShape, std::uint64_t>& t, std::uint64_t p) {
  if (t.first.is_trivial() || !t.first.is_p_group(p))
    throw ValidationError("target is not a nontrivial " + std::to_string(p) + "-group");
  if (t.second < 1) throw ValidationError("degree caps must be >= 1");
}

}  // namespace

VerifyReport verify_main_theorem(const PGroupShape& A,
                                 std::span<const std::pair<AbelianShape, std::uint64_t>> targets,
                                 const VerifyOptions& options) {
  const Prime p = A.prime();
  for (const auto& t : targets) check_target(t, p);
  VerifyReport report;
  report.p = p;
  report.alpha.assign(A.exponents().parts().begin(), A.exponents().parts().end());
  report.targets.assign(targets.begin(), targets.end());
  report.bound = main_bound(p, A.exponents(), expand_targets(p, targets));
  report.mode = options.mode;
  report.seed = options.seed;
  const AbelianShape domain = A.as_abelian();
  const ExtendedDegree claimed = ExtendedDegree::finite(report.bound.bound);

  if (options.mode == VerifyMode::exhaustive) {
    std::map<std::vector<std::uint64_t>, DegreeBuckets> cache;
    std::vector<ZeroSetFamily> families;
    std::vector<std::vector<std::uint64_t>> chosen;
    for (const auto& [B, d] : targets) {
      auto it = cache.find(B.factors());
      if (it == cache.end())
        it = cache.emplace(B.factors(), functions_by_degree(domain, B, options.table_cap, options.exec))
                 .first;
      std::vector<std::uint64_t> tables;
      for (const auto& [deg, list] : it->second.buckets)
        if (deg.is_finite() && deg.value() > 0 && deg.value() <= d)
          tables.insert(tables.end(), list.begin(), list.end());
      std::ranges::sort(tables);
      report.qualifying.push_back(tables.size());
      families.push_back(zero_family(domain, B, tables));
      chosen.push_back(std::move(tables));
    }
    std::uint64_t tuples = 1;
    for (const auto& c : chosen) {
      if (c.empty()) {
        tuples = 0;
        break;
      }
      if (tuples > options.tuple_cap / c.size())
        throw ResourceError("system count exceeds the tuple cap; use sampled mode");
      tuples *= c.size();
    }
    if (tuples == 0) {
      report.vacuous = true;
      report.pass = true;
      return report;
    }
    const TupleScan scan = min_ord_over_tuples(families, p, options.exec);
    report.systems_tested = scan.tuples;
    report.min_ord = scan.min_ord;
    for (std::size_t j = 0; j < targets.size(); ++j)
      report.witness.push_back(cache.at(targets[j].first.factors()).map_at(chosen[j][scan.argmin[j]]));
    report.witness_count = zero_count(domain, report.witness).count;
    report.pass = report.min_ord >= claimed;
    return report;
  }

  // Sampled: system i draws candidates from substream (seed, i) until each
  // target has one of admissible degree.
  constexpr std::uint64_t attempts = 32;
  const std::size_t r = targets.size();
  auto build = [&](std::uint64_t i, std::vector<FiniteMap>& system) {
    system.clear();
    const std::uint64_t base = substream_seed(options.seed, i);
    for (std::size_t j = 0; j < r; ++j) {
      const auto& [B, d] = targets[j];
      for (std::uint64_t a = 0; a < attempts; ++a) {
        FiniteMap f = sample_candidate(domain, B, d, substream_seed(base, j * attempts + a));
        const ExtendedDegree deg = functional_degree(f);
        if (deg.is_finite() && deg.value() > 0 && deg.value() <= d) {
          system.push_back(std::move(f));
          break;
        }
      }
      if (system.size() != j + 1) return false;
    }
    return true;
  };
  std::vector<std::uint8_t> accepted(options.samples, 0);
  const IndexedMin best = indexed_min(
      options.samples,
      [&](std::uint64_t i) {
        std::vector<FiniteMap> system;
        if (!build(i, system)) return ExtendedDegree::minus_infinity();
        accepted[i] = 1;
        return ord_of_count(zero_count(domain, system).count, p);
      },
      options.exec);
  report.systems_tested = static_cast<std::uint64_t>(std::ranges::count(accepted, 1));
  report.qualifying.assign(r, report.systems_tested);
  if (!best.found) {
    report.vacuous = true;
    report.pass = true;
    return report;
  }
  report.min_ord = best.value;
  build(best.index, report.witness);
  report.witness_count = zero_count(domain, report.witness).count;
  report.pass = report.min_ord >= claimed;
  return report;
}

ProofTrace proof_trace(std::span<const FiniteMap> system, std::optional<unsigned> beta) {
  if (system.empty()) throw ValidationError("proof trace needs at least one map");
  const AbelianShape& A = system.front().domain();
  if (A.is_trivial()) throw ValidationError("proof trace needs a nontrivial domain");
  const std::uint64_t p = factorize(A.exponent()).front().first;
  if (!A.is_p_group(p)) throw UnsupportedError("domain is not a p-group");
  std::vector<unsigned> betas;
  for (const FiniteMap& f : system) {
    if (f.domain() != A) throw ValidationError("system maps have different domains");
    if (f.codomain().rank() != 1 || !f.codomain().is_p_group(p))
      throw UnsupportedError("proof trace needs codomains Z/p^beta_j");
    betas.push_back(ord(f.codomain().factors()[0], p));
  }
  if (A.order() > default_enumeration_limit()) throw ResourceError("window volume exceeds the limit");

  ProofTrace tr;
  tr.p = p;
  tr.count = zero_count(A, system).count;
  tr.ord_count = ord_of_count(tr.count, p);
  tr.empty_zero_set = tr.count == 0;
  const unsigned default_beta = tr.empty_zero_set ? 1 : static_cast<unsigned>(tr.ord_count.value()) + 1;
  tr.beta = beta.value_or(default_beta);
  if (tr.beta < 1) throw ValidationError("beta must be >= 1");
  if (!tr.empty_zero_set && tr.beta <= tr.ord_count.value())
    throw ValidationError("beta must exceed ord_p(#Z) = " + tr.ord_count.to_string());
  const std::uint64_t ring = checked_pow(p, tr.beta);

  std::vector<IntSeries> lifts, indicators;
  tr.indicator_degrees_ok = true;
  tr.coefficients_ok = true;
  for (std::size_t j = 0; j < system.size(); ++j) {
    lifts.push_back(proper_lift(system[j]));
    const std::uint64_t qj = system[j].codomain().factors()[0];
    std::vector<std::uint64_t> chi(qj, 0);
    chi[0] = 1 % ring;
    indicators.push_back(
        proper_lift(FiniteMap(AbelianShape({qj}), AbelianShape({ring}), std::move(chi))));
    const IntSeries& ind = indicators.back();
    const ExtendedDegree deg = ind.degree();
    if (deg.is_finite() && BigInt(deg.value()) > n_hat(Prime(p), {betas[j], 1}, tr.beta))
      tr.indicator_degrees_ok = false;
    const std::uint64_t step = qj / p * (p - 1);
    for (std::uint64_t n = 0; n <= ind.degree_bound(); ++n) {
      const BigInt c = ind.coefficient({n});
      CoefficientCheck check{j, n, c == 0 ? ExtendedDegree::infinity() : ExtendedDegree::finite(ord(c, p)),
                             n + 1 > qj ? (n + 1 - qj + step - 1) / step : 0};
      if (check.ord < ExtendedDegree::finite(check.floor)) tr.coefficients_ok = false;
      tr.coefficients.push_back(check);
    }
  }

  tr.integral = integral(A.factors(), [&](std::span<const std::uint64_t> x) {
    BigInt product = 1;
    for (std::size_t j = 0; j < lifts.size() && product != 0; ++j) {
      const BigInt value = lifts[j].evaluate(x);
      product *= indicators[j].evaluate(std::span<const BigInt>(&value, 1));
    }
    return product;
  });
  tr.ord_integral = tr.integral == 0 ? ExtendedDegree::infinity()
                                     : ExtendedDegree::finite(ord(tr.integral, p));
  tr.congruent = (tr.integral - tr.count) % ring == 0;
  tr.orders_match = !tr.empty_zero_set && tr.ord_integral == tr.ord_count;
  return tr;
}

PolyZeroCount poly_zero_count(const PolySystem& system, Execution exec) {
  system.validate();
  if (checked_pow(system.modulus, system.vars) > default_enumeration_limit())
    throw ResourceError("m^n exceeds the enumeration limit");
  PolyZeroCount out;
  out.count = poly_zero_counts(std::span<const PolySystem>(&system, 1), exec).front();
  std::vector<std::uint64_t> degrees;
  for (const Polynomial& poly : system.polys) degrees.push_back(std::max<std::uint64_t>(poly.degree, 1));
  const auto reports = degrees.empty() ? std::map<std::uint64_t, BoundReport>{}
                                       : rng_system_bound(system.modulus, system.vars, degrees);
  out.holds = true;
  for (auto [l, e] : factorize(system.modulus)) {
    out.ord[l] = ord_of_count(out.count, l);
    out.bound[l] = degrees.empty() ? system.vars * e : reports.at(l).bound;
    if (out.ord[l] < ExtendedDegree::finite(out.bound[l])) out.holds = false;
  }
  return out;
}

}  // namespace axkatz
