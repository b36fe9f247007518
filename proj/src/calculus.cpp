#include "axkatz/calculus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace axkatz {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::vector<std::uint64_t> strides_of(const std::vector<std::uint64_t>& moduli) {
  std::vector<std::uint64_t> strides(moduli.size(), 1);
  for (std::size_t i = moduli.size(); i-- > 1;) strides[i - 1] = strides[i] * moduli[i];
  return strides;
}

// The prime p with q = p^b, b >= 1.
std::uint64_t prime_of_power(std::uint64_t q) {
  const auto fac = factorize(q);
  if (fac.size() != 1) throw UnsupportedError(std::to_string(q) + " is not a prime power");
  return fac.front().first;
}

std::uint64_t delta_for(const std::vector<std::uint64_t>& domain_moduli, std::uint64_t p,
                        unsigned beta) {
  if (domain_moduli.empty()) return 0;
  std::vector<int> exps;
  for (std::uint64_t m : domain_moduli) exps.push_back(static_cast<int>(ord(m, p)));
  return to_uint64(delta_max(PGroupShape(Prime(p), Partition(std::move(exps))), beta));
}

// Checks that every domain factor is a power of p (the trivial group passes).
void require_p_group(const AbelianShape& shape, std::uint64_t p, const char* what) {
  if (!shape.is_p_group(p))
    throw UnsupportedError(std::string(what) + " is not a " + std::to_string(p) + "-group");
}

}  // namespace

FiniteMap::FiniteMap(AbelianShape domain, AbelianShape codomain, std::vector<std::uint64_t> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), size_(domain_.order()),
      values_(std::move(values)) {
  const std::size_t k = codomain_.rank();
  if (values_.size() != size_ * k)
    throw ValidationError("value table has " + std::to_string(values_.size()) +
                          " entries, expected " + std::to_string(size_ * k));
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] >= codomain_.factors()[i % k])
      throw ValidationError("value table entry is not reduced modulo its codomain factor");
}

FiniteMap FiniteMap::zero(AbelianShape domain, AbelianShape codomain) {
  const std::uint64_t n = domain.order() * codomain.rank();
  return FiniteMap(std::move(domain), std::move(codomain), std::vector<std::uint64_t>(n, 0));
}

FiniteMap FiniteMap::from_function(AbelianShape domain, AbelianShape codomain,
                                   const std::function<GroupElement(const GroupElement&)>& fn) {
  std::vector<std::uint64_t> values;
  values.reserve(domain.order() * codomain.rank());
  for (const GroupElement& x : enumerate_elements(domain)) {
    const GroupElement y = fn(x);
    if (!codomain.contains(y)) throw ValidationError("function value outside the codomain");
    values.insert(values.end(), y.begin(), y.end());
  }
  return FiniteMap(std::move(domain), std::move(codomain), std::move(values));
}

std::span<const std::uint64_t> FiniteMap::at_index(std::uint64_t index) const {
  const std::size_t k = codomain_.rank();
  return std::span<const std::uint64_t>(values_).subspan(index * k, k);
}

bool FiniteMap::is_zero() const noexcept {
  return std::ranges::all_of(values_, [](std::uint64_t v) { return v == 0; });
}

std::vector<std::uint64_t> FiniteMap::coordinate(std::size_t c) const {
  const std::size_t k = codomain_.rank();
  std::vector<std::uint64_t> out(size_);
  for (std::uint64_t x = 0; x < size_; ++x) out[x] = values_[x * k + c];
  return out;
}

FiniteMap difference(const FiniteMap& f, std::span<const std::uint64_t> a) {
  const AbelianShape& A = f.domain();
  if (!A.contains(a)) throw ValidationError("translation is not a reduced domain element");
  const AbelianShape& B = f.codomain();
  const std::size_t k = B.rank();
  std::vector<std::uint64_t> out(f.values().size());
  GroupElement x = A.zero();
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    const auto fx = f.at_index(idx);
    const auto fxa = f(A.add(x, a));
    for (std::size_t c = 0; c < k; ++c)
      out[idx * k + c] = (fxa[c] + B.factors()[c] - fx[c]) % B.factors()[c];
    for (std::size_t i = x.size(); i-- > 0;) {
      if (++x[i] < A.factors()[i]) break;
      x[i] = 0;
    }
  }
  return FiniteMap(A, B, std::move(out));
}

FiniteMap iterated_difference(const FiniteMap& f, std::span<const std::uint64_t> n) {
  if (n.size() != f.domain().rank()) throw ValidationError("multi-index arity mismatch");
  FiniteMap g = f;
  for (std::size_t i = 0; i < n.size(); ++i) {
    GroupElement e = f.domain().zero();
    e[i] = 1 % f.domain().factors()[i];
    for (std::uint64_t t = 0; t < n[i]; ++t) g = difference(g, e);
  }
  return g;
}

PGroupDegreeEvaluator::PGroupDegreeEvaluator(std::vector<std::uint64_t> domain_moduli,
                                             std::uint64_t q)
    : moduli_(std::move(domain_moduli)), strides_(strides_of(moduli_)), q_(q) {
  const std::uint64_t p = prime_of_power(q);
  for (std::uint64_t m : moduli_)
    if (m < 2 || !AbelianShape({m}).is_p_group(p))
      throw UnsupportedError("domain and codomain are not p-groups for one prime");
  size_ = 1;
  for (std::uint64_t m : moduli_) size_ *= m;
  cap_ = delta_for(moduli_, p, ord(q, p));
  levels_.assign(cap_ + 2, std::vector<std::uint64_t>(size_));
}

void PGroupDegreeEvaluator::apply(std::span<const std::uint64_t> in,
                                  std::span<std::uint64_t> out, std::size_t axis) const {
  const std::uint64_t m = moduli_[axis];
  const std::uint64_t stride = strides_[axis];
  for (std::uint64_t idx = 0; idx < size_; ++idx) {
    const std::uint64_t xa = (idx / stride) % m;
    const std::uint64_t nb = xa + 1 == m ? idx - (m - 1) * stride : idx + stride;
    const std::uint64_t d = in[nb] + q_ - in[idx];
    out[idx] = d >= q_ ? d - q_ : d;
  }
}

void PGroupDegreeEvaluator::descend(std::size_t depth, std::size_t min_axis) {
  best_ = std::max<std::uint64_t>(best_, depth);
  for (std::size_t axis = min_axis; axis < moduli_.size(); ++axis) {
    apply(levels_[depth], levels_[depth + 1], axis);
    if (std::ranges::all_of(levels_[depth + 1], [](std::uint64_t v) { return v == 0; }))
      continue;
    if (depth + 1 > cap_)
      throw InternalError("nonzero difference of order " + std::to_string(depth + 1) +
                          " exceeds the maximal degree " + std::to_string(cap_));
    descend(depth + 1, axis);
  }
}

ExtendedDegree PGroupDegreeEvaluator::operator()(std::span<const std::uint64_t> table) {
  if (table.size() != size_) throw ValidationError("table size does not match the domain");
  if (std::ranges::all_of(table, [](std::uint64_t v) { return v == 0; }))
    return ExtendedDegree::minus_infinity();
  std::ranges::copy(table, levels_[0].begin());
  best_ = 0;
  descend(0, 0);
  return ExtendedDegree::finite(best_);
}

namespace {

struct PrimeSlice {
  std::uint64_t prime;
  AbelianShape domain;      // A[l^inf], decreasing exponents
  AbelianShape codomain;    // B[l^inf], decreasing exponents
  std::vector<std::size_t> domain_source;
  std::vector<std::uint64_t> domain_idempotent;
  std::vector<std::size_t> codomain_source;
  std::vector<std::uint64_t> codomain_idempotent;
};

std::vector<PrimeSlice> prime_slices(const AbelianShape& A, const AbelianShape& B) {
  const auto a_parts = primary_components(A);
  const auto b_parts = primary_components(B);
  std::set<std::uint64_t> primes;
  for (const auto& [l, _] : a_parts) primes.insert(l);
  for (const auto& [l, _] : b_parts) primes.insert(l);
  std::vector<PrimeSlice> out;
  for (std::uint64_t l : primes) {
    PrimeSlice s{l, {}, {}, {}, {}, {}, {}};
    if (auto it = a_parts.find(l); it != a_parts.end()) {
      s.domain = it->second.shape.as_abelian();
      s.domain_source = it->second.source_factor;
      s.domain_idempotent = it->second.idempotent;
    }
    if (auto it = b_parts.find(l); it != b_parts.end()) {
      s.codomain = it->second.shape.as_abelian();
      s.codomain_source = it->second.source_factor;
      s.codomain_idempotent = it->second.idempotent;
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Embeds y in A[l^inf] into A.
GroupElement embed(const AbelianShape& A, const PrimeSlice& s, std::span<const std::uint64_t> y) {
  GroupElement x = A.zero();
  for (std::size_t c = 0; c < y.size(); ++c) {
    const std::size_t i = s.domain_source[c];
    x[i] = mul_mod(s.domain_idempotent[c], y[c], A.factors()[i]);
  }
  return x;
}

}  // namespace

bool primary_parts(const FiniteMap& f, std::map<std::uint64_t, FiniteMap>& parts) {
  const AbelianShape& A = f.domain();
  const AbelianShape& B = f.codomain();
  parts.clear();
  const auto slices = prime_slices(A, B);

  for (const PrimeSlice& s : slices) {
    if (s.codomain.is_trivial()) continue;
    // The l-part of f(x) must agree with the l-part of f(pi_l x).
    GroupElement x = A.zero();
    for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
      GroupElement px = A.zero();
      for (std::size_t c = 0; c < s.domain_source.size(); ++c) {
        const std::size_t i = s.domain_source[c];
        px[i] = mul_mod(s.domain_idempotent[c], x[i], A.factors()[i]);
      }
      const auto fx = f.at_index(idx);
      const auto fpx = f(px);
      for (std::size_t k = 0; k < s.codomain_source.size(); ++k) {
        const std::size_t j = s.codomain_source[k];
        const std::uint64_t q = s.codomain.factors()[k];
        if (fx[j] % q != fpx[j] % q) return false;
      }
      for (std::size_t i = x.size(); i-- > 0;) {
        if (++x[i] < A.factors()[i]) break;
        x[i] = 0;
      }
    }
  }

  for (const PrimeSlice& s : slices) {
    std::vector<std::uint64_t> values;
    values.reserve(s.domain.order() * s.codomain.rank());
    for (const GroupElement& y : enumerate_elements(s.domain)) {
      const auto fx = f(embed(A, s, y));
      for (std::size_t k = 0; k < s.codomain_source.size(); ++k)
        values.push_back(fx[s.codomain_source[k]] % s.codomain.factors()[k]);
    }
    parts.emplace(s.prime, FiniteMap(s.domain, s.codomain, std::move(values)));
  }
  return true;
}

FiniteMap assemble_primary(const AbelianShape& domain, const AbelianShape& codomain,
                           const std::map<std::uint64_t, FiniteMap>& parts) {
  const auto slices = prime_slices(domain, codomain);
  for (const PrimeSlice& s : slices) {
    auto it = parts.find(s.prime);
    if (it == parts.end()) {
      if (s.codomain.is_trivial()) continue;
      throw ValidationError("missing primary component for prime " + std::to_string(s.prime));
    }
    if (it->second.domain() != s.domain || it->second.codomain() != s.codomain)
      throw ValidationError("primary component for prime " + std::to_string(s.prime) +
                            " has the wrong shape");
  }
  return FiniteMap::from_function(domain, codomain, [&](const GroupElement& x) {
    GroupElement y = codomain.zero();
    for (const PrimeSlice& s : slices) {
      if (s.codomain.is_trivial()) continue;
      GroupElement xl(s.domain.rank());
      for (std::size_t c = 0; c < xl.size(); ++c)
        xl[c] = x[s.domain_source[c]] % s.domain.factors()[c];
      const auto g = parts.at(s.prime)(xl);
      for (std::size_t k = 0; k < g.size(); ++k) {
        const std::size_t j = s.codomain_source[k];
        const std::uint64_t m = codomain.factors()[j];
        y[j] = (y[j] + mul_mod(s.codomain_idempotent[k], g[k], m)) % m;
      }
    }
    return y;
  });
}

ExtendedDegree functional_degree(const FiniteMap& f) {
  if (f.is_zero()) return ExtendedDegree::minus_infinity();
  std::map<std::uint64_t, FiniteMap> parts;
  if (!primary_parts(f, parts)) return ExtendedDegree::infinity();
  ExtendedDegree best = ExtendedDegree::minus_infinity();
  for (const auto& [l, g] : parts) {
    if (g.codomain().is_trivial() || g.is_zero()) continue;
    if (g.domain().is_trivial()) {
      best = std::max(best, ExtendedDegree::finite(0));
      continue;
    }
    for (std::size_t c = 0; c < g.codomain().rank(); ++c) {
      PGroupDegreeEvaluator eval(g.domain().factors(), g.codomain().factors()[c]);
      best = std::max(best, eval(g.coordinate(c)));
    }
  }
  return best;
}

SeriesCoefficients series_coefficients(const FiniteMap& f) {
  const AbelianShape& A = f.domain();
  const AbelianShape& B = f.codomain();
  if (B.is_trivial()) throw UnsupportedError("series coefficients need a nontrivial codomain");
  const std::uint64_t p = prime_of_power(B.exponent());
  require_p_group(A, p, "domain");

  SeriesCoefficients out{A, B, delta_for(A.factors(), p, ord(B.exponent(), p)), {}};
  const std::size_t k = B.rank();
  const std::size_t N = A.rank();
  const std::uint64_t size = f.size();
  const auto strides = strides_of(A.factors());
  std::vector<std::vector<std::uint64_t>> levels(
      out.degree_bound + 2, std::vector<std::uint64_t>(f.values().size()));
  std::ranges::copy(f.values(), levels[0].begin());
  MultiIndex n(N, 0);

  auto record = [&](std::size_t depth) {
    const auto& t = levels[depth];
    if (std::any_of(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k),
                    [](std::uint64_t v) { return v != 0; }))
      out.coeffs.emplace(n, GroupElement(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k)));
  };

  auto descend = [&](auto&& self, std::size_t depth, std::size_t min_axis) -> void {
    record(depth);
    for (std::size_t axis = min_axis; axis < N; ++axis) {
      const std::uint64_t m = A.factors()[axis];
      const std::uint64_t stride = strides[axis];
      const auto& in = levels[depth];
      auto& outv = levels[depth + 1];
      bool nonzero = false;
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        const std::uint64_t xa = (idx / stride) % m;
        const std::uint64_t nb = xa + 1 == m ? idx - (m - 1) * stride : idx + stride;
        for (std::size_t c = 0; c < k; ++c) {
          const std::uint64_t q = B.factors()[c];
          const std::uint64_t v = (in[nb * k + c] + q - in[idx * k + c]) % q;
          outv[idx * k + c] = v;
          nonzero |= v != 0;
        }
      }
      if (!nonzero) continue;
      if (depth + 1 > out.degree_bound)
        throw InternalError("nonzero difference beyond the maximal degree");
      ++n[axis];
      self(self, depth + 1, axis);
      --n[axis];
    }
  };
  if (!f.is_zero()) descend(descend, 0, 0);
  return out;
}

FiniteMap reconstruct(const SeriesCoefficients& series, std::uint64_t d) {
  const AbelianShape& A = series.domain;
  const AbelianShape& B = series.codomain;
  for (const auto& [n, c] : series.coeffs) {
    if (std::accumulate(n.begin(), n.end(), std::uint64_t{0}) > d)
      throw ValidationError("coefficient support exceeds the degree bound");
    if (n.size() != A.rank() || !B.contains(c))
      throw ValidationError("malformed series coefficient");
  }
  const std::uint64_t e = B.exponent();
  std::uint64_t max_x = 1;
  for (std::uint64_t m : A.factors()) max_x = std::max(max_x, m);
  // pascal[x][j] = C(x, j) mod e.
  std::vector<std::vector<std::uint64_t>> pascal(max_x, std::vector<std::uint64_t>(d + 1, 0));
  for (std::uint64_t x = 0; x < max_x; ++x) {
    pascal[x][0] = 1 % e;
    for (std::uint64_t j = 1; j <= d && x > 0; ++j)
      pascal[x][j] = (pascal[x - 1][j - 1] + pascal[x - 1][j]) % e;
  }
  return FiniteMap::from_function(A, B, [&](const GroupElement& x) {
    GroupElement y = B.zero();
    for (const auto& [n, c] : series.coeffs) {
      std::uint64_t w = 1 % e;
      for (std::size_t i = 0; i < n.size() && w != 0; ++i) w = mul_mod(w, pascal[x[i]][n[i]], e);
      for (std::size_t j = 0; j < y.size(); ++j) {
        const std::uint64_t q = B.factors()[j];
        y[j] = (y[j] + mul_mod(w % q, c[j], q)) % q;
      }
    }
    return y;
  });
}

IntSeries::IntSeries(std::size_t arity, std::uint64_t degree_bound)
    : arity_(arity), degree_bound_(degree_bound) {}

void IntSeries::set(const MultiIndex& n, BigInt value) {
  if (n.size() != arity_) throw ValidationError("multi-index arity mismatch");
  if (std::accumulate(n.begin(), n.end(), std::uint64_t{0}) > degree_bound_)
    throw ValidationError("coefficient beyond the declared degree bound");
  if (value == 0)
    coeffs_.erase(n);
  else
    coeffs_[n] = std::move(value);
}

BigInt IntSeries::coefficient(const MultiIndex& n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt IntSeries::evaluate(std::span<const BigInt> x) const {
  if (x.size() != arity_) throw ValidationError("evaluation point arity mismatch");
  std::vector<std::uint64_t> top(arity_, 0);
  for (const auto& [n, _] : coeffs_)
    for (std::size_t i = 0; i < arity_; ++i) top[i] = std::max(top[i], n[i]);
  // binom[i][j] = C(x_i, j) by C(x, j+1) = C(x, j) (x - j) / (j + 1).
  std::vector<std::vector<BigInt>> binom(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    binom[i].resize(top[i] + 1);
    binom[i][0] = 1;
    for (std::uint64_t j = 0; j < top[i]; ++j)
      binom[i][j + 1] = binom[i][j] * (x[i] - j) / (j + 1);
  }
  BigInt sum = 0;
  for (const auto& [n, c] : coeffs_) {
    BigInt term = c;
    for (std::size_t i = 0; i < arity_ && term != 0; ++i) term *= binom[i][n[i]];
    sum += term;
  }
  return sum;
}

BigInt IntSeries::evaluate(std::span<const std::uint64_t> x) const {
  std::vector<BigInt> big(x.begin(), x.end());
  return evaluate(std::span<const BigInt>(big));
}

ExtendedDegree IntSeries::degree() const {
  ExtendedDegree best = ExtendedDegree::minus_infinity();
  for (const auto& [n, _] : coeffs_)
    best = std::max(best,
                    ExtendedDegree::finite(std::accumulate(n.begin(), n.end(), std::uint64_t{0})));
  return best;
}

IntSeries proper_lift(const FiniteMap& f) {
  if (f.codomain().rank() != 1) throw UnsupportedError("proper lift needs a cyclic codomain");
  const SeriesCoefficients series = series_coefficients(f);
  IntSeries out(f.domain().rank(), series.degree_bound);
  for (const auto& [n, c] : series.coeffs) out.set(n, BigInt(c[0]));
  return out;
}

BigInt lift_delta0(const IntSeries& series, std::span<const std::uint64_t> n) {
  if (n.size() != series.arity()) throw ValidationError("multi-index arity mismatch");
  const std::size_t N = n.size();
  std::vector<std::uint64_t> k(N, 0);
  BigInt sum = 0;
  while (true) {
    BigInt weight = 1;
    std::uint64_t gap = 0;
    for (std::size_t i = 0; i < N; ++i) {
      weight *= binomial(BigInt(n[i]), k[i]);
      gap += n[i] - k[i];
    }
    const BigInt term = weight * series.evaluate(std::span<const std::uint64_t>(k));
    if (gap % 2 == 0)
      sum += term;
    else
      sum -= term;
    std::size_t i = N;
    while (i-- > 0) {
      if (++k[i] <= n[i]) break;
      k[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return sum;
}

FiniteMap tensor_product(std::span<const FiniteMap> maps) {
  if (maps.empty()) throw ValidationError("tensor product of no maps");
  const AbelianShape& ring = maps.front().codomain();
  if (ring.rank() != 1) throw ValidationError("tensor factors must take values in a ring Z/q");
  std::vector<std::uint64_t> factors;
  for (const FiniteMap& f : maps) {
    if (f.codomain() != ring) throw ValidationError("tensor factors have different codomains");
    factors.insert(factors.end(), f.domain().factors().begin(), f.domain().factors().end());
  }
  AbelianShape domain(std::move(factors));
  const std::uint64_t q = ring.factors()[0];
  const std::uint64_t total = domain.order();
  std::vector<std::uint64_t> values(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    std::uint64_t v = 1 % q;
    for (std::size_t j = maps.size(); j-- > 0;) {
      const std::uint64_t size = maps[j].size();
      v = mul_mod(v, maps[j].at_index(rest % size)[0], q);
      rest /= size;
    }
    values[idx] = v;
  }
  return FiniteMap(std::move(domain), ring, std::move(values));
}

IntSeries tensor_product(std::span<const IntSeries> series) {
  if (series.empty()) throw ValidationError("tensor product of no series");
  std::size_t arity = 0;
  std::uint64_t bound = 0;
  for (const IntSeries& s : series) {
    arity += s.arity();
    bound += s.degree_bound();
  }
  std::map<MultiIndex, BigInt> acc{{MultiIndex{}, BigInt(1)}};
  for (const IntSeries& s : series) {
    std::map<MultiIndex, BigInt> next;
    for (const auto& [n1, c1] : acc)
      for (const auto& [n2, c2] : s.coeffs()) {
        MultiIndex n = n1;
        n.insert(n.end(), n2.begin(), n2.end());
        next.emplace(std::move(n), c1 * c2);
      }
    acc = std::move(next);
  }
  IntSeries out(arity, bound);
  for (auto& [n, c] : acc) out.set(n, std::move(c));
  return out;
}

GroupElement integral(const FiniteMap& f) {
  const AbelianShape& B = f.codomain();
  GroupElement sum = B.zero();
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) sum = B.add(sum, f.at_index(idx));
  return sum;
}

BigInt integral(const IntSeries& series, std::span<const std::uint64_t> box) {
  if (box.size() != series.arity()) throw ValidationError("box arity mismatch");
  BigInt sum = 0;
  for (const auto& [n, c] : series.coeffs()) {
    BigInt term = c;
    for (std::size_t i = 0; i < n.size() && term != 0; ++i)
      term *= binomial(BigInt(box[i]), n[i] + 1);
    sum += term;
  }
  return sum;
}

BigInt integral(std::span<const std::uint64_t> box,
                const std::function<BigInt(std::span<const std::uint64_t>)>& fn) {
  for (std::uint64_t m : box)
    if (m == 0) return 0;
  std::vector<std::uint64_t> x(box.size(), 0);
  BigInt sum = 0;
  while (true) {
    sum += fn(x);
    std::size_t i = x.size();
    while (i-- > 0) {
      if (++x[i] < box[i]) break;
      x[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return sum;
}

ExtendedDegree ord_of_count(std::uint64_t count, std::uint64_t p) {
  if (count == 0) return ExtendedDegree::infinity();
  return ExtendedDegree::finite(ord(count, p));
}

ZeroCount zero_count(const AbelianShape& domain, std::span<const FiniteMap> system) {
  for (const FiniteMap& f : system)
    if (f.domain() != domain) throw ValidationError("system maps have different domains");
  ZeroCount out;
  const std::uint64_t size = domain.order();
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    bool zero = true;
    for (const FiniteMap& f : system) {
      for (std::uint64_t v : f.at_index(idx)) zero &= v == 0;
      if (!zero) break;
    }
    out.count += zero;
  }
  for (const auto& [l, _] : factorize(size)) out.ord[l] = ord_of_count(out.count, l);
  return out;
}

}  // namespace axkatz
