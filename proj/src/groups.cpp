#include "axkatz/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace axkatz {

std::uint64_t default_enumeration_limit() {
  if (const char* env = std::getenv("AXKATZ_ENUM_LIMIT")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError(std::string("bad AXKATZ_ENUM_LIMIT: ") + env);
    }
  }
  return 1'000'000;
}

AbelianShape::AbelianShape(std::vector<std::uint64_t> factors) : factors_(std::move(factors)) {
  for (std::uint64_t m : factors_)
    if (m < 2)
      throw ValidationError("group factors must be >= 2, got " + std::to_string(m));
}

std::uint64_t AbelianShape::order() const {
  std::uint64_t n = 1;
  for (std::uint64_t m : factors_) {
    if (n > UINT64_MAX / m) throw ResourceError("group order exceeds 64 bits");
    n *= m;
  }
  return n;
}

std::uint64_t AbelianShape::exponent() const {
  std::uint64_t e = 1;
  for (std::uint64_t m : factors_) e = std::lcm(e, m);
  return e;
}

bool AbelianShape::is_p_group(std::uint64_t p) const {
  for (std::uint64_t m : factors_) {
    while (m % p == 0) m /= p;
    if (m != 1) return false;
  }
  return true;
}

bool AbelianShape::contains(std::span<const std::uint64_t> element) const {
  if (element.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < element.size(); ++i)
    if (element[i] >= factors_[i]) return false;
  return true;
}

GroupElement AbelianShape::add(std::span<const std::uint64_t> a,
                               std::span<const std::uint64_t> b) const {
  GroupElement out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) % factors_[i];
  return out;
}

GroupElement AbelianShape::subtract(std::span<const std::uint64_t> a,
                                    std::span<const std::uint64_t> b) const {
  GroupElement out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (a[i] + factors_[i] - b[i]) % factors_[i];
  return out;
}

std::uint64_t AbelianShape::index_of(std::span<const std::uint64_t> element) const {
  if (!contains(element)) throw ValidationError("element is not reduced for this group");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) index = index * factors_[i] + element[i];
  return index;
}

GroupElement AbelianShape::element_at(std::uint64_t index) const {
  GroupElement out(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    out[i] = index % factors_[i];
    index /= factors_[i];
  }
  if (index != 0) throw ValidationError("element index out of range");
  return out;
}

PGroupShape::PGroupShape(Prime p, Partition exponents)
    : p_(p), exponents_(std::move(exponents)) {}

BigInt PGroupShape::order() const {
  return big_pow(p_, static_cast<std::uint64_t>(exponents_.total()));
}

std::vector<std::uint64_t> PGroupShape::moduli() const {
  std::vector<std::uint64_t> out;
  for (int a : exponents_.parts()) out.push_back(checked_pow(p_, static_cast<std::uint64_t>(a)));
  return out;
}

PGroupShape to_pgroup(const AbelianShape& shape) {
  if (shape.is_trivial()) throw ValidationError("the trivial group is not a p-group shape");
  const auto fac = factorize(shape.factors().front());
  if (fac.size() != 1 || !shape.is_p_group(fac.front().first))
    throw ValidationError("shape is not a p-group");
  const std::uint64_t p = fac.front().first;
  std::vector<int> exps;
  for (std::uint64_t m : shape.factors()) exps.push_back(static_cast<int>(ord(m, p)));
  return PGroupShape(Prime(p), Partition(std::move(exps)));
}

namespace {

// Inverse of a modulo m (gcd(a, m) = 1).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

std::map<std::uint64_t, PrimaryComponent> primary_components(const AbelianShape& shape) {
  struct Coord {
    std::size_t factor;
    int exponent;
    std::uint64_t idempotent;
  };
  std::map<std::uint64_t, std::vector<Coord>> by_prime;
  for (std::size_t i = 0; i < shape.rank(); ++i) {
    const std::uint64_t m = shape.factors()[i];
    for (auto [l, e] : factorize(m)) {
      const std::uint64_t q = checked_pow(l, e);
      const std::uint64_t cofactor = m / q;
      // u = cofactor * (cofactor^{-1} mod q): u = 1 mod q, u = 0 mod cofactor.
      const std::uint64_t u = cofactor == 1
                                  ? 1
                                  : static_cast<std::uint64_t>(
                                        (static_cast<unsigned __int128>(cofactor) *
                                         mod_inverse(cofactor % q, q)) %
                                        m);
      by_prime[l].push_back({i, static_cast<int>(e), u});
    }
  }
  std::map<std::uint64_t, PrimaryComponent> out;
  for (auto& [l, coords] : by_prime) {
    std::ranges::stable_sort(coords, [](const Coord& a, const Coord& b) {
      return a.exponent > b.exponent;
    });
    std::vector<int> exps;
    PrimaryComponent comp{PGroupShape(Prime(l), Partition({1})), {}, {}};
    for (const Coord& c : coords) {
      exps.push_back(c.exponent);
      comp.source_factor.push_back(c.factor);
      comp.idempotent.push_back(c.idempotent);
    }
    comp.shape = PGroupShape(Prime(l), Partition(std::move(exps)));
    out.emplace(l, std::move(comp));
  }
  return out;
}

std::map<std::uint64_t, PrimaryComponent> primary_decomposition(const AbelianShape& shape) {
  if (shape.is_trivial()) throw ValidationError("primary decomposition of the trivial group");
  return primary_components(shape);
}

std::vector<GroupElement> enumerate_elements(const AbelianShape& shape, std::uint64_t limit) {
  const std::uint64_t n = shape.order();
  if (n > limit)
    throw ResourceError("group of order " + std::to_string(n) + " exceeds enumeration limit " +
                        std::to_string(limit));
  std::vector<GroupElement> out;
  out.reserve(n);
  GroupElement x = shape.zero();
  for (std::uint64_t k = 0; k < n; ++k) {
    out.push_back(x);
    for (std::size_t i = x.size(); i-- > 0;) {
      if (++x[i] < shape.factors()[i]) break;
      x[i] = 0;
    }
  }
  return out;
}

BigInt delta_max(const PGroupShape& domain, unsigned beta) {
  if (beta < 1) throw ValidationError("beta must be >= 1");
  const std::uint64_t p = domain.prime();
  BigInt sum = 0;
  for (int a : domain.exponents().parts()) sum += big_pow(p, static_cast<std::uint64_t>(a)) - 1;
  sum += BigInt(beta - 1) * (p - 1) *
         big_pow(p, static_cast<std::uint64_t>(domain.exponents().largest() - 1));
  return sum;
}

}  // namespace axkatz
