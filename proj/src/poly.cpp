#include "axkatz/poly.hpp"

#include <numeric>
#include <string>

#include "axkatz/numeric.hpp"

namespace axkatz {

void PolySystem::validate() const {
  if (modulus < 2) throw ValidationError("polynomial modulus must be >= 2");
  if (vars < 1) throw ValidationError("polynomial systems need at least one variable");
  for (std::size_t j = 0; j < polys.size(); ++j) {
    for (const Monomial& term : polys[j].terms) {
      if (term.exps.size() != vars)
        throw ValidationError("polynomial " + std::to_string(j) + " has a term with " +
                              std::to_string(term.exps.size()) + " exponents, expected " +
                              std::to_string(vars));
      const std::uint64_t deg = std::accumulate(term.exps.begin(), term.exps.end(), std::uint64_t{0});
      if (term.coeff % modulus != 0 && deg > polys[j].degree)
        throw ValidationError("polynomial " + std::to_string(j) + " has a term of degree " +
                              std::to_string(deg) + " above its declared degree " +
                              std::to_string(polys[j].degree));
    }
  }
}

std::uint64_t evaluate(const Polynomial& poly, std::uint64_t m, std::span<const std::uint64_t> x) {
  unsigned __int128 sum = 0;
  for (const Monomial& term : poly.terms) {
    unsigned __int128 v = term.coeff % m;
    for (std::size_t i = 0; i < term.exps.size() && v != 0; ++i)
      for (std::uint64_t e = 0; e < term.exps[i]; ++e) v = v * x[i] % m;
    sum = (sum + v) % m;
  }
  return static_cast<std::uint64_t>(sum);
}

}  // namespace axkatz
