#ifndef AXKATZ_POLY_HPP
#define AXKATZ_POLY_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace axkatz {

struct Monomial {
  std::uint64_t coeff = 0;
  std::vector<std::uint64_t> exps;
};

struct Polynomial {
  /// Declared degree; must be at least the degree of every term with a
  /// coefficient that is nonzero modulo m.
  std::uint64_t degree = 0;
  std::vector<Monomial> terms;
};

/// Polynomials in `vars` variables over Z/modulus.
struct PolySystem {
  std::uint64_t modulus = 2;
  std::uint64_t vars = 1;
  std::vector<Polynomial> polys;

  /// Throws ValidationError on malformed input.
  void validate() const;
};

std::uint64_t evaluate(const Polynomial& poly, std::uint64_t m, std::span<const std::uint64_t> x);

}  // namespace axkatz

#endif  // AXKATZ_POLY_HPP
