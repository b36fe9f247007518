#ifndef AXKATZ_NUMERIC_HPP
#define AXKATZ_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace axkatz {

using BigInt = boost::multiprecision::cpp_int;

// Error kinds. The CLI maps ValidationError and ResourceError to exit code 2.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Raised when a computed value contradicts a proven bound.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t n);

/// A validated prime. Converts implicitly to its value.
class Prime {
 public:
  explicit Prime(std::uint64_t value);
  constexpr operator std::uint64_t() const noexcept { return value_; }
  constexpr std::uint64_t value() const noexcept { return value_; }
  friend constexpr bool operator==(Prime, Prime) = default;

 private:
  std::uint64_t value_;
};

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

/// base^exp, throwing ResourceError on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

/// Largest k with p^k dividing x; x must be nonzero.
unsigned ord(const BigInt& x, std::uint64_t p);
unsigned ord(std::uint64_t x, std::uint64_t p);

/// Largest k with p^k <= x, x >= 1. Integer arithmetic only.
unsigned floor_log(std::uint64_t p, const BigInt& x);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// (p^k - 1)/(p - 1) = 1 + p + ... + p^(k-1).
BigInt repunit(std::uint64_t p, std::uint64_t k);

/// Binomial C(x, n) for any integer x, n >= 0, by the falling-factorial recurrence.
BigInt binomial(const BigInt& x, std::uint64_t n);

std::int64_t to_int64(const BigInt& x);
std::uint64_t to_uint64(const BigInt& x);

}  // namespace axkatz

#endif  // AXKATZ_NUMERIC_HPP
