#include "axkatz/numeric.hpp"

#include <limits>

namespace axkatz {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value))
    throw ValidationError("not a prime: " + std::to_string(value));
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw ResourceError("integer overflow in " + std::to_string(base) + "^" +
                          std::to_string(exp));
    r *= base;
  }
  return r;
}

unsigned ord(const BigInt& x, std::uint64_t p) {
  if (x == 0) throw std::domain_error("ord of zero");
  BigInt y = abs(x);
  unsigned k = 0;
  while (y % p == 0) {
    y /= p;
    ++k;
  }
  return k;
}

unsigned ord(std::uint64_t x, std::uint64_t p) {
  if (x == 0) throw std::domain_error("ord of zero");
  unsigned k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

unsigned floor_log(std::uint64_t p, const BigInt& x) {
  if (x < 1) throw std::domain_error("floor_log of non-positive value");
  unsigned k = 0;
  BigInt power = p;
  while (power <= x) {
    power *= p;
    ++k;
  }
  return k;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::domain_error("floor_div by non-positive divisor");
  BigInt q = a / b;  // truncates toward zero
  if (a < 0 && q * b != a) q -= 1;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  return -floor_div(-a, b);
}

BigInt repunit(std::uint64_t p, std::uint64_t k) {
  BigInt sum = 0;
  BigInt term = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    sum += term;
    term *= p;
  }
  return sum;
}

BigInt binomial(const BigInt& x, std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    r *= x - (k - 1);
    r /= k;  // exact: r is now C(x, k)
  }
  return r;
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw ResourceError("value exceeds 64-bit range: " + x.str());
  return x.convert_to<std::int64_t>();
}

std::uint64_t to_uint64(const BigInt& x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max())
    throw ResourceError("value outside unsigned 64-bit range: " + x.str());
  return x.convert_to<std::uint64_t>();
}

}  // namespace axkatz
