#ifndef AXKATZ_EXTENDED_DEGREE_HPP
#define AXKATZ_EXTENDED_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace axkatz {

/// A value in N extended by -infinity and +infinity, totally ordered with
/// -inf < 0 < 1 < ... < +inf. Used for functional degrees (the zero map has
/// degree -inf) and for p-adic valuations (ord(0) = +inf).
class ExtendedDegree {
 public:
  enum class Kind : std::uint8_t { minus_infinity = 0, finite = 1, infinity = 2 };

  constexpr ExtendedDegree() noexcept = default;  // -inf
  static constexpr ExtendedDegree minus_infinity() noexcept { return {}; }
  static constexpr ExtendedDegree infinity() noexcept {
    return ExtendedDegree(Kind::infinity, 0);
  }
  static constexpr ExtendedDegree finite(std::uint64_t v) noexcept {
    return ExtendedDegree(Kind::finite, v);
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::finite; }
  constexpr bool is_infinity() const noexcept { return kind_ == Kind::infinity; }
  constexpr bool is_minus_infinity() const noexcept {
    return kind_ == Kind::minus_infinity;
  }

  /// Throws std::logic_error unless finite.
  std::uint64_t value() const;

  std::string to_string() const;
  static ExtendedDegree parse(const std::string& text);

  friend constexpr std::strong_ordering operator<=>(const ExtendedDegree& a,
                                                    const ExtendedDegree& b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const ExtendedDegree&, const ExtendedDegree&) noexcept =
      default;

 private:
  constexpr ExtendedDegree(Kind k, std::uint64_t v) noexcept : kind_(k), value_(v) {}
  Kind kind_ = Kind::minus_infinity;
  std::uint64_t value_ = 0;
};

}  // namespace axkatz

#endif  // AXKATZ_EXTENDED_DEGREE_HPP
