#include "axkatz/extended_degree.hpp"

#include <stdexcept>

#include "axkatz/numeric.hpp"

namespace axkatz {

std::uint64_t ExtendedDegree::value() const {
  if (!is_finite()) throw std::logic_error("value() of non-finite degree " + to_string());
  return value_;
}

std::string ExtendedDegree::to_string() const {
  switch (kind_) {
    case Kind::minus_infinity: return "-inf";
    case Kind::infinity: return "inf";
    case Kind::finite: break;
  }
  return std::to_string(value_);
}

ExtendedDegree ExtendedDegree::parse(const std::string& text) {
  if (text == "-inf") return minus_infinity();
  if (text == "inf" || text == "+inf") return infinity();
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("not an extended degree: '" + text + "'");
  return finite(std::stoull(text));
}

}  // namespace axkatz
