#include "vizing/rational.hpp"

#include <cstdlib>

namespace vizing {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_decimal(const Rational& q, int places) {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = q.numerator() < 0;
  const std::int64_t num = std::llabs(q.numerator());
  const std::int64_t den = q.denominator();
  // round(num/den * scale) with halves going up in magnitude
  const std::int64_t scaled = (2 * num * scale + den) / (2 * den);
  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string(scaled / scale);
  if (places > 0) {
    std::string frac = std::to_string(scaled % scale);
    out += "." + std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
  }
  return out;
}

}  // namespace vizing
