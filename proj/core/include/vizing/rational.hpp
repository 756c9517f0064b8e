#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace vizing {

using Rational = boost::rational<std::int64_t>;

/// "3" or "8/3".
std::string to_string(const Rational& q);

/// Decimal rendering rounded half away from zero, e.g. to_decimal(8/3, 4) == "2.6667".
/// Presentation only; comparisons stay rational.
std::string to_decimal(const Rational& q, int places = 4);

}  // namespace vizing
