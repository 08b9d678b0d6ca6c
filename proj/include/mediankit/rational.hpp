#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace mediankit {

using Rational = boost::rational<std::int64_t>;

// Accepts "p", "p/q" and "-p/q"; throws Error(InvalidInput) otherwise.
Rational parseRational(const std::string& text);
std::string toString(const Rational& r);

}  // namespace mediankit
