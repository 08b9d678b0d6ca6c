#include "mediankit/rational.hpp"

#include <charconv>

#include "mediankit/errors.hpp"

namespace mediankit {

namespace {

std::int64_t parseInt(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::InvalidInput, "bad rational '" + whole + "'");
  return v;
}

}  // namespace

Rational parseRational(const std::string& text) {
  std::string_view sv(text);
  auto slash = sv.find('/');
  if (slash == std::string_view::npos) return Rational(parseInt(sv, text));
  std::int64_t num = parseInt(sv.substr(0, slash), text);
  std::int64_t den = parseInt(sv.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string toString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace mediankit
