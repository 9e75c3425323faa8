#include "nestfock/rational.hpp"

#include <cctype>
#include <string>

#include "nestfock/errors.hpp"

namespace nestfock {

std::string to_fraction_string(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw DomainError("malformed fraction: '" + std::string(whole) + "'");
  for (std::size_t j = start; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw DomainError("malformed fraction: '" + std::string(whole) + "'");
    }
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Scalar parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  }
  Scalar x(num, den);
  x.canonicalize();
  return x;
}

}  // namespace nestfock
