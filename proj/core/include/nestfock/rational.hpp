#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nestfock {

using Integer = mpz_class;
using Scalar = mpq_class;

// Always "p/q" with q > 0, including integers ("3/1", "0/1").
std::string to_fraction_string(const Scalar& x);

// Accepts "p/q" or a bare integer "p". Throws DomainError on malformed input
// or a zero denominator.
Scalar parse_fraction(std::string_view text);

inline Scalar make_scalar(long num, long den = 1) {
  Scalar x(num, den);
  x.canonicalize();
  return x;
}

inline bool is_integral(const Scalar& x) { return x.get_den() == 1; }

}  // namespace nestfock
