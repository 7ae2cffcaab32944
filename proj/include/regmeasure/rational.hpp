#pragma once

#include <gmpxx.h>

#include <string>

namespace regmeasure {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// "p/q" with q > 0 and gcd(p, q) = 1; integers keep the "/1".
inline std::string to_string(const BigRational& value) {
  BigRational canonical = value;
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

inline std::string to_string(const BigInt& value) { return value.get_str(); }

/// Accepts "p/q" or "p".
BigRational parse_rational(const std::string& text);

}  // namespace regmeasure
