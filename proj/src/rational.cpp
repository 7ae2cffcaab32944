#include "regmeasure/rational.hpp"

#include "regmeasure/errors.hpp"

namespace regmeasure {

BigRational parse_rational(const std::string& text) {
  auto digits = [](const std::string& s, bool allow_sign) {
    std::size_t i = allow_sign && !s.empty() && s[0] == '-' ? 1 : 0;
    return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw InputError("malformed rational '" + text + "'");
  BigInt q(den);
  if (q == 0) throw InputError("zero denominator in '" + text + "'");
  BigRational r(BigInt(num), q);
  r.canonicalize();
  return r;
}

}  // namespace regmeasure
