#include "glie/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace glie {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num, true) || (slash != std::string_view::npos && !valid_int(den, false)))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

RationalVector zero_vector(std::size_t n) { return RationalVector(n, Rational(0)); }

RationalVector unit_vector(std::size_t n, std::size_t index) {
  auto v = zero_vector(n);
  v.at(index) = 1;
  return v;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace glie
