#ifndef GLIE_RATIONAL_HPP
#define GLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace glie {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, and zero is stored as 0/1.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;

/// Renders in lowest terms: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

RationalVector zero_vector(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const RationalVector& v);

}  // namespace glie

#endif
