#ifndef LLL_RATIONAL_HPP
#define LLL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lll {

using Rational = mpq_class;

// Accepts "a/b", integers, and decimals with optional exponent ("0.1193", "2.5e-3").
// Decimals are converted exactly. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Comma separated list of rationals.
std::vector<Rational> parse_rational_list(const std::string& text);

// Canonical "a/b" (or "a" when the denominator is 1).
std::string to_string(const Rational& q);

// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
Rational ratio(long num, long den);

Rational pow(const Rational& base, unsigned exponent);
double to_double(const Rational& q);
Rational sum(const std::vector<Rational>& v);
Rational min_entry(const std::vector<Rational>& v);
Rational max_entry(const std::vector<Rational>& v);

}  // namespace lll

#endif
