#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace society {

/// Exact nonnegative integer. All sequence values use this type.
using Count = mpz_class;

/// Exact fraction kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Raised when an exact computation produces a value that can only come
/// from a bug (a division that should be exact leaves a remainder, a
/// distribution that should sum to one does not, ...).
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

std::string to_decimal(const Count& c);

/// Parses a decimal string of digits. Rejects signs, whitespace and the
/// empty string.
Count parse_count(std::string_view text);

/// num/den reduced to lowest terms. mpq_class's two-argument constructor
/// does not reduce, and comparisons assume reduced operands.
Rational make_rational(const Count& num, const Count& den);

std::string to_string(const Rational& q);

/// Natural log of a positive Count from its leading 53 bits and bit length.
double log_of(const Count& c);

Count factorial(unsigned long n);

}  // namespace society
