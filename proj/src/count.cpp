#include "society/count.hpp"

#include <cmath>

namespace society {

std::string to_decimal(const Count& c) { return c.get_str(10); }

Count parse_count(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty count");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("count must be decimal digits: '" + std::string(text) + "'");
    }
  }
  return Count(std::string(text), 10);
}

Rational make_rational(const Count& num, const Count& den) {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double log_of(const Count& c) {
  if (sgn(c) <= 0) throw std::domain_error("log of a non-positive count");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, c.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

Count factorial(unsigned long n) {
  Count r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace society
