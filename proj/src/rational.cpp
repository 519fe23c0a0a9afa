#include "parkhopf/rational.hpp"

#include <stdexcept>
#include <string>

namespace parkhopf {

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string numerator(text.substr(0, slash));
  std::string denominator = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!numerator.empty() && numerator.front() == '+') numerator.erase(0, 1);
  if (!valid_integer(numerator) || !valid_integer(denominator) || denominator.front() == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer num(numerator), den(denominator);
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer ipow(long base, unsigned long exponent) {
  Integer out;
  Integer b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exponent);
  return out;
}

}  // namespace parkhopf
