#include "sosgram/rational.hpp"

#include <cmath>
#include <limits>

#include "sosgram/error.hpp"

namespace sosgram {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  Integer denominator(std::string(den), 10);
  if (sgn(denominator) == 0) {
    throw InputError("zero denominator in rational '" + std::string(text) + "'");
  }
  Rational value(Integer(std::string(num), 10), denominator);
  value.canonicalize();
  if (text.front() == '-') value = -value;
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational rationalize(double value, long max_denominator) {
  if (!std::isfinite(value)) {
    throw InputError("cannot rationalize a non-finite value");
  }
  // Convergents p_k/q_k of the continued fraction of |value|.
  const bool negative = value < 0;
  double x = std::fabs(value);
  Integer p_prev = 1, q_prev = 0;
  Integer p = static_cast<long>(std::floor(x)), q = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (frac < 1e-300) break;
    if (std::fabs(x - Rational(p, q).get_d()) <= 4 * std::numeric_limits<double>::epsilon() * x) {
      break;
    }
    const double inv = 1.0 / frac;
    const double a = std::floor(inv);
    if (a > 1e15) break;
    const Integer ai = static_cast<long>(a);
    Integer p_next = ai * p + p_prev;
    Integer q_next = ai * q + q_prev;
    if (q_next > max_denominator) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    frac = inv - a;
  }
  Rational result(p, q);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace sosgram
