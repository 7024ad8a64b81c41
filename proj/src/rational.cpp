#include "jsr/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "jsr/errors.hpp"

namespace jsr {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    if (body.find_first_of(".eE") != std::string_view::npos) {
      throw InputError("'" + std::string(text) + "' is not an exact rational (floating-point literals are rejected; write p/q)");
    }
    throw InputError("'" + std::string(text) + "' is not a rational literal (expected p or p/q)");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw InputError("'" + std::string(text) + "' has a zero denominator");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double log_of(const Rational& q) {
  long num_exp = 0;
  long den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
  return std::log(std::fabs(num)) - std::log(den) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

double to_double(const Rational& q) {
  if (sgn(q) == 0) return 0.0;
  const double l = log_of(q);
  if (l > 709.0) return sgn(q) > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  return q.get_d();
}

Integer denominator_lcm(const Rational* first, const Rational* last) {
  Integer acc = 1;
  for (; first != last; ++first) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), first->get_den_mpz_t());
  return acc;
}

}  // namespace jsr
