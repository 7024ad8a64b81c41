#include "jsr/surd.hpp"

#include <cmath>
#include <stdexcept>

#include "jsr/errors.hpp"

namespace jsr {

namespace {

int sgn_i(const Rational& q) { return sgn(q) > 0 ? 1 : (sgn(q) < 0 ? -1 : 0); }

// sign of a + b*sqrt(u)
int sign_of_surd(const Rational& a, const Rational& b, const Rational& u) {
  const int sa = sgn_i(a);
  const int sb = sgn(u) > 0 ? sgn_i(b) : 0;
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 u
  const int c = cmp(a * a, b * b * u);
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

// Splits n = s^2 * r with r square-free as far as trial division by small
// primes plus a perfect-square test on the remainder can tell.
void extract_square(Integer& n, Integer& s) {
  s = 1;
  if (n <= 1) return;
  for (unsigned long p = 2; p <= 997; p += (p == 2 ? 1 : 2)) {
    const Integer p2 = Integer(p) * p;
    if (p2 > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p * p)) {
      n /= p2;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    s *= r;
    n = 1;
  }
}

}  // namespace

int sign_of_two_surds(const Rational& a, const Rational& b, const Rational& u, const Rational& c, const Rational& v) {
  const int sp = sign_of_surd(a, b, u);
  const int sq = sgn(v) > 0 ? sgn_i(c) : 0;
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // P = a + b sqrt(u) and Q = c sqrt(v) have opposite signs: compare P^2 and Q^2.
  const Rational k = a * a + b * b * u - c * c * v;
  const Rational m = 2 * a * b;
  const int s = sign_of_surd(k, m, u);
  if (s > 0) return sp;
  if (s < 0) return sq;
  return 0;
}

QuadSurd::QuadSurd(Rational a) : a_(std::move(a)) { a_.canonicalize(); }

QuadSurd::QuadSurd(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  d_.canonicalize();
  if (sgn(d_) < 0) throw InputError("negative radicand in quadratic surd");
  normalize();
}

void QuadSurd::normalize() {
  if (sgn(b_) == 0 || sgn(d_) == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  // sqrt(p/q) = sqrt(p*q)/q
  Integer n = d_.get_num() * d_.get_den();
  b_ /= d_.get_den();
  Integer s;
  extract_square(n, s);
  b_ *= s;
  if (n == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
    return;
  }
  d_ = Rational(n);
}

int QuadSurd::sign() const { return sign_of_surd(a_, b_, d_); }

QuadSurd QuadSurd::operator+(const QuadSurd& o) const {
  if (is_rational()) return QuadSurd(a_ + o.a_, o.b_, o.d_);
  if (o.is_rational()) return QuadSurd(a_ + o.a_, b_, d_);
  if (d_ != o.d_) throw std::logic_error("sum of surds with different radicands is not a quadratic surd");
  return QuadSurd(a_ + o.a_, b_ + o.b_, d_);
}

QuadSurd QuadSurd::operator-() const { return QuadSurd(-a_, -b_, d_); }

QuadSurd QuadSurd::operator-(const QuadSurd& o) const { return *this + (-o); }

QuadSurd QuadSurd::operator*(const QuadSurd& o) const {
  if (o.is_rational()) return QuadSurd(a_ * o.a_, b_ * o.a_, d_);
  if (is_rational()) return QuadSurd(a_ * o.a_, a_ * o.b_, o.d_);
  if (d_ != o.d_) throw std::logic_error("product of surds with different radicands is not a quadratic surd");
  return QuadSurd(a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_);
}

QuadSurd QuadSurd::pow(std::uint64_t k) const {
  QuadSurd result(1);
  QuadSurd base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

double QuadSurd::approx() const {
  return to_double(a_) + to_double(b_) * std::sqrt(to_double(d_));
}

double QuadSurd::log() const {
  if (sgn(a_) < 0 || sgn(b_) < 0) return std::log(approx());
  if (is_rational()) return log_of(a_);
  const double lb = log_of(b_) + 0.5 * log_of(d_);
  if (sgn(a_) == 0) return lb;
  const double la = log_of(a_);
  const double hi = std::max(la, lb);
  const double lo = std::min(la, lb);
  return hi + std::log1p(std::exp(lo - hi));
}

std::string QuadSurd::to_string() const {
  if (is_rational()) return a_.get_str();
  // Put both parts over a common denominator: (P + Q sqrt(d)) / D.
  Integer den;
  mpz_lcm(den.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
  const Integer p = a_.get_num() * (den / a_.get_den());
  const Integer q = b_.get_num() * (den / b_.get_den());
  std::string radical = "sqrt(" + d_.get_str() + ")";
  std::string surd_term;
  if (q == 1) {
    surd_term = radical;
  } else if (q == -1) {
    surd_term = "-" + radical;
  } else {
    surd_term = q.get_str() + "*" + radical;
  }
  std::string body;
  if (p == 0) {
    body = surd_term;
  } else {
    body = p.get_str() + (q > 0 ? "+" : "") + surd_term;
  }
  if (den == 1) return body;
  if (p == 0) return body + "/" + den.get_str();
  return "(" + body + ")/" + den.get_str();
}

int compare(const QuadSurd& x, const QuadSurd& y) {
  return sign_of_two_surds(x.rational_part() - y.rational_part(), x.coefficient(), x.radicand(), -y.coefficient(),
                           y.radicand());
}

}  // namespace jsr
