#include "jsr/algebraic.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "jsr/errors.hpp"

namespace jsr {

namespace {

// Relative/absolute outward widening applied to every floating enclosure.
constexpr double kWiden = 1e-12;

// Tolerance of the Collatz-Wielandt refinement, relative to max(1, rho).
const Rational kPerronTol("1/10000000000000");

bool exact_integer_root(const Integer& n, unsigned long k, Integer& r) {
  if (n < 0) return false;
  return mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

bool rational_root(const Rational& q, unsigned long k, Rational& out) {
  Integer rn;
  Integer rd;
  if (!exact_integer_root(q.get_num(), k, rn) || !exact_integer_root(q.get_den(), k, rd)) return false;
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

// sqrt in Q(sqrt d): x + y sqrt(d) with (x + y sqrt d)^2 == s, x, y >= 0.
std::optional<QuadSurd> surd_sqrt(const QuadSurd& s) {
  if (s.sign() < 0) return std::nullopt;
  if (s.is_rational()) {
    Rational r;
    if (rational_root(s.rational_part(), 2, r)) return QuadSurd(r);
    return std::nullopt;
  }
  const Rational& a = s.rational_part();
  const Rational& b = s.coefficient();
  const Rational& d = s.radicand();
  // x^2 + y^2 d = a, 2xy = b  =>  x^2 = (a +- sqrt(a^2 - b^2 d)) / 2
  Rational disc = a * a - b * b * d;
  Rational root_disc;
  if (sgn(disc) < 0 || !rational_root(disc, 2, root_disc)) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational x2 = (a + sign * root_disc) / 2;
    Rational x;
    if (sgn(x2) <= 0 || !rational_root(x2, 2, x)) continue;
    Rational y = b / (2 * x);
    if (sgn(y) < 0) continue;
    QuadSurd cand(x, y, d);
    if (cand * cand == s) return cand;
  }
  return std::nullopt;
}

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

}  // namespace

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "Less";
    case Ordering::Equal:
      return "Equal";
    case Ordering::Greater:
      return "Greater";
    case Ordering::TieAtTolerance:
      return "TieAtTolerance";
  }
  return "?";
}

AlgebraicValue::AlgebraicValue() = default;

void AlgebraicValue::set_enclosure_from_log(double log_value) {
  const double v = std::exp(log_value);
  const double w = kWiden * std::max(1.0, v);
  mid_ = v;
  lo_ = std::max(0.0, v - w);
  hi_ = v + w;
}

AlgebraicValue AlgebraicValue::root_of(const QuadSurd& base, std::uint64_t root) {
  if (root == 0) throw InputError("root index must be positive");
  if (base.sign() < 0) throw InputError("negative base for a spectral value");
  AlgebraicValue v;
  v.base_ = base;
  v.root_ = root;
  if (base.sign() == 0) {
    v.base_ = QuadSurd(0);
    v.root_ = 1;
    return v;
  }
  // b*sqrt(d) with no rational part is (b^2 d)^(1/2)
  if (sgn(v.base_.rational_part()) == 0 && !v.base_.is_rational()) {
    const Rational& b = v.base_.coefficient();
    v.base_ = QuadSurd(b * b * v.base_.radicand());
    v.root_ *= 2;
  }
  // Reduce perfect powers.
  bool changed = true;
  while (changed && v.root_ > 1) {
    changed = false;
    if (v.root_ % 2 == 0) {
      if (auto s = surd_sqrt(v.base_)) {
        v.base_ = *s;
        v.root_ /= 2;
        changed = true;
        continue;
      }
    }
    if (v.base_.is_rational()) {
      for (std::uint64_t p = 3; p <= v.root_; p += 2) {
        if (v.root_ % p != 0) continue;
        Rational r;
        if (rational_root(v.base_.rational_part(), static_cast<unsigned long>(p), r)) {
          v.base_ = QuadSurd(r);
          v.root_ /= p;
          changed = true;
          break;
        }
      }
    }
  }
  v.set_enclosure_from_log(v.base_.log() / static_cast<double>(v.root_));
  return v;
}

AlgebraicValue AlgebraicValue::enclosed(const ExactMatrix& m, std::uint64_t root, const Interval& rho) {
  if (root == 0) throw InputError("root index must be positive");
  AlgebraicValue v;
  v.matrix_ = m;
  v.root_ = root;
  const double r = static_cast<double>(root);
  const double lo = sgn(rho.lo) > 0 ? std::exp(log_of(rho.lo) / r) : 0.0;
  const double hi = sgn(rho.hi) > 0 ? std::exp(log_of(rho.hi) / r) : 0.0;
  v.lo_ = std::max(0.0, lo - kWiden * std::max(1.0, lo));
  v.hi_ = hi + kWiden * std::max(1.0, hi);
  v.mid_ = 0.5 * (lo + hi);
  return v;
}

std::string AlgebraicValue::exact_string() const {
  if (!is_exact()) {
    std::string s = "rho(" + matrix_->to_string() + ")";
    if (root_ != 1) s += "^(1/" + std::to_string(root_) + ")";
    return s;
  }
  const std::string b = base_.to_string();
  if (root_ == 1) return b;
  if (root_ == 2) return "sqrt(" + b + ")";
  const bool atomic = b.find_first_of("+-/*()") == std::string::npos;
  return (atomic ? b : "(" + b + ")") + "^(1/" + std::to_string(root_) + ")";
}

std::string AlgebraicValue::decimal_string() const { return format_decimal(mid_); }

AlgebraicValue AlgebraicValue::nth_root(std::uint64_t k) const {
  if (k == 0) throw InputError("root index must be positive");
  if (is_exact()) return root_of(base_, root_ * k);
  AlgebraicValue v = *this;
  v.root_ = root_ * k;
  const double kd = static_cast<double>(k);
  const double lo = lo_ > 0 ? std::pow(lo_, 1.0 / kd) : 0.0;
  const double hi = std::pow(hi_, 1.0 / kd);
  v.lo_ = std::max(0.0, lo - kWiden * std::max(1.0, lo));
  v.hi_ = hi + kWiden * std::max(1.0, hi);
  v.mid_ = std::pow(mid_, 1.0 / kd);
  return v;
}

AlgebraicValue AlgebraicValue::power(std::uint64_t k) const {
  if (k == 0) return root_of(QuadSurd(1));
  if (is_exact()) {
    const std::uint64_t g = std::gcd(k, root_);
    return root_of(base_.pow(k / g), root_ / g);
  }
  const ExactMatrix mk = matrix_->pow(k);
  return spectral_value(mk, root_);
}

AlgebraicValue AlgebraicValue::scaled(const Rational& alpha) const {
  if (sgn(alpha) <= 0) throw InputError("scale factor must be positive");
  if (is_exact()) {
    Rational f = 1;
    for (std::uint64_t i = 0; i < root_; ++i) f *= alpha;
    return root_of(base_ * QuadSurd(f), root_);
  }
  Rational f = 1;
  for (std::uint64_t i = 0; i < root_; ++i) f *= alpha;
  return spectral_value(matrix_->scaled(f), root_);
}

AlgebraicValue spectral_radius_exact_2x2(const ExactMatrix& a) {
  if (a.dim() == 1) return AlgebraicValue::root_of(QuadSurd(abs(a(0, 0))));
  if (a.dim() != 2) throw InputError("spectral_radius_exact_2x2 requires a 2x2 matrix");
  const Rational tr = a.trace();
  const Rational det = a.det2();
  const Rational disc = tr * tr - 4 * det;
  if (sgn(disc) >= 0) {
    // real eigenvalues (tr +- sqrt(disc)) / 2
    return AlgebraicValue::root_of(QuadSurd(abs(tr) / 2, Rational(1, 2), disc));
  }
  // complex pair of modulus sqrt(det)
  return AlgebraicValue::root_of(QuadSurd::sqrt_of(det));
}

namespace {

struct ComponentValue {
  std::optional<AlgebraicValue> exact;
  std::optional<PerronEnclosure> numeric;
};

ComponentValue component_value(const ExactMatrix& a, const std::vector<std::size_t>& comp) {
  const ExactMatrix block = a.principal(comp);
  if (comp.size() <= 2) return {spectral_radius_exact_2x2(block), std::nullopt};
  const std::size_t k = comp.size();
  // weighted simple cycle: exactly one nonzero per row inside the component
  bool cycle = true;
  Rational weight = 1;
  for (std::size_t i = 0; i < k && cycle; ++i) {
    std::size_t nz = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(block(i, j)) != 0) {
        ++nz;
        weight *= block(i, j);
      }
    }
    cycle = nz == 1;
  }
  if (cycle) return {AlgebraicValue::root_of(QuadSurd(abs(weight)), k), std::nullopt};
  if (!block.nonneg()) {
    throw InputError("spectral radius of a signed irreducible block of size " + std::to_string(k) +
                     " is not supported");
  }
  Rational norm = std::min(norm_row_sum(block), norm_col_sum(block));
  Rational tol = kPerronTol * (norm > 1 ? norm : Rational(1));
  return {std::nullopt, spectral_radius_interval(block, tol)};
}

}  // namespace

AlgebraicValue spectral_value(const ExactMatrix& a, std::uint64_t root) {
  if (a.dim() <= 2) return spectral_radius_exact_2x2(a).nth_root(root);
  std::optional<AlgebraicValue> best_exact;
  std::optional<Interval> numeric;
  for (const auto& comp : support_components(a)) {
    if (comp.size() == 1 && sgn(a(comp[0], comp[0])) == 0) continue;
    ComponentValue cv = component_value(a, comp);
    if (cv.exact) {
      if (!best_exact || compare_values(*cv.exact, *best_exact) == Ordering::Greater) best_exact = cv.exact;
    } else {
      const Interval& b = cv.numeric->bounds;
      if (!numeric) {
        numeric = b;
      } else {
        if (b.lo > numeric->lo) numeric->lo = b.lo;
        if (b.hi > numeric->hi) numeric->hi = b.hi;
      }
    }
  }
  if (!best_exact && !numeric) return AlgebraicValue();
  if (!numeric) return best_exact->nth_root(root);
  if (best_exact) {
    const double hi = sgn(numeric->hi) > 0 ? std::exp(log_of(numeric->hi)) * (1 + 1e-12) : 0.0;
    if (hi < best_exact->lo()) return best_exact->nth_root(root);
    // the exact component's value enters the enclosure
    Rational elo(best_exact->lo());
    Rational ehi(best_exact->hi());
    if (elo > numeric->lo) numeric->lo = elo;
    if (ehi > numeric->hi) numeric->hi = ehi;
  }
  return AlgebraicValue::enclosed(a, root, *numeric);
}

Ordering compare_values(const AlgebraicValue& u, const AlgebraicValue& v) {
  if (u.hi() < v.lo()) return Ordering::Less;
  if (u.lo() > v.hi()) return Ordering::Greater;
  if (u.is_exact() && v.is_exact()) {
    if (u.root_index() == v.root_index() && u.base() == v.base()) return Ordering::Equal;
    const std::uint64_t g = std::gcd(u.root_index(), v.root_index());
    const QuadSurd x = u.base().pow(v.root_index() / g);
    const QuadSurd y = v.base().pow(u.root_index() / g);
    const int c = compare(x, y);
    return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
  }
  if (u.matrix() && v.matrix() && u.matrix()->dim() == v.matrix()->dim()) {
    const std::uint64_t g = std::gcd(u.root_index(), v.root_index());
    const ExactMatrix p = u.matrix()->pow(v.root_index() / g);
    const ExactMatrix q = v.matrix()->pow(u.root_index() / g);
    if (p == q || p == q.transpose()) return Ordering::Equal;
  }
  return Ordering::TieAtTolerance;
}

}  // namespace jsr
