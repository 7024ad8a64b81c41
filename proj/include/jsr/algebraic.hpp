#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "jsr/matrix.hpp"
#include "jsr/perron.hpp"
#include "jsr/surd.hpp"

namespace jsr {

enum class Ordering { Less, Equal, Greater, TieAtTolerance };

std::string_view to_string(Ordering o);

/// A nonnegative real of the form rho(A)^(1/t).
///
/// Exact form: base^(1/root) with base a nonnegative quadratic surd. This
/// covers every spectral radius of a 2x2 rational matrix (the larger root
/// magnitude of x^2 - tr x + det) and of larger matrices whose strong
/// components are 1x1, 2x2 or weighted cycles.
///
/// Enclosed form: rho(matrix)^(1/root), known only through [lo, hi].
///
/// Both forms carry a floating enclosure [lo, hi] widened outward so that it
/// always contains the true value.
class AlgebraicValue {
 public:
  /// The value 0.
  AlgebraicValue();

  /// base^(1/root); base must be >= 0 and root >= 1. Perfect powers are
  /// reduced, so 4^(1/4) is stored as sqrt(2).
  static AlgebraicValue root_of(const QuadSurd& base, std::uint64_t root = 1);
  /// rho(m)^(1/root) with `rho` a rigorous enclosure of rho(m).
  static AlgebraicValue enclosed(const ExactMatrix& m, std::uint64_t root, const Interval& rho);

  bool is_exact() const noexcept { return !matrix_.has_value(); }
  bool is_zero() const noexcept { return is_exact() && base_.sign() == 0; }
  const QuadSurd& base() const noexcept { return base_; }
  std::uint64_t root_index() const noexcept { return root_; }
  const std::optional<ExactMatrix>& matrix() const noexcept { return matrix_; }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double decimal() const noexcept { return mid_; }

  /// "sqrt(2)", "4^(1/5)", "((3+sqrt(13))/2)^(1/4)"; enclosed values render
  /// as "rho([[..]])^(1/t)".
  std::string exact_string() const;
  /// Fixed 12-digit decimal; always inside [lo, hi].
  std::string decimal_string() const;

  /// value^(1/k)
  AlgebraicValue nth_root(std::uint64_t k) const;
  /// value^k
  AlgebraicValue power(std::uint64_t k) const;
  /// alpha * value for rational alpha > 0
  AlgebraicValue scaled(const Rational& alpha) const;

 private:
  void set_enclosure_from_log(double log_value);

  QuadSurd base_;
  std::uint64_t root_ = 1;
  std::optional<ExactMatrix> matrix_;
  double lo_ = 0.0;
  double hi_ = 0.0;
  double mid_ = 0.0;
};

/// Larger root magnitude of x^2 - tr(A) x + det(A); requires dim(A) == 2
/// (dim 1 is accepted and gives |a|).
AlgebraicValue spectral_radius_exact_2x2(const ExactMatrix& a);

/// rho(a)^(1/root). Exact whenever the strong components of `a` are 1x1,
/// 2x2 or simple weighted cycles; otherwise a Collatz-Wielandt enclosure
/// (nonnegative blocks only; InputError for signed blocks of size > 2).
AlgebraicValue spectral_value(const ExactMatrix& a, std::uint64_t root = 1);

/// Orders u and v. Exact when both are in exact form (reduced to comparing
/// base_u^(r_v) with base_v^(r_u), i.e. rho(A^s) against rho(B^t));
/// otherwise decided by disjoint enclosures, by equality of the matching
/// matrix powers (up to transposition), or reported as TieAtTolerance.
Ordering compare_values(const AlgebraicValue& u, const AlgebraicValue& v);

}  // namespace jsr
