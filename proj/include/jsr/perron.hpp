#pragma once

#include <cstddef>
#include <vector>

#include "jsr/matrix.hpp"
#include "jsr/rational.hpp"

namespace jsr {

/// Closed rational interval [lo, hi] known to contain its target.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

struct PerronEnclosure {
  Interval bounds;
  bool converged = true;  // width <= requested tolerance
  std::size_t iterations = 0;
};

/// Strongly connected components of the support graph of `a` (edge i->j
/// iff a(i,j) != 0), each listed in increasing node order.
std::vector<std::vector<std::size_t>> support_components(const ExactMatrix& a);

/// Rigorous enclosure of the Perron root of a nonnegative matrix.
///
/// The spectral radius is the maximum over the irreducible diagonal blocks
/// (strong components). On each block a power iteration on B + I is run in
/// floating point only to produce a positive test vector x; the bounds
///   min_i (Bx)_i / x_i  <=  rho(B)  <=  max_i (Bx)_i / x_i
/// are then evaluated in exact arithmetic on that (dyadic rational) x.
/// Iteration stops once the width is <= tol or after 64*n rounds, in which
/// case `converged` is false and the best interval seen is returned.
///
/// Throws InputError when `a` has a negative entry.
PerronEnclosure spectral_radius_interval(const ExactMatrix& a, const Rational& tol);

}  // namespace jsr
