#include "jsr/perron.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "jsr/errors.hpp"

namespace jsr {

std::vector<std::vector<std::size_t>> support_components(const ExactMatrix& a) {
  const std::size_t n = a.dim();
  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < n) {
        const std::size_t w = f.next++;
        if (sgn(a(f.v, w)) == 0) continue;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

namespace {

// Exact Collatz-Wielandt bounds for x > 0.
Interval collatz_wielandt(const ExactMatrix& b, const std::vector<Rational>& x) {
  const std::size_t k = b.dim();
  Interval out;
  Rational s;
  Rational tmp;
  for (std::size_t i = 0; i < k; ++i) {
    s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(b(i, j)) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), b(i, j).get_mpq_t(), x[j].get_mpq_t());
      s += tmp;
    }
    s /= x[i];
    if (i == 0 || s < out.lo) out.lo = s;
    if (i == 0 || s > out.hi) out.hi = s;
  }
  return out;
}

PerronEnclosure irreducible_block(const ExactMatrix& b, const Rational& tol, std::size_t cap) {
  const std::size_t k = b.dim();
  PerronEnclosure res;
  if (k == 1) {
    res.bounds = {b(0, 0), b(0, 0)};
    return res;
  }
  double scale = 0.0;
  for (const auto& q : b.entries()) scale = std::max(scale, to_double(q));
  std::vector<double> m(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i * k + j] = to_double(b(i, j)) / scale + (i == j ? 1.0 : 0.0);

  std::vector<double> x(k, 1.0), y(k);
  std::vector<Rational> xr(k);
  bool have = false;
  for (std::size_t it = 0; it <= cap; ++it) {
    for (std::size_t i = 0; i < k; ++i) xr[i] = Rational(std::max(x[i], 0x1p-900));
    const Interval cw = collatz_wielandt(b, xr);
    if (!have || cw.lo > res.bounds.lo) res.bounds.lo = cw.lo;
    if (!have || cw.hi < res.bounds.hi) res.bounds.hi = cw.hi;
    have = true;
    res.iterations = it;
    if (res.bounds.width() <= tol) {
      res.converged = true;
      return res;
    }
    double mx = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < k; ++j) s += m[i * k + j] * x[j];
      y[i] = s;
      mx = std::max(mx, s);
    }
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / mx;
  }
  res.converged = false;
  return res;
}

}  // namespace

PerronEnclosure spectral_radius_interval(const ExactMatrix& a, const Rational& tol) {
  if (!a.nonneg()) throw InputError("spectral_radius_interval requires a nonnegative matrix");
  PerronEnclosure out;
  out.bounds = {0, 0};
  const std::size_t cap = 64 * a.dim();
  for (const auto& comp : support_components(a)) {
    const ExactMatrix block = a.principal(comp);
    if (comp.size() == 1 && sgn(block(0, 0)) == 0) continue;
    const PerronEnclosure e = irreducible_block(block, tol, cap);
    if (e.bounds.lo > out.bounds.lo) out.bounds.lo = e.bounds.lo;
    if (e.bounds.hi > out.bounds.hi) out.bounds.hi = e.bounds.hi;
    out.iterations = std::max(out.iterations, e.iterations);
  }
  out.converged = out.bounds.width() <= tol;
  return out;
}

}  // namespace jsr
