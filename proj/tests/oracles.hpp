#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's spectral or enumeration code.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "jsr/matrix.hpp"
#include "jsr/rational.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense to_dense(const jsr::ExactMatrix& a) {
  Dense d(a.dim(), std::vector<double>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) d[i][j] = a(i, j).get_d();
  return d;
}

inline Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// Spectral radius by Gelfand's formula: ||A^(2^k)||^(1/2^k) with k = 40,
/// renormalizing after every squaring and accumulating the log scale.
inline double gelfand_rho(const jsr::ExactMatrix& a) {
  Dense m = to_dense(a);
  double log_scale = 0.0;
  const int k = 40;
  for (int s = 0; s < k; ++s) {
    double f = 0.0;
    for (const auto& row : m)
      for (double x : row) f = std::max(f, std::abs(x));
    if (f == 0.0) return 0.0;
    for (auto& row : m)
      for (double& x : row) x /= f;
    log_scale = 2.0 * (log_scale + std::log(f));
    m = mul(m, m);
  }
  double f = 0.0;
  for (const auto& row : m)
    for (double x : row) f = std::max(f, std::abs(x));
  if (f == 0.0) return 0.0;
  return std::exp((log_scale + std::log(f)) / std::ldexp(1.0, k));
}

/// Largest eigenvalue magnitude of a 2x2 matrix from the quadratic formula.
inline double rho2(const jsr::ExactMatrix& a) {
  const double t = jsr::Rational(a(0, 0) + a(1, 1)).get_d();
  const double d = jsr::Rational(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)).get_d();
  const std::complex<double> disc = std::sqrt(std::complex<double>(t * t - 4 * d));
  return std::max(std::abs((t + disc) / 2.0), std::abs((t - disc) / 2.0));
}

/// Naive exact product, multiplied right to left to differ from the library.
inline jsr::ExactMatrix product(const std::vector<jsr::ExactMatrix>& ms, const std::vector<std::size_t>& w) {
  const std::size_t n = ms.front().dim();
  std::vector<jsr::Rational> acc(n * n);
  for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto& a = ms[*it];
    std::vector<jsr::Rational> next(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        jsr::Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a(i, k) * acc[k * n + j];
        next[i * n + j] = s;
      }
    acc = std::move(next);
  }
  return jsr::ExactMatrix(n, std::move(acc));
}

/// Calls f(word) for every word of length t over m letters, in lexicographic order.
template <class F>
void for_each_word(std::size_t m, std::size_t t, F&& f) {
  std::vector<std::size_t> w(t, 0);
  while (true) {
    f(w);
    std::size_t k = t;
    while (k > 0 && w[k - 1] + 1 == m) w[--k] = 0;
    if (k == 0) return;
    ++w[k - 1];
  }
}

/// max over |w| <= depth of rho(A_w)^(1/|w|) by exhaustive double enumeration.
inline double brute_lower(const std::vector<jsr::ExactMatrix>& ms, std::size_t depth) {
  double best = 0.0;
  for (std::size_t t = 1; t <= depth; ++t)
    for_each_word(ms.size(), t, [&](const std::vector<std::size_t>& w) {
      const auto p = product(ms, w);
      const double r = p.dim() == 2 ? rho2(p) : gelfand_rho(p);
      best = std::max(best, std::pow(r, 1.0 / static_cast<double>(t)));
    });
  return best;
}

/// The 16 binary 2x2 matrices as 4-bit codes (bit 3 = entry (0,0)).
inline jsr::ExactMatrix binary2(unsigned code) {
  return jsr::ExactMatrix::from_rows(
      {{(code >> 3) & 1, (code >> 2) & 1}, {(code >> 1) & 1, code & 1}});
}

inline unsigned transpose_code(unsigned c) {
  const unsigned a = (c >> 3) & 1, b = (c >> 2) & 1, d = (c >> 1) & 1, e = c & 1;
  return (a << 3) | (d << 2) | (b << 1) | e;
}

inline unsigned conjugate_code(unsigned c) {
  // S A S reverses both row and column order: (i,j) -> (1-i,1-j)
  const unsigned a = (c >> 3) & 1, b = (c >> 2) & 1, d = (c >> 1) & 1, e = c & 1;
  return (e << 3) | (d << 2) | (b << 1) | a;
}

/// Number of orbits of unordered pairs of distinct binary 2x2 matrices under
/// transpose-both, conjugate-both-by-S (member order is irrelevant for
/// unordered pairs). Union-find over the 120 pairs.
inline std::size_t binary_pair_orbits() {
  std::map<std::pair<unsigned, unsigned>, std::size_t> id;
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = a + 1; b < 16; ++b) id.emplace(std::make_pair(a, b), id.size());
  std::vector<std::size_t> parent(id.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto key = [](unsigned a, unsigned b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  for (const auto& [p, i] : id) {
    for (auto g : {transpose_code, conjugate_code}) {
      const std::size_t j = id.at(key(g(p.first), g(p.second)));
      parent[find(i)] = find(j);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
  return roots.size();
}

inline jsr::ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi, long den = 1) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> dd(1, den);
  std::vector<jsr::Rational> e(n * n);
  for (auto& q : e) {
    q = jsr::Rational(num(rng), dd(rng));
    q.canonicalize();
  }
  return jsr::ExactMatrix(n, std::move(e));
}

/// Random set of `count` distinct matrices.
inline std::vector<jsr::ExactMatrix> random_members(std::mt19937_64& rng, std::size_t count, std::size_t n, long lo,
                                                    long hi, long den = 1) {
  std::vector<jsr::ExactMatrix> ms;
  while (ms.size() < count) {
    auto m = random_matrix(rng, n, lo, hi, den);
    if (std::find(ms.begin(), ms.end(), m) == ms.end()) ms.push_back(std::move(m));
  }
  return ms;
}

inline std::vector<std::size_t> random_word(std::mt19937_64& rng, std::size_t m, std::size_t len) {
  std::uniform_int_distribution<std::size_t> d(0, m - 1);
  std::vector<std::size_t> w(len);
  for (auto& x : w) x = d(rng);
  return w;
}

}  // namespace oracle
