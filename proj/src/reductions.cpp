#include "jsr/reductions.hpp"

#include <algorithm>
#include <optional>

#include "jsr/errors.hpp"

namespace jsr {

ScaleResult scale_to_integer(const MatrixSet& set) {
  Integer alpha = 1;
  for (const auto& m : set) {
    const auto e = m.entries();
    Integer l = denominator_lcm(e.data(), e.data() + e.size());
    mpz_lcm(alpha.get_mpz_t(), alpha.get_mpz_t(), l.get_mpz_t());
  }
  return {alpha, set.scaled(Rational(alpha))};
}

// -----------------------------------------------------------------------------

BinaryExpansion integer_to_binary(const MatrixSet& set, bool allow_signed) {
  if (!set.is_integer()) throw InputError("integer_to_binary requires integer entries (scale first)");
  const bool has_negative = !set.nonneg();
  if (has_negative && !allow_signed) throw InputError("negative entries need the signed expansion");

  Integer largest = 0;
  for (const auto& m : set)
    for (const auto& q : m.entries()) largest = std::max(largest, Integer(abs(q.get_num())));
  if (!largest.fits_ulong_p()) throw InputError("entries too large for the binary expansion");
  const std::size_t mm = std::max<std::size_t>(1, largest.get_ui());
  const std::size_t n = set.dim();

  std::vector<ExactMatrix> out;
  out.reserve(set.size());
  for (const auto& a : set) {
    std::vector<Rational> e(n * mm * n * mm);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& k = a(i, j);
        if (sgn(k) == 0) continue;
        const std::size_t copies = Integer(abs(k.get_num())).get_ui();
        const int sign = sgn(k) > 0 ? 1 : -1;
        for (std::size_t s = 0; s < copies; ++s)
          for (std::size_t t = 0; t < mm; ++t) e[(i * mm + s) * (n * mm) + (j * mm + t)] = sign;
      }
    }
    out.emplace_back(n * mm, std::move(e));
  }
  BinaryExpansion b{mm, n, has_negative, MatrixSet(std::move(out))};
  return b;
}

ProjectionCheck integer_to_binary_project(const BinaryExpansion& exp, const MatrixSet& source, const ProductWord& w) {
  if (source.size() != exp.expanded.size() || source.dim() != exp.source_dim) {
    throw InputError("expansion does not belong to this source set");
  }
  ProjectionCheck c{evaluate_word(source, w), evaluate_word(exp.expanded, w), true, false, 0, 0};
  const std::size_t n = exp.source_dim;
  const std::size_t mm = exp.m_max;
  for (std::size_t i = 0; i < n && c.column_group_sums; ++i) {
    for (std::size_t j = 0; j < n && c.column_group_sums; ++j) {
      for (std::size_t s = 0; s < mm; ++s) {
        Rational sum = 0;
        for (std::size_t r = 0; r < mm; ++r) sum += c.expanded_product(exp.node(i, r), exp.node(j, s));
        if (sum != c.source_product(i, j)) {
          c.column_group_sums = false;
          break;
        }
      }
    }
  }
  c.source_norm = norm_col_sum(c.source_product);
  c.expanded_norm = norm_col_sum(c.expanded_product);
  c.norms_equal = c.source_norm == c.expanded_norm;
  return c;
}

// -----------------------------------------------------------------------------

MatrixSet PairLift::as_set() const { return MatrixSet({lifted[0], lifted[1]}); }

ExactMatrix PairLift::block(const ExactMatrix& big, std::size_t bi, std::size_t bj) const {
  std::vector<Rational> e(block_dim * block_dim);
  for (std::size_t r = 0; r < block_dim; ++r)
    for (std::size_t c = 0; c < block_dim; ++c) e[r * block_dim + c] = big(bi * block_dim + r, bj * block_dim + c);
  return ExactMatrix(block_dim, std::move(e));
}

PairLift set_to_pair(const MatrixSet& set) {
  PairLift p;
  p.m_count = set.size();
  p.block_dim = set.dim();
  const std::size_t m = p.m_count;
  const std::size_t n = p.block_dim;
  const std::size_t nb = 2 * m - 1;
  const std::size_t big = nb * n;

  std::vector<Rational> a0(big * big), a1(big * big);
  for (std::size_t i = 1; i <= 2 * m - 2; ++i) {
    p.g0_edges.emplace_back(i, i + 1);
    const std::size_t bi = i - 1, bj = i;
    for (std::size_t r = 0; r < n; ++r) a0[(bi * n + r) * big + (bj * n + r)] = 1;
  }
  for (std::size_t i = 1; i <= m; ++i) {
    p.g1_edges.emplace_back(m + i - 1, i);
    const std::size_t bi = m + i - 2, bj = i - 1;
    const ExactMatrix& ai = set[i - 1];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a1[(bi * n + r) * big + (bj * n + c)] = ai(r, c);
  }
  p.lifted = {ExactMatrix(big, std::move(a0)), ExactMatrix(big, std::move(a1))};
  return p;
}

ProductWord b_word(const PairLift& lift, std::size_t i) {
  if (i < 1 || i > lift.m_count) {
    throw InputError("B index " + std::to_string(i) + " out of range 1.." + std::to_string(lift.m_count));
  }
  std::vector<std::size_t> w(lift.m_count, 0);
  w[i - 1] = 1;
  return ProductWord(std::move(w));
}

ExactMatrix build_B(const PairLift& lift, std::size_t i) {
  const ProductWord w = b_word(lift, i);
  ExactMatrix p = lift.lifted[w[0]];
  for (std::size_t k = 1; k < w.size(); ++k) p = p * lift.lifted[w[k]];
  return p;
}

ProductWord lift_word(const PairLift& lift, const ProductWord& w) {
  ProductWord out;
  for (std::size_t letter : w) {
    if (letter >= lift.m_count) throw InputError("source letter out of range in lift_word");
    out = out + b_word(lift, letter + 1);
  }
  return out;
}

BlockStructureCheck check_block_structure(const PairLift& lift, const MatrixSet& source, const ProductWord& w) {
  const std::size_t m = lift.m_count;
  if (w.empty() || w.size() % m != 0) throw InputError("pair word length must be a positive multiple of m");
  for (std::size_t letter : w)
    if (letter > 1) throw InputError("pair words use letters 0 and 1 only");
  const std::size_t k = w.size() / m;
  const std::size_t nb = lift.blocks();

  ExactMatrix prod = lift.lifted[w[0]];
  for (std::size_t q = 1; q < w.size(); ++q) prod = prod * lift.lifted[w[q]];

  BlockStructureCheck res{true, true, true, 0};
  for (std::size_t start = 1; start <= nb; ++start) {
    // walk the unique path leaving `start`
    std::optional<std::size_t> node = start;
    std::vector<std::size_t> factors;  // 0-based source indices
    for (std::size_t letter : w) {
      const std::size_t b = *node;
      if (letter == 0) {
        node = b <= 2 * m - 2 ? std::optional<std::size_t>(b + 1) : std::nullopt;
      } else if (b >= m) {
        const std::size_t i = b - m + 1;
        factors.push_back(i - 1);
        node = i;
      } else {
        node = std::nullopt;
      }
      if (!node) break;
    }

    std::size_t nonzero_in_row = 0;
    for (std::size_t bj = 0; bj < nb; ++bj) {
      const ExactMatrix blk = lift.block(prod, start - 1, bj);
      if (!blk.is_zero()) ++nonzero_in_row;
      ExactMatrix expected(lift.block_dim);
      if (node && *node == bj + 1) {
        expected = ExactMatrix::identity(lift.block_dim);
        for (std::size_t f : factors) expected = expected * source[f];
      }
      if (!(blk == expected)) res.blocks_match_paths = false;
    }
    res.nonzero_blocks += nonzero_in_row;
    if (nonzero_in_row > 1) res.at_most_one_block_per_row = false;
    if (node) {
      const std::size_t f = factors.size();
      if (f + 1 < k || f > k + 1) res.factor_counts_in_range = false;
    }
  }
  return res;
}

}  // namespace jsr
