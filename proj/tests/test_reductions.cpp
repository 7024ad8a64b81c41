#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "jsr/bounds.hpp"
#include "jsr/errors.hpp"
#include "jsr/reductions.hpp"
#include "oracles.hpp"

using namespace jsr;

namespace {

ExactMatrix M(std::initializer_list<std::initializer_list<long>> rows) { return ExactMatrix::from_rows(rows); }
ExactMatrix Q(std::size_t n, std::initializer_list<const char*> entries) {
  std::vector<Rational> e;
  for (const char* s : entries) e.push_back(parse_rational(s));
  return ExactMatrix(n, std::move(e));
}
AlgebraicValue V(const QuadSurd& base, std::uint64_t root = 1) { return AlgebraicValue::root_of(base, root); }

bool ge(const AlgebraicValue& u, const AlgebraicValue& v) {
  const Ordering o = compare_values(u, v);
  return o == Ordering::Greater || o == Ordering::Equal || o == Ordering::TieAtTolerance;
}

// Block pattern of the m = 5 lift: "I" identity, "k" for A_k, "." zero.
const char* const kLift0[9] = {".I.......", "..I......", "...I.....", "....I....", ".....I...",
                               "......I..", ".......I.", "........I", "........."};
const char* const kLift1[9] = {".........", ".........", ".........", ".........", "1........",
                               ".2.......", "..3......", "...4.....", "....5...."};

}  // namespace

TEST_CASE("scale_to_integer examples") {
  ScaleResult r = scale_to_integer(MatrixSet({Q(2, {"1/2", "0", "0", "1/3"})}));
  CHECK(r.alpha == 6);
  CHECK(r.scaled[0] == M({{3, 0}, {0, 2}}));

  const MatrixSet ints({M({{1, 2}, {0, 1}}), M({{0, 1}, {1, 0}})});
  r = scale_to_integer(ints);
  CHECK(r.alpha == 1);
  CHECK(r.scaled == ints);

  r = scale_to_integer(MatrixSet({Q(2, {"1/2", "1/2", "0", "1/2"}), Q(2, {"0", "1/3", "1/3", "0"})}));
  CHECK(r.alpha == 6);
  CHECK(r.scaled[0] == M({{3, 3}, {0, 3}}));
  CHECK(r.scaled[1] == M({{0, 2}, {2, 0}}));
}

TEST_CASE("scale equivariance of finite-depth bounds on random rational sets") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const MatrixSet set(oracle::random_members(rng, 2, 2 + trial % 2, 0, 4, 6));
    const ScaleResult r = scale_to_integer(set);
    CHECK(r.scaled.is_integer());
    const BoundsReport a = bounds_report(set, 4);
    const BoundsReport b = bounds_report(r.scaled, 4);
    for (std::size_t t = 0; t < 4; ++t) {
      const Ordering lo = compare_values(a.levels[t].lower.scaled(Rational(r.alpha)), b.levels[t].lower);
      CHECK((lo == Ordering::Equal || (lo == Ordering::TieAtTolerance && !b.levels[t].lower.is_exact())));
      Rational scale = 1;
      for (std::size_t k = 0; k <= t; ++k) scale *= Rational(r.alpha);
      CHECK(a.levels[t].max_norm * scale == b.levels[t].max_norm);
    }
  }
}

TEST_CASE("integer_to_binary examples") {
  BinaryExpansion e = integer_to_binary(MatrixSet({M({{2}})}));
  CHECK(e.m_max == 2);
  CHECK(e.expanded[0] == M({{1, 1}, {1, 1}}));

  e = integer_to_binary(MatrixSet({M({{0, 2}, {1, 0}})}));
  CHECK(e.m_max == 2);
  CHECK(e.expanded[0] == M({{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 0, 0, 0}}));

  const MatrixSet bin({M({{0, 1}, {1, 1}}), M({{1, 0}, {0, 0}})});
  e = integer_to_binary(bin);
  CHECK(e.m_max == 1);
  CHECK(e.expanded == bin);

  e = integer_to_binary(MatrixSet({ExactMatrix(2)}));
  CHECK(e.m_max == 1);

  CHECK_THROWS_AS(integer_to_binary(MatrixSet({Q(1, {"1/2"})})), InputError);
  CHECK_THROWS_AS(integer_to_binary(MatrixSet({M({{-1}})})), InputError);
  e = integer_to_binary(MatrixSet({M({{-2, 1}, {0, 1}})}), true);
  CHECK(e.signed_entries);
  for (const auto& q : e.expanded[0].entries()) CHECK((q == -1 || q == 0 || q == 1));
}

TEST_CASE("expansion preserves the spectral radius on the examples") {
  const BinaryExpansion e = integer_to_binary(MatrixSet({M({{2}})}));
  CHECK(compare_values(spectral_value(e.expanded[0]), V(QuadSurd(2))) == Ordering::Equal);
  const BinaryExpansion f = integer_to_binary(MatrixSet({M({{0, 2}, {1, 0}})}));
  const AlgebraicValue v = spectral_value(f.expanded[0]);
  CHECK(v.lo() <= std::sqrt(2.0));
  CHECK(v.hi() >= std::sqrt(2.0));
  CHECK(v.hi() - v.lo() < 1e-9);
}

TEST_CASE("integer_to_binary_project examples") {
  const MatrixSet src({M({{2}})});
  const BinaryExpansion e = integer_to_binary(src);
  const ProjectionCheck c = integer_to_binary_project(e, src, {0, 0});
  CHECK(c.source_product == M({{4}}));
  CHECK(c.expanded_product == M({{2, 2}, {2, 2}}));
  CHECK(c.column_group_sums);
  CHECK(c.norms_equal);
  CHECK(c.source_norm == 4);
  CHECK(c.expanded_norm == 4);
}

TEST_CASE("expansion identities for every word of length <= 5 over random nonnegative integer sets") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const MatrixSet src(oracle::random_members(rng, 2, n, 0, 3));
    const BinaryExpansion e = integer_to_binary(src);
    CHECK(e.expanded.is_binary());
    for (std::size_t t = 1; t <= 5; ++t)
      oracle::for_each_word(2, t, [&](const std::vector<std::size_t>& w) {
        const ProjectionCheck c = integer_to_binary_project(e, src, ProductWord(w));
        CHECK(c.column_group_sums);
        CHECK(c.norms_equal);
      });
  }
}

TEST_CASE("signed expansion: column-group sums hold, norms only bound from above") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const MatrixSet src(oracle::random_members(rng, 2, 2, -3, 3));
    const BinaryExpansion e = integer_to_binary(src, true);
    for (std::size_t t = 1; t <= 4; ++t) {
      const ProjectionCheck c = integer_to_binary_project(e, src, ProductWord(oracle::random_word(rng, 2, t)));
      CHECK(c.column_group_sums);
      CHECK(c.source_norm <= c.expanded_norm);
      if (t == 1) CHECK(c.norms_equal);
    }
  }
}

TEST_CASE("set_to_pair examples") {
  const ExactMatrix a = M({{1, 2}, {3, 4}});
  PairLift l = set_to_pair(MatrixSet({a}));
  CHECK(l.m_count == 1);
  CHECK(l.lifted[0] == ExactMatrix(2));
  CHECK(l.lifted[1] == a);
  CHECK(build_B(l, 1) == a);
  CHECK(lift_word(l, {0}) == ProductWord{1});
  CHECK_THROWS_AS(set_to_pair(MatrixSet({ExactMatrix(2)})).as_set(), InputError);

  l = set_to_pair(MatrixSet({M({{2}}), M({{3}})}));
  CHECK(l.lifted[0] == M({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(l.lifted[1] == M({{0, 0, 0}, {2, 0, 0}, {0, 3, 0}}));
  CHECK(b_word(l, 1) == ProductWord{1, 0});
  CHECK(b_word(l, 2) == ProductWord{0, 1});
  CHECK(build_B(l, 1)(1, 1) == 2);
  CHECK(lift_word(l, {0, 1}) == ProductWord{1, 0, 0, 1});
  CHECK_THROWS_AS(build_B(l, 3), InputError);
  CHECK_THROWS_AS(build_B(l, 0), InputError);
}

TEST_CASE("m = 5 lift matches the displayed block pattern") {
  std::mt19937_64 rng(83);
  const std::size_t n = 2;
  const auto ms = oracle::random_members(rng, 5, n, 1, 9);
  const PairLift l = set_to_pair(MatrixSet(ms));
  REQUIRE(l.lifted[0].dim() == 9 * n);
  for (int which = 0; which < 2; ++which) {
    const char* const* pattern = which == 0 ? kLift0 : kLift1;
    for (std::size_t bi = 0; bi < 9; ++bi)
      for (std::size_t bj = 0; bj < 9; ++bj) {
        const char c = pattern[bi][bj];
        const ExactMatrix blk = l.block(l.lifted[which], bi, bj);
        if (c == '.')
          CHECK(blk.is_zero());
        else if (c == 'I')
          CHECK(blk == ExactMatrix::identity(n));
        else
          CHECK(blk == ms[static_cast<std::size_t>(c - '1')]);
      }
  }
  CHECK(l.g0_edges.size() == 8);
  CHECK(l.g1_edges.size() == 5);
  CHECK(l.g1_edges[2] == std::make_pair<std::size_t, std::size_t>(7, 3));
}

TEST_CASE("B_i carries A_i in block (m, m) and lifted words carry A_w") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + trial % 5;
    const std::size_t n = 1 + trial % 2;
    const auto ms = oracle::random_members(rng, m, n, -2, 3);
    const MatrixSet src(ms);
    const PairLift l = set_to_pair(src);
    for (std::size_t i = 1; i <= m; ++i) CHECK(l.block(build_B(l, i), m - 1, m - 1) == ms[i - 1]);
    const ProductWord w(oracle::random_word(rng, m, 1 + trial % 3));
    const ProductWord lw = lift_word(l, w);
    CHECK(lw.size() == m * w.size());
    const ExactMatrix big = evaluate_word(MatrixSet({l.lifted[0], l.lifted[1]}), lw);
    CHECK(l.block(big, m - 1, m - 1) == evaluate_word(src, w));
  }
}

TEST_CASE("lifted matrices have outdegree and indegree at most one in blocks") {
  std::mt19937_64 rng(97);
  for (std::size_t m = 1; m <= 5; ++m) {
    const PairLift l = set_to_pair(MatrixSet(oracle::random_members(rng, m, 2, 1, 4)));
    for (const auto& big : l.lifted)
      for (std::size_t b = 0; b < l.blocks(); ++b) {
        std::size_t row = 0, col = 0;
        for (std::size_t c = 0; c < l.blocks(); ++c) {
          row += !l.block(big, b, c).is_zero();
          col += !l.block(big, c, b).is_zero();
        }
        CHECK(row <= 1);
        CHECK(col <= 1);
      }
  }
}

TEST_CASE("block structure of pair products") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + trial % 4;
    const MatrixSet src(oracle::random_members(rng, m, 2, 0, 3));
    const PairLift l = set_to_pair(src);
    const std::size_t k = 1 + trial % 3;
    CHECK(check_block_structure(l, src, ProductWord(oracle::random_word(rng, 2, k * m))).ok());
    CHECK(check_block_structure(l, src, lift_word(l, ProductWord(oracle::random_word(rng, m, k)))).ok());
  }
  const MatrixSet two({M({{2}}), M({{3}})});
  const PairLift l = set_to_pair(two);
  const BlockStructureCheck dead = check_block_structure(l, two, {1, 1, 1, 1});
  CHECK(dead.ok());
  CHECK(dead.nonzero_blocks == 0);
  CHECK_THROWS_AS(check_block_structure(l, two, {1, 1, 1}), InputError);
}

TEST_CASE("pair lift value relation at finite depth") {
  const MatrixSet two({M({{2}}), M({{3}})});
  const MatrixSet pair = set_to_pair(two).as_set();
  const BoundsReport r = bounds_report(pair, 4);
  CHECK(compare_values(r.best_lower, V(QuadSurd::sqrt_of(3))) == Ordering::Equal);
  CHECK(compare_values(r.best_lower.power(2), V(QuadSurd(3))) == Ordering::Equal);

  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t m = 2 + trial % 2;
    const MatrixSet src(oracle::random_members(rng, m, 2, 0, 2));
    const std::size_t T = 2;
    const BoundsReport base = bounds_report(src, T);
    const BoundsReport lifted = bounds_report(set_to_pair(src).as_set(), m * T);
    CHECK(ge(lifted.best_lower, base.best_lower.nth_root(m)));
  }
}
