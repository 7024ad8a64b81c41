#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "jsr/matrix.hpp"

namespace jsr {

// --- rational -> integer -----------------------------------------------------

struct ScaleResult {
  Integer alpha;      // least common multiple of all entry denominators
  MatrixSet scaled;   // alpha * set, integer entries
};

/// rho(set) = rho(alpha * set) / alpha.
ScaleResult scale_to_integer(const MatrixSet& set);

// --- integer -> binary -------------------------------------------------------

/// Each node i of the weighted graph is split into m_max copies (i, s); an
/// entry A(i,j) = k != 0 becomes the |k| * m_max edges (i, s) -> (j, t) for
/// s < |k| and every t, carrying sign(k).
struct BinaryExpansion {
  std::size_t m_max = 1;
  std::size_t source_dim = 0;
  bool signed_entries = false;
  MatrixSet expanded;

  /// Row/column index of the copy (i, s), both 0-based.
  std::size_t node(std::size_t i, std::size_t s) const { return i * m_max + s; }
};

/// Throws InputError for non-integer entries, and for negative entries
/// unless `allow_signed`.
BinaryExpansion integer_to_binary(const MatrixSet& set, bool allow_signed = false);

struct ProjectionCheck {
  ExactMatrix source_product;    // A_w
  ExactMatrix expanded_product;  // ~A_w
  bool column_group_sums = false;  // A_w(i,j) == sum_r ~A_w((i,r),(j,s)) for all s
  bool norms_equal = false;        // ||A_w||_1 == ||~A_w||_1 (column-sum norms)
  Rational source_norm;
  Rational expanded_norm;
};

/// Multiplies both sides out and checks the projection identities. The
/// column-sum identity holds for every expansion; the norm identity holds for
/// nonnegative sources (signed sources only guarantee source <= expanded).
ProjectionCheck integer_to_binary_project(const BinaryExpansion& exp, const MatrixSet& source, const ProductWord& w);

// --- m matrices -> pair --------------------------------------------------------

/// Two block matrices on (2m-1) x (2m-1) blocks of size n. Block indices
/// in the edge lists are 1-based like the underlying graphs:
///   G0: (i, i+1) for i = 1..2m-2, carrying I
///   G1: (m+i-1, i) for i = 1..m, carrying A_i
struct PairLift {
  std::size_t m_count = 0;
  std::size_t block_dim = 0;
  std::array<ExactMatrix, 2> lifted;
  std::vector<std::pair<std::size_t, std::size_t>> g0_edges;
  std::vector<std::pair<std::size_t, std::size_t>> g1_edges;

  std::size_t blocks() const { return 2 * m_count - 1; }
  /// The pair as a set; InputError when both lifted matrices coincide (m = 1 and A_1 = 0).
  MatrixSet as_set() const;
  /// Block (bi, bj), 0-based, of a lifted-dimension matrix.
  ExactMatrix block(const ExactMatrix& big, std::size_t bi, std::size_t bj) const;
};

PairLift set_to_pair(const MatrixSet& set);

/// Pair word of B_i = ~A0^(i-1) ~A1 ~A0^(m-i), 1 <= i <= m.
ProductWord b_word(const PairLift& lift, std::size_t i);

/// The product B_i; its block (m, m) equals A_i.
ExactMatrix build_B(const PairLift& lift, std::size_t i);

/// Concatenation of the B-words of w's letters (0-based source indices).
ProductWord lift_word(const PairLift& lift, const ProductWord& w);

struct BlockStructureCheck {
  bool at_most_one_block_per_row = false;
  bool blocks_match_paths = false;      // each nonzero block equals the product read off the graph walk
  bool factor_counts_in_range = false;  // k-1, k or k+1 source factors when |w| = k m
  std::size_t nonzero_blocks = 0;
  bool ok() const { return at_most_one_block_per_row && blocks_match_paths && factor_counts_in_range; }
};

/// Multiplies w out over the pair and compares every block row against the
/// unique walk through G0/G1 that the word spells. Requires |w| to be a
/// multiple of m.
BlockStructureCheck check_block_structure(const PairLift& lift, const MatrixSet& source, const ProductWord& w);

}  // namespace jsr
