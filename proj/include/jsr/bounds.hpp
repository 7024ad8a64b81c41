#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jsr/algebraic.hpp"
#include "jsr/matrix.hpp"

namespace jsr {

enum class NormKind { RowSum, ColSum };

std::string_view to_string(NormKind n);
NormKind parse_norm(std::string_view text);
Rational matrix_norm(const ExactMatrix& a, NormKind kind);

/// JSR_PRODUCT_BUDGET from the environment, else 10^7.
std::uint64_t default_product_budget();

struct EnumerationOptions {
  NormKind norm = NormKind::RowSum;
  /// Merge identical products and, for nonnegative sets, drop products that
  /// are entrywise dominated by another product of the same length.
  bool prune = true;
  std::uint64_t product_budget = default_product_budget();
  /// OpenMP worker count; 0 uses the runtime default.
  int jobs = 0;
};

/// Bracketing quantities at a single product length t.
struct LevelBounds {
  std::size_t depth = 0;
  AlgebraicValue lower;  // max rho(A_w)^(1/t), |w| = t
  ProductWord lower_witness;
  std::vector<ProductWord> lower_ties;  // tied with the witness at tolerance
  Rational max_norm;     // max ||A_w||, |w| = t
  AlgebraicValue upper;  // max_norm^(1/t)
  ProductWord upper_witness;
  std::size_t products = 0;
};

struct BoundsReport {
  std::string set_digest;
  std::size_t depth = 0;
  NormKind norm = NormKind::RowSum;
  bool pruned = true;
  std::vector<LevelBounds> levels;  // levels[t-1] holds depth t

  AlgebraicValue best_lower;  // cumulative max of the per-depth lower bounds
  ProductWord best_witness;
  std::vector<ProductWord> best_ties;
  AlgebraicValue best_upper;  // running min of the per-depth upper bounds
  std::size_t best_upper_depth = 0;
  std::uint64_t products_total = 0;

  /// Lower and upper brackets meet exactly.
  bool certified() const;
};

/// Breadth-first enumeration of Sigma^t, one depth per call.
///
/// Products at each depth are kept in lexicographic word order, so every
/// "first maximum" below is the lexicographically smallest witness. The
/// expansion, pruning and evaluation loops run in parallel; the reductions
/// are sequential in word order and therefore independent of scheduling.
class WordEnumerator {
 public:
  struct Node {
    ExactMatrix product;
    ProductWord word;
  };

  explicit WordEnumerator(const MatrixSet& set, EnumerationOptions opts = {});

  LevelBounds next_level();
  std::size_t depth() const noexcept { return depth_; }
  const std::vector<Node>& frontier() const noexcept { return frontier_; }
  std::uint64_t products_total() const noexcept { return total_; }
  bool pruning() const noexcept { return dedup_; }

 private:
  void expand();

  const MatrixSet& set_;
  EnumerationOptions opts_;
  bool dedup_;
  bool dominate_;
  std::size_t depth_ = 0;
  std::uint64_t total_ = 0;
  std::vector<Node> frontier_;
};

/// max over 1 <= t <= depth and |w| = t of rho(A_w)^(1/t), with its witness.
std::pair<AlgebraicValue, ProductWord> lower_bound(const MatrixSet& set, std::size_t depth,
                                                   const EnumerationOptions& opts = {});

/// max over |w| = depth of ||A_w||^(1/depth).
AlgebraicValue upper_bound(const MatrixSet& set, std::size_t depth, const EnumerationOptions& opts = {});

BoundsReport bounds_report(const MatrixSet& set, std::size_t depth, const EnumerationOptions& opts = {});

/// Serial exhaustive reference: every word of every length is multiplied out
/// from scratch; no pruning, no sharing, no threads. Kept for cross-checking
/// and benchmarking the parallel kernel.
BoundsReport reference_bounds_report(const MatrixSet& set, std::size_t depth, NormKind norm = NormKind::RowSum);

/// 64-bit FNV-1a of the canonical text form of the set, as 16 hex digits.
std::string set_digest(const MatrixSet& set);

}  // namespace jsr
