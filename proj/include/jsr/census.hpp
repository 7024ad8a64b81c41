#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jsr/algebraic.hpp"
#include "jsr/bounds.hpp"
#include "jsr/finiteness.hpp"
#include "jsr/matrix.hpp"

namespace jsr {

/// A word written as A1^t1 A0 A1^t2 A0 ... A1^tl (l = number of A0 + 1).
struct BFactorization {
  std::vector<std::size_t> exponents;

  static BFactorization of(const ProductWord& w);
  ProductWord word() const;
};

/// A named pair with its maximizing product, in the orientation it is
/// usually written.
struct GoldenCase {
  std::string name;
  MatrixSet pair;
  ProductWord word;
  AlgebraicValue value;  // hand-constructed closed form
};

/// sigma0, sigma1, sigma2, sigma3 and pascal.
const std::vector<GoldenCase>& golden_cases();

struct CensusRecord {
  MatrixSet pair;
  std::string canonical_class;  // empty outside dimension 2
  std::vector<std::string> rule_chain;
  Certificate certificate;
  AlgebraicValue exact_value;
  AlgebraicValue lower_T;  // best lower bound up to depth T
  AlgebraicValue upper_T;  // upper bound at depth T
  double bounds_gap = 0.0;  // upper_T - exact_value
  bool consistent = false;  // exact_value == lower_T exactly
};

struct CensusSummary {
  std::size_t total = 0;
  std::size_t certified = 0;
  std::size_t candidate_only = 0;
  std::size_t inconsistent = 0;
  std::size_t classes = 0;
  std::size_t max_word_length = 0;
  std::map<std::string, std::size_t> per_rule;
};

struct CensusResult {
  std::size_t depth = 0;
  std::vector<CensusRecord> records;
  CensusSummary summary;
};

/// All unordered pairs of distinct n x n binary matrices, ordered by the
/// row-major bit patterns of member 0 then member 1.
std::vector<MatrixSet> enumerate_pairs(std::size_t dim = 2);

/// Closing chain: canonical form (2x2 only), shortcut rules, rho in {0, 1},
/// golden lookup (2x2 only), bounded search. Always returns a certificate.
CensusRecord classify_pair(const MatrixSet& pair, std::size_t depth, const EnumerationOptions& opts = {});

/// Classifies every pair of enumerate_pairs(dim), in parallel over pairs.
CensusResult run_census(std::size_t depth, const EnumerationOptions& opts = {}, std::size_t dim = 2);

struct InequalityCheck {
  std::string name;
  bool holds = false;
  bool strict = false;  // holds with every entry strictly ordered where the larger side is positive
};

/// Entrywise checks on B_t = A1^t A0 for A0 = [[0,1],[1,0]], A1 = [[1,1],[0,1]].
std::vector<InequalityCheck> sigma3_rewrite_checks();

}  // namespace jsr
