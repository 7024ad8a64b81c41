#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jsr/rational.hpp"

namespace jsr {

/// Square matrix of exact rationals. Immutable once built; the
/// nonnegativity flag is recomputed from the entries on construction.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// n x n zero matrix.
  explicit ExactMatrix(std::size_t n);
  /// Row-major entries; throws InputError unless entries.size() == n*n.
  ExactMatrix(std::size_t n, std::vector<Rational> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t dim() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const Rational> entries() const noexcept { return a_; }

  bool nonneg() const noexcept { return nonneg_; }
  bool is_integer() const;
  bool is_binary() const;
  bool is_zero() const;
  bool is_symmetric() const;

  ExactMatrix transpose() const;
  ExactMatrix scaled(const Rational& s) const;
  ExactMatrix pow(std::size_t k) const;
  /// Principal submatrix on the given (sorted or unsorted) index list.
  ExactMatrix principal(std::span<const std::size_t> idx) const;
  Rational trace() const;
  /// Determinant; only defined for dim <= 2.
  Rational det2() const;

  /// Entrywise A <= B.
  bool entrywise_leq(const ExactMatrix& other) const;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
  bool nonneg_ = true;
};

/// Row-major lexicographic order on entries (dimension first).
std::strong_ordering lex_compare(const ExactMatrix& a, const ExactMatrix& b);

struct ExactMatrixHash {
  std::size_t operator()(const ExactMatrix& m) const noexcept { return m.hash(); }
};

/// Sequence of member indices; index w[0] is the leftmost factor.
class ProductWord {
 public:
  ProductWord() = default;
  ProductWord(std::initializer_list<std::size_t> idx) : idx_(idx) {}
  explicit ProductWord(std::vector<std::size_t> idx) : idx_(std::move(idx)) {}

  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  std::size_t operator[](std::size_t k) const { return idx_[k]; }
  auto begin() const noexcept { return idx_.begin(); }
  auto end() const noexcept { return idx_.end(); }
  const std::vector<std::size_t>& indices() const noexcept { return idx_; }

  ProductWord extended(std::size_t letter) const;
  ProductWord reversed() const;
  ProductWord rotated(std::size_t shift) const;
  /// Lexicographically least cyclic rotation.
  ProductWord min_rotation() const;
  bool is_min_rotation() const;

  /// "0,1,1" (leftmost factor first).
  std::string to_string() const;
  /// Accepts "0,1,1", optionally wrapped in [ ].
  static ProductWord parse(std::string_view text);

  friend ProductWord operator+(const ProductWord& a, const ProductWord& b);
  auto operator<=>(const ProductWord&) const = default;

 private:
  std::vector<std::size_t> idx_;
};

/// Shorter words first, then lexicographic.
bool shortlex_less(const ProductWord& a, const ProductWord& b);

/// Nonempty ordered family of distinct square matrices of one dimension.
class MatrixSet {
 public:
  explicit MatrixSet(std::vector<ExactMatrix> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t dim() const noexcept { return members_.front().dim(); }
  const ExactMatrix& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<ExactMatrix>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool nonneg() const noexcept;
  bool is_integer() const;
  bool is_binary() const;

  MatrixSet transpose() const;
  MatrixSet scaled(const Rational& s) const;

  /// Throws InputError unless every index of w is a valid member label.
  void validate(const ProductWord& w) const;

  friend bool operator==(const MatrixSet& a, const MatrixSet& b) { return a.members_ == b.members_; }

 private:
  std::vector<ExactMatrix> members_;
};

/// Row-major entries concatenated: "0110" for binary matrices, otherwise
/// space-separated rational strings.
std::string flatten_entries(const ExactMatrix& a);

/// Exact product A_{w[0]} * A_{w[1]} * ... ; throws InputError on a bad index or empty word.
ExactMatrix evaluate_word(const MatrixSet& set, const ProductWord& w);

/// Maximum absolute row sum (the infinity norm).
Rational norm_row_sum(const ExactMatrix& a);
/// Maximum absolute column sum (the 1-norm).
Rational norm_col_sum(const ExactMatrix& a);

}  // namespace jsr
