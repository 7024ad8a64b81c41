#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "jsr/algebraic.hpp"
#include "jsr/bounds.hpp"
#include "jsr/matrix.hpp"

namespace jsr {

enum class CertificateRule { Symmetric, Domination, SubIdentity, RhoAtMostOne, RhoZero, Search, Census };
enum class CertificateStatus { Certified, CandidateOnly };

std::string_view to_string(CertificateRule r);
std::string_view to_string(CertificateStatus s);

/// A product witnessing (or proposing) rho(set) = rho(A_word)^(1/|word|).
struct Certificate {
  ProductWord word;
  AlgebraicValue value;
  CertificateRule rule = CertificateRule::Search;
  CertificateStatus status = CertificateStatus::CandidateOnly;
  std::string detail;  // which inequality or lookup closed the case
};

/// Evaluates the word and fills in the value.
Certificate make_certificate(const MatrixSet& set, ProductWord word, CertificateRule rule, CertificateStatus status,
                             std::string detail = {});

/// Recomputes rho(A_word)^(1/|word|) and checks it equals the stored value.
bool revalidate(const Certificate& c, const MatrixSet& set);

/// True iff the union support graph is acyclic, i.e. every product of
/// length >= n vanishes. Requires nonnegative integer entries.
bool is_rho_zero(const MatrixSet& set);

/// First word in shortlex order, of length <= depth, whose product has a
/// diagonal entry >= threshold (threshold 1 or 2). Nonnegative integer sets.
std::optional<ProductWord> has_diagonal_at_least(const MatrixSet& set, int threshold, std::size_t depth);

/// Decides rho(set) > 1 for a nonnegative integer set: true iff some product
/// has a diagonal entry >= 2. Products are explored with entries saturated
/// at 2, which makes the reachable state space finite, so the search is
/// exhaustive. Returns the shortlex-first witness.
std::optional<ProductWord> rho_exceeds_one_witness(const MatrixSet& set);

/// Closing rules that give rho = max(rho(A0), rho(A1)) for a nonnegative pair:
/// both symmetric; A_i <= I; A_i <= A_j; A_iA_j <= A_j^2 or A_jA_i <= A_j^2;
/// A_iA_j <= A_jA_i. The certificate is the length-1 word of the larger member.
std::optional<Certificate> classify_shortcuts(const MatrixSet& pair);

/// Element of the order-8 group acting on 2x2 pairs: transpose both,
/// conjugate both by S = [[0,1],[1,0]], swap member order.
struct PairTransform {
  bool transpose = false;
  bool conjugate = false;
  bool swap = false;

  ExactMatrix apply(const ExactMatrix& a) const;
  MatrixSet apply(const MatrixSet& pair) const;
  /// Maps a word over `pair` to the word over apply(pair) whose product is
  /// the transformed product. The map is an involution.
  ProductWord transport(const ProductWord& w) const;
  std::string to_string() const;
};

struct CanonicalPair {
  MatrixSet canonical;
  PairTransform transform;  // canonical == transform.apply(input)
  std::string key;          // flatten_entries of both canonical members, joined by ";"
};

/// Least image of the pair under the group, ordering pairs by the row-major
/// entries of member 0 then member 1. Requires two 2x2 members.
CanonicalPair canonical_pair(const MatrixSet& pair);

enum class StabilityOutcome { Stable, Unstable, Undecided };
std::string_view to_string(StabilityOutcome o);

struct StabilityVerdict {
  StabilityOutcome outcome = StabilityOutcome::Undecided;
  std::size_t depth_reached = 0;
  std::optional<Certificate> witness;  // Unstable: product with rho(A_w)^(1/t) >= 1
  Rational upper_norm;                 // Stable: max norm at the deciding depth (< 1)
  ProductWord upper_witness;
  AlgebraicValue upper;
};

/// For t = 1..max_depth: stop with Stable as soon as the per-depth upper
/// bound is < 1, with Unstable as soon as the per-depth lower bound is >= 1.
/// Requires nonnegative entries.
StabilityVerdict semi_decide_stability(const MatrixSet& set, std::size_t max_depth,
                                       const EnumerationOptions& opts = {});

}  // namespace jsr
