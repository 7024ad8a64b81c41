#include "jsr/finiteness.hpp"

#include <array>
#include <deque>
#include <unordered_set>

#include "jsr/errors.hpp"

namespace jsr {

std::string_view to_string(CertificateRule r) {
  switch (r) {
    case CertificateRule::Symmetric:
      return "Symmetric";
    case CertificateRule::Domination:
      return "Domination";
    case CertificateRule::SubIdentity:
      return "SubIdentity";
    case CertificateRule::RhoAtMostOne:
      return "RhoAtMostOne";
    case CertificateRule::RhoZero:
      return "RhoZero";
    case CertificateRule::Search:
      return "Search";
    case CertificateRule::Census:
      return "Census";
  }
  return "?";
}

std::string_view to_string(CertificateStatus s) {
  return s == CertificateStatus::Certified ? "Certified" : "CandidateOnly";
}

std::string_view to_string(StabilityOutcome o) {
  switch (o) {
    case StabilityOutcome::Stable:
      return "Stable";
    case StabilityOutcome::Unstable:
      return "Unstable";
    case StabilityOutcome::Undecided:
      return "Undecided";
  }
  return "?";
}

Certificate make_certificate(const MatrixSet& set, ProductWord word, CertificateRule rule, CertificateStatus status,
                             std::string detail) {
  const ExactMatrix p = evaluate_word(set, word);
  Certificate c;
  c.value = spectral_value(p, word.size());
  c.word = std::move(word);
  c.rule = rule;
  c.status = status;
  c.detail = std::move(detail);
  return c;
}

bool revalidate(const Certificate& c, const MatrixSet& set) {
  const AlgebraicValue v = spectral_value(evaluate_word(set, c.word), c.word.size());
  return compare_values(v, c.value) == Ordering::Equal;
}

namespace {

void require_nonneg_integer(const MatrixSet& set, const char* what) {
  if (!set.nonneg() || !set.is_integer()) throw InputError(std::string(what) + " requires nonnegative integer entries");
}

// Entrywise min(x, cap) over nonnegative integers; a semiring map, so
// saturating each factor and each product gives the saturated product.
ExactMatrix saturate(const ExactMatrix& a, long cap) {
  std::vector<Rational> e(a.entries().begin(), a.entries().end());
  for (auto& q : e)
    if (q > cap) q = cap;
  return ExactMatrix(a.dim(), std::move(e));
}

bool diagonal_at_least(const ExactMatrix& a, long threshold) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a(i, i) >= threshold) return true;
  return false;
}

// Shortlex breadth-first search over saturated products.
std::optional<ProductWord> saturated_search(const MatrixSet& set, long threshold, std::size_t depth) {
  std::unordered_set<ExactMatrix, ExactMatrixHash> seen;
  std::vector<std::pair<ExactMatrix, ProductWord>> level;
  std::vector<ExactMatrix> gens;
  for (const auto& m : set) gens.push_back(saturate(m, threshold));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (diagonal_at_least(gens[i], threshold)) return ProductWord{i};
    if (seen.insert(gens[i]).second) level.emplace_back(gens[i], ProductWord{i});
  }
  for (std::size_t t = 2; t <= depth && !level.empty(); ++t) {
    std::vector<std::pair<ExactMatrix, ProductWord>> next;
    for (const auto& [p, w] : level) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        ExactMatrix q = saturate(p * gens[i], threshold);
        if (diagonal_at_least(q, threshold)) return w.extended(i);
        if (seen.insert(q).second) next.emplace_back(std::move(q), w.extended(i));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

bool is_rho_zero(const MatrixSet& set) {
  require_nonneg_integer(set, "is_rho_zero");
  const std::size_t n = set.dim();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool edge = false;
      for (const auto& m : set) edge = edge || sgn(m(i, j)) != 0;
      if (edge) {
        out[i].push_back(j);
        ++indeg[j];
      }
    }
  }
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop_front();
    ++removed;
    for (std::size_t w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return removed == n;
}

std::optional<ProductWord> has_diagonal_at_least(const MatrixSet& set, int threshold, std::size_t depth) {
  if (threshold != 1 && threshold != 2) throw InputError("diagonal threshold must be 1 or 2");
  require_nonneg_integer(set, "has_diagonal_at_least");
  if (depth < 1) return std::nullopt;
  return saturated_search(set, threshold, depth);
}

std::optional<ProductWord> rho_exceeds_one_witness(const MatrixSet& set) {
  require_nonneg_integer(set, "rho_exceeds_one_witness");
  // at most 3^(n^2) saturated states, so the frontier empties before this depth
  return saturated_search(set, 2, static_cast<std::size_t>(-1));
}

// -----------------------------------------------------------------------------

std::optional<Certificate> classify_shortcuts(const MatrixSet& pair) {
  if (pair.size() != 2) throw InputError("classify_shortcuts needs exactly two matrices");
  const ExactMatrix& a0 = pair[0];
  const ExactMatrix& a1 = pair[1];

  auto close = [&](CertificateRule rule, std::string detail) {
    const AlgebraicValue r0 = spectral_value(a0);
    const AlgebraicValue r1 = spectral_value(a1);
    const std::size_t pick = compare_values(r1, r0) == Ordering::Greater ? 1 : 0;
    return make_certificate(pair, ProductWord{pick}, rule, CertificateStatus::Certified, std::move(detail));
  };

  if (a0.is_symmetric() && a1.is_symmetric()) return close(CertificateRule::Symmetric, "");
  if (!pair.nonneg()) return std::nullopt;

  const ExactMatrix id = ExactMatrix::identity(pair.dim());
  if (pair.is_integer()) {
    if (a0.entrywise_leq(id)) return close(CertificateRule::SubIdentity, "A0<=I");
    if (a1.entrywise_leq(id)) return close(CertificateRule::SubIdentity, "A1<=I");
  }
  if (a0.entrywise_leq(a1)) return close(CertificateRule::Domination, "A0<=A1");
  if (a1.entrywise_leq(a0)) return close(CertificateRule::Domination, "A1<=A0");

  const ExactMatrix p01 = a0 * a1;
  const ExactMatrix p10 = a1 * a0;
  const ExactMatrix p00 = a0 * a0;
  const ExactMatrix p11 = a1 * a1;
  const std::array<std::tuple<const ExactMatrix*, const ExactMatrix*, const char*>, 6> rules{{
      {&p01, &p11, "A0A1<=A1^2"},
      {&p10, &p11, "A1A0<=A1^2"},
      {&p10, &p00, "A1A0<=A0^2"},
      {&p01, &p00, "A0A1<=A0^2"},
      {&p01, &p10, "A0A1<=A1A0"},
      {&p10, &p01, "A1A0<=A0A1"},
  }};
  for (const auto& [lhs, rhs, name] : rules) {
    if (lhs->entrywise_leq(*rhs)) return close(CertificateRule::Domination, name);
  }
  return std::nullopt;
}

// -----------------------------------------------------------------------------

ExactMatrix PairTransform::apply(const ExactMatrix& a) const {
  ExactMatrix r = transpose ? a.transpose() : a;
  if (conjugate) {
    const std::size_t n = r.dim();
    std::vector<Rational> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] = r(n - 1 - i, n - 1 - j);
    r = ExactMatrix(n, std::move(e));
  }
  return r;
}

MatrixSet PairTransform::apply(const MatrixSet& pair) const {
  if (pair.size() != 2) throw InputError("pair transform needs exactly two matrices");
  ExactMatrix b0 = apply(pair[0]);
  ExactMatrix b1 = apply(pair[1]);
  if (swap) std::swap(b0, b1);
  return MatrixSet({std::move(b0), std::move(b1)});
}

ProductWord PairTransform::transport(const ProductWord& w) const {
  std::vector<std::size_t> idx(w.begin(), w.end());
  if (swap)
    for (auto& x : idx) x = 1 - x;
  ProductWord r(std::move(idx));
  return transpose ? r.reversed() : r;
}

std::string PairTransform::to_string() const {
  std::string s;
  if (transpose) s += "T";
  if (conjugate) s += "S";
  if (swap) s += "W";
  return s.empty() ? "id" : s;
}

namespace {

bool pair_less(const MatrixSet& x, const MatrixSet& y) {
  const auto c0 = lex_compare(x[0], y[0]);
  if (c0 != 0) return c0 < 0;
  return lex_compare(x[1], y[1]) < 0;
}

}  // namespace

CanonicalPair canonical_pair(const MatrixSet& pair) {
  if (pair.size() != 2 || pair.dim() != 2) throw InputError("canonical_pair needs two 2x2 matrices");
  std::optional<CanonicalPair> best;
  for (int code = 0; code < 8; ++code) {
    const PairTransform g{(code & 1) != 0, (code & 2) != 0, (code & 4) != 0};
    MatrixSet img = g.apply(pair);
    if (!best || pair_less(img, best->canonical)) best = CanonicalPair{std::move(img), g, {}};
  }
  best->key = flatten_entries(best->canonical[0]) + ";" + flatten_entries(best->canonical[1]);
  return *best;
}

// -----------------------------------------------------------------------------

StabilityVerdict semi_decide_stability(const MatrixSet& set, std::size_t max_depth, const EnumerationOptions& opts) {
  if (!set.nonneg()) throw InputError("stability semi-decision requires nonnegative entries");
  StabilityVerdict v;
  WordEnumerator en(set, opts);
  const AlgebraicValue one = AlgebraicValue::root_of(QuadSurd(1));
  const bool integer = set.is_integer();
  for (std::size_t t = 1; t <= max_depth; ++t) {
    const LevelBounds lvl = en.next_level();
    v.depth_reached = t;
    if (lvl.max_norm < 1) {
      v.outcome = StabilityOutcome::Stable;
      v.upper_norm = lvl.max_norm;
      v.upper_witness = lvl.upper_witness;
      v.upper = lvl.upper;
      return v;
    }
    if (integer) {
      // a diagonal entry >= 1 already forces rho(A_w) >= 1
      for (const auto& node : en.frontier()) {
        if (diagonal_at_least(node.product, 1)) {
          v.outcome = StabilityOutcome::Unstable;
          v.witness = make_certificate(set, node.word, CertificateRule::Search, CertificateStatus::CandidateOnly,
                                       "diagonal entry >= 1");
          return v;
        }
      }
    }
    const Ordering o = compare_values(lvl.lower, one);
    if (o == Ordering::Greater || o == Ordering::Equal) {
      v.outcome = StabilityOutcome::Unstable;
      v.witness = make_certificate(set, lvl.lower_witness, CertificateRule::Search, CertificateStatus::CandidateOnly,
                                   "rho(A_w)^(1/t) >= 1");
      return v;
    }
    v.upper_norm = lvl.max_norm;
    v.upper_witness = lvl.upper_witness;
    v.upper = lvl.upper;
  }
  v.outcome = StabilityOutcome::Undecided;
  return v;
}

}  // namespace jsr
