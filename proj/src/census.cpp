#include "jsr/census.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>

#include "jsr/errors.hpp"

namespace jsr {

BFactorization BFactorization::of(const ProductWord& w) {
  BFactorization f;
  f.exponents.push_back(0);
  for (std::size_t x : w) {
    if (x == 1)
      ++f.exponents.back();
    else if (x == 0)
      f.exponents.push_back(0);
    else
      throw InputError("B-factorization applies to words over two letters");
  }
  return f;
}

ProductWord BFactorization::word() const {
  std::vector<std::size_t> w;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (k) w.push_back(0);
    w.insert(w.end(), exponents[k], 1);
  }
  return ProductWord(std::move(w));
}

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = [] {
    auto pair = [](std::initializer_list<std::initializer_list<long>> a,
                   std::initializer_list<std::initializer_list<long>> b) {
      return MatrixSet({ExactMatrix::from_rows(a), ExactMatrix::from_rows(b)});
    };
    const QuadSurd golden_ratio(Rational(1, 2), Rational(1, 2), 5);
    const QuadSurd s3_base(Rational(3, 2), Rational(1, 2), 13);
    std::vector<GoldenCase> v;
    v.push_back({"sigma0", pair({{0, 1}, {0, 0}}, {{1, 0}, {1, 1}}), ProductWord{1, 1, 1, 1, 0},
                 AlgebraicValue::root_of(QuadSurd(4), 5)});
    v.push_back({"sigma1", pair({{1, 1}, {0, 0}}, {{1, 0}, {1, 0}}), ProductWord{0, 1},
                 AlgebraicValue::root_of(QuadSurd::sqrt_of(2))});
    v.push_back({"sigma2", pair({{1, 0}, {1, 0}}, {{1, 1}, {0, 1}}), ProductWord{1, 1, 0},
                 AlgebraicValue::root_of(QuadSurd(3), 3)});
    v.push_back({"sigma3", pair({{0, 1}, {1, 0}}, {{1, 1}, {0, 1}}), ProductWord{1, 1, 1, 0},
                 AlgebraicValue::root_of(s3_base, 4)});
    v.push_back({"pascal", pair({{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}), ProductWord{0, 1},
                 AlgebraicValue::root_of(golden_ratio)});
    return v;
  }();
  return cases;
}

std::vector<MatrixSet> enumerate_pairs(std::size_t dim) {
  if (dim < 1 || dim > 4) throw InputError("pair enumeration supports dimensions 1 to 4");
  const std::size_t cells = dim * dim;
  const std::size_t count = std::size_t{1} << cells;
  std::vector<ExactMatrix> all;
  all.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Rational> e(cells);
    for (std::size_t k = 0; k < cells; ++k) e[k] = (code >> (cells - 1 - k)) & 1U;
    all.emplace_back(dim, std::move(e));
  }
  std::vector<MatrixSet> pairs;
  pairs.reserve(count * (count - 1) / 2);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b) pairs.emplace_back(std::vector<ExactMatrix>{all[a], all[b]});
  return pairs;
}

namespace {

Certificate transported(const MatrixSet& pair, const PairTransform& g, const Certificate& c) {
  return make_certificate(pair, g.transport(c.word), c.rule, c.status, c.detail);
}

std::string rule_label(const Certificate& c) {
  std::string s(to_string(c.rule));
  if (!c.detail.empty()) s += "(" + c.detail + ")";
  return s;
}

const std::map<std::string, std::size_t>& golden_index() {
  static const std::map<std::string, std::size_t> index = [] {
    std::map<std::string, std::size_t> m;
    const auto& g = golden_cases();
    for (std::size_t i = 0; i < g.size(); ++i) m.emplace(canonical_pair(g[i].pair).key, i);
    return m;
  }();
  return index;
}

}  // namespace

CensusRecord classify_pair(const MatrixSet& pair, std::size_t depth, const EnumerationOptions& opts) {
  if (pair.size() != 2) throw InputError("classify_pair needs exactly two matrices");
  if (!pair.nonneg()) throw InputError("classify_pair needs nonnegative entries");
  if (depth < 1) throw InputError("depth must be at least 1");

  CensusRecord rec{pair, {}, {}, {}, {}, {}, {}, 0.0, false};
  const BoundsReport report = bounds_report(pair, depth, opts);

  // Work on the canonical representative where one is defined; transport back.
  std::optional<CanonicalPair> canon;
  if (pair.dim() == 2) {
    canon = canonical_pair(pair);
    rec.canonical_class = canon->key;
    rec.rule_chain.push_back("canonical[" + canon->transform.to_string() + "]");
  }
  const MatrixSet& work = canon ? canon->canonical : pair;
  const PairTransform g = canon ? canon->transform : PairTransform{};

  std::optional<Certificate> cert = classify_shortcuts(work);

  if (!cert && work.is_integer()) {
    if (is_rho_zero(work)) {
      cert = make_certificate(work, ProductWord{0}, CertificateRule::RhoZero, CertificateStatus::Certified,
                              "acyclic union graph");
    } else if (!rho_exceeds_one_witness(work)) {
      // a cycle exists, so some product has a unit diagonal entry; rho = 1
      const auto w = has_diagonal_at_least(work, 1, work.dim());
      if (!w) throw VerificationError("cyclic union graph without a unit-diagonal product");
      cert = make_certificate(work, *w, CertificateRule::RhoAtMostOne, CertificateStatus::Certified,
                              "no diagonal entry >= 2");
    }
  }

  if (!cert && canon) {
    const auto& idx = golden_index();
    if (auto it = idx.find(canon->key); it != idx.end()) {
      const GoldenCase& gc = golden_cases()[it->second];
      const PairTransform to_canon = canonical_pair(gc.pair).transform;
      cert = make_certificate(work, to_canon.transport(gc.word), CertificateRule::Census,
                              CertificateStatus::Certified, gc.name);
    }
  }

  if (cert) {
    rec.rule_chain.push_back(rule_label(*cert));
    rec.certificate = canon ? transported(pair, g, *cert) : *cert;
  } else {
    const CertificateStatus st = report.certified() ? CertificateStatus::Certified : CertificateStatus::CandidateOnly;
    rec.certificate = make_certificate(pair, report.best_witness, CertificateRule::Search, st,
                                       report.certified() ? "bounds meet" : "bounds gap");
    rec.rule_chain.push_back(rule_label(rec.certificate));
  }

  rec.exact_value = rec.certificate.value;
  rec.lower_T = report.best_lower;
  rec.upper_T = report.levels.back().upper;
  rec.bounds_gap = rec.upper_T.decimal() - rec.exact_value.decimal();
  if (compare_values(rec.upper_T, rec.exact_value) == Ordering::Equal) rec.bounds_gap = 0.0;
  rec.consistent = compare_values(rec.exact_value, rec.lower_T) == Ordering::Equal;
  return rec;
}

CensusResult run_census(std::size_t depth, const EnumerationOptions& opts, std::size_t dim) {
  const std::vector<MatrixSet> pairs = enumerate_pairs(dim);
  CensusResult result;
  result.depth = depth;
  std::vector<std::optional<CensusRecord>> slots(pairs.size());

  EnumerationOptions inner = opts;
  inner.jobs = 1;
  std::exception_ptr error;
  const long n = static_cast<long>(pairs.size());
  const int threads = opts.jobs > 0 ? opts.jobs : 0;
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads != 1)
  for (long i = 0; i < n; ++i) {
    try {
      slots[i] = classify_pair(pairs[i], depth, inner);
    } catch (...) {
#pragma omp critical(census_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::set<std::string> classes;
  CensusSummary& s = result.summary;
  result.records.reserve(slots.size());
  for (auto& r : slots) {
    CensusRecord& rec = result.records.emplace_back(std::move(*r));
    ++s.total;
    if (rec.certificate.status == CertificateStatus::Certified)
      ++s.certified;
    else
      ++s.candidate_only;
    if (!rec.consistent) ++s.inconsistent;
    ++s.per_rule[std::string(to_string(rec.certificate.rule))];
    s.max_word_length = std::max(s.max_word_length, rec.certificate.word.size());
    if (!rec.canonical_class.empty()) classes.insert(rec.canonical_class);
  }
  s.classes = classes.size();
  return result;
}

// -----------------------------------------------------------------------------

std::vector<InequalityCheck> sigma3_rewrite_checks() {
  const ExactMatrix a0 = ExactMatrix::from_rows({{0, 1}, {1, 0}});
  const ExactMatrix a1 = ExactMatrix::from_rows({{1, 1}, {0, 1}});
  auto B = [&](std::size_t t) { return a1.pow(t) * a0; };

  std::vector<InequalityCheck> out;
  // records small <= large entrywise
  auto leq = [&](std::string name, const ExactMatrix& small, const ExactMatrix& large) {
    InequalityCheck c{std::move(name), small.entrywise_leq(large), false};
    if (c.holds) {
      c.strict = true;
      for (std::size_t k = 0; k < small.entries().size(); ++k)
        if (sgn(large.entries()[k]) > 0 && !(small.entries()[k] < large.entries()[k])) c.strict = false;
    }
    out.push_back(std::move(c));
  };
  const auto b = [&](std::initializer_list<std::size_t> ts) {
    ExactMatrix p = ExactMatrix::identity(2);
    for (std::size_t t : ts) p = p * B(t);
    return p;
  };

  for (std::size_t t = 5; t <= 10; ++t)
    leq("B" + std::to_string(t - 3) + "B2 >= B" + std::to_string(t), B(t), b({t - 3, 2}));

  leq("B3 >= (3/4)B4", B(4).scaled(Rational(3, 4)), B(3));
  leq("B3^3 >= (33/4)B4", B(4).scaled(Rational(33, 4)), b({3, 3, 3}));

  for (std::size_t i : {2, 3})
    for (std::size_t j : {2, 3})
      leq("B" + std::to_string(i) + "B1B1B" + std::to_string(j) + " <= B" + std::to_string(i) + "B3B" +
              std::to_string(j),
          b({i, 1, 1, j}), b({i, 3, j}));
  leq("B2B1B2 <= B3B3", b({2, 1, 2}), b({3, 3}));
  leq("B3B1B2 <= B2B2B2", b({3, 1, 2}), b({2, 2, 2}));
  leq("B2B1B3 <= B2B2B2", b({2, 1, 3}), b({2, 2, 2}));

  leq("B2^3 >= (4/5)B3B1B3", b({3, 1, 3}).scaled(Rational(4, 5)), b({2, 2, 2}));

  for (std::size_t x : {2, 3}) {
    const std::string xs = "B" + std::to_string(x);
    leq("B3^2" + xs + " >= (27/20)B3B2" + xs, b({3, 2, x}).scaled(Rational(27, 20)), b({3, 3, x}));
  }
  for (std::size_t x : {2, 3}) {
    const std::string xs = "B" + std::to_string(x);
    leq("B3^2" + xs + " >= (10000/24349)B3^2B2" + xs, b({3, 3, 2, x}).scaled(Rational(10000, 24349)),
        b({3, 3, x}));
  }
  return out;
}

}  // namespace jsr
