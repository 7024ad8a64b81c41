#include "jsr/bounds.hpp"

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <unordered_map>

#include "jsr/errors.hpp"

namespace jsr {

std::string_view to_string(NormKind n) { return n == NormKind::RowSum ? "row-sum" : "col-sum"; }

NormKind parse_norm(std::string_view text) {
  if (text == "row-sum" || text == "row") return NormKind::RowSum;
  if (text == "col-sum" || text == "col") return NormKind::ColSum;
  throw InputError("unknown norm '" + std::string(text) + "' (expected row-sum or col-sum)");
}

Rational matrix_norm(const ExactMatrix& a, NormKind kind) {
  return kind == NormKind::RowSum ? norm_row_sum(a) : norm_col_sum(a);
}

std::uint64_t default_product_budget() {
  if (const char* env = std::getenv("JSR_PRODUCT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

bool BoundsReport::certified() const { return compare_values(best_lower, best_upper) == Ordering::Equal; }

namespace {

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

// Rethrows the first exception raised inside a parallel region.
class ErrorSlot {
 public:
  void capture() {
#pragma omp critical(jsr_error_slot)
    if (!err_) err_ = std::current_exception();
  }
  void rethrow() const {
    if (err_) std::rethrow_exception(err_);
  }

 private:
  std::exception_ptr err_;
};

}  // namespace

WordEnumerator::WordEnumerator(const MatrixSet& set, EnumerationOptions opts)
    : set_(set), opts_(opts), dedup_(opts.prune), dominate_(opts.prune && set.nonneg()) {}

void WordEnumerator::expand() {
  const std::size_t m = set_.size();
  if (depth_ == 0) {
    frontier_.clear();
    for (std::size_t i = 0; i < m; ++i) frontier_.push_back({set_[i], ProductWord{i}});
    total_ += m;
    return;
  }
  const std::size_t count = frontier_.size() * m;
  if (total_ + count > opts_.product_budget) {
    throw ResourceError("product budget of " + std::to_string(opts_.product_budget) + " exceeded at depth " +
                        std::to_string(depth_ + 1));
  }
  total_ += count;

  std::vector<Node> cand(count);
  ErrorSlot err;
  const auto n_cand = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static) num_threads(thread_count(opts_.jobs))
  for (std::ptrdiff_t k = 0; k < n_cand; ++k) {
    try {
      const auto& parent = frontier_[static_cast<std::size_t>(k) / m];
      const std::size_t letter = static_cast<std::size_t>(k) % m;
      cand[k] = {parent.product * set_[letter], parent.word.extended(letter)};
    } catch (...) {
      err.capture();
    }
  }
  err.rethrow();

  if (dedup_) {
    // keep the first (lexicographically smallest) word of each product
    std::unordered_map<ExactMatrix, std::size_t, ExactMatrixHash> seen;
    seen.reserve(cand.size());
    std::vector<Node> uniq;
    uniq.reserve(cand.size());
    for (auto& c : cand) {
      if (seen.emplace(c.product, uniq.size()).second) uniq.push_back(std::move(c));
    }
    cand = std::move(uniq);
  }

  if (dominate_) {
    const auto n = static_cast<std::ptrdiff_t>(cand.size());
    std::vector<char> dominated(cand.size(), 0);
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count(opts_.jobs))
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      for (std::ptrdiff_t j = 0; j < n; ++j) {
        if (i != j && cand[i].product.entrywise_leq(cand[j].product)) {
          dominated[i] = 1;
          break;
        }
      }
    }
    std::vector<Node> kept;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (!dominated[i]) kept.push_back(std::move(cand[i]));
    cand = std::move(kept);
  }
  frontier_ = std::move(cand);
}

LevelBounds WordEnumerator::next_level() {
  expand();
  ++depth_;
  const std::size_t t = depth_;
  const std::size_t n = frontier_.size();

  std::vector<Rational> norms(n);
  std::vector<AlgebraicValue> values(n);
  std::vector<char> evaluated(n, 1);
  ErrorSlot err;
  const auto nn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count(opts_.jobs))
  for (std::ptrdiff_t k = 0; k < nn; ++k) {
    try {
      const Node& node = frontier_[k];
      norms[k] = matrix_norm(node.product, opts_.norm);
      // rho is invariant under rotation of the word; without pruning every
      // rotation is present, so only the least rotation is evaluated
      if (!dedup_ && !node.word.is_min_rotation()) {
        evaluated[k] = 0;
      } else {
        values[k] = spectral_value(node.product, t);
      }
    } catch (...) {
      err.capture();
    }
  }
  err.rethrow();

  LevelBounds lvl;
  lvl.depth = t;
  lvl.products = n;
  bool have = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0 || norms[k] > lvl.max_norm) {
      lvl.max_norm = norms[k];
      lvl.upper_witness = frontier_[k].word;
    }
    if (!evaluated[k]) continue;
    if (!have) {
      lvl.lower = values[k];
      lvl.lower_witness = frontier_[k].word;
      have = true;
      continue;
    }
    switch (compare_values(values[k], lvl.lower)) {
      case Ordering::Greater:
        lvl.lower = values[k];
        lvl.lower_witness = frontier_[k].word;
        lvl.lower_ties.clear();
        break;
      case Ordering::TieAtTolerance:
        lvl.lower_ties.push_back(frontier_[k].word);
        break;
      default:
        break;
    }
  }
  lvl.upper = AlgebraicValue::root_of(QuadSurd(lvl.max_norm), t);
  return lvl;
}

namespace {

void absorb(BoundsReport& r, LevelBounds lvl) {
  if (r.levels.empty()) {
    r.best_lower = lvl.lower;
    r.best_witness = lvl.lower_witness;
    r.best_ties = lvl.lower_ties;
    r.best_upper = lvl.upper;
    r.best_upper_depth = lvl.depth;
  } else {
    switch (compare_values(lvl.lower, r.best_lower)) {
      case Ordering::Greater:
        r.best_lower = lvl.lower;
        r.best_witness = lvl.lower_witness;
        r.best_ties = lvl.lower_ties;
        break;
      case Ordering::TieAtTolerance:
        r.best_ties.push_back(lvl.lower_witness);
        break;
      default:
        break;
    }
    if (compare_values(lvl.upper, r.best_upper) == Ordering::Less) {
      r.best_upper = lvl.upper;
      r.best_upper_depth = lvl.depth;
    }
  }
  r.levels.push_back(std::move(lvl));
}

void check_depth(std::size_t depth) {
  if (depth < 1) throw InputError("depth must be >= 1");
}

}  // namespace

BoundsReport bounds_report(const MatrixSet& set, std::size_t depth, const EnumerationOptions& opts) {
  check_depth(depth);
  BoundsReport r;
  r.set_digest = set_digest(set);
  r.depth = depth;
  r.norm = opts.norm;
  WordEnumerator en(set, opts);
  r.pruned = en.pruning();
  for (std::size_t t = 1; t <= depth; ++t) absorb(r, en.next_level());
  r.products_total = en.products_total();
  return r;
}

std::pair<AlgebraicValue, ProductWord> lower_bound(const MatrixSet& set, std::size_t depth,
                                                   const EnumerationOptions& opts) {
  BoundsReport r = bounds_report(set, depth, opts);
  return {r.best_lower, r.best_witness};
}

AlgebraicValue upper_bound(const MatrixSet& set, std::size_t depth, const EnumerationOptions& opts) {
  check_depth(depth);
  WordEnumerator en(set, opts);
  LevelBounds lvl;
  for (std::size_t t = 1; t <= depth; ++t) lvl = en.next_level();
  return lvl.upper;
}

std::string set_digest(const MatrixSet& set) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  feed(std::to_string(set.dim()));
  feed(std::to_string(set.size()));
  for (const auto& m : set)
    for (const auto& q : m.entries()) feed(q.get_str());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace jsr
