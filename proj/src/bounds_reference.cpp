#include "jsr/bounds.hpp"
#include "jsr/errors.hpp"

namespace jsr {

BoundsReport reference_bounds_report(const MatrixSet& set, std::size_t depth, NormKind norm) {
  if (depth < 1) throw InputError("depth must be >= 1");
  BoundsReport r;
  r.set_digest = set_digest(set);
  r.depth = depth;
  r.norm = norm;
  r.pruned = false;
  const std::size_t m = set.size();
  for (std::size_t t = 1; t <= depth; ++t) {
    LevelBounds lvl;
    lvl.depth = t;
    std::vector<std::size_t> idx(t, 0);
    bool first = true;
    for (;;) {
      const ProductWord w(idx);
      const ExactMatrix p = evaluate_word(set, w);
      const Rational nv = matrix_norm(p, norm);
      const AlgebraicValue v = spectral_value(p, t);
      if (first || nv > lvl.max_norm) {
        lvl.max_norm = nv;
        lvl.upper_witness = w;
      }
      if (first) {
        lvl.lower = v;
        lvl.lower_witness = w;
      } else {
        const Ordering o = compare_values(v, lvl.lower);
        if (o == Ordering::Greater) {
          lvl.lower = v;
          lvl.lower_witness = w;
          lvl.lower_ties.clear();
        } else if (o == Ordering::TieAtTolerance) {
          lvl.lower_ties.push_back(w);
        }
      }
      first = false;
      ++lvl.products;
      // odometer over {0..m-1}^t in lexicographic order
      std::size_t pos = t;
      while (pos > 0 && idx[pos - 1] + 1 == m) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
    lvl.upper = AlgebraicValue::root_of(QuadSurd(lvl.max_norm), t);
    r.products_total += lvl.products;

    if (r.levels.empty()) {
      r.best_lower = lvl.lower;
      r.best_witness = lvl.lower_witness;
      r.best_upper = lvl.upper;
      r.best_upper_depth = t;
    } else {
      if (compare_values(lvl.lower, r.best_lower) == Ordering::Greater) {
        r.best_lower = lvl.lower;
        r.best_witness = lvl.lower_witness;
      }
      if (compare_values(lvl.upper, r.best_upper) == Ordering::Less) {
        r.best_upper = lvl.upper;
        r.best_upper_depth = t;
      }
    }
    r.levels.push_back(std::move(lvl));
  }
  return r;
}

}  // namespace jsr
