#include "jsr/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "jsr/errors.hpp"

namespace jsr {

namespace {

bool all_nonneg(const std::vector<Rational>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return sgn(q) >= 0; });
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t n) : n_(n), a_(n * n) {}

ExactMatrix::ExactMatrix(std::size_t n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
  if (n == 0) throw InputError("matrix dimension must be positive");
  if (a_.size() != n * n) {
    throw InputError("expected " + std::to_string(n * n) + " entries for a " + std::to_string(n) + "x" +
                     std::to_string(n) + " matrix, got " + std::to_string(a_.size()));
  }
  for (auto& q : a_) q.canonicalize();
  nonneg_ = all_nonneg(a_);
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1;
  return ExactMatrix(n, std::move(a));
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t n = rows.size();
  std::vector<Rational> a;
  a.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError("from_rows: matrix is not square");
    for (long v : r) a.emplace_back(v);
  }
  return ExactMatrix(n, std::move(a));
}

bool ExactMatrix::is_integer() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool ExactMatrix::is_binary() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q == 0 || q == 1; });
}

bool ExactMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool ExactMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  std::vector<Rational> t(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[j * n_ + i] = (*this)(i, j);
  return ExactMatrix(n_, std::move(t));
}

ExactMatrix ExactMatrix::scaled(const Rational& s) const {
  std::vector<Rational> t(a_.size());
  for (std::size_t k = 0; k < a_.size(); ++k) t[k] = a_[k] * s;
  return ExactMatrix(n_, std::move(t));
}

ExactMatrix ExactMatrix::pow(std::size_t k) const {
  ExactMatrix result = identity(n_);
  ExactMatrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

ExactMatrix ExactMatrix::principal(std::span<const std::size_t> idx) const {
  const std::size_t k = idx.size();
  std::vector<Rational> t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t[i * k + j] = (*this)(idx[i], idx[j]);
  return ExactMatrix(k, std::move(t));
}

Rational ExactMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Rational ExactMatrix::det2() const {
  if (n_ == 1) return a_[0];
  if (n_ != 2) throw InputError("det2 requires dimension <= 2");
  return a_[0] * a_[3] - a_[1] * a_[2];
}

bool ExactMatrix::entrywise_leq(const ExactMatrix& other) const {
  if (n_ != other.n_) throw InputError("entrywise comparison of matrices with different dimensions");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (a_[k] > other.a_[k]) return false;
  return true;
}

std::size_t ExactMatrix::hash() const noexcept {
  std::size_t h = n_ * 0x9E3779B97F4A7C15ULL;
  for (const auto& q : a_) {
    const std::size_t e = mpz_get_ui(q.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(q) + 1) << 61) ^
                          (mpz_get_ui(q.get_den_mpz_t()) * 0x100000001B3ULL);
    h ^= e + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) throw InputError("dimension mismatch in matrix product");
  const std::size_t n = a.n_;
  std::vector<Rational> c(n * n);
  Rational tmp;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a.a_[i * n + k];
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& bkj = b.a_[k * n + j];
        if (sgn(bkj) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        c[i * n + j] += tmp;
      }
    }
  }
  ExactMatrix r;
  r.n_ = n;
  r.a_ = std::move(c);
  r.nonneg_ = all_nonneg(r.a_);
  return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) throw InputError("dimension mismatch in matrix sum");
  std::vector<Rational> c(a.a_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.a_[k] + b.a_[k];
  return ExactMatrix(a.n_, std::move(c));
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

std::strong_ordering lex_compare(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    const int c = cmp(ea[k], eb[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- words

ProductWord ProductWord::extended(std::size_t letter) const {
  ProductWord w = *this;
  w.idx_.push_back(letter);
  return w;
}

ProductWord ProductWord::reversed() const { return ProductWord(std::vector<std::size_t>(idx_.rbegin(), idx_.rend())); }

ProductWord ProductWord::rotated(std::size_t shift) const {
  if (idx_.empty()) return *this;
  std::vector<std::size_t> r(idx_.size());
  for (std::size_t k = 0; k < idx_.size(); ++k) r[k] = idx_[(k + shift) % idx_.size()];
  return ProductWord(std::move(r));
}

ProductWord ProductWord::min_rotation() const {
  ProductWord best = *this;
  for (std::size_t s = 1; s < idx_.size(); ++s) {
    ProductWord r = rotated(s);
    if (r < best) best = std::move(r);
  }
  return best;
}

bool ProductWord::is_min_rotation() const {
  const std::size_t n = idx_.size();
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t x = idx_[(k + s) % n];
      if (x < idx_[k]) return false;
      if (x > idx_[k]) break;
    }
  }
  return true;
}

std::string ProductWord::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(idx_[k]);
  }
  return s;
}

ProductWord ProductWord::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = trim(body.substr(1, body.size() - 2));
  if (body.empty()) throw InputError("empty product word");
  std::vector<std::size_t> idx;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string_view tok = trim(body.substr(pos, comma - pos));
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InputError("bad word letter '" + std::string(tok) + "' at offset " + std::to_string(pos));
    }
    idx.push_back(v);
    pos = comma + 1;
  }
  return ProductWord(std::move(idx));
}

ProductWord operator+(const ProductWord& a, const ProductWord& b) {
  std::vector<std::size_t> c = a.idx_;
  c.insert(c.end(), b.idx_.begin(), b.idx_.end());
  return ProductWord(std::move(c));
}

bool shortlex_less(const ProductWord& a, const ProductWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// ---------------------------------------------------------------- sets

MatrixSet::MatrixSet(std::vector<ExactMatrix> members) : members_(std::move(members)) {
  if (members_.empty()) throw InputError("matrix set must be nonempty");
  const std::size_t n = members_.front().dim();
  if (n == 0) throw InputError("matrix dimension must be positive");
  std::unordered_set<ExactMatrix, ExactMatrixHash> seen;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].dim() != n) {
      throw InputError("member " + std::to_string(i) + " has dimension " + std::to_string(members_[i].dim()) +
                       ", expected " + std::to_string(n));
    }
    if (!seen.insert(members_[i]).second) throw InputError("member " + std::to_string(i) + " duplicates an earlier member");
  }
}

bool MatrixSet::nonneg() const noexcept {
  return std::all_of(members_.begin(), members_.end(), [](const ExactMatrix& m) { return m.nonneg(); });
}

bool MatrixSet::is_integer() const {
  return std::all_of(members_.begin(), members_.end(), [](const ExactMatrix& m) { return m.is_integer(); });
}

bool MatrixSet::is_binary() const {
  return std::all_of(members_.begin(), members_.end(), [](const ExactMatrix& m) { return m.is_binary(); });
}

MatrixSet MatrixSet::transpose() const {
  std::vector<ExactMatrix> t;
  for (const auto& m : members_) t.push_back(m.transpose());
  return MatrixSet(std::move(t));
}

MatrixSet MatrixSet::scaled(const Rational& s) const {
  if (sgn(s) == 0) throw InputError("scaling factor must be nonzero");
  std::vector<ExactMatrix> t;
  for (const auto& m : members_) t.push_back(m.scaled(s));
  return MatrixSet(std::move(t));
}

void MatrixSet::validate(const ProductWord& w) const {
  if (w.empty()) throw InputError("product word must have length >= 1");
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] >= members_.size()) {
      throw InputError("word letter " + std::to_string(w[k]) + " at position " + std::to_string(k) +
                       " is out of range for a set of " + std::to_string(members_.size()) + " matrices");
    }
  }
}

ExactMatrix evaluate_word(const MatrixSet& set, const ProductWord& w) {
  set.validate(w);
  ExactMatrix p = set[w[0]];
  for (std::size_t k = 1; k < w.size(); ++k) p = p * set[w[k]];
  return p;
}

Rational norm_row_sum(const ExactMatrix& a) {
  Rational best = 0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += abs(a(i, j));
    if (s > best) best = s;
  }
  return best;
}

Rational norm_col_sum(const ExactMatrix& a) {
  Rational best = 0;
  const std::size_t n = a.dim();
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += abs(a(i, j));
    if (s > best) best = s;
  }
  return best;
}

std::string flatten_entries(const ExactMatrix& a) {
  std::string s;
  const bool bits = a.is_binary();
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    if (!bits && k) s += ' ';
    s += to_string(a.entries()[k]);
  }
  return s;
}

}  // namespace jsr
