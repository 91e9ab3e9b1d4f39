#include "qdef/linalg.hpp"

#include <sstream>

namespace qdef {

namespace {

void require_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatchError("matrices over " + a.to_string() + " and " + b.to_string());
}

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

MatrixK::MatrixK(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldElem::zero(field)) {}

MatrixK::MatrixK(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw ShapeError("entry count does not match " + dims(rows, cols));
  for (const auto& e : entries_) require_field(field_, e.field());
}

MatrixK MatrixK::identity(Field field, std::size_t n) {
  MatrixK m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem::one(field);
  return m;
}

bool operator==(const MatrixK& a, const MatrixK& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

MatrixK mat_mul(const MatrixK& a, const MatrixK& b) {
  require_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw ShapeError("cannot multiply " + dims(a.rows(), a.cols()) + " by " + dims(b.rows(), b.cols()));
  MatrixK out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElem& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) add_product(out(i, j), x, b(k, j));
    }
  return out;
}

MatrixK mat_add(const MatrixK& a, const MatrixK& b) {
  require_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("cannot add " + dims(a.rows(), a.cols()) + " and " + dims(b.rows(), b.cols()));
  std::vector<FieldElem> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return MatrixK(a.field(), a.rows(), a.cols(), std::move(e));
}

MatrixK kron(const MatrixK& a, const MatrixK& b) {
  require_field(a.field(), b.field());
  MatrixK out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

VectorK mat_vec(const MatrixK& a, const VectorK& x) {
  if (x.size() != a.cols()) throw ShapeError("vector length " + std::to_string(x.size()) + " vs " + std::to_string(a.cols()) + " columns");
  VectorK out(a.rows(), FieldElem::zero(a.field()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!x[j].is_zero() && !a(i, j).is_zero()) add_product(out[i], a(i, j), x[j]);
  return out;
}

MatrixK rref(const MatrixK& a, std::vector<std::size_t>* pivots) {
  MatrixK m = a;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    FieldElem inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      FieldElem f = -m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) add_product(m(i, j), f, m(row, j));
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const MatrixK& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

std::vector<VectorK> kernel_basis(const MatrixK& a) {
  std::vector<std::size_t> piv;
  MatrixK r = rref(a, &piv);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<VectorK> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorK v(a.cols(), FieldElem::zero(a.field()));
    v[free] = FieldElem::one(a.field());
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const MatrixK& a, const VectorK& b) {
  if (b.size() != a.rows()) throw ShapeError("right-hand side length " + std::to_string(b.size()) + " vs " + std::to_string(a.rows()) + " rows");
  // Row reduce [A | b | I]; the identity block records the row operations so
  // that an inconsistent row yields a left certificate.
  const Field& f = a.field();
  std::size_t n = a.cols(), m = a.rows();
  MatrixK aug(f, m, n + 1 + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    require_field(f, b[i].field());
    aug(i, n) = b[i];
    aug(i, n + 1 + i) = FieldElem::one(f);
  }
  // Only eliminate on the A block.
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && aug(p, col).is_zero()) ++p;
    if (p == m) continue;
    if (p != row)
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(p, j), aug(row, j));
    FieldElem inv = aug(row, col).inverse();
    for (std::size_t j = col; j < aug.cols(); ++j) aug(row, j) = aug(row, j) * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug(i, col).is_zero()) continue;
      FieldElem fac = -aug(i, col);
      for (std::size_t j = col; j < aug.cols(); ++j)
        if (!aug(row, j).is_zero()) add_product(aug(i, j), fac, aug(row, j));
    }
    piv.push_back(col);
    ++row;
  }
  SolveResult res;
  for (std::size_t i = piv.size(); i < m; ++i) {
    if (!aug(i, n).is_zero()) {
      res.witness.assign(aug.entries().begin() + i * aug.cols() + n + 1, aug.entries().begin() + (i + 1) * aug.cols());
      return res;
    }
  }
  VectorK x(n, FieldElem::zero(f));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, n);
  res.solution = std::move(x);
  return res;
}

// ---- MatrixR ----

MatrixR::MatrixR(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, TruncatedScalar(ring)) {}

MatrixR::MatrixR(Ring ring, std::size_t rows, std::size_t cols, std::vector<TruncatedScalar> entries)
    : ring_(ring), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw ShapeError("entry count does not match " + dims(rows, cols));
  for (const auto& e : entries_) require_same_ring(ring_, e.ring());
}

MatrixR MatrixR::identity(Ring ring, std::size_t n) {
  MatrixR m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TruncatedScalar::one(ring);
  return m;
}

MatrixR MatrixR::from_k(Ring ring, const MatrixK& a) {
  require_field(ring.field, a.field());
  MatrixR m(ring, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.entries().size(); ++i) m.entries_[i] = TruncatedScalar::constant(ring, a.entries()[i]);
  return m;
}

MatrixR MatrixR::parse(Ring ring, std::string_view text) {
  std::istringstream in{std::string(text)};
  long long r = -1, c = -1;
  if (!(in >> r >> c) || r < 0 || c < 0) throw ParseError("matrix literal must start with 'rows cols'");
  std::vector<TruncatedScalar> entries;
  std::string tok;
  while (in >> tok) {
    if (!tok.empty() && tok.front() == '[') {
      std::string more;
      while (tok.back() != ']' && in >> more) tok += " " + more;
    }
    entries.push_back(TruncatedScalar::parse(ring, tok));
  }
  if (entries.size() != static_cast<std::size_t>(r * c))
    throw ParseError("matrix literal declares " + dims(r, c) + " but has " + std::to_string(entries.size()) + " entries");
  return MatrixR(ring, r, c, std::move(entries));
}

MatrixK MatrixR::coefficient(unsigned k) const {
  if (k > ring_.order) throw OrderError("coefficient " + std::to_string(k) + " beyond order " + std::to_string(ring_.order));
  MatrixK m(ring_.field, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m(i / cols_, i % cols_) = entries_[i][k];
  return m;
}

bool MatrixR::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool operator==(const MatrixR& a, const MatrixR& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string MatrixR::to_string() const {
  std::string s = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += (*this)(i, j).to_string();
    }
    s += '\n';
  }
  return s;
}

MatrixR mat_mul(const MatrixR& a, const MatrixR& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.cols() != b.rows()) throw ShapeError("cannot multiply " + dims(a.rows(), a.cols()) + " by " + dims(b.rows(), b.cols()));
  MatrixR out(a.ring(), a.rows(), b.cols());
  std::vector<FieldElem> acc(a.order() + 1, FieldElem::zero(a.ring().field));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::fill(acc.begin(), acc.end(), FieldElem::zero(a.ring().field));
      for (std::size_t k = 0; k < a.cols(); ++k) series::mul_add(acc, a(i, k).coeffs(), b(k, j).coeffs());
      out(i, j) = TruncatedScalar(a.ring(), acc);
    }
  return out;
}

MatrixR mat_add(const MatrixR& a, const MatrixR& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("cannot add " + dims(a.rows(), a.cols()) + " and " + dims(b.rows(), b.cols()));
  std::vector<TruncatedScalar> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = e[i] + b.entries()[i];
  return MatrixR(a.ring(), a.rows(), a.cols(), std::move(e));
}

MatrixR mat_sub(const MatrixR& a, const MatrixR& b) {
  return mat_add(a, mat_scale(-TruncatedScalar::one(b.ring()), b));
}

MatrixR mat_scale(const TruncatedScalar& c, const MatrixR& a) {
  require_same_ring(c.ring(), a.ring());
  std::vector<TruncatedScalar> e(a.entries());
  for (auto& x : e) x = c * x;
  return MatrixR(a.ring(), a.rows(), a.cols(), std::move(e));
}

MatrixR kron(const MatrixR& a, const MatrixR& b) {
  require_same_ring(a.ring(), b.ring());
  MatrixR out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

MatrixR mat_invert(const MatrixR& a) {
  if (a.rows() != a.cols()) throw ShapeError("cannot invert " + dims(a.rows(), a.cols()));
  std::size_t n = a.rows();
  const Field& f = a.ring().field;
  // Invert the constant part over K.
  MatrixK a0 = a.coefficient(0);
  MatrixK aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a0(i, j);
    aug(i, n + i) = FieldElem::one(f);
  }
  std::vector<std::size_t> piv;
  MatrixK r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] >= n) throw NonUnitError("matrix is singular modulo eps");
  MatrixK inv0(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv0(i, j) = r(i, n + j);
  // a = a0 (1 + a0^{-1} N) with N nilpotent; sum the geometric series.
  MatrixR b0 = MatrixR::from_k(a.ring(), inv0);
  MatrixR id = MatrixR::identity(a.ring(), n);
  MatrixR t = mat_sub(mat_mul(b0, a), id);  // a0^{-1} N, divisible by eps
  MatrixR neg_t = mat_scale(-TruncatedScalar::one(a.ring()), t);
  MatrixR sum = id, power = id;
  for (unsigned k = 1; k <= a.order(); ++k) {
    power = mat_mul(power, neg_t);
    sum = mat_add(sum, power);
  }
  return mat_mul(sum, b0);
}

MatrixR reduce_order(const MatrixR& a, unsigned k) {
  Ring r{a.ring().field, k};
  std::vector<TruncatedScalar> e;
  e.reserve(a.entries().size());
  for (const auto& x : a.entries()) e.push_back(reduce_order(x, k));
  return MatrixR(r, a.rows(), a.cols(), std::move(e));
}

}  // namespace qdef
