#pragma once

// Dense exact matrices over K and over R_n.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdef/scalars.hpp"

namespace qdef {

using VectorK = std::vector<FieldElem>;

class MatrixK {
 public:
  MatrixK(Field field, std::size_t rows, std::size_t cols);
  MatrixK(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries);

  static MatrixK identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const FieldElem& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<FieldElem>& entries() const { return entries_; }

  friend bool operator==(const MatrixK& a, const MatrixK& b);

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElem> entries_;
};

MatrixK mat_mul(const MatrixK& a, const MatrixK& b);
MatrixK mat_add(const MatrixK& a, const MatrixK& b);
MatrixK kron(const MatrixK& a, const MatrixK& b);
VectorK mat_vec(const MatrixK& a, const VectorK& x);

// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
MatrixK rref(const MatrixK& a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const MatrixK& a);
// Basis of {x : a x = 0}, one vector per free column.
std::vector<VectorK> kernel_basis(const MatrixK& a);

// Outcome of solve(). When no solution exists, witness is a row vector y with
// y a = 0 and y b != 0.
struct SolveResult {
  std::optional<VectorK> solution;
  VectorK witness;

  bool solved() const { return solution.has_value(); }
};

// Solutions set free variables to zero.
SolveResult solve(const MatrixK& a, const VectorK& b);

class MatrixR {
 public:
  MatrixR(Ring ring, std::size_t rows, std::size_t cols);
  MatrixR(Ring ring, std::size_t rows, std::size_t cols, std::vector<TruncatedScalar> entries);

  static MatrixR identity(Ring ring, std::size_t n);
  // Constant lift of a K-matrix.
  static MatrixR from_k(Ring ring, const MatrixK& a);
  // Parses "rows cols" followed by row-major scalar literals (whitespace separated;
  // series literals may contain spaces after commas).
  static MatrixR parse(Ring ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  unsigned order() const { return ring_.order; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  TruncatedScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const TruncatedScalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<TruncatedScalar>& entries() const { return entries_; }

  // Coefficient of eps^k as a K-matrix.
  MatrixK coefficient(unsigned k) const;
  bool is_zero() const;

  friend bool operator==(const MatrixR& a, const MatrixR& b);
  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<TruncatedScalar> entries_;
};

MatrixR mat_mul(const MatrixR& a, const MatrixR& b);
MatrixR mat_add(const MatrixR& a, const MatrixR& b);
MatrixR mat_sub(const MatrixR& a, const MatrixR& b);
MatrixR mat_scale(const TruncatedScalar& c, const MatrixR& a);
MatrixR kron(const MatrixR& a, const MatrixR& b);
// Inverse over R_n by inverting mod eps and lifting order by order. Throws
// NonUnitError when the constant part is singular.
MatrixR mat_invert(const MatrixR& a);
MatrixR reduce_order(const MatrixR& a, unsigned k);

}  // namespace qdef
