#pragma once

// Exact base fields (Q and F_p) and the truncated ring R_n = K[eps]/(eps^{n+1}).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdef/errors.hpp"

namespace qdef {

// Ground field: the rationals, or F_p for a prime p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  // Accepts "Q" or "Fp:<prime>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

// An exact element of a Field. Rationals are kept in lowest terms with a
// positive denominator; small values live inline and spill into GMP only when
// a numerator or denominator leaves the int64 range. F_p values are residues
// in [0, p).
class FieldElem {
 public:
  FieldElem() = default;  // zero of Q
  FieldElem(Field field, long long value);

  static FieldElem zero(Field field) { return FieldElem(field, 0); }
  static FieldElem one(Field field) { return FieldElem(field, 1); }
  static FieldElem ratio(Field field, long long num, long long den);
  static FieldElem from_mpq(Field field, const mpq_class& q);
  // Parses "p/q" or "p" (optionally signed).
  static FieldElem parse(Field field, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  FieldElem inverse() const;
  FieldElem operator-() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend void add_product(FieldElem& acc, const FieldElem& a, const FieldElem& b);

  mpq_class to_mpq() const;
  std::string to_string() const;

 private:
  void set_from_mpq(const mpq_class& q);
  void check_same_field(const FieldElem& other) const {
    if (!(field_ == other.field_)) field_mismatch(other);
  }
  [[noreturn]] void field_mismatch(const FieldElem& other) const;

  Field field_;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

// acc += a * b
void add_product(FieldElem& acc, const FieldElem& a, const FieldElem& b);

// Configuration shared by every container of truncated scalars: the field and
// the truncation order n of R_n.
struct Ring {
  Field field;
  unsigned order = 0;

  bool operator==(const Ring&) const = default;
  std::string to_string() const;
};

void require_same_ring(const Ring& a, const Ring& b);

// Element of R_n. coeffs()[k] is the coefficient of eps^k; there are exactly
// order + 1 of them.
class TruncatedScalar {
 public:
  explicit TruncatedScalar(Ring ring);  // zero
  TruncatedScalar(Ring ring, std::vector<FieldElem> coeffs);

  static TruncatedScalar constant(Ring ring, const FieldElem& c);
  static TruncatedScalar one(Ring ring) { return constant(ring, FieldElem::one(ring.field)); }
  // Parses "[c0, c1, ..., cn]"; a bare "p/q" is read as a constant.
  static TruncatedScalar parse(Ring ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  unsigned order() const { return ring_.order; }
  const FieldElem& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const FieldElem> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_unit() const { return !coeffs_[0].is_zero(); }

  TruncatedScalar operator-() const;
  friend TruncatedScalar operator+(const TruncatedScalar& a, const TruncatedScalar& b);
  friend TruncatedScalar operator-(const TruncatedScalar& a, const TruncatedScalar& b);
  friend TruncatedScalar operator*(const TruncatedScalar& a, const TruncatedScalar& b);
  friend TruncatedScalar operator*(const FieldElem& c, const TruncatedScalar& a);
  friend bool operator==(const TruncatedScalar& a, const TruncatedScalar& b);

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<FieldElem> coeffs_;
};

TruncatedScalar ring_add(const TruncatedScalar& a, const TruncatedScalar& b);
TruncatedScalar ring_mul(const TruncatedScalar& a, const TruncatedScalar& b);
// Throws NonUnitError when the constant term vanishes.
TruncatedScalar ring_inverse(const TruncatedScalar& a);
// sum_{k<=n} c^k/k! eps^k; throws CharacteristicError when some k! is not
// invertible in the field.
TruncatedScalar truncated_exp(const FieldElem& c, unsigned order);
// Image under R_n -> R_k; throws OrderError when k > a.order().
TruncatedScalar reduce_order(const TruncatedScalar& a, unsigned k);

namespace series {

// Raw kernels over coefficient spans of equal length n + 1.
// out += a * b, truncated.
void mul_add(std::span<FieldElem> out, std::span<const FieldElem> a, std::span<const FieldElem> b);
bool is_zero(std::span<const FieldElem> a);

}  // namespace series

}  // namespace qdef
