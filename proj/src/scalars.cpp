#include "qdef/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace qdef {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits_small(i128 x) { return x <= kSmallMax && x >= -kSmallMax; }

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  constexpr u128 kMax64 = std::numeric_limits<std::uint64_t>::max();
  while (b != 0 && (a > kMax64 || b > kMax64)) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  if (b == 0) return a;
  return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
}

mpz_class mpz_from_i128(i128 x) {
  u128 mag = abs128(x);
  std::uint64_t parts[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, parts);
  if (x < 0) z = -z;
  return z;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t residue_of(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_integer(std::string_view s, mpz_class& out) {
  s = trim(s);
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw Error("not a supported prime: " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    mpz_class p;
    if (!parse_integer(text.substr(3), p) || p <= 1 || !p.fits_ulong_p()) {
      throw ParseError("bad field prime in '" + std::string(text) + "'");
    }
    try {
      return prime(p.get_ui());
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected Q or Fp:<prime>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(Field field, long long value) : field_(field) {
  if (field_.is_rational()) {
    if (value == std::numeric_limits<long long>::min()) {
      set_from_mpq(mpq_class(mpz_from_i128(value)));
    } else {
      num_ = value;
    }
  } else {
    std::uint64_t p = field_.characteristic();
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    num_ = r;
  }
}

FieldElem FieldElem::ratio(Field field, long long num, long long den) {
  if (den == 0) throw NonUnitError("zero denominator");
  return FieldElem(field, num) / FieldElem(field, den);
}

FieldElem FieldElem::from_mpq(Field field, const mpq_class& q) {
  FieldElem r;
  r.field_ = field;
  r.set_from_mpq(q);
  return r;
}

FieldElem FieldElem::parse(Field field, std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  mpz_class num, den = 1;
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    std::string_view d = trim(text.substr(slash + 1));
    ok = !d.empty() && d[0] != '-' && d[0] != '+' && parse_integer(d, den);
  }
  if (!ok) throw ParseError("bad scalar literal '" + std::string(text) + "'");
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (!field.is_rational() && residue_of(den, field.characteristic()) == 0) {
    throw ParseError("denominator not invertible in " + field.to_string() + ": '" + std::string(text) + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return from_mpq(field, q);
}

void FieldElem::set_from_mpq(const mpq_class& q) {
  big_.reset();
  if (field_.is_rational()) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
        q.get_num() != std::numeric_limits<long>::min()) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
    } else {
      big_ = std::make_shared<const mpq_class>(q);
      num_ = 1;  // any nonzero marker; the big value is authoritative
      den_ = 1;
    }
    return;
  }
  std::uint64_t p = field_.characteristic();
  std::uint64_t n = residue_of(q.get_num(), p);
  std::uint64_t d = residue_of(q.get_den(), p);
  if (d == 0) throw NonUnitError("denominator vanishes in " + field_.to_string());
  num_ = static_cast<std::int64_t>(mulmod(n, powmod(d, p - 2, p), p));
  den_ = 1;
}

mpq_class FieldElem::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), num_);
  mpz_set_si(q.get_den_mpz_t(), den_);
  return q;
}

void FieldElem::field_mismatch(const FieldElem& other) const {
  throw FieldMismatchError("mixed fields: " + field_.to_string() + " and " + other.field_.to_string());
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  a.check_same_field(b);
  FieldElem r;
  r.field_ = a.field_;
  if (!a.field_.is_rational()) {
    std::uint64_t p = a.field_.characteristic();
    std::uint64_t s = static_cast<std::uint64_t>(a.num_) + static_cast<std::uint64_t>(b.num_);
    r.num_ = static_cast<std::int64_t>(s >= p ? s - p : s);
    return r;
  }
  if (!a.big_ && !b.big_) {
    i128 n, d;
    if (a.den_ == b.den_) {
      n = static_cast<i128>(a.num_) + b.num_;
      d = a.den_;
    } else {
      n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
      d = static_cast<i128>(a.den_) * b.den_;
    }
    if (d != 1) {
      u128 g = gcd128(abs128(n), static_cast<u128>(d));
      if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
      }
    }
    if (n == 0) d = 1;
    if (fits_small(n) && fits_small(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    r.set_from_mpq(q);
    return r;
  }
  r.set_from_mpq(a.to_mpq() + b.to_mpq());
  return r;
}

FieldElem FieldElem::operator-() const {
  FieldElem r;
  r.field_ = field_;
  if (!field_.is_rational()) {
    r.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(field_.characteristic()) - num_;
    return r;
  }
  if (big_) {
    r.set_from_mpq(-*big_);
    return r;
  }
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  a.check_same_field(b);
  FieldElem r;
  r.field_ = a.field_;
  if (!a.field_.is_rational()) {
    r.num_ = static_cast<std::int64_t>(
        mulmod(static_cast<std::uint64_t>(a.num_), static_cast<std::uint64_t>(b.num_), a.field_.characteristic()));
    return r;
  }
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return r;
    std::int64_t an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (ad != 1 || bd != 1) {
      std::uint64_t g1 = std::gcd(static_cast<std::uint64_t>(an < 0 ? -an : an), static_cast<std::uint64_t>(bd));
      std::uint64_t g2 = std::gcd(static_cast<std::uint64_t>(bn < 0 ? -bn : bn), static_cast<std::uint64_t>(ad));
      an /= static_cast<std::int64_t>(g1);
      bd /= static_cast<std::int64_t>(g1);
      bn /= static_cast<std::int64_t>(g2);
      ad /= static_cast<std::int64_t>(g2);
    }
    i128 n = static_cast<i128>(an) * bn;
    i128 d = static_cast<i128>(ad) * bd;
    if (fits_small(n) && fits_small(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    r.set_from_mpq(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
    return r;
  }
  r.set_from_mpq(a.to_mpq() * b.to_mpq());
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw NonUnitError("inverse of zero");
  FieldElem r;
  r.field_ = field_;
  if (!field_.is_rational()) {
    std::uint64_t p = field_.characteristic();
    r.num_ = static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(num_), p - 2, p));
    return r;
  }
  if (big_) {
    r.set_from_mpq(1 / *big_);
    return r;
  }
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  a.check_same_field(b);
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms: a value is big only when it cannot be small
}

std::string FieldElem::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

void add_product(FieldElem& acc, const FieldElem& a, const FieldElem& b) {
  if (a.is_zero() || b.is_zero()) return;
  a.check_same_field(b);
  acc.check_same_field(a);
  if (!a.field_.is_rational()) {
    std::uint64_t p = a.field_.characteristic();
    std::uint64_t s = static_cast<std::uint64_t>(acc.num_) +
                      mulmod(static_cast<std::uint64_t>(a.num_), static_cast<std::uint64_t>(b.num_), p);
    acc.num_ = static_cast<std::int64_t>(s >= p ? s - p : s);
    return;
  }
  // In place when every operand and the result stay small; GMP otherwise.
  if (!a.big_ && !b.big_ && !acc.big_) {
    std::int64_t an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (ad != 1 || bd != 1) {
      std::uint64_t g1 = std::gcd(static_cast<std::uint64_t>(an < 0 ? -an : an), static_cast<std::uint64_t>(bd));
      std::uint64_t g2 = std::gcd(static_cast<std::uint64_t>(bn < 0 ? -bn : bn), static_cast<std::uint64_t>(ad));
      an /= static_cast<std::int64_t>(g1);
      bd /= static_cast<std::int64_t>(g1);
      bn /= static_cast<std::int64_t>(g2);
      ad /= static_cast<std::int64_t>(g2);
    }
    i128 pn = static_cast<i128>(an) * bn;
    i128 pd = static_cast<i128>(ad) * bd;
    constexpr i128 kSmall = i128{1} << 31;
    if (pn < kSmall && pn > -kSmall && pd < kSmall && acc.num_ < kSmall && acc.num_ > -kSmall && acc.den_ < kSmall) {
      // Everything fits in 64-bit arithmetic.
      std::int64_t qn = static_cast<std::int64_t>(pn), qd = static_cast<std::int64_t>(pd);
      std::int64_t n = qd == acc.den_ ? qn + acc.num_ : qn * acc.den_ + acc.num_ * qd;
      std::int64_t d = qd == acc.den_ ? qd : qd * acc.den_;
      if (n == 0) {
        acc.num_ = 0;
        acc.den_ = 1;
        return;
      }
      if (d != 1) {
        std::int64_t g = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(n < 0 ? -n : n), static_cast<std::uint64_t>(d)));
        n /= g;
        d /= g;
      }
      acc.num_ = n;
      acc.den_ = d;
      return;
    }
    constexpr i128 kLim = i128{1} << 62;
    if (pn < kLim && pn > -kLim && pd < kLim && acc.num_ < kLim && acc.num_ > -kLim && acc.den_ < kLim) {
      i128 n, d;
      if (pd == acc.den_) {
        n = pn + acc.num_;
        d = pd;
      } else {
        n = pn * acc.den_ + static_cast<i128>(acc.num_) * pd;
        d = pd * acc.den_;
      }
      if (n == 0) {
        acc.num_ = 0;
        acc.den_ = 1;
        return;
      }
      if (d != 1) {
        u128 g = gcd128(abs128(n), static_cast<u128>(d));
        if (g > 1) {
          n /= static_cast<i128>(g);
          d /= static_cast<i128>(g);
        }
      }
      if (fits_small(n) && fits_small(d)) {
        acc.num_ = static_cast<std::int64_t>(n);
        acc.den_ = static_cast<std::int64_t>(d);
        return;
      }
    }
  }
  acc = acc + a * b;
}

// ---------------------------------------------------------------------------
// Ring and TruncatedScalar

std::string Ring::to_string() const { return field.to_string() + " order " + std::to_string(order); }

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a.field == b.field)) {
    throw FieldMismatchError("mixed fields: " + a.field.to_string() + " and " + b.field.to_string());
  }
  if (a.order != b.order) {
    throw OrderMismatchError("mixed orders: " + std::to_string(a.order) + " and " + std::to_string(b.order));
  }
}

TruncatedScalar::TruncatedScalar(Ring ring) : ring_(ring), coeffs_(ring.order + 1, FieldElem::zero(ring.field)) {}

TruncatedScalar::TruncatedScalar(Ring ring, std::vector<FieldElem> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_.order + 1) {
    throw OrderMismatchError("expected " + std::to_string(ring_.order + 1) + " coefficients, got " +
                             std::to_string(coeffs_.size()));
  }
  for (const auto& c : coeffs_) {
    if (!(c.field() == ring_.field)) throw FieldMismatchError("coefficient field differs from ring field");
  }
}

TruncatedScalar TruncatedScalar::constant(Ring ring, const FieldElem& c) {
  TruncatedScalar r(ring);
  if (!(c.field() == ring.field)) throw FieldMismatchError("constant field differs from ring field");
  r.coeffs_[0] = c;
  return r;
}

TruncatedScalar TruncatedScalar::parse(Ring ring, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty scalar literal");
  if (text.front() != '[') return constant(ring, FieldElem::parse(ring.field, text));
  if (text.back() != ']') throw ParseError("unterminated series literal '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<FieldElem> coeffs;
  if (!trim(body).empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      coeffs.push_back(FieldElem::parse(ring.field, body.substr(pos, comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (coeffs.size() != ring.order + 1) {
    throw ParseError("series literal '" + std::string(text) + "' has " + std::to_string(coeffs.size()) +
                     " coefficients, order " + std::to_string(ring.order) + " needs " +
                     std::to_string(ring.order + 1));
  }
  return TruncatedScalar(ring, std::move(coeffs));
}

bool TruncatedScalar::is_zero() const { return series::is_zero(coeffs_); }

TruncatedScalar TruncatedScalar::operator-() const {
  TruncatedScalar r(ring_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
  return r;
}

TruncatedScalar operator+(const TruncatedScalar& a, const TruncatedScalar& b) {
  require_same_ring(a.ring_, b.ring_);
  TruncatedScalar r(a.ring_);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

TruncatedScalar operator-(const TruncatedScalar& a, const TruncatedScalar& b) {
  require_same_ring(a.ring_, b.ring_);
  TruncatedScalar r(a.ring_);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

TruncatedScalar operator*(const TruncatedScalar& a, const TruncatedScalar& b) {
  require_same_ring(a.ring_, b.ring_);
  TruncatedScalar r(a.ring_);
  series::mul_add(r.coeffs_, a.coeffs_, b.coeffs_);
  return r;
}

TruncatedScalar operator*(const FieldElem& c, const TruncatedScalar& a) {
  TruncatedScalar r(a.ring_);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = c * a.coeffs_[k];
  return r;
}

bool operator==(const TruncatedScalar& a, const TruncatedScalar& b) {
  require_same_ring(a.ring_, b.ring_);
  return a.coeffs_ == b.coeffs_;
}

std::string TruncatedScalar::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) s += ", ";
    s += coeffs_[k].to_string();
  }
  return s + "]";
}

TruncatedScalar ring_add(const TruncatedScalar& a, const TruncatedScalar& b) { return a + b; }
TruncatedScalar ring_mul(const TruncatedScalar& a, const TruncatedScalar& b) { return a * b; }

TruncatedScalar ring_inverse(const TruncatedScalar& a) {
  if (!a.is_unit()) throw NonUnitError("series " + a.to_string() + " has zero constant term");
  const Ring& ring = a.ring();
  std::vector<FieldElem> b(ring.order + 1, FieldElem::zero(ring.field));
  FieldElem b0 = a[0].inverse();
  b[0] = b0;
  for (unsigned k = 1; k <= ring.order; ++k) {
    FieldElem acc = FieldElem::zero(ring.field);
    for (unsigned j = 1; j <= k; ++j) add_product(acc, a[j], b[k - j]);
    b[k] = -(b0 * acc);
  }
  return TruncatedScalar(ring, std::move(b));
}

TruncatedScalar truncated_exp(const FieldElem& c, unsigned order) {
  const Field& field = c.field();
  if (!field.is_rational() && order >= field.characteristic()) {
    throw CharacteristicError("exp series to order " + std::to_string(order) + " needs " + std::to_string(order) +
                              "! invertible, which fails in " + field.to_string());
  }
  Ring ring{field, order};
  std::vector<FieldElem> coeffs(order + 1, FieldElem::zero(field));
  coeffs[0] = FieldElem::one(field);
  for (unsigned k = 1; k <= order; ++k) coeffs[k] = coeffs[k - 1] * c / FieldElem(field, k);
  return TruncatedScalar(ring, std::move(coeffs));
}

TruncatedScalar reduce_order(const TruncatedScalar& a, unsigned k) {
  if (k > a.order()) {
    throw OrderError("cannot reduce order " + std::to_string(a.order()) + " to " + std::to_string(k));
  }
  std::vector<FieldElem> coeffs(a.coeffs().begin(), a.coeffs().begin() + k + 1);
  return TruncatedScalar(Ring{a.ring().field, k}, std::move(coeffs));
}

namespace series {

void mul_add(std::span<FieldElem> out, std::span<const FieldElem> a, std::span<const FieldElem> b) {
  const std::size_t n = out.size();
  for (std::size_t s = 0; s < n; ++s) {
    if (a[s].is_zero()) continue;
    for (std::size_t u = 0; s + u < n; ++u) {
      if (b[u].is_zero()) continue;
      add_product(out[s + u], a[s], b[u]);
    }
  }
}

bool is_zero(std::span<const FieldElem> a) {
  return std::all_of(a.begin(), a.end(), [](const FieldElem& c) { return c.is_zero(); });
}

}  // namespace series

}  // namespace qdef
