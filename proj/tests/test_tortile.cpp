#include <gmpxx.h>

#include "doctest.h"
#include "qdef/errors.hpp"
#include "qdef/tortile.hpp"

using namespace qdef;

namespace {

// Coefficients of exp(k eps) computed with plain rationals.
std::vector<mpq_class> exp_coeffs(long k, unsigned n) {
  std::vector<mpq_class> c(n + 1);
  mpq_class term = 1;
  for (unsigned i = 0; i <= n; ++i) {
    c[i] = term;
    term = term * k / (i + 1);
  }
  return c;
}

TruncatedScalar from_mpq(Ring ring, const std::vector<mpq_class>& c) {
  std::vector<FieldElem> v;
  for (const auto& q : c) v.push_back(FieldElem::from_mpq(ring.field, q));
  return TruncatedScalar(ring, v);
}

}  // namespace

TEST_CASE("symmetric data satisfies every axiom") {
  for (std::size_t d : {1u, 2u, 3u})
    for (unsigned n : {0u, 2u}) {
      for (Field f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
        auto rep = check_axioms(symmetric_data(d, Ring{f, n}));
        CHECK(rep.all_pass());
      }
    }
}

TEST_CASE("Kauffman data satisfies every axiom across orders") {
  for (unsigned n : {0u, 1u, 2u, 4u, 8u}) {
    auto t = kauffman_data(n);
    auto rep = check_axioms(t);
    for (const auto& r : rep.structural) CHECK_MESSAGE(r.pass, r.name);
    CHECK(rep.infinitesimally_symmetric());
  }
}

TEST_CASE("Kauffman braiding squares to the identity at order zero") {
  auto t = kauffman_data(0);
  CHECK(mat_mul(t.c_plus, t.c_plus) == MatrixR::identity(t.ring, 4));
  auto t2 = kauffman_data(2);
  CHECK_FALSE(mat_mul(t2.c_plus, t2.c_plus) == MatrixR::identity(t2.ring, 4));
}

TEST_CASE("Kauffman inverse braiding matches the skein form") {
  for (unsigned n : {1u, 3u, 6u}) {
    auto t = kauffman_data(n);
    Ring ring = t.ring;
    auto a = from_mpq(ring, exp_coeffs(1, n));
    auto ai = from_mpq(ring, exp_coeffs(-1, n));
    MatrixR u = mat_mul(t.coev_l, t.ev_r);
    MatrixR expected = mat_add(mat_scale(ai, MatrixR::identity(ring, 4)), mat_scale(a, u));
    CHECK(mat_invert(t.c_plus) == expected);
  }
}

TEST_CASE("unknot loop value") {
  auto t = kauffman_data(2);
  MatrixR loop = mat_mul(t.ev_r, t.coev_l);
  REQUIRE(loop.rows() == 1);
  CHECK(loop(0, 0) == TruncatedScalar::parse(t.ring, "[-2, 0, -4]"));
  // -(exp(2 eps) + exp(-2 eps)) at a higher order.
  auto t6 = kauffman_data(6);
  auto p = exp_coeffs(2, 6), m = exp_coeffs(-2, 6);
  std::vector<mpq_class> want(7);
  for (unsigned i = 0; i <= 6; ++i) want[i] = -(p[i] + m[i]);
  CHECK(mat_mul(t6.ev_r, t6.coev_l)(0, 0) == from_mpq(t6.ring, want));
}

TEST_CASE("perturbed flip breaks Yang-Baxter with a witness") {
  // Linear perturbations of the flip can solve the equation to first order;
  // this one fails at eps^2.
  Ring ring{Field::rationals(), 2};
  auto t = symmetric_data(2, ring);
  t.c_plus(0, 1) = TruncatedScalar::parse(ring, "[0, 1, 0]");
  auto rep = check_axioms(t);
  const auto* ybe = rep.find("yang-baxter");
  REQUIRE(ybe);
  CHECK_FALSE(ybe->pass);
  CHECK(ybe->counterexample.has_value());
  CHECK_FALSE(rep.structural_ok());
}

TEST_CASE("twist perturbation is detected by the curl checks") {
  auto t = kauffman_data(2);
  t.theta(0, 0) = t.theta(0, 0) + TruncatedScalar::parse(t.ring, "[0, 0, 1]");
  auto rep = check_axioms(t);
  CHECK_FALSE(rep.find("right curl is the twist")->pass);
}

TEST_CASE("singular braiding is reported rather than thrown") {
  Ring ring{Field::rationals(), 1};
  auto t = symmetric_data(2, ring);
  t.c_plus = MatrixR(ring, 4, 4);
  auto rep = check_axioms(t);
  CHECK_FALSE(rep.find("braiding invertible")->pass);
  CHECK_FALSE(rep.infinitesimally_symmetric());
}

TEST_CASE("a non-symmetric braiding fails only the symmetry flag") {
  // A = 2 constant: a genuine Temperley-Lieb braiding that is not involutive.
  Ring ring{Field::rationals(), 0};
  auto t = kauffman_data(0);
  auto a = TruncatedScalar::constant(ring, FieldElem(ring.field, 2));
  auto ai = ring_inverse(a);
  auto zero = TruncatedScalar(ring);
  t.ev_r = MatrixR(ring, 1, 4, {zero, a, -ai, zero});
  t.coev_r = MatrixR(ring, 4, 1, {zero, -a, ai, zero});
  t.ev_l = t.ev_r;
  t.coev_l = t.coev_r;
  MatrixR u = mat_mul(t.coev_r, t.ev_r);
  t.c_plus = mat_add(mat_scale(a, MatrixR::identity(ring, 4)), mat_scale(ai, u));
  t.theta = mat_scale(-(a * a * a), MatrixR::identity(ring, 2));
  auto rep = check_axioms(t);
  CHECK(rep.structural_ok());
  CHECK_FALSE(rep.infinitesimally_symmetric());
}

TEST_CASE("reduction commutes with construction and keeps the axioms") {
  auto t4 = kauffman_data(4);
  auto r = reduce_data(t4, 2);
  auto t2 = kauffman_data(2);
  CHECK(r.c_plus == t2.c_plus);
  CHECK(r.theta == t2.theta);
  CHECK(r.ev_r == t2.ev_r);
  CHECK(r.coev_l == t2.coev_l);
  CHECK(check_axioms(r).all_pass());
  CHECK_THROWS_AS(reduce_data(t2, 3), OrderError);
}

TEST_CASE("shape and field errors") {
  CHECK_THROWS_AS(kauffman_data(2, Field::prime(7)), UnsupportedModelError);
  auto t = kauffman_data(1);
  t.theta = MatrixR::identity(t.ring, 3);
  CHECK_THROWS_AS(check_axioms(t), ShapeError);
  auto s = kauffman_data(1);
  s.ev_r = MatrixR(Ring{Field::rationals(), 2}, 1, 4);
  CHECK_THROWS_AS(check_axioms(s), ShapeError);
}
