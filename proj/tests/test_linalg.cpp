#include "doctest.h"
#include "oracles/rank_oracle.hpp"
#include "qdef/linalg.hpp"
#include "random_util.hpp"

using namespace qdef;
using qdef::testing::random_elem;
using qdef::testing::random_series;

namespace {

MatrixK random_k(std::mt19937_64& rng, Field f, std::size_t r, std::size_t c, int sparsity = 0) {
  MatrixK m(f, r, c);
  std::uniform_int_distribution<int> coin(0, sparsity);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) == 0) m(i, j) = random_elem(rng, f, 3);
  return m;
}

MatrixR random_r(std::mt19937_64& rng, Ring ring, std::size_t r, std::size_t c) {
  std::vector<TruncatedScalar> e;
  for (std::size_t i = 0; i < r * c; ++i) e.push_back(random_series(rng, ring, 3));
  return MatrixR(ring, r, c, std::move(e));
}

std::size_t oracle_rank(const MatrixK& m) {
  if (m.field().is_rational()) {
    std::vector<std::vector<mpq_class>> rows(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).to_mpq();
    return oracle::rank_rational(rows);
  }
  std::uint64_t p = m.field().characteristic();
  std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = std::stoull(m(i, j).to_string()) % p;
  return oracle::rank_mod_p(rows, p);
}

const std::vector<Field> kFields = {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(7)};

}  // namespace

TEST_CASE("kron of identities") {
  Ring r{Field::rationals(), 2};
  CHECK(kron(MatrixR::identity(r, 2), MatrixR::identity(r, 3)) == MatrixR::identity(r, 6));
}

TEST_CASE("shape errors") {
  Ring r{Field::rationals(), 1};
  CHECK_THROWS_AS(mat_mul(MatrixR(r, 2, 3), MatrixR(r, 2, 3)), ShapeError);
  CHECK_THROWS_AS(mat_add(MatrixR(r, 2, 3), MatrixR(r, 3, 2)), ShapeError);
  CHECK_THROWS_AS(solve(MatrixK(r.field, 2, 2), VectorK(3, FieldElem::zero(r.field))), ShapeError);
  CHECK_THROWS_AS(mat_mul(MatrixR(r, 2, 2), MatrixR(Ring{r.field, 2}, 2, 2)), OrderMismatchError);
}

TEST_CASE("matrix product identities on random inputs") {
  std::mt19937_64 rng(3);
  for (Field f : kFields) {
    Ring ring{f, 2};
    for (int t = 0; t < 10; ++t) {
      MatrixR a = random_r(rng, ring, 2, 3), b = random_r(rng, ring, 2, 2);
      MatrixR c = random_r(rng, ring, 3, 2), d = random_r(rng, ring, 2, 3);
      CHECK(mat_mul(a, MatrixR::identity(ring, 3)) == a);
      CHECK(mat_mul(kron(a, b), kron(c, d)) == kron(mat_mul(a, c), mat_mul(b, d)));
      MatrixR e = random_r(rng, ring, 1, 2);
      CHECK(kron(kron(a, b), e) == kron(a, kron(b, e)));
    }
  }
}

TEST_CASE("kernel examples") {
  Field f2 = Field::prime(2);
  CHECK(kernel_basis(MatrixK::identity(f2, 3)).empty());
  MatrixK ones(f2, 2, 2, {FieldElem(f2, 1), FieldElem(f2, 1), FieldElem(f2, 1), FieldElem(f2, 1)});
  auto k = kernel_basis(ones);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == VectorK{FieldElem(f2, 1), FieldElem(f2, 1)});
}

TEST_CASE("rank-nullity against an independent rank") {
  std::mt19937_64 rng(5);
  for (Field f : kFields) {
    for (int t = 0; t < 25; ++t) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      MatrixK a = random_k(rng, f, r, c, 2);
      std::size_t rk = rank(a);
      CHECK(rk == oracle_rank(a));
      auto ker = kernel_basis(a);
      CHECK(rk + ker.size() == c);
      for (const auto& v : ker)
        for (const auto& x : mat_vec(a, v)) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("solve") {
  Field q = Field::rationals();
  VectorK b = {FieldElem(q, 2), FieldElem::ratio(q, -1, 3)};
  CHECK(*solve(MatrixK::identity(q, 2), b).solution == b);
  auto z = solve(MatrixK(q, 2, 3), VectorK(2, FieldElem::zero(q)));
  REQUIRE(z.solved());
  CHECK(*z.solution == VectorK(3, FieldElem::zero(q)));

  std::mt19937_64 rng(9);
  for (Field f : kFields) {
    for (int t = 0; t < 25; ++t) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      MatrixK a = random_k(rng, f, r, c, 2);
      VectorK x0(c);
      for (auto& x : x0) x = random_elem(rng, f);
      VectorK rhs = mat_vec(a, x0);
      auto res = solve(a, rhs);
      REQUIRE(res.solved());
      CHECK(mat_vec(a, *res.solution) == rhs);
      // Perturb; either still solvable or a valid certificate comes back.
      rhs[rng() % r] += FieldElem::one(f);
      auto res2 = solve(a, rhs);
      if (res2.solved()) {
        CHECK(mat_vec(a, *res2.solution) == rhs);
      } else {
        const VectorK& y = res2.witness;
        REQUIRE(y.size() == r);
        for (std::size_t j = 0; j < c; ++j) {
          FieldElem s = FieldElem::zero(f);
          for (std::size_t i = 0; i < r; ++i) add_product(s, y[i], a(i, j));
          CHECK(s.is_zero());
        }
        FieldElem s = FieldElem::zero(f);
        for (std::size_t i = 0; i < r; ++i) add_product(s, y[i], rhs[i]);
        CHECK(!s.is_zero());
      }
    }
  }
}

TEST_CASE("mat_invert") {
  Ring ring{Field::rationals(), 3};
  CHECK(mat_invert(MatrixR::identity(ring, 3)) == MatrixR::identity(ring, 3));
  TruncatedScalar c = TruncatedScalar::parse(ring, "[2, 1, 0, -1]");
  CHECK(mat_invert(mat_scale(c, MatrixR::identity(ring, 2))) == mat_scale(ring_inverse(c), MatrixR::identity(ring, 2)));

  std::mt19937_64 rng(11);
  for (Field f : kFields) {
    Ring r{f, 3};
    for (int t = 0; t < 10; ++t) {
      // Identity plus eps times noise.
      MatrixR a = random_r(rng, r, 3, 3);
      std::vector<TruncatedScalar> e(a.entries());
      for (std::size_t i = 0; i < e.size(); ++i) {
        std::vector<FieldElem> co(e[i].coeffs().begin(), e[i].coeffs().end());
        co[0] = FieldElem(f, i % 4 == 0 ? 1 : 0);
        e[i] = TruncatedScalar(r, co);
      }
      MatrixR m(r, 3, 3, e);
      MatrixR inv = mat_invert(m);
      CHECK(mat_mul(inv, m) == MatrixR::identity(r, 3));
      CHECK(mat_mul(m, inv) == MatrixR::identity(r, 3));
    }
  }
  MatrixR sing(ring, 2, 2);
  sing(0, 0) = TruncatedScalar::one(ring);
  CHECK_THROWS_AS(mat_invert(sing), NonUnitError);
}

TEST_CASE("matrix literal") {
  Ring r{Field::rationals(), 1};
  MatrixR m = MatrixR::parse(r, "2 2\n[1, 1] 0\n-1/2 [0, 3]");
  CHECK(m(0, 0).to_string() == "[1, 1]");
  CHECK(m(1, 0).to_string() == "[-1/2, 0]");
  CHECK(m(1, 1).to_string() == "[0, 3]");
  CHECK(MatrixR::parse(r, m.to_string()) == m);
  CHECK_THROWS_AS(MatrixR::parse(r, "2 2 1 2 3"), ParseError);
}
