#include <gmpxx.h>

#include <random>

#include "braid_corpus.hpp"
#include "doctest.h"
#include "oracles/skein.hpp"
#include "qdef/errors.hpp"
#include "qdef/invariants.hpp"
#include "random_diagrams.hpp"

using namespace qdef;
using namespace qdef::testing;

namespace {

using K = SliceKind;

std::vector<mpq_class> skein_value(const BraidWord& b, unsigned order) {
  oracle::SkeinBraid sb;
  sb.strands = static_cast<int>(b.strands);
  sb.letters = b.letters;
  sb.framings = b.framings;
  for (std::size_t i = 1; i <= b.letters.size(); ++i)
    sb.singular.push_back(std::find(b.singular_letters.begin(), b.singular_letters.end(), i) != b.singular_letters.end());
  for (auto [s, c] : b.singular_twists) sb.singular_twists.push_back(static_cast<int>(c));
  return oracle::expand(oracle::bracket(sb), order);
}

bool same(const TruncatedScalar& v, const std::vector<mpq_class>& w) {
  if (v.coeffs().size() != w.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (v[i].to_mpq() != w[i]) return false;
  return true;
}

MorseDiagram stack(const MorseDiagram& lower, const MorseDiagram& upper) {
  MorseDiagram r{lower.source, upper.target, lower.slices};
  r.slices.insert(r.slices.end(), upper.slices.begin(), upper.slices.end());
  return r;
}

MorseDiagram side_by_side(const MorseDiagram& a, const MorseDiagram& b) {
  MorseDiagram r;
  r.source = a.source;
  r.source.insert(r.source.end(), b.source.begin(), b.source.end());
  r.target = a.target;
  r.target.insert(r.target.end(), b.target.begin(), b.target.end());
  r.slices = a.slices;
  for (Slice s : b.slices) {
    s.offset += a.target.size();
    r.slices.push_back(s);
  }
  return r;
}

Signature random_signature(std::mt19937_64& rng, std::size_t max_len) {
  Signature s;
  for (std::size_t i = std::uniform_int_distribution<std::size_t>(0, max_len)(rng); i > 0; --i)
    s.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? Orient::Up : Orient::Down);
  return s;
}

MorseDiagram random_singular_closure(std::mt19937_64& rng, std::size_t max_singular) {
  auto d = trace_closure(random_braid(rng, 3, 5, 1));
  auto pos = singularizable_positions(d);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::size_t s = std::min(pos.size(), std::uniform_int_distribution<std::size_t>(0, max_singular)(rng));
  pos.resize(s);
  return singularize(d, pos);
}

TortileObjectData nonsymmetric_data() {
  Ring ring{Field::rationals(), 1};
  auto a = TruncatedScalar::parse(ring, "[2, 1]");
  auto ai = ring_inverse(a);
  auto zero = TruncatedScalar(ring);
  TortileObjectData t;
  t.dim = 2;
  t.ring = ring;
  t.ev_r = MatrixR(ring, 1, 4, {zero, a, -ai, zero});
  t.coev_r = MatrixR(ring, 4, 1, {zero, -a, ai, zero});
  t.ev_l = t.ev_r;
  t.coev_l = t.coev_r;
  t.c_plus = mat_add(mat_scale(a, MatrixR::identity(ring, 4)), mat_scale(ai, mat_mul(t.coev_r, t.ev_r)));
  t.theta = mat_scale(-(a * a * a), MatrixR::identity(ring, 2));
  return t;
}

}  // namespace

TEST_CASE("circle with symmetric data is the dimension") {
  MorseDiagram circle{{}, {}, {{K::CupR, 0}, {K::CapL, 0}}};
  for (std::size_t d : {1u, 2u, 3u}) {
    Ring ring{Field::rationals(), 2};
    auto v = evaluate_link(circle, symmetric_data(d, ring));
    CHECK(v == TruncatedScalar::constant(ring, FieldElem(ring.field, static_cast<long long>(d))));
    auto m = evaluate(circle, symmetric_data(d, ring));
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 1);
  }
}

TEST_CASE("unknot and trefoil values") {
  auto t2 = kauffman_data(2);
  auto u = trace_closure(unknot_braid());
  CHECK(evaluate_link(u, t2) == TruncatedScalar::parse(t2.ring, "[-2, 0, -4]"));
  CHECK(same(evaluate_link(u, t2), skein_value(unknot_braid(), 2)));
  auto t4 = kauffman_data(4);
  CHECK(same(evaluate_link(trace_closure(trefoil_braid()), t4), skein_value(trefoil_braid(), 4)));
  CHECK(same(evaluate_link(trace_closure(hopf_braid(1, -1)), t4), skein_value(hopf_braid(1, -1), 4)));
}

TEST_CASE("skein agreement on random framed closures, including singular ones") {
  std::mt19937_64 rng(21);
  auto t = kauffman_data(3);
  Evaluator ev(t);
  for (int trial = 0; trial < 200; ++trial) {
    auto b = random_braid(rng, 4, 7, 2);
    for (std::size_t i = 1; i <= b.letters.size(); ++i)
      if (rng() % 4 == 0) b.singular_letters.push_back(i);
    if (rng() % 3 == 0) b.singular_twists.push_back({1 + rng() % b.strands, 1 + rng() % 2});
    CHECK(same(ev.evaluate_closed(trace_closure(b)), skein_value(b, 3)));
  }
}

TEST_CASE("vassiliev coefficients") {
  auto t = kauffman_data(2);
  auto u = trace_closure(unknot_braid());
  CHECK(vassiliev_coeff(u, t, 0) == FieldElem(t.ring.field, -2));
  CHECK(vassiliev_coeff(u, t, 1).is_zero());
  CHECK(vassiliev_coeff(u, t, 2) == FieldElem(t.ring.field, -4));
  CHECK_THROWS_AS(vassiliev_coeff(u, t, 3), OrderError);
  MorseDiagram open{{Orient::Up}, {Orient::Up}, {{K::TwPos, 0}}};
  CHECK_THROWS_AS(vassiliev_coeff(open, t, 0), BoundaryError);
}

TEST_CASE("order-0 coefficient ignores crossing switches and twist signs") {
  std::mt19937_64 rng(8);
  Evaluator ev(kauffman_data(3));
  for (int trial = 0; trial < 100; ++trial) {
    auto d = trace_closure(random_braid(rng, 3, 6, 2));
    auto pos = singularizable_positions(d);
    if (pos.empty()) continue;
    auto e = d;
    Slice& s = e.slices[pos[rng() % pos.size()]];
    s.kind = s.kind == K::CrPos ? K::CrNeg : s.kind == K::CrNeg ? K::CrPos : s.kind == K::TwPos ? K::TwNeg : K::TwPos;
    CHECK(ev.evaluate_closed(d)[0] == ev.evaluate_closed(e)[0]);
  }
}

TEST_CASE("sparse and dense routes agree, functoriality and tensor products") {
  std::mt19937_64 rng(17);
  auto t = kauffman_data(2);
  Evaluator ev(t);
  for (int trial = 0; trial < 40; ++trial) {
    auto d1 = random_diagram(rng, random_signature(rng, 3), 6, 5);
    CHECK(ev.evaluate(d1) == evaluate_dense(d1, t));
    auto d2 = random_diagram(rng, d1.target, 5, 5);
    CHECK(ev.evaluate(stack(d1, d2)) == mat_mul(ev.evaluate(d2), ev.evaluate(d1)));
    auto a = random_diagram(rng, random_signature(rng, 2), 4, 3);
    auto b = random_diagram(rng, random_signature(rng, 2), 4, 3);
    CHECK(ev.evaluate(side_by_side(a, b)) == kron(ev.evaluate(a), ev.evaluate(b)));
  }
}

TEST_CASE("open diagrams with symmetric data") {
  Ring ring{Field::prime(5), 1};
  auto t = symmetric_data(3, ring);
  MorseDiagram cross{{Orient::Up, Orient::Up}, {Orient::Up, Orient::Up}, {{K::CrPos, 0}}};
  CHECK(evaluate(cross, t) == t.c_plus);
  MorseDiagram sing{{Orient::Up, Orient::Up}, {Orient::Up, Orient::Up}, {{K::CrSing, 0}}};
  CHECK(evaluate(sing, t).is_zero());
}

TEST_CASE("resolve_singular") {
  auto t = trace_closure(trefoil_braid());
  auto r0 = resolve_singular(t);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0].sign == 1);
  CHECK(r0[0].diagram == t);
  auto pos = singularizable_positions(t);
  auto s = singularize(t, {pos[1]});
  auto r1 = resolve_singular(s);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].sign == 1);
  CHECK(r1[0].diagram.slices[pos[1]].kind == K::CrPos);
  CHECK(r1[1].sign == -1);
  CHECK(r1[1].diagram.slices[pos[1]].kind == K::CrNeg);
  CHECK(resolve_singular(singularize(t, pos)).size() == 8);
}

TEST_CASE("singular evaluation equals the signed resolution sum") {
  std::mt19937_64 rng(31);
  for (unsigned n : {0u, 2u}) {
    Evaluator ev(kauffman_data(n));
    for (int trial = 0; trial < 60; ++trial) {
      auto d = random_singular_closure(rng, 3);
      TruncatedScalar sum(ev.ring());
      for (const auto& sd : resolve_singular(d)) {
        auto v = ev.evaluate_closed(sd.diagram);
        sum = sd.sign > 0 ? sum + v : sum - v;
      }
      CHECK(ev.evaluate_closed(d) == sum);
    }
  }
}

TEST_CASE("type bound") {
  auto t0 = kauffman_data(0);
  auto tref = trace_closure(trefoil_braid());
  auto pos = singularizable_positions(tref);
  auto r = verify_type_bound(singularize(tref, {pos[0]}), t0);
  CHECK(r.vanishes);

  auto t2 = kauffman_data(2);
  auto rep = check_axioms(t2);
  Evaluator ev(t2);
  auto hopf = trace_closure(hopf_braid(1, -1));
  for (const auto& base : {tref, hopf}) {
    auto p = singularizable_positions(base);
    std::size_t m = p.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (std::popcount(mask) != 3) continue;
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1u) chosen.push_back(p[i]);
      CHECK(verify_type_bound(singularize(base, chosen), ev, rep).vanishes);
    }
  }
  // Two singular crossings on the trefoil do not vanish at order 2.
  auto two = singularize(tref, {pos[0], pos[1]});
  CHECK_FALSE(ev.evaluate_closed(two).is_zero());
  CHECK_THROWS_AS(verify_type_bound(two, t2), PreconditionError);
}

TEST_CASE("type bound refuses flagged data") {
  auto t = nonsymmetric_data();
  auto rep = check_axioms(t);
  REQUIRE(rep.structural_ok());
  REQUIRE_FALSE(rep.infinitesimally_symmetric());
  auto tref = trace_closure(trefoil_braid());
  auto d = singularize(tref, singularizable_positions(tref));
  CHECK_THROWS_AS(verify_type_bound(d, t), PreconditionError);
  // The guarantee really fails here: the fully singular trefoil is nonzero.
  CHECK_FALSE(evaluate_link(d, t).is_zero());
}

TEST_CASE("normalized values") {
  auto t = kauffman_data(2);
  Ring ring = t.ring;
  auto u = trace_closure(unknot_braid());
  CHECK(normalized_value(u, t) == TruncatedScalar::one(ring));
  auto unlink3 = disjoint_union(disjoint_union(u, u), u);
  CHECK(normalized_value(unlink3, t) == TruncatedScalar::one(ring));
  CHECK(normalized_value(trace_closure(braid(2, {}, {0, 0})), t) == TruncatedScalar::one(ring));
  auto tref = normalized_value(trace_closure(trefoil_braid()), t);
  CHECK_FALSE(tref[2].is_zero());
  CHECK(normalized_value(u, t)[2].is_zero());
  // Skein oracle for the trefoil, divided by the unknot value.
  auto tv = skein_value(trefoil_braid(), 2), uv = skein_value(unknot_braid(), 2);
  auto ui = ring_inverse(TruncatedScalar(ring, {FieldElem::from_mpq(ring.field, uv[0]), FieldElem::from_mpq(ring.field, uv[1]),
                                                FieldElem::from_mpq(ring.field, uv[2])}));
  auto tt = TruncatedScalar(ring, {FieldElem::from_mpq(ring.field, tv[0]), FieldElem::from_mpq(ring.field, tv[1]),
                                   FieldElem::from_mpq(ring.field, tv[2])});
  CHECK(tref == tt * ui);
  CHECK(tref[2] == FieldElem::ratio(ring.field, 15, 2));
}

TEST_CASE("disjoint unions") {
  auto t = kauffman_data(2);
  auto u = trace_closure(unknot_braid());
  auto c = check_disjoint_union(u, u, t);
  CHECK(c.ok());
  CHECK(c.value_union == TruncatedScalar::parse(t.ring, "[4, 0, 16]"));
  auto tref = trace_closure(trefoil_braid(1, 0));
  auto c2 = check_disjoint_union(tref, u, t);
  CHECK(c2.ok());
  CHECK(c2.value_union == c2.value_a * TruncatedScalar::parse(t.ring, "[-2, 0, -4]"));
  std::mt19937_64 rng(4);
  Evaluator ev(kauffman_data(4));
  for (int trial = 0; trial < 30; ++trial) {
    auto a = trace_closure(random_braid(rng, 3, 4));
    auto b = trace_closure(random_braid(rng, 3, 4));
    CHECK(check_disjoint_union(a, b, ev).ok());
  }
}

TEST_CASE("reduction compatibility") {
  std::mt19937_64 rng(9);
  Evaluator e4(kauffman_data(4)), e2(kauffman_data(2));
  auto r2 = reduce_data(kauffman_data(4), 2);
  Evaluator er(r2);
  for (int trial = 0; trial < 40; ++trial) {
    auto d = random_singular_closure(rng, 2);
    auto v = e4.evaluate_closed(d);
    CHECK(reduce_order(v, 2) == e2.evaluate_closed(d));
    CHECK(reduce_order(v, 2) == er.evaluate_closed(d));
  }
}

TEST_CASE("prefix cache matches uncached evaluation") {
  Evaluator ev(kauffman_data(3));
  Evaluator other(kauffman_data(2));
  Evaluator::PrefixCache cache;
  std::size_t n = 0;
  for_each_framed_closure(3, 3, [&](const BraidWord& b) {
    if (n++ % 7) return;
    auto d = trace_closure(b);
    CHECK(ev.evaluate_closed(d, &cache) == ev.evaluate_closed(d));
    if (n % 5 == 0) CHECK(other.evaluate_closed(d, &cache) == other.evaluate_closed(d));
  });
}

TEST_CASE("evaluator errors") {
  auto t = kauffman_data(1);
  Evaluator ev(t);
  MorseDiagram open{{Orient::Up}, {Orient::Up}, {{K::TwPos, 0}}};
  CHECK_THROWS_AS(ev.evaluate_closed(open), BoundaryError);
  MorseDiagram bad{{}, {}, {{K::CapR, 0}}};
  CHECK_THROWS_AS(ev.evaluate(bad), ValidationError);
  auto sing = symmetric_data(2, Ring{Field::rationals(), 1});
  sing.theta = MatrixR(sing.ring, 2, 2);
  CHECK_THROWS_AS(Evaluator{sing}, NonUnitError);
}
