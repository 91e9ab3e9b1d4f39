#include <functional>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "qdef/skeletal.hpp"

using namespace qdef;
using qdef::testing::corpus_functors;
using qdef::testing::twisted_z2;
using Ptr = ParenTree::Ptr;
using Atom = ParenTree::Atom;

namespace {

const Field kQ = Field::rationals();

// Random bracketing of an atom sequence. Runs of applied atoms may be grouped
// under a single Apply node.
Ptr random_tree(std::mt19937_64& rng, const std::vector<Atom>& atoms, std::size_t lo, std::size_t hi, bool inside) {
  if (hi - lo == 1) {
    Ptr leaf = ParenTree::leaf(atoms[lo].object);
    return atoms[lo].applied && !inside ? ParenTree::apply(leaf) : leaf;
  }
  if (!inside) {
    bool all_applied = true;
    for (std::size_t i = lo; i < hi; ++i) all_applied = all_applied && atoms[i].applied;
    if (all_applied && rng() % 3 == 0) return ParenTree::apply(random_tree(rng, atoms, lo, hi, true));
  }
  std::size_t cut = lo + 1 + rng() % (hi - lo - 1);
  return ParenTree::tensor(random_tree(rng, atoms, lo, cut, inside), random_tree(rng, atoms, cut, hi, inside));
}

Obj product(const SkeletalPresentation& p, const ParenTree& t) {
  Obj x = 0;
  for (const auto& a : t.atoms()) x = p.mul(x, a.object);
  return x;
}

// Rewrites to the right comb by repeatedly firing a randomly chosen redex and
// returns the accumulated scalar. Redexes: ((x y) z) -> (x (y z)) at either
// level, and F(x y) -> F(x) F(y).
FieldElem random_route(std::mt19937_64& rng, Ptr t, const FunctorPresentation* f, const SkeletalPresentation& top) {
  FieldElem scalar = FieldElem::one(top.field());
  while (true) {
    // Collect redex paths.
    std::vector<std::vector<int>> redexes;
    std::vector<int> path;
    std::function<void(const Ptr&)> scan = [&](const Ptr& n) {
      if (n->kind() == ParenTree::Kind::Tensor) {
        if (n->left()->kind() == ParenTree::Kind::Tensor) redexes.push_back(path);
        path.push_back(0); scan(n->left()); path.pop_back();
        path.push_back(1); scan(n->right()); path.pop_back();
      } else if (n->kind() == ParenTree::Kind::Apply) {
        if (n->inner()->kind() == ParenTree::Kind::Tensor) redexes.push_back(path);
        path.push_back(2); scan(n->inner()); path.pop_back();
      }
    };
    scan(t);
    if (redexes.empty()) return scalar;
    const std::vector<int>& target = redexes[rng() % redexes.size()];
    std::function<Ptr(const Ptr&, std::size_t, bool)> fire = [&](const Ptr& n, std::size_t depth, bool inside) -> Ptr {
      if (depth < target.size()) {
        int step = target[depth];
        if (step == 0) return ParenTree::tensor(fire(n->left(), depth + 1, inside), n->right());
        if (step == 1) return ParenTree::tensor(n->left(), fire(n->right(), depth + 1, inside));
        return ParenTree::apply(fire(n->inner(), depth + 1, true));
      }
      const SkeletalPresentation& level = inside ? f->source() : top;
      if (n->kind() == ParenTree::Kind::Apply) {
        const Ptr& in = n->inner();
        scalar *= f->coherence(product(f->source(), *in->left()), product(f->source(), *in->right()));
        return ParenTree::tensor(ParenTree::apply(in->left()), ParenTree::apply(in->right()));
      }
      const Ptr& l = n->left();
      auto obj = [&](const Ptr& x) {
        if (inside || !f) return product(level, *x);
        Obj o = 0;
        for (const auto& a : x->atoms()) o = level.mul(o, a.applied ? f->map(a.object) : a.object);
        return o;
      };
      scalar *= level.alpha(obj(l->left()), obj(l->right()), obj(n->right()));
      return ParenTree::tensor(l->left(), ParenTree::tensor(l->right(), n->right()));
    };
    t = fire(t, 0, false);
  }
}

std::vector<Atom> random_atoms(std::mt19937_64& rng, std::size_t n_objs, std::size_t len, bool functor) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < len; ++i) atoms.push_back({functor && rng() % 3 != 0, static_cast<Obj>(rng() % n_objs)});
  return atoms;
}

}  // namespace

TEST_CASE("pentagon and hexagon examples") {
  for (Field f : {kQ, Field::prime(3)}) {
    auto z2 = SkeletalPresentation::cyclic(f, 2);
    CHECK(check_pentagon(z2).empty());
    CHECK(check_pentagon(twisted_z2(f)).empty());
    CHECK(check_units(twisted_z2(f)).empty());
    auto braided = z2;
    braided.set_sigma(1, 1, FieldElem(f, -1));
    CHECK(check_hexagons(braided).empty());
  }
  // A non-cocycle is caught and every failing tuple is reported.
  auto bad = SkeletalPresentation::cyclic(kQ, 2);
  bad.set_alpha(1, 1, 0, FieldElem(kQ, 2));
  auto v = check_pentagon(bad);
  CHECK(!v.empty());
  for (const auto& x : v) CHECK(!(x.lhs == x.rhs));
  CHECK(!check_units(bad).empty() == false);  // alpha(a, e, b) untouched
  auto bad_braid = SkeletalPresentation::cyclic(kQ, 3);
  bad_braid.set_sigma(1, 1, FieldElem(kQ, -1));
  CHECK(!check_hexagons(bad_braid).empty());
}

TEST_CASE("presentation construction rejects non-monoids") {
  CHECK_THROWS_AS(SkeletalPresentation(kQ, {"e", "x"}, {0, 1, 1, 1 + 1}), PreconditionError);
  CHECK_THROWS_AS(SkeletalPresentation(kQ, {"e", "x"}, {1, 1, 1, 1}), PreconditionError);
  auto p = SkeletalPresentation::cyclic(kQ, 2);
  CHECK_THROWS_AS(p.set_alpha(1, 1, 1, FieldElem::zero(kQ)), NonUnitError);
  CHECK_THROWS_AS(p.sigma(0, 0), PreconditionError);
}

TEST_CASE("coherence scalar examples") {
  auto p = twisted_z2(kQ);
  auto t = ParenTree::left_comb(std::vector<Obj>{1, 1, 1});
  auto r = ParenTree::right_comb(std::vector<Obj>{1, 1, 1});
  CHECK(coherence_scalar(*t, *t, p) == FieldElem::one(kQ));
  CHECK(coherence_scalar(*t, *r, p) == FieldElem(kQ, -1));
  auto trivial = SkeletalPresentation::cyclic(kQ, 3);
  std::mt19937_64 rng(1);
  auto atoms = random_atoms(rng, 3, 5, false);
  CHECK(coherence_scalar(*random_tree(rng, atoms, 0, 5, false), *random_tree(rng, atoms, 0, 5, false), trivial) == FieldElem::one(kQ));
  CHECK_THROWS_AS(coherence_scalar(*t, *ParenTree::left_comb(std::vector<Obj>{1, 0, 1}), p), BoundaryError);
  CHECK_THROWS_AS(normal_form_scalar(*ParenTree::apply(t), p), PreconditionError);
}

TEST_CASE("coherence scalar is functorial and path independent") {
  std::mt19937_64 rng(7);
  for (const auto& cf : corpus_functors()) {
    const FunctorPresentation& f = cf.functor;
    INFO(cf.name);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t len = 1 + rng() % 5;
      auto atoms = random_atoms(rng, f.source().size(), len, true);
      Ptr a = random_tree(rng, atoms, 0, len, false), b = random_tree(rng, atoms, 0, len, false),
          c = random_tree(rng, atoms, 0, len, false);
      CHECK(coherence_scalar(*a, *b, f) * coherence_scalar(*b, *c, f) == coherence_scalar(*a, *c, f));
      CHECK(random_route(rng, a, &f, f.target()) == normal_form_scalar(*a, f));
      // Source-level trees too.
      auto plain = random_atoms(rng, f.source().size(), len, false);
      Ptr s = random_tree(rng, plain, 0, len, false);
      CHECK(random_route(rng, s, nullptr, f.source()) == normal_form_scalar(*s, f.source()));
    }
  }
}

TEST_CASE("corpus functors satisfy the functor coherence") {
  for (const auto& cf : corpus_functors()) {
    INFO(cf.name);
    CHECK(check_presentation(cf.functor.source()).empty());
    CHECK(check_functor_hexagon(cf.functor).empty());
    CHECK(check_functor_units(cf.functor).empty());
  }
  // Breaking one coherence value is detected.
  auto c = std::make_shared<const SkeletalPresentation>(SkeletalPresentation::cyclic(kQ, 3));
  auto f = FunctorPresentation::identity(c);
  f.set_coherence(1, 1, FieldElem(kQ, 5));
  CHECK(!check_functor_hexagon(f).empty());
}

TEST_CASE("product presentation") {
  auto p = product_presentation(twisted_z2(kQ));
  CHECK(p.size() == 4);
  CHECK(check_presentation(p).empty());
  CHECK(p.alpha(3, 3, 3) == FieldElem(kQ, 1));
  CHECK(p.alpha(2, 2, 2) == FieldElem(kQ, -1));
}

TEST_CASE("multiplication functor examples") {
  auto triv = SkeletalPresentation::cyclic(kQ, 2);
  triv.set_trivial_braiding();
  auto m0 = mult_functor(std::make_shared<const SkeletalPresentation>(triv));
  for (Obj x = 0; x < 4; ++x)
    for (Obj y = 0; y < 4; ++y) CHECK(m0.coherence(x, y) == FieldElem::one(kQ));
  auto tr = braiding_from_mult(m0);
  for (const auto& s : tr) CHECK(s == FieldElem::one(kQ));

  auto sg = SkeletalPresentation::cyclic(kQ, 2);
  sg.set_sigma(1, 1, FieldElem(kQ, -1));
  auto m = mult_functor(std::make_shared<const SkeletalPresentation>(sg));
  // ((g,g),(g,e)) with (a, b) at index 2a + b.
  CHECK(m.coherence(3, 2) == FieldElem(kQ, -1));
  auto back = braiding_from_mult(m);
  CHECK(back[3] == FieldElem(kQ, -1));

  auto unbraided = std::make_shared<const SkeletalPresentation>(SkeletalPresentation::cyclic(kQ, 2));
  CHECK_THROWS_AS(mult_functor(unbraided), PreconditionError);
  CHECK_THROWS_AS(braiding_from_mult(FunctorPresentation::identity(unbraided)), ShapeError);
}

TEST_CASE("non-commutative monoids are outside the model") {
  // Left-zero band {e, x, y}: xy = x, yx = y.
  SkeletalPresentation p(kQ, {"e", "x", "y"}, {0, 1, 2, 1, 1, 1, 2, 2, 2});
  p.set_trivial_braiding();
  CHECK_THROWS_AS(mult_functor(std::make_shared<const SkeletalPresentation>(p)), UnsupportedModelError);
}

TEST_CASE("braiding enumeration and round trip") {
  struct Case {
    SkeletalPresentation p;
    std::size_t expected;
  };
  // Counts: bicharacters of the group (times the cocycle constraint).
  std::vector<Case> cases = {
      {SkeletalPresentation::cyclic(kQ, 2), 2},
      {SkeletalPresentation::cyclic(Field::prime(3), 2), 2},
      {SkeletalPresentation::cyclic(kQ, 3), 1},
      {SkeletalPresentation::cyclic(Field::prime(7), 3), 3},
      {SkeletalPresentation::cyclic(Field::prime(5), 4), 4},
      {twisted_z2(kQ), 0},
      {twisted_z2(Field::prime(5)), 2},  // sigma(g, g)^2 = -1 has two roots mod 5
  };
  for (auto& cs : cases) {
    auto all = enumerate_braidings(cs.p);
    CHECK(all.size() == cs.expected);
    for (const auto& b : all) {
      CHECK(check_hexagons(b).empty());
      auto shared = std::make_shared<const SkeletalPresentation>(b);
      FunctorPresentation m = mult_functor(shared);
      CHECK(check_functor_hexagon(m).empty());
      CHECK(check_functor_units(m).empty());
      auto sigma = braiding_from_mult(m);
      for (Obj a = 0; a < b.size(); ++a)
        for (Obj c = 0; c < b.size(); ++c) CHECK(sigma[a * b.size() + c] == b.sigma(a, c));
    }
  }
}
