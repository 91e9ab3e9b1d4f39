#include <string>

#include "corpus.hpp"
#include "doctest.h"
#include "qdef/errors.hpp"
#include "qdef/io.hpp"

using namespace qdef;
using namespace qdef::testing;

namespace {

int error_line(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("presentations round trip") {
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    SkeletalPresentation p = twisted_z2(f);
    p.set_rho(1, FieldElem(f, 2));
    p.set_lambda(1, FieldElem(f, 2));
    CHECK(parse_presentation(format_presentation(p)) == p);
    p.set_trivial_braiding();
    p.set_sigma(1, 1, FieldElem(f, -1));
    CHECK(parse_presentation(format_presentation(p)) == p);
    auto z3 = SkeletalPresentation::cyclic(f, 3);
    CHECK(parse_presentation(format_presentation(z3)) == z3);
  }
  auto p = parse_presentation("# Z/2\nfield Q\nobjects e g\ntensor\ne g\ng e\nalpha g g g -> -1\nbraided\n");
  CHECK(p.alpha(1, 1, 1) == FieldElem(Field::rationals(), -1));
  CHECK(p.braided());
  CHECK(p.sigma(1, 1).is_one());
}

TEST_CASE("presentation errors carry the line") {
  CHECK(error_line([] { parse_presentation("field Q\nobjects e g\ntensor\ne g\ng e\nalpha g g x -> 1\n"); }) == 6);
  CHECK(error_line([] { parse_presentation("field Q\nobjects e g\ntensor\ne g\ng\n"); }) == 5);
  CHECK(error_line([] { parse_presentation("field R\n"); }) == 1);
  CHECK(error_line([] { parse_presentation("field Q\nobjects e g\ntensor\ne g\ng e\nalpha g g g -> 0\n"); }) == 6);
  CHECK(error_line([] { parse_presentation("field Q\nobjects e g\ntensor\ne g\ng e\nbogus\n"); }) == 6);
  // Not a monoid with unit e.
  CHECK(error_line([] { parse_presentation("field Q\nobjects e g\ntensor\ng g\ng e\n"); }) == 3);
  try {
    parse_presentation("field Q\nobjects e\ntensor\nq\n", "p.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("p.txt:4") != std::string::npos);
  }
}

TEST_CASE("functors round trip") {
  auto c = std::make_shared<const SkeletalPresentation>(SkeletalPresentation::cyclic(Field::rationals(), 3));
  FunctorPresentation f = coboundary_twist(c);
  f.set_unit_scalar(FieldElem(c->field(), 1));
  FunctorPresentation g = parse_functor(format_functor(f), c, c);
  CHECK(g.object_map() == f.object_map());
  for (Obj a = 0; a < 3; ++a)
    for (Obj b = 0; b < 3; ++b) CHECK(g.coherence(a, b) == f.coherence(a, b));
  CHECK(g.unit_scalar() == f.unit_scalar());

  // Inversion on Z/3.
  auto inv = parse_functor("map g -> g2\nmap g2 -> g\n", c, c);
  CHECK(inv.map(1) == 2);
  CHECK(error_line([&] { parse_functor("map g -> g\nmap g2 -> e\n", c, c); }) == 1);
  CHECK(error_line([&] { parse_functor("coherence g q -> 1\n", c, c); }) == 1);
  CHECK(error_line([&] { parse_functor("map g -> g\nunit -> 0\n", c, c); }) == 2);
}

TEST_CASE("cochains and deformations round trip") {
  auto c = std::make_shared<const SkeletalPresentation>(SkeletalPresentation::cyclic(Field::prime(5), 3));
  FunctorPtr f = std::make_shared<FunctorPresentation>(FunctorPresentation::identity(c));
  Cochain x = Cochain::indicator(f, {1, 2}, FieldElem(c->field(), 3)) +
              Cochain::indicator(f, {2, 2}, FieldElem(c->field(), 4));
  CHECK(parse_cochain(format_cochain(x), f) == x);
  Cochain y = Cochain::indicator(f, {1, 1, 2}, FieldElem(c->field(), 1));
  CHECK(parse_cochain(format_cochain(y), f) == y);

  DeformationSeries d{f, {x, Cochain(f, 2), Cochain::indicator(f, {2, 1}, FieldElem(c->field(), 2))}, true};
  DeformationSeries back = parse_deformation(format_deformation(d), f);
  CHECK(back.order() == 3);
  CHECK(back.proper);
  for (std::size_t k = 0; k < 3; ++k) CHECK(back.terms[k] == d.terms[k]);

  CHECK(error_line([&] { parse_cochain("degree 2\ng g g -> 1\n", f); }) == 2);
  CHECK(error_line([&] { parse_cochain("degree x\n", f); }) == 1);
  CHECK(error_line([&] { parse_deformation("order 1\nterm 2\n", f); }) == 2);
  CHECK(error_line([&] { parse_deformation("order 2\nterm 1\ng g -> 1\nterm 1\n", f); }) == 4);
}

TEST_CASE("tortile data round trip") {
  for (unsigned n : {0u, 2u}) {
    auto t = kauffman_data(n);
    auto back = parse_data(format_data(t));
    CHECK(back.dim == t.dim);
    CHECK(back.ring == t.ring);
    CHECK(back.c_plus == t.c_plus);
    CHECK(back.theta == t.theta);
    CHECK(back.ev_r == t.ev_r);
    CHECK(back.coev_r == t.coev_r);
    CHECK(back.ev_l == t.ev_l);
    CHECK(back.coev_l == t.coev_l);
    CHECK(format_data(back) == format_data(t));
  }
  auto t = symmetric_data(3, Ring{Field::prime(7), 1});
  CHECK(format_data(parse_data(format_data(t))) == format_data(t));
}

TEST_CASE("tortile data errors") {
  std::string good = format_data(kauffman_data(1));
  CHECK_NOTHROW(parse_data(good));
  // Shape mismatch on theta (declared 2 x 2 for dim 2 but one row short).
  std::string bad = good;
  auto at = bad.find("theta\n2 2\n");
  REQUIRE(at != std::string::npos);
  bad.replace(at, 10, "theta\n1 2\n");
  CHECK_THROWS_AS(parse_data(bad, "d.txt"), ParseError);
  CHECK(error_line([] { parse_data("field Q\norder 1\n"); }) >= 1);
  CHECK(error_line([] { parse_data("field Q\norder x\ndim 2\n"); }) == 2);
  CHECK_THROWS_AS(read_file("/nonexistent/qdef/data.txt"), ParseError);
  try {
    read_file("/nonexistent/qdef/data.txt");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/qdef/data.txt") != std::string::npos);
  }
}
