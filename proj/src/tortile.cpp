#include "qdef/tortile.hpp"

namespace qdef {

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void require_shape(const MatrixR& m, const Ring& ring, std::size_t rows, std::size_t cols, const char* name) {
  if (!(m.ring() == ring)) throw ShapeError(std::string(name) + " lives over a different ring");
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeError(std::string(name) + " must be " + std::to_string(rows) + "x" + std::to_string(cols));
}

AxiomResult compare(const std::string& name, const MatrixR& lhs, const MatrixR& rhs) {
  AxiomResult r{name, true, std::nullopt};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.pass = false;
    r.counterexample = std::make_pair(std::size_t{0}, std::size_t{0});
    return r;
  }
  for (std::size_t i = 0; i < lhs.rows() && r.pass; ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (!(lhs(i, j) == rhs(i, j))) {
        r.pass = false;
        r.counterexample = std::make_pair(i, j);
        break;
      }
  return r;
}

// Vanishing mod eps of an entrywise difference.
AxiomResult vanishes_mod_eps(const std::string& name, const MatrixR& m) {
  AxiomResult r{name, true, std::nullopt};
  for (std::size_t i = 0; i < m.rows() && r.pass; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j)[0].is_zero()) {
        r.pass = false;
        r.counterexample = std::make_pair(i, j);
        break;
      }
  return r;
}

// Composite of maps listed in application order (first applied first).
MatrixR compose(std::initializer_list<MatrixR> maps) {
  auto it = maps.begin();
  MatrixR acc = *it;
  for (++it; it != maps.end(); ++it) acc = mat_mul(*it, acc);
  return acc;
}

}  // namespace

MatrixR whisker(const MatrixR& m, std::size_t left_dim, std::size_t right_dim) {
  MatrixR out = m;
  if (left_dim > 1) out = kron(MatrixR::identity(m.ring(), left_dim), out);
  if (right_dim > 1) out = kron(out, MatrixR::identity(m.ring(), right_dim));
  return out;
}

void TortileObjectData::check_shapes() const {
  std::size_t d = dim, d2 = dim * dim;
  if (d == 0) throw ShapeError("object dimension must be positive");
  require_shape(c_plus, ring, d2, d2, "c_plus");
  require_shape(theta, ring, d, d, "theta");
  require_shape(ev_r, ring, 1, d2, "ev_r");
  require_shape(coev_r, ring, d2, 1, "coev_r");
  require_shape(ev_l, ring, 1, d2, "ev_l");
  require_shape(coev_l, ring, d2, 1, "coev_l");
}

bool AxiomReport::structural_ok() const {
  for (const auto& r : structural)
    if (!r.pass) return false;
  return true;
}

bool AxiomReport::infinitesimally_symmetric() const {
  for (const auto& r : symmetry)
    if (!r.pass) return false;
  return true;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto* list : {&structural, &symmetry})
    for (const auto& r : *list)
      if (r.name == name) return &r;
  return nullptr;
}

AxiomReport check_axioms(const TortileObjectData& t) {
  t.check_shapes();
  AxiomReport rep;
  const std::size_t d = t.dim;
  const Ring& ring = t.ring;
  auto id = [&](unsigned k) { return MatrixR::identity(ring, ipow(d, k)); };
  const MatrixR& c = t.c_plus;

  std::optional<MatrixR> c_inv, theta_inv;
  try {
    c_inv = mat_invert(c);
    rep.structural.push_back({"braiding invertible", true, std::nullopt});
  } catch (const NonUnitError&) {
    rep.structural.push_back({"braiding invertible", false, std::make_pair(std::size_t{0}, std::size_t{0})});
  }
  try {
    theta_inv = mat_invert(t.theta);
    rep.structural.push_back({"twist invertible", true, std::nullopt});
  } catch (const NonUnitError&) {
    rep.structural.push_back({"twist invertible", false, std::make_pair(std::size_t{0}, std::size_t{0})});
  }

  MatrixR c1 = whisker(c, 1, d), c2 = whisker(c, d, 1);
  rep.structural.push_back(compare("yang-baxter", compose({c1, c2, c1}), compose({c2, c1, c2})));

  rep.structural.push_back(compare("right zigzag on X", compose({whisker(t.coev_r, d, 1), whisker(t.ev_r, 1, d)}), id(1)));
  rep.structural.push_back(compare("right zigzag on X*", compose({whisker(t.coev_r, 1, d), whisker(t.ev_r, d, 1)}), id(1)));
  rep.structural.push_back(compare("left zigzag on X", compose({whisker(t.coev_l, 1, d), whisker(t.ev_l, d, 1)}), id(1)));
  rep.structural.push_back(compare("left zigzag on X*", compose({whisker(t.coev_l, d, 1), whisker(t.ev_l, 1, d)}), id(1)));

  // Kinks: X -> X X X* -> X X X* -> X and X -> X* X X -> X* X X -> X.
  MatrixR right_curl = compose({whisker(t.coev_l, d, 1), whisker(c, 1, d), whisker(t.ev_r, d, 1)});
  MatrixR left_curl = compose({whisker(t.coev_r, 1, d), whisker(c, d, 1), whisker(t.ev_l, 1, d)});
  rep.structural.push_back(compare("right curl is the twist", right_curl, t.theta));
  rep.structural.push_back(compare("left curl is the twist", left_curl, t.theta));

  // Twist on X (x) X from a kink of the doubled strand.
  MatrixR cc = compose({whisker(c, d, d), kron(c, c), whisker(c, d, d)});
  MatrixR coev_l2 = compose({t.coev_l, whisker(t.coev_l, d, d)});  // I -> X X X* X*
  MatrixR ev_r2 = compose({whisker(t.ev_r, d, d), t.ev_r});         // X X X* X* -> I
  MatrixR coev_r2 = compose({t.coev_r, whisker(t.coev_r, d, d)});  // I -> X* X* X X
  MatrixR ev_l2 = compose({whisker(t.ev_l, d, d), t.ev_l});         // X* X* X X -> I
  std::size_t d2 = d * d;
  MatrixR theta2_right = compose({whisker(coev_l2, d2, 1), whisker(cc, 1, d2), whisker(ev_r2, d2, 1)});
  MatrixR theta2_left = compose({whisker(coev_r2, 1, d2), whisker(cc, d2, 1), whisker(ev_l2, 1, d2)});
  MatrixR tt = kron(t.theta, t.theta);
  MatrixR expected = compose({tt, c, c});
  rep.structural.push_back(compare("twist on X(x)X (right kink)", theta2_right, expected));
  rep.structural.push_back(compare("twist on X(x)X (left kink)", theta2_left, expected));
  rep.structural.push_back(compare("twist naturality", compose({tt, c}), compose({c, tt})));

  // Dual of the twist through either duality.
  MatrixR right_mate = compose({whisker(t.coev_r, 1, d), whisker(t.theta, d, d), whisker(t.ev_r, d, 1)});
  MatrixR left_mate = compose({whisker(t.coev_l, d, 1), whisker(t.theta, d, d), whisker(t.ev_l, 1, d)});
  rep.structural.push_back(compare("dual twist", right_mate, left_mate));

  if (c_inv) {
    rep.symmetry.push_back(vanishes_mod_eps("braiding symmetric mod eps", mat_sub(c, *c_inv)));
  } else {
    rep.symmetry.push_back({"braiding symmetric mod eps", false, std::make_pair(std::size_t{0}, std::size_t{0})});
  }
  if (theta_inv) {
    rep.symmetry.push_back(vanishes_mod_eps("twist symmetric mod eps", mat_sub(t.theta, *theta_inv)));
  } else {
    rep.symmetry.push_back({"twist symmetric mod eps", false, std::make_pair(std::size_t{0}, std::size_t{0})});
  }
  return rep;
}

TortileObjectData kauffman_data(unsigned order, Field field) {
  if (!field.is_rational()) throw UnsupportedModelError("the Kauffman data is defined over Q only");
  Ring ring{field, order};
  TruncatedScalar a = truncated_exp(FieldElem::one(field), order);
  TruncatedScalar ai = ring_inverse(a);
  TruncatedScalar zero(ring);
  TortileObjectData t;
  t.dim = 2;
  t.ring = ring;
  t.ev_r = MatrixR(ring, 1, 4, {zero, a, -ai, zero});
  t.coev_r = MatrixR(ring, 4, 1, {zero, -a, ai, zero});
  t.ev_l = t.ev_r;
  t.coev_l = t.coev_r;
  MatrixR u = mat_mul(t.coev_r, t.ev_r);
  t.c_plus = mat_add(mat_scale(a, MatrixR::identity(ring, 4)), mat_scale(ai, u));
  t.theta = mat_scale(-(a * a * a), MatrixR::identity(ring, 2));
  return t;
}

TortileObjectData symmetric_data(std::size_t dim, Ring ring) {
  TortileObjectData t;
  t.dim = dim;
  t.ring = ring;
  std::size_t d2 = dim * dim;
  t.c_plus = MatrixR(ring, d2, d2);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) t.c_plus(j * dim + i, i * dim + j) = TruncatedScalar::one(ring);
  t.theta = MatrixR::identity(ring, dim);
  t.ev_r = MatrixR(ring, 1, d2);
  t.coev_r = MatrixR(ring, d2, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    t.ev_r(0, i * dim + i) = TruncatedScalar::one(ring);
    t.coev_r(i * dim + i, 0) = TruncatedScalar::one(ring);
  }
  t.ev_l = t.ev_r;
  t.coev_l = t.coev_r;
  return t;
}

TortileObjectData reduce_data(const TortileObjectData& t, unsigned k) {
  if (k > t.order()) throw OrderError("cannot reduce order " + std::to_string(t.order()) + " data to order " + std::to_string(k));
  TortileObjectData r;
  r.dim = t.dim;
  r.ring = Ring{t.ring.field, k};
  r.c_plus = reduce_order(t.c_plus, k);
  r.theta = reduce_order(t.theta, k);
  r.ev_r = reduce_order(t.ev_r, k);
  r.coev_r = reduce_order(t.coev_r, k);
  r.ev_l = reduce_order(t.ev_l, k);
  r.coev_l = reduce_order(t.coev_l, k);
  return r;
}

}  // namespace qdef
