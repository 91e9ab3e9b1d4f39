#include "qdef/defcomplex.hpp"

#include <functional>

namespace qdef {

namespace {

using Ptr = ParenTree::Ptr;

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void require_same_functor(const Cochain& a, const Cochain& b) {
  if (a.functor_ptr() != b.functor_ptr()) throw PreconditionError("cochains belong to different functors");
}

Ptr leaf(Obj a) { return ParenTree::leaf(a); }
Ptr app(Ptr t) { return ParenTree::apply(std::move(t)); }

std::vector<Ptr> leaves(const std::vector<Obj>& v, std::size_t lo, std::size_t hi) {
  std::vector<Ptr> out;
  for (std::size_t i = lo; i < hi; ++i) out.push_back(leaf(v[i]));
  return out;
}

std::vector<Ptr> applied_leaves(const std::vector<Obj>& v, std::size_t lo, std::size_t hi) {
  std::vector<Ptr> out;
  for (std::size_t i = lo; i < hi; ++i) out.push_back(app(leaf(v[i])));
  return out;
}

// Scalar that conjugates a component src -> tgt into the canonical
// F(left comb) -> right comb of F's.
FieldElem padding(const FunctorPresentation& f, const std::vector<Obj>& args, const ParenTree& src, const ParenTree& tgt) {
  Ptr canon = app(ParenTree::left_comb(leaves(args, 0, args.size())));
  return normal_form_scalar(*canon, f) / normal_form_scalar(src, f) * normal_form_scalar(tgt, f);
}

Obj product(const SkeletalPresentation& p, const std::vector<Obj>& v, std::size_t lo, std::size_t hi) {
  Obj x = 0;
  for (std::size_t i = lo; i < hi; ++i) x = p.mul(x, v[i]);
  return x;
}

// Padding for a component applied with the block [lo, hi) merged into one
// argument. With split set, another component then splits that block;
// otherwise F(block) stays a single factor of the target.
FieldElem insertion_padding(const FunctorPresentation& f, const std::vector<Obj>& a, std::size_t lo, std::size_t hi, bool split = true) {
  std::vector<Ptr> src_parts = leaves(a, 0, lo);
  src_parts.push_back(ParenTree::left_comb(leaves(a, lo, hi)));
  for (auto& p : leaves(a, hi, a.size())) src_parts.push_back(p);
  std::vector<Ptr> tgt_parts = applied_leaves(a, 0, lo);
  tgt_parts.push_back(split ? ParenTree::right_comb(applied_leaves(a, lo, hi)) : app(ParenTree::left_comb(leaves(a, lo, hi))));
  for (auto& p : applied_leaves(a, hi, a.size())) tgt_parts.push_back(p);
  return padding(f, a, *app(ParenTree::left_comb(src_parts)), *ParenTree::right_comb(tgt_parts));
}

// Padding for g on [0, split) tensored with h on [split, n).
FieldElem split_padding(const FunctorPresentation& f, const std::vector<Obj>& a, std::size_t split) {
  Ptr src = ParenTree::tensor(app(ParenTree::left_comb(leaves(a, 0, split))), app(ParenTree::left_comb(leaves(a, split, a.size()))));
  Ptr tgt = ParenTree::tensor(ParenTree::right_comb(applied_leaves(a, 0, split)), ParenTree::right_comb(applied_leaves(a, split, a.size())));
  return padding(f, a, *src, *tgt);
}

// Visits every term of delta on n-cochains as (row, column, coefficient).
void for_each_delta_term(const FunctorPresentation& f, unsigned n,
                         const std::function<void(std::size_t, std::size_t, const FieldElem&)>& visit) {
  const SkeletalPresentation& s = f.source();
  std::size_t k = s.size();
  std::size_t rows = ipow(k, n + 1);
  std::vector<Obj> a(n + 1);
  auto col_of = [&](const std::vector<Obj>& b) {
    std::size_t idx = 0;
    for (Obj x : b) idx = idx * k + x;
    return idx;
  };
  for (std::size_t row = 0; row < rows; ++row) {
    std::size_t r = row;
    for (std::size_t i = n + 1; i-- > 0;) {
      a[i] = r % k;
      r /= k;
    }
    // Outer term F(a0) c(a1..an).
    visit(row, col_of(std::vector<Obj>(a.begin() + 1, a.end())), split_padding(f, a, 1));
    // Inner terms merge a_{i-1} a_i.
    for (unsigned i = 1; i <= n; ++i) {
      std::vector<Obj> b(a.begin(), a.begin() + (i - 1));
      b.push_back(s.mul(a[i - 1], a[i]));
      b.insert(b.end(), a.begin() + i + 1, a.end());
      FieldElem p = insertion_padding(f, a, i - 1, i + 1, false);
      visit(row, col_of(b), i % 2 ? -p : p);
    }
    // Outer term c(a0..a_{n-1}) F(an).
    FieldElem p = split_padding(f, a, n);
    visit(row, col_of(std::vector<Obj>(a.begin(), a.end() - 1)), (n + 1) % 2 ? -p : p);
  }
}

}  // namespace

// ---- Cochain ----

Cochain::Cochain(FunctorPtr f, unsigned degree)
    : f_(std::move(f)), degree_(degree), values_(ipow(f_->source().size(), degree), FieldElem::zero(f_->source().field())) {
  if (degree == 0) throw PreconditionError("cochains have degree at least 1");
}

Cochain::Cochain(FunctorPtr f, unsigned degree, std::vector<FieldElem> values)
    : f_(std::move(f)), degree_(degree), values_(std::move(values)) {
  if (degree == 0) throw PreconditionError("cochains have degree at least 1");
  if (values_.size() != ipow(f_->source().size(), degree)) throw ShapeError("cochain has wrong number of components");
  for (const auto& v : values_)
    if (!(v.field() == field())) throw FieldMismatchError("cochain component over the wrong field");
}

Cochain Cochain::indicator(FunctorPtr f, const std::vector<Obj>& tuple, const FieldElem& value) {
  Cochain c(std::move(f), static_cast<unsigned>(tuple.size()));
  c.set(tuple, value);
  return c;
}

std::size_t Cochain::index(const std::vector<Obj>& tuple) const {
  if (tuple.size() != degree_) throw ShapeError("tuple length " + std::to_string(tuple.size()) + " for a degree " + std::to_string(degree_) + " cochain");
  std::size_t k = f_->source().size(), idx = 0;
  for (Obj x : tuple) {
    if (x >= k) throw ShapeError("object index out of range");
    idx = idx * k + x;
  }
  return idx;
}

std::vector<Obj> Cochain::tuple(std::size_t index) const {
  std::size_t k = f_->source().size();
  std::vector<Obj> t(degree_);
  for (std::size_t i = degree_; i-- > 0;) {
    t[i] = index % k;
    index /= k;
  }
  return t;
}

bool Cochain::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

bool Cochain::is_proper() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero()) continue;
    for (Obj x : tuple(i))
      if (x == 0) return false;
  }
  return true;
}

Cochain Cochain::operator-() const {
  Cochain c = *this;
  for (auto& v : c.values_) v = -v;
  return c;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  require_same_functor(a, b);
  if (a.degree_ != b.degree_) throw ShapeError("adding cochains of different degrees");
  Cochain c = a;
  for (std::size_t i = 0; i < c.values_.size(); ++i) c.values_[i] += b.values_[i];
  return c;
}

Cochain operator-(const Cochain& a, const Cochain& b) { return a + (-b); }

Cochain operator*(const FieldElem& s, const Cochain& a) {
  Cochain c = a;
  for (auto& v : c.values_) v = s * v;
  return c;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.f_ == b.f_ && a.degree_ == b.degree_ && a.values_ == b.values_;
}

// ---- products ----

Cochain delta(const Cochain& c) {
  Cochain out(c.functor_ptr(), c.degree() + 1);
  for_each_delta_term(c.functor(), c.degree(), [&](std::size_t row, std::size_t col, const FieldElem& coeff) {
    if (!c[col].is_zero()) add_product(out[row], coeff, c[col]);
  });
  return out;
}

Cochain cup(const Cochain& g, const Cochain& h) {
  require_same_functor(g, h);
  Cochain out(g.functor_ptr(), g.degree() + h.degree());
  std::size_t hs = h.size();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const FieldElem& gv = g[i / hs];
    const FieldElem& hv = h[i % hs];
    if (gv.is_zero() || hv.is_zero()) continue;
    out[i] = split_padding(g.functor(), out.tuple(i), g.degree()) * gv * hv;
  }
  return out;
}

Cochain brace_i(const Cochain& g, const Cochain& h, unsigned i) {
  require_same_functor(g, h);
  if (i >= g.degree()) throw PreconditionError("insertion position " + std::to_string(i) + " out of range for degree " + std::to_string(g.degree()));
  const SkeletalPresentation& s = g.functor().source();
  unsigned n = h.degree();
  Cochain out(g.functor_ptr(), g.degree() + n - 1);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    std::vector<Obj> a = out.tuple(idx);
    std::vector<Obj> hb(a.begin() + i, a.begin() + i + n);
    const FieldElem& hv = h.at(hb);
    if (hv.is_zero()) continue;
    std::vector<Obj> gb(a.begin(), a.begin() + i);
    gb.push_back(product(s, a, i, i + n));
    gb.insert(gb.end(), a.begin() + i + n, a.end());
    const FieldElem& gv = g.at(gb);
    if (gv.is_zero()) continue;
    out[idx] = insertion_padding(g.functor(), a, i, i + n) * gv * hv;
  }
  return out;
}

Cochain brace(const Cochain& g, const Cochain& h) {
  require_same_functor(g, h);
  Cochain out(g.functor_ptr(), g.degree() + h.degree() - 1);
  for (unsigned i = 0; i < g.degree(); ++i) {
    Cochain t = brace_i(g, h, i);
    out = ((h.degree() - 1) * i) % 2 ? out - t : out + t;
  }
  return out;
}

// ---- linear algebra on the complex ----

std::vector<std::size_t> proper_indices(std::size_t objects, unsigned n) {
  std::vector<std::size_t> out;
  std::size_t total = ipow(objects, n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    bool ok = true;
    for (unsigned j = 0; j < n; ++j, r /= objects) ok = ok && (r % objects != 0);
    if (ok) out.push_back(idx);
  }
  return out;
}

MatrixK delta_matrix(const FunctorPresentation& f, unsigned n, bool proper) {
  std::size_t k = f.source().size();
  std::size_t cols = ipow(k, n);
  std::vector<std::size_t> colmap(cols, SIZE_MAX);
  std::size_t ncols = 0;
  if (proper) {
    for (std::size_t idx : proper_indices(k, n)) colmap[idx] = ncols++;
  } else {
    for (std::size_t idx = 0; idx < cols; ++idx) colmap[idx] = ncols++;
  }
  MatrixK m(f.source().field(), ipow(k, n + 1), ncols);
  for_each_delta_term(f, n, [&](std::size_t row, std::size_t col, const FieldElem& coeff) {
    if (colmap[col] != SIZE_MAX) m(row, colmap[col]) += coeff;
  });
  return m;
}

Cohomology cohomology(const FunctorPresentation& f, unsigned n, bool proper) {
  if (n < 1 || n > 4) throw PreconditionError("cohomology is computed in degrees 1..4");
  MatrixK dn = delta_matrix(f, n, proper);
  Cohomology h;
  h.kernel = dn.cols() - rank(dn);
  h.image = n == 1 ? 0 : rank(delta_matrix(f, n - 1, proper));
  h.dimension = h.kernel - h.image;
  return h;
}

// ---- deformations ----

TruncatedScalar DeformationSeries::coherence(Obj a, Obj b) const {
  const Field& k = functor->source().field();
  std::vector<FieldElem> c{functor->coherence(a, b)};
  std::size_t idx = a * functor->source().size() + b;
  for (const auto& t : terms) c.push_back(t[idx]);
  return TruncatedScalar(Ring{k, order()}, std::move(c));
}

void validate_shape(const DeformationSeries& d) {
  if (!d.functor) throw PreconditionError("deformation without a functor");
  for (const auto& t : d.terms) {
    if (t.functor_ptr() != d.functor) throw PreconditionError("deformation term belongs to another functor");
    if (t.degree() != 2) throw PreconditionError("deformation terms must be 2-cochains");
  }
}

namespace {

// alpha_D F'(a,b) F'(ab,c) - alpha_C F'(a,bc) F'(b,c) as a series.
TruncatedScalar hexagon_difference(const DeformationSeries& d, Obj a, Obj b, Obj c) {
  const FunctorPresentation& f = *d.functor;
  const SkeletalPresentation& s = f.source();
  Ring r{s.field(), d.order()};
  TruncatedScalar ad = TruncatedScalar::constant(r, f.target().alpha(f.map(a), f.map(b), f.map(c)));
  TruncatedScalar ac = TruncatedScalar::constant(r, s.alpha(a, b, c));
  return ad * d.coherence(a, b) * d.coherence(s.mul(a, b), c) - ac * d.coherence(a, s.mul(b, c)) * d.coherence(b, c);
}

}  // namespace

DeformationCheck check_deformation(const DeformationSeries& d) {
  validate_shape(d);
  DeformationCheck out;
  std::size_t k = d.functor->source().size();
  for (Obj a = 0; a < k && !out.failing_triple; ++a)
    for (Obj b = 0; b < k && !out.failing_triple; ++b)
      for (Obj c = 0; c < k; ++c)
        if (!hexagon_difference(d, a, b, c).is_zero()) {
          out.failing_triple = std::vector<Obj>{a, b, c};
          break;
        }
  if (d.proper)
    for (std::size_t i = 0; i < d.terms.size(); ++i)
      if (!d.terms[i].is_proper()) {
        out.improper_term = i + 1;
        break;
      }
  return out;
}

Cochain hexagon_residual(const DeformationSeries& d, unsigned k) {
  validate_shape(d);
  if (k > d.order()) throw OrderError("residual order beyond the series order");
  Cochain out(d.functor, 3);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto t = out.tuple(i);
    out[i] = hexagon_difference(d, t[0], t[1], t[2])[k];
  }
  return out;
}

Cochain obstruction(const DeformationSeries& d) {
  if (!check_deformation(d).ok()) throw PreconditionError("obstruction of an invalid deformation");
  unsigned n = d.order();
  Cochain out(d.functor, 3);
  for (unsigned i = 1; i <= n; ++i) out = out + brace(d.terms[i - 1], d.terms[n - i]);
  return out;
}

std::variant<DeformationSeries, ObstructionClass> extend_deformation(const DeformationSeries& d, unsigned target_order) {
  if (!check_deformation(d).ok()) throw PreconditionError("cannot extend an invalid deformation");
  DeformationSeries cur = d;
  if (cur.order() >= target_order) return cur;
  const FunctorPresentation& f = *d.functor;
  std::size_t k = f.source().size();
  MatrixK d2 = delta_matrix(f, 2, d.proper);
  std::vector<std::size_t> cols;
  if (d.proper) {
    cols = proper_indices(k, 2);
  } else {
    for (std::size_t i = 0; i < k * k; ++i) cols.push_back(i);
  }
  while (cur.order() < target_order) {
    if (cur.order() == 0) {
      // Any first-order term is a cocycle choice; extend by zero.
      cur.terms.emplace_back(d.functor, 2);
      continue;
    }
    Cochain obs = obstruction(cur);
    SolveResult sol = solve(d2, obs.values());
    if (!sol.solved()) {
      ObstructionClass oc{cur.order() + 1, obs};
      MatrixK d3 = delta_matrix(f, 3, d.proper);
      oc.kernel_rank = d3.cols() - rank(d3);
      oc.image_rank = rank(d2);
      return oc;
    }
    Cochain next(d.functor, 2);
    for (std::size_t j = 0; j < cols.size(); ++j) next[cols[j]] = (*sol.solution)[j];
    cur.terms.push_back(std::move(next));
  }
  return cur;
}

std::vector<std::string> properize_check(const Cochain& g, const Cochain& h) {
  std::vector<std::string> failed;
  if (!g.is_proper() || !h.is_proper()) throw PreconditionError("properize_check needs proper inputs");
  if (!delta(g).is_proper()) failed.push_back("delta g");
  if (!delta(h).is_proper()) failed.push_back("delta h");
  if (!cup(g, h).is_proper()) failed.push_back("g cup h");
  for (unsigned i = 0; i < g.degree(); ++i)
    if (!brace_i(g, h, i).is_proper()) failed.push_back("brace_" + std::to_string(i));
  return failed;
}

FunctorPresentation induced_functor(const FunctorPresentation& m, bool left) {
  const SkeletalPresentation& c = m.target();
  std::size_t n = c.size();
  if (m.source().size() != n * n) throw ShapeError("not a multiplication functor: source is not the square of the target");
  for (Obj a = 0; a < n; ++a)
    if (m.map(a * n) != a || m.map(a) != a) throw ShapeError("not a multiplication functor: object map is not the product");
  auto embed = [&](Obj a) { return left ? a * n : a; };
  std::vector<Obj> map(n);
  for (Obj a = 0; a < n; ++a) map[a] = a;
  FunctorPresentation f(m.target_ptr(), m.target_ptr(), std::move(map));
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) f.set_coherence(a, b, m.coherence(embed(a), embed(b)));
  f.set_unit_scalar(m.unit_scalar());
  return f;
}

UnitTriviality unit_triviality(const DeformationSeries& d) {
  validate_shape(d);
  if (d.order() != 1) throw ShapeError("unit triviality is defined for first-order deformations");
  const FunctorPresentation& m = *d.functor;
  std::size_t n = m.target().size();
  auto trivial = [&](bool left) {
    auto f = std::make_shared<const FunctorPresentation>(induced_functor(m, left));
    VectorK rhs(n * n);
    for (Obj a = 0; a < n; ++a)
      for (Obj b = 0; b < n; ++b) {
        Obj x = left ? a * n : a, y = left ? b * n : b;
        rhs[a * n + b] = d.terms[0].at({x, y});
      }
    return solve(delta_matrix(*f, 1), rhs).solved();
  };
  return UnitTriviality{trivial(true), trivial(false)};
}

}  // namespace qdef
