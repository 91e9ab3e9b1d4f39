#include "qdef/invariants.hpp"

#include "qdef/errors.hpp"

namespace qdef {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Evaluator::Evaluator(const TortileObjectData& t) : data_(t) {
  data_.check_shapes();
  const Ring& ring = data_.ring;
  const std::size_t d = data_.dim;
  MatrixR c_inv = mat_invert(data_.c_plus);
  MatrixR th_inv = mat_invert(data_.theta);
  MatrixR id = MatrixR::identity(ring, d);
  local_ = {id,
            id,
            data_.coev_r,
            data_.coev_l,
            data_.ev_r,
            data_.ev_l,
            data_.c_plus,
            c_inv,
            mat_sub(data_.c_plus, c_inv),
            data_.theta,
            th_inv,
            mat_sub(data_.theta, th_inv)};
  for (std::size_t k = 0; k < local_.size(); ++k) {
    const MatrixR& m = local_[k];
    Columns cols(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (!m(i, j).is_zero()) {
          auto c = m(i, j).coeffs();
          cols[j].push_back({i, std::vector<FieldElem>(c.begin(), c.end())});
        }
    sparse_[k] = std::move(cols);
  }
}

Evaluator::State Evaluator::unit_state() const {
  State s;
  s.amps.assign(data_.order() + 1, FieldElem::zero(data_.ring.field));
  s.amps[0] = FieldElem::one(data_.ring.field);
  return s;
}

Evaluator::State Evaluator::applied(const State& s, const Slice& slice) const {
  const std::size_t d = data_.dim;
  const std::size_t len = data_.order() + 1;
  const Signature& in = slice_input(slice.kind);
  const Signature& out = slice_output(slice.kind);
  const std::size_t rest = ipow(d, s.signature.size() - slice.offset - in.size());
  const std::size_t din = ipow(d, in.size()), dout = ipow(d, out.size());
  const std::size_t n_in = s.amps.size() / len;
  const std::size_t n_out = n_in / din * dout;
  const Columns& cols = sparse_[static_cast<std::size_t>(slice.kind)];

  std::vector<FieldElem> next(n_out * len, FieldElem::zero(data_.ring.field));
  for (std::size_t x = 0; x < n_in; ++x) {
    std::span<const FieldElem> amp(s.amps.data() + x * len, len);
    if (series::is_zero(amp)) continue;
    const std::size_t lo = x % rest;
    const std::size_t mid = (x / rest) % din;
    const std::size_t hi = x / (rest * din);
    for (const Entry& e : cols[mid]) {
      std::size_t y = (hi * dout + e.row) * rest + lo;
      series::mul_add(std::span<FieldElem>(next.data() + y * len, len), e.coeffs, amp);
    }
  }
  State r{s.signature, std::move(next)};
  auto at = r.signature.begin() + static_cast<std::ptrdiff_t>(slice.offset);
  at = r.signature.erase(at, at + static_cast<std::ptrdiff_t>(in.size()));
  r.signature.insert(at, out.begin(), out.end());
  return r;
}

TruncatedScalar Evaluator::scalar(const State& s) const {
  if (!s.signature.empty()) throw BoundaryError("state still has open strands");
  return TruncatedScalar(data_.ring, s.amps);
}

MatrixR Evaluator::evaluate(const MorseDiagram& d) const {
  validate(d);
  const std::size_t dim = data_.dim;
  const std::size_t len = data_.order() + 1;
  const std::size_t cols = ipow(dim, d.source.size()), rows = ipow(dim, d.target.size());
  MatrixR result(data_.ring, rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    State s;
    s.signature = d.source;
    s.amps.assign(cols * len, FieldElem::zero(data_.ring.field));
    s.amps[j * len] = FieldElem::one(data_.ring.field);
    for (const Slice& sl : d.slices) apply(s, sl);
    for (std::size_t i = 0; i < rows; ++i)
      result(i, j) = TruncatedScalar(data_.ring, std::vector<FieldElem>(s.amps.begin() + static_cast<std::ptrdiff_t>(i * len),
                                                                         s.amps.begin() + static_cast<std::ptrdiff_t>((i + 1) * len)));
  }
  return result;
}

TruncatedScalar Evaluator::evaluate_closed(const MorseDiagram& d, PrefixCache* cache) const {
  if (!d.is_closed()) throw BoundaryError("expected a closed diagram");
  validate(d);
  if (!cache) {
    State s = unit_state();
    for (const Slice& sl : d.slices) apply(s, sl);
    return scalar(s);
  }
  if (cache->owner_ != this) {
    cache->clear();
    cache->owner_ = this;
    cache->states_.push_back(unit_state());
  }
  std::size_t keep = 0;
  while (keep < cache->path_.size() && keep < d.slices.size() && cache->path_[keep] == d.slices[keep]) ++keep;
  cache->path_.resize(keep);
  cache->states_.resize(keep + 1);
  for (std::size_t i = keep; i < d.slices.size(); ++i) {
    cache->states_.push_back(applied(cache->states_.back(), d.slices[i]));
    cache->path_.push_back(d.slices[i]);
  }
  return scalar(cache->states_.back());
}

MatrixR evaluate(const MorseDiagram& d, const TortileObjectData& t) { return Evaluator(t).evaluate(d); }

TruncatedScalar evaluate_link(const MorseDiagram& d, const TortileObjectData& t) {
  return Evaluator(t).evaluate_closed(d);
}

MatrixR evaluate_dense(const MorseDiagram& d, const TortileObjectData& t) {
  validate(d);
  Evaluator ev(t);
  const std::size_t dim = t.dim;
  auto sigs = signatures(d);
  MatrixR acc = MatrixR::identity(t.ring, ipow(dim, d.source.size()));
  for (std::size_t i = 0; i < d.slices.size(); ++i) {
    const Slice& s = d.slices[i];
    std::size_t rest = sigs[i].size() - s.offset - slice_input(s.kind).size();
    acc = mat_mul(whisker(ev.local(s.kind), ipow(dim, s.offset), ipow(dim, rest)), acc);
  }
  return acc;
}

FieldElem vassiliev_coeff(const MorseDiagram& d, const TortileObjectData& t, unsigned k) {
  if (k > t.order()) throw OrderError("coefficient " + std::to_string(k) + " exceeds order " + std::to_string(t.order()));
  return evaluate_link(d, t)[k];
}

std::vector<SignedDiagram> resolve_singular(const MorseDiagram& d) {
  std::vector<SignedDiagram> out{{1, d}};
  for (std::size_t i = 0; i < d.slices.size(); ++i) {
    SliceKind k = d.slices[i].kind;
    if (!is_singular(k)) continue;
    SliceKind pos = k == SliceKind::CrSing ? SliceKind::CrPos : SliceKind::TwPos;
    SliceKind neg = k == SliceKind::CrSing ? SliceKind::CrNeg : SliceKind::TwNeg;
    std::vector<SignedDiagram> next;
    next.reserve(out.size() * 2);
    for (auto& sd : out) {
      SignedDiagram p = sd, n = sd;
      p.diagram.slices[i].kind = pos;
      n.diagram.slices[i].kind = neg;
      n.sign = -n.sign;
      next.push_back(std::move(p));
      next.push_back(std::move(n));
    }
    out = std::move(next);
  }
  return out;
}

TypeBoundResult verify_type_bound(const MorseDiagram& d, const Evaluator& ev, const AxiomReport& report) {
  if (!report.structural_ok()) throw PreconditionError("data fails its structural axiom checks");
  if (!report.infinitesimally_symmetric())
    throw PreconditionError("data is not symmetric mod eps, so no type bound is guaranteed");
  std::size_t s = singular_count(d);
  unsigned n = ev.data().order();
  if (s < n + 1)
    throw PreconditionError("diagram has " + std::to_string(s) + " singular slices; the bound needs at least " +
                            std::to_string(n + 1));
  TruncatedScalar v = ev.evaluate_closed(d);
  return {v, v.is_zero()};
}

TypeBoundResult verify_type_bound(const MorseDiagram& d, const TortileObjectData& t) {
  return verify_type_bound(d, Evaluator(t), check_axioms(t));
}

MorseDiagram unknot_diagram() { return trace_closure(BraidWord{1, {}, {0}, {}, {}}); }

TruncatedScalar normalized_value(const MorseDiagram& d, const Evaluator& ev) {
  TruncatedScalar u = ring_inverse(ev.evaluate_closed(unknot_diagram()));
  TruncatedScalar v = ev.evaluate_closed(d);
  for (std::size_t i = component_count(d); i > 0; --i) v = v * u;
  return v;
}

TruncatedScalar normalized_value(const MorseDiagram& d, const TortileObjectData& t) {
  return normalized_value(d, Evaluator(t));
}

DisjointUnionCheck check_disjoint_union(const MorseDiagram& a, const MorseDiagram& b, const Evaluator& ev) {
  TruncatedScalar va = ev.evaluate_closed(a), vb = ev.evaluate_closed(b);
  TruncatedScalar vu = ev.evaluate_closed(disjoint_union(a, b));
  const unsigned n = ev.data().order();
  const Field& f = ev.ring().field;
  std::vector<FieldElem> conv(n + 1, FieldElem::zero(f));
  bool conv_ok = true;
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned i = 0; i <= k; ++i) add_product(conv[k], va[i], vb[k - i]);
    conv_ok = conv_ok && conv[k] == vu[k];
  }
  return {va, vb, vu, conv, vu == va * vb, conv_ok};
}

DisjointUnionCheck check_disjoint_union(const MorseDiagram& a, const MorseDiagram& b, const TortileObjectData& t) {
  return check_disjoint_union(a, b, Evaluator(t));
}

}  // namespace qdef
