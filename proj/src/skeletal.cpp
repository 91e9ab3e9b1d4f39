#include "qdef/skeletal.hpp"

#include <functional>

namespace qdef {

// ---- SkeletalPresentation ----

SkeletalPresentation::SkeletalPresentation(Field field, std::vector<std::string> objects, std::vector<Obj> tensor)
    : field_(field), names_(std::move(objects)), tensor_(std::move(tensor)) {
  std::size_t n = names_.size();
  if (n == 0) throw PreconditionError("presentation needs at least the unit object");
  if (tensor_.size() != n * n)
    throw PreconditionError("tensor table has " + std::to_string(tensor_.size()) + " entries, expected " + std::to_string(n * n));
  for (Obj x : tensor_)
    if (x >= n) throw PreconditionError("tensor table entry out of range");
  for (Obj a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw PreconditionError("object " + names_[0] + " is not a unit for " + names_[a]);
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw PreconditionError("tensor table not associative at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw PreconditionError("duplicate object label " + names_[i]);
  assoc_.assign(n * n * n, FieldElem::one(field_));
  runit_.assign(n, FieldElem::one(field_));
  lunit_.assign(n, FieldElem::one(field_));
}

SkeletalPresentation SkeletalPresentation::cyclic(Field field, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
  std::vector<Obj> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return SkeletalPresentation(field, std::move(names), std::move(table));
}

Obj SkeletalPresentation::index_of(const std::string& name) const {
  for (Obj a = 0; a < size(); ++a)
    if (names_[a] == name) return a;
  throw ParseError("unknown object '" + name + "'");
}

bool SkeletalPresentation::is_commutative() const {
  for (Obj a = 0; a < size(); ++a)
    for (Obj b = 0; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

const FieldElem& SkeletalPresentation::sigma(Obj a, Obj b) const {
  if (!braiding_) throw PreconditionError("presentation has no braiding");
  return (*braiding_)[a * size() + b];
}

void SkeletalPresentation::check_value(const FieldElem& v) const {
  if (!(v.field() == field_)) throw FieldMismatchError("structure scalar over " + v.field().to_string() + " in a presentation over " + field_.to_string());
  if (v.is_zero()) throw NonUnitError("structure scalars must be invertible");
}

void SkeletalPresentation::set_alpha(Obj a, Obj b, Obj c, const FieldElem& v) {
  check_value(v);
  assoc_.at((a * size() + b) * size() + c) = v;
}

void SkeletalPresentation::set_rho(Obj a, const FieldElem& v) {
  check_value(v);
  runit_.at(a) = v;
}

void SkeletalPresentation::set_lambda(Obj a, const FieldElem& v) {
  check_value(v);
  lunit_.at(a) = v;
}

void SkeletalPresentation::set_sigma(Obj a, Obj b, const FieldElem& v) {
  check_value(v);
  if (!braiding_) set_trivial_braiding();
  braiding_->at(a * size() + b) = v;
}

void SkeletalPresentation::set_trivial_braiding() { braiding_.emplace(size() * size(), FieldElem::one(field_)); }

SkeletalPresentation product_presentation(const SkeletalPresentation& c) {
  std::size_t n = c.size();
  std::vector<std::string> names;
  std::vector<Obj> table(n * n * n * n);
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) names.push_back("(" + c.name(a) + "," + c.name(b) + ")");
  for (Obj x = 0; x < n * n; ++x)
    for (Obj y = 0; y < n * n; ++y) table[x * n * n + y] = c.mul(x / n, y / n) * n + c.mul(x % n, y % n);
  SkeletalPresentation p(c.field(), std::move(names), std::move(table));
  for (Obj x = 0; x < n * n; ++x) {
    p.set_rho(x, c.rho(x / n) * c.rho(x % n));
    p.set_lambda(x, c.lambda(x / n) * c.lambda(x % n));
    for (Obj y = 0; y < n * n; ++y)
      for (Obj z = 0; z < n * n; ++z) p.set_alpha(x, y, z, c.alpha(x / n, y / n, z / n) * c.alpha(x % n, y % n, z % n));
  }
  return p;
}

// ---- FunctorPresentation ----

FunctorPresentation::FunctorPresentation(std::shared_ptr<const SkeletalPresentation> source,
                                         std::shared_ptr<const SkeletalPresentation> target, std::vector<Obj> object_map)
    : source_(std::move(source)), target_(std::move(target)), object_map_(std::move(object_map)) {
  if (!(source_->field() == target_->field())) throw FieldMismatchError("functor between presentations over different fields");
  std::size_t n = source_->size();
  if (object_map_.size() != n) throw PreconditionError("object map has wrong length");
  for (Obj x : object_map_)
    if (x >= target_->size()) throw PreconditionError("object map entry out of range");
  if (object_map_[0] != 0) throw PreconditionError("object map must send unit to unit");
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      if (object_map_[source_->mul(a, b)] != target_->mul(object_map_[a], object_map_[b]))
        throw PreconditionError("object map is not multiplicative at (" + source_->name(a) + ", " + source_->name(b) + ")");
  coherence_.assign(n * n, FieldElem::one(source_->field()));
  unit_scalar_ = FieldElem::one(source_->field());
}

FunctorPresentation FunctorPresentation::identity(std::shared_ptr<const SkeletalPresentation> c) {
  std::vector<Obj> id(c->size());
  for (Obj a = 0; a < id.size(); ++a) id[a] = a;
  return FunctorPresentation(c, c, std::move(id));
}

void FunctorPresentation::set_coherence(Obj a, Obj b, const FieldElem& v) {
  if (v.is_zero()) throw NonUnitError("functor coherence must be invertible");
  if (!(v.field() == source_->field())) throw FieldMismatchError("coherence scalar over the wrong field");
  coherence_.at(a * source_->size() + b) = v;
}

void FunctorPresentation::set_unit_scalar(const FieldElem& v) {
  if (v.is_zero()) throw NonUnitError("functor unit scalar must be invertible");
  if (!(v.field() == source_->field())) throw FieldMismatchError("unit scalar over the wrong field");
  unit_scalar_ = v;
}

// ---- checks ----

namespace {

void compare(std::vector<Violation>& out, const char* name, std::vector<Obj> tuple, const FieldElem& lhs, const FieldElem& rhs) {
  if (!(lhs == rhs)) out.push_back(Violation{name, std::move(tuple), lhs, rhs});
}

}  // namespace

std::vector<Violation> check_pentagon(const SkeletalPresentation& p) {
  std::vector<Violation> out;
  std::size_t n = p.size();
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c)
        for (Obj d = 0; d < n; ++d)
          compare(out, "pentagon", {a, b, c, d}, p.alpha(a, b, p.mul(c, d)) * p.alpha(p.mul(a, b), c, d),
                  p.alpha(b, c, d) * p.alpha(a, p.mul(b, c), d) * p.alpha(a, b, c));
  return out;
}

std::vector<Violation> check_hexagons(const SkeletalPresentation& p) {
  std::vector<Violation> out;
  if (!p.braided()) return out;
  std::size_t n = p.size();
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c) {
        compare(out, "hexagon", {a, b, c}, p.alpha(b, c, a) * p.sigma(a, p.mul(b, c)) * p.alpha(a, b, c),
                p.sigma(a, c) * p.alpha(b, a, c) * p.sigma(a, b));
        // (ab)c -> c(ab) -> (ca)b against the two single crossings.
        compare(out, "inverse hexagon", {a, b, c}, p.alpha(c, a, b).inverse() * p.sigma(p.mul(a, b), c) * p.alpha(a, b, c).inverse(),
                p.sigma(a, c) * p.alpha(a, c, b).inverse() * p.sigma(b, c));
      }
  return out;
}

std::vector<Violation> check_units(const SkeletalPresentation& p) {
  std::vector<Violation> out;
  for (Obj a = 0; a < p.size(); ++a)
    for (Obj b = 0; b < p.size(); ++b) compare(out, "triangle", {a, b}, p.lambda(b) * p.alpha(a, 0, b), p.rho(a));
  compare(out, "bigon", {0}, p.rho(0), p.lambda(0));
  return out;
}

std::vector<Violation> check_functor_hexagon(const FunctorPresentation& f) {
  std::vector<Violation> out;
  const SkeletalPresentation& c = f.source();
  const SkeletalPresentation& d = f.target();
  std::size_t n = c.size();
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj x = 0; x < n; ++x)
        compare(out, "functor hexagon", {a, b, x},
                c.alpha(a, b, x) * f.coherence(a, c.mul(b, x)) * f.coherence(b, x),
                d.alpha(f.map(a), f.map(b), f.map(x)) * f.coherence(a, b) * f.coherence(c.mul(a, b), x));
  return out;
}

std::vector<Violation> check_functor_units(const FunctorPresentation& f) {
  std::vector<Violation> out;
  const SkeletalPresentation& c = f.source();
  const SkeletalPresentation& d = f.target();
  for (Obj a = 0; a < c.size(); ++a) {
    compare(out, "functor left unit", {a}, c.lambda(a), d.lambda(f.map(a)) * f.unit_scalar() * f.coherence(0, a));
    compare(out, "functor right unit", {a}, c.rho(a), d.rho(f.map(a)) * f.unit_scalar() * f.coherence(a, 0));
  }
  return out;
}

std::vector<Violation> check_presentation(const SkeletalPresentation& p) {
  std::vector<Violation> out = check_pentagon(p);
  for (auto& v : check_units(p)) out.push_back(std::move(v));
  for (auto& v : check_hexagons(p)) out.push_back(std::move(v));
  return out;
}

// ---- ParenTree ----

ParenTree::Ptr ParenTree::leaf(Obj a) {
  auto t = std::make_shared<ParenTree>();
  t->object_ = a;
  return t;
}

ParenTree::Ptr ParenTree::tensor(Ptr l, Ptr r) {
  auto t = std::make_shared<ParenTree>();
  t->kind_ = Kind::Tensor;
  t->left_ = std::move(l);
  t->right_ = std::move(r);
  return t;
}

ParenTree::Ptr ParenTree::apply(Ptr inner) {
  auto t = std::make_shared<ParenTree>();
  t->kind_ = Kind::Apply;
  t->left_ = std::move(inner);
  return t;
}

ParenTree::Ptr ParenTree::left_comb(const std::vector<Ptr>& parts) {
  if (parts.empty()) throw PreconditionError("empty tree");
  Ptr t = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) t = tensor(t, parts[i]);
  return t;
}

ParenTree::Ptr ParenTree::right_comb(const std::vector<Ptr>& parts) {
  if (parts.empty()) throw PreconditionError("empty tree");
  Ptr t = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) t = tensor(parts[i], t);
  return t;
}

ParenTree::Ptr ParenTree::left_comb(const std::vector<Obj>& objs) {
  std::vector<Ptr> parts;
  for (Obj a : objs) parts.push_back(leaf(a));
  return left_comb(parts);
}

ParenTree::Ptr ParenTree::right_comb(const std::vector<Obj>& objs) {
  std::vector<Ptr> parts;
  for (Obj a : objs) parts.push_back(leaf(a));
  return right_comb(parts);
}

std::vector<ParenTree::Atom> ParenTree::atoms() const {
  std::vector<Atom> out;
  std::function<void(const ParenTree&, bool)> walk = [&](const ParenTree& t, bool applied) {
    switch (t.kind_) {
      case Kind::Leaf: out.push_back({applied, t.object_}); break;
      case Kind::Tensor: walk(*t.left_, applied); walk(*t.right_, applied); break;
      case Kind::Apply: walk(*t.left_, true); break;
    }
  };
  walk(*this, false);
  return out;
}

std::string ParenTree::to_string() const {
  switch (kind_) {
    case Kind::Leaf: return std::to_string(object_);
    case Kind::Tensor: return "(" + left_->to_string() + " " + right_->to_string() + ")";
    case Kind::Apply: return "F" + (left_->kind_ == Kind::Leaf ? "(" + left_->to_string() + ")" : left_->to_string());
  }
  return {};
}

// ---- coherence scalars ----

namespace {

struct Normal {
  FieldElem scalar;
  std::vector<Obj> objs;  // objects of the atoms at the current level
};

Obj product(const SkeletalPresentation& p, const std::vector<Obj>& v, std::size_t from = 0) {
  Obj x = 0;
  for (std::size_t i = from; i < v.size(); ++i) x = p.mul(x, v[i]);
  return x;
}

Normal normalize(const ParenTree& t, const SkeletalPresentation& level, const FunctorPresentation* f, bool at_source) {
  switch (t.kind()) {
    case ParenTree::Kind::Leaf:
      return {FieldElem::one(level.field()), {t.object()}};
    case ParenTree::Kind::Tensor: {
      Normal l = normalize(*t.left(), level, f, at_source);
      Normal r = normalize(*t.right(), level, f, at_source);
      FieldElem s = l.scalar * r.scalar;
      Obj rp = product(level, r.objs);
      // x1 (x2 (... xk)) R -> x1 (x2 (... (xk R)))
      Obj suffix = 0;
      std::vector<Obj> suffixes(l.objs.size());
      for (std::size_t i = l.objs.size(); i-- > 0;) suffixes[i] = suffix = level.mul(l.objs[i], suffix);
      for (std::size_t i = 0; i + 1 < l.objs.size(); ++i) s *= level.alpha(l.objs[i], suffixes[i + 1], rp);
      l.objs.insert(l.objs.end(), r.objs.begin(), r.objs.end());
      return {s, std::move(l.objs)};
    }
    case ParenTree::Kind::Apply: {
      if (!f || at_source) throw PreconditionError("functor application without a functor (or nested)");
      Normal in = normalize(*t.inner(), f->source(), f, true);
      FieldElem s = in.scalar;
      Obj suffix = 0;
      std::vector<Obj> suffixes(in.objs.size());
      for (std::size_t i = in.objs.size(); i-- > 0;) suffixes[i] = suffix = f->source().mul(in.objs[i], suffix);
      for (std::size_t i = 0; i + 1 < in.objs.size(); ++i) s *= f->coherence(in.objs[i], suffixes[i + 1]);
      std::vector<Obj> mapped;
      for (Obj a : in.objs) mapped.push_back(f->map(a));
      return {s, std::move(mapped)};
    }
  }
  return {};
}

void require_same_atoms(const ParenTree& src, const ParenTree& dst) {
  if (src.atoms() != dst.atoms()) throw BoundaryError("coherence between trees " + src.to_string() + " and " + dst.to_string() + " with different leaves");
}

}  // namespace

FieldElem normal_form_scalar(const ParenTree& t, const SkeletalPresentation& c) { return normalize(t, c, nullptr, false).scalar; }

FieldElem normal_form_scalar(const ParenTree& t, const FunctorPresentation& f) {
  return normalize(t, f.target(), &f, false).scalar;
}

FieldElem coherence_scalar(const ParenTree& src, const ParenTree& dst, const SkeletalPresentation& c) {
  require_same_atoms(src, dst);
  return normal_form_scalar(src, c) / normal_form_scalar(dst, c);
}

FieldElem coherence_scalar(const ParenTree& src, const ParenTree& dst, const FunctorPresentation& f) {
  require_same_atoms(src, dst);
  return normal_form_scalar(src, f) / normal_form_scalar(dst, f);
}

// ---- multiplication functor ----

namespace {

// Scalar of (a a')(b b') -> (a (a' b)) b' -> (a (b a')) b' -> (a b)(a' b').
FieldElem interchange_scalar(const SkeletalPresentation& c, Obj a, Obj a2, Obj b, Obj b2) {
  using T = ParenTree;
  auto L = [](Obj x) { return T::leaf(x); };
  auto t0 = T::tensor(T::tensor(L(a), L(a2)), T::tensor(L(b), L(b2)));
  auto t1 = T::tensor(T::tensor(L(a), T::tensor(L(a2), L(b))), L(b2));
  auto t2 = T::tensor(T::tensor(L(a), T::tensor(L(b), L(a2))), L(b2));
  auto t3 = T::tensor(T::tensor(L(a), L(b)), T::tensor(L(a2), L(b2)));
  return coherence_scalar(*t0, *t1, c) * c.sigma(a2, b) * coherence_scalar(*t2, *t3, c);
}

}  // namespace

FunctorPresentation mult_functor(std::shared_ptr<const SkeletalPresentation> c) {
  if (!c->braided()) throw PreconditionError("multiplication functor needs a braiding");
  if (!c->is_commutative()) throw UnsupportedModelError("multiplication functor needs a commutative object monoid");
  std::size_t n = c->size();
  auto src = std::make_shared<const SkeletalPresentation>(product_presentation(*c));
  std::vector<Obj> map(n * n);
  for (Obj x = 0; x < n * n; ++x) map[x] = c->mul(x / n, x % n);
  FunctorPresentation phi(src, c, std::move(map));
  for (Obj x = 0; x < n * n; ++x)
    for (Obj y = 0; y < n * n; ++y) phi.set_coherence(x, y, interchange_scalar(*c, x / n, x % n, y / n, y % n).inverse());
  return phi;
}

std::vector<FieldElem> braiding_from_mult(const FunctorPresentation& m) {
  const SkeletalPresentation& c = m.target();
  std::size_t n = c.size();
  if (m.source().size() != n * n) throw ShapeError("source of a multiplication must have |S|^2 objects");
  for (Obj a = 0; a < n; ++a)
    if (m.map(a * n) != a || m.map(a) != a) throw ShapeError("object map does not restrict to the identity on the axes");
  auto lax = [&](Obj x, Obj y) { return m.coherence(x, y).inverse(); };
  std::vector<FieldElem> sigma;
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      // A B -> F(e,A) F(B,e) -> F(B,A) -> F(B,e) F(e,A) -> B A
      FieldElem s = (c.lambda(a) * c.rho(b)).inverse() * lax(a, b * n) * (c.lambda(b) * c.rho(a)) *
                    (c.rho(b) * c.lambda(a)).inverse() * lax(b * n, a).inverse() * (c.rho(b) * c.lambda(a));
      sigma.push_back(s);
    }
  return sigma;
}

std::vector<SkeletalPresentation> enumerate_braidings(const SkeletalPresentation& p) {
  const Field& f = p.field();
  std::vector<FieldElem> candidates;
  if (f.is_rational()) {
    candidates = {FieldElem::one(f), FieldElem(f, -1)};
  } else {
    for (std::uint64_t v = 1; v < f.characteristic(); ++v) candidates.emplace_back(f, static_cast<long long>(v));
  }
  std::size_t n = p.size();
  std::vector<int> assigned(n * n, -1);
  SkeletalPresentation work = p;
  work.set_trivial_braiding();
  std::vector<SkeletalPresentation> out;

  auto known = [&](Obj a, Obj b) { return assigned[a * n + b] >= 0; };
  // Check every hexagon instance whose braiding entries are all assigned and
  // which involves slot (a, b).
  auto consistent = [&](Obj sa, Obj sb) {
    for (Obj a = 0; a < n; ++a)
      for (Obj b = 0; b < n; ++b)
        for (Obj c = 0; c < n; ++c) {
          Obj bc = p.mul(b, c), ab = p.mul(a, b);
          auto touches = [&](std::initializer_list<std::pair<Obj, Obj>> slots) {
            bool hit = false;
            for (auto [x, y] : slots) {
              if (!known(x, y)) return false;
              if (x == sa && y == sb) hit = true;
            }
            return hit;
          };
          if (touches({{a, bc}, {a, c}, {a, b}}) &&
              !(p.alpha(b, c, a) * work.sigma(a, bc) * p.alpha(a, b, c) == work.sigma(a, c) * p.alpha(b, a, c) * work.sigma(a, b)))
            return false;
          if (touches({{ab, c}, {a, c}, {b, c}}) &&
              !(p.alpha(c, a, b).inverse() * work.sigma(ab, c) * p.alpha(a, b, c).inverse() ==
                work.sigma(a, c) * p.alpha(a, c, b).inverse() * work.sigma(b, c)))
            return false;
        }
    return true;
  };

  std::function<void(std::size_t)> search = [&](std::size_t slot) {
    if (slot == n * n) {
      out.push_back(work);
      return;
    }
    Obj a = slot / n, b = slot % n;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      assigned[slot] = static_cast<int>(k);
      work.set_sigma(a, b, candidates[k]);
      if (consistent(a, b)) search(slot + 1);
    }
    assigned[slot] = -1;
    work.set_sigma(a, b, FieldElem::one(f));
  };
  search(0);
  return out;
}

}  // namespace qdef
