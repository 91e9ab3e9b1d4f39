#pragma once

// Skeletal presentations: a finite monoid S of simple objects, one-dimensional
// endomorphism spaces, and all structure maps given by scalars.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdef/scalars.hpp"

namespace qdef {

using Obj = std::size_t;

class SkeletalPresentation {
 public:
  // Trivial structure (assoc, units = 1, no braiding) on the monoid with the
  // given multiplication table; objects[0] is the unit. Throws
  // PreconditionError when the table is not a monoid with unit 0.
  SkeletalPresentation(Field field, std::vector<std::string> objects, std::vector<Obj> tensor);

  // Z/n with the given labels ("e", "g", "g2", ...).
  static SkeletalPresentation cyclic(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Obj a) const { return names_.at(a); }
  // Throws ParseError for an unknown label.
  Obj index_of(const std::string& name) const;

  Obj mul(Obj a, Obj b) const { return tensor_[a * size() + b]; }
  bool is_commutative() const;

  const FieldElem& alpha(Obj a, Obj b, Obj c) const { return assoc_[(a * size() + b) * size() + c]; }
  const FieldElem& rho(Obj a) const { return runit_[a]; }
  const FieldElem& lambda(Obj a) const { return lunit_[a]; }
  bool braided() const { return braiding_.has_value(); }
  // Throws PreconditionError when no braiding is present.
  const FieldElem& sigma(Obj a, Obj b) const;

  // Setters reject zero (non-invertible) values with NonUnitError.
  void set_alpha(Obj a, Obj b, Obj c, const FieldElem& v);
  void set_rho(Obj a, const FieldElem& v);
  void set_lambda(Obj a, const FieldElem& v);
  void set_sigma(Obj a, Obj b, const FieldElem& v);
  void clear_braiding() { braiding_.reset(); }
  // Installs the trivial braiding sigma = 1.
  void set_trivial_braiding();

  friend bool operator==(const SkeletalPresentation&, const SkeletalPresentation&) = default;

 private:
  void check_value(const FieldElem& v) const;

  Field field_;
  std::vector<std::string> names_;
  std::vector<Obj> tensor_;
  std::vector<FieldElem> assoc_;
  std::vector<FieldElem> runit_, lunit_;
  std::optional<std::vector<FieldElem>> braiding_;
};

// Deligne-style product: objects (a, b) at index a * |S| + b, componentwise
// multiplication, assoc and unit scalars multiplied across factors.
SkeletalPresentation product_presentation(const SkeletalPresentation& c);

class FunctorPresentation {
 public:
  // Identity coherence on a strict-on-objects functor. Throws
  // PreconditionError when object_map is not a monoid homomorphism.
  FunctorPresentation(std::shared_ptr<const SkeletalPresentation> source,
                      std::shared_ptr<const SkeletalPresentation> target, std::vector<Obj> object_map);

  static FunctorPresentation identity(std::shared_ptr<const SkeletalPresentation> c);

  const SkeletalPresentation& source() const { return *source_; }
  const SkeletalPresentation& target() const { return *target_; }
  std::shared_ptr<const SkeletalPresentation> source_ptr() const { return source_; }
  std::shared_ptr<const SkeletalPresentation> target_ptr() const { return target_; }
  Obj map(Obj a) const { return object_map_[a]; }
  const std::vector<Obj>& object_map() const { return object_map_; }
  // Component F(a b) -> F(a) F(b).
  const FieldElem& coherence(Obj a, Obj b) const { return coherence_[a * source_->size() + b]; }
  const FieldElem& unit_scalar() const { return unit_scalar_; }

  void set_coherence(Obj a, Obj b, const FieldElem& v);
  void set_unit_scalar(const FieldElem& v);

 private:
  std::shared_ptr<const SkeletalPresentation> source_, target_;
  std::vector<Obj> object_map_;
  std::vector<FieldElem> coherence_;
  FieldElem unit_scalar_;
};

// One failed instance of a coherence condition.
struct Violation {
  std::string condition;
  std::vector<Obj> tuple;
  FieldElem lhs, rhs;
};

std::vector<Violation> check_pentagon(const SkeletalPresentation& p);
std::vector<Violation> check_hexagons(const SkeletalPresentation& p);
// Triangle for all pairs plus the bigon rho(e) = lambda(e).
std::vector<Violation> check_units(const SkeletalPresentation& p);
std::vector<Violation> check_functor_hexagon(const FunctorPresentation& f);
std::vector<Violation> check_functor_units(const FunctorPresentation& f);
// Everything applicable: pentagon, units, and hexagons when braided.
std::vector<Violation> check_presentation(const SkeletalPresentation& p);

// Binary tree of objects. A tree lives either at the source level (leaves are
// source objects) or at the target level, where an Apply node wraps a
// source-level subtree.
class ParenTree {
 public:
  enum class Kind { Leaf, Tensor, Apply };
  using Ptr = std::shared_ptr<const ParenTree>;

  static Ptr leaf(Obj a);
  static Ptr tensor(Ptr l, Ptr r);
  static Ptr apply(Ptr inner);
  // ((x1 x2) x3) ... and x1 (x2 (x3 ...)) over arbitrary subtrees; at least one part.
  static Ptr left_comb(const std::vector<Ptr>& parts);
  static Ptr right_comb(const std::vector<Ptr>& parts);
  static Ptr left_comb(const std::vector<Obj>& objs);
  static Ptr right_comb(const std::vector<Obj>& objs);

  Kind kind() const { return kind_; }
  Obj object() const { return object_; }
  const Ptr& left() const { return left_; }
  const Ptr& right() const { return right_; }
  const Ptr& inner() const { return left_; }

  // Leaf sequence as (applied, object) pairs.
  struct Atom {
    bool applied;
    Obj object;
    bool operator==(const Atom&) const = default;
  };
  std::vector<Atom> atoms() const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Leaf;
  Obj object_ = 0;
  Ptr left_, right_;
};

// Scalar of the coherence isomorphism src -> dst built from assoc (and functor
// coherence across Apply nodes). Throws BoundaryError when the atom sequences
// differ, PreconditionError when an Apply node appears without a functor.
FieldElem coherence_scalar(const ParenTree& src, const ParenTree& dst, const SkeletalPresentation& c);
FieldElem coherence_scalar(const ParenTree& src, const ParenTree& dst, const FunctorPresentation& f);
// Scalar of the rewrite of t to the right comb of its atoms.
FieldElem normal_form_scalar(const ParenTree& t, const SkeletalPresentation& c);
FieldElem normal_form_scalar(const ParenTree& t, const FunctorPresentation& f);

// Phi : C x C -> C, (a, b) |-> ab with coherence from the braiding. Throws
// PreconditionError without a braiding, UnsupportedModelError for a
// non-commutative monoid.
FunctorPresentation mult_functor(std::shared_ptr<const SkeletalPresentation> c);
// Braiding recovered from a multiplication functor; entry a * |S| + b is sigma(a, b).
// Throws ShapeError unless the source is the product of the target with itself.
std::vector<FieldElem> braiding_from_mult(const FunctorPresentation& m);
// All braidings satisfying both hexagons with values drawn from K^x (F_p) or
// {1, -1} (Q). Each result is a copy of p with the braiding installed.
std::vector<SkeletalPresentation> enumerate_braidings(const SkeletalPresentation& p);

}  // namespace qdef
