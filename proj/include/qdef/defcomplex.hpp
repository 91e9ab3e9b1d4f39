#pragma once

// The deformation complex of a functor presentation. An n-cochain assigns to
// each tuple (a1..an) a scalar component F(a1 ... an) -> F(a1) ... F(an),
// read from the left-parenthesized source to the right-parenthesized target.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qdef/linalg.hpp"
#include "qdef/skeletal.hpp"

namespace qdef {

using FunctorPtr = std::shared_ptr<const FunctorPresentation>;

class Cochain {
 public:
  Cochain(FunctorPtr f, unsigned degree);  // zero
  Cochain(FunctorPtr f, unsigned degree, std::vector<FieldElem> values);

  static Cochain indicator(FunctorPtr f, const std::vector<Obj>& tuple, const FieldElem& value);

  const FunctorPresentation& functor() const { return *f_; }
  const FunctorPtr& functor_ptr() const { return f_; }
  unsigned degree() const { return degree_; }
  const Field& field() const { return f_->source().field(); }
  std::size_t size() const { return values_.size(); }

  // Flat index: first argument most significant.
  std::size_t index(const std::vector<Obj>& tuple) const;
  std::vector<Obj> tuple(std::size_t index) const;

  const FieldElem& operator[](std::size_t i) const { return values_[i]; }
  FieldElem& operator[](std::size_t i) { return values_[i]; }
  const FieldElem& at(const std::vector<Obj>& tuple) const { return values_[index(tuple)]; }
  void set(const std::vector<Obj>& tuple, const FieldElem& v) { values_[index(tuple)] = v; }
  const std::vector<FieldElem>& values() const { return values_; }

  bool is_zero() const;
  // Vanishes whenever some argument is the unit object.
  bool is_proper() const;

  Cochain operator-() const;
  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b);
  friend Cochain operator*(const FieldElem& c, const Cochain& a);
  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  FunctorPtr f_;
  unsigned degree_;
  std::vector<FieldElem> values_;
};

Cochain delta(const Cochain& c);
Cochain cup(const Cochain& g, const Cochain& h);
// Inserts h at argument position i (0-based) of g.
Cochain brace_i(const Cochain& g, const Cochain& h, unsigned i);
// sum_i (-1)^{(deg h - 1) i} brace_i(g, h, i)
Cochain brace(const Cochain& g, const Cochain& h);

// Matrix of delta on n-cochains, columns indexed by n-tuples. With proper set,
// only proper columns are kept (in increasing tuple order).
MatrixK delta_matrix(const FunctorPresentation& f, unsigned n, bool proper = false);
// Indices of the proper n-tuples, increasing.
std::vector<std::size_t> proper_indices(std::size_t objects, unsigned n);

struct Cohomology {
  std::size_t kernel;     // dim ker delta_n
  std::size_t image;      // dim im delta_{n-1}; zero for n = 1
  std::size_t dimension;  // kernel - image
};

// Throws PreconditionError unless 1 <= n <= 4.
Cohomology cohomology(const FunctorPresentation& f, unsigned n, bool proper = false);

// F~' = F~ + sum_k terms[k-1] eps^k.
struct DeformationSeries {
  FunctorPtr functor;
  std::vector<Cochain> terms;
  bool proper = false;

  unsigned order() const { return static_cast<unsigned>(terms.size()); }
  // Deformed coherence as an element of R_order.
  TruncatedScalar coherence(Obj a, Obj b) const;
};

// Throws PreconditionError when a term has the wrong functor or degree.
void validate_shape(const DeformationSeries& d);

struct DeformationCheck {
  std::optional<std::vector<Obj>> failing_triple;  // first hexagon failure
  std::optional<std::size_t> improper_term;        // 1-based, when flagged proper
  bool ok() const { return !failing_triple && !improper_term; }
};

DeformationCheck check_deformation(const DeformationSeries& d);
// eps^k coefficient of alpha_D F~'(a,b) F~'(ab,c) - alpha_C F~'(a,bc) F~'(b,c).
Cochain hexagon_residual(const DeformationSeries& d, unsigned k);
// sum_{i=1}^{n} <F^(i), F^(n+1-i)>; throws PreconditionError when d fails its check.
Cochain obstruction(const DeformationSeries& d);

struct ObstructionClass {
  unsigned order;               // the order that could not be reached
  Cochain representative;       // the obstruction cochain
  std::size_t kernel_rank = 0;  // dim ker delta_3 on the relevant subcomplex
  std::size_t image_rank = 0;   // dim im delta_2 on the relevant subcomplex
};

std::variant<DeformationSeries, ObstructionClass> extend_deformation(const DeformationSeries& d, unsigned target_order);

// Non-empty list of failed closure statements ("delta g", "g cup h", "brace_0") for
// proper inputs g, h; empty means every product stayed proper.
std::vector<std::string> properize_check(const Cochain& g, const Cochain& h);

struct UnitTriviality {
  bool left;   // Phi'(-, I) trivial
  bool right;  // Phi'(I, -) trivial
};

// d is an order-1 deformation of a multiplication functor C x C -> C. Throws
// ShapeError otherwise.
UnitTriviality unit_triviality(const DeformationSeries& d);
// Induced endofunctors a |-> Phi(a, e) (left) and a |-> Phi(e, a) of a multiplication.
FunctorPresentation induced_functor(const FunctorPresentation& m, bool left);

}  // namespace qdef
