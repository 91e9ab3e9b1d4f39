#pragma once

// Evaluation of framed (singular) tangles through tortile data at X, and the
// finite-type checks built on it.

#include <array>
#include <vector>

#include "qdef/tangles.hpp"
#include "qdef/tortile.hpp"

namespace qdef {

// Sparse state propagation. Construction precomputes c^{-1}, theta^{-1} and
// the singular differences; throws NonUnitError when c or theta is singular
// mod eps and ShapeError on malformed data.
class Evaluator {
 public:
  struct State;
  // Remembers the states along the last evaluated slice list so that a sweep
  // over diagrams sharing prefixes only pays for the new slices. Tied to the
  // evaluator that first used it.
  class PrefixCache {
   public:
    void clear() {
      owner_ = nullptr;
      path_.clear();
      states_.clear();
    }

   private:
    friend class Evaluator;
    const Evaluator* owner_ = nullptr;
    std::vector<Slice> path_;
    std::vector<State> states_;
  };

  explicit Evaluator(const TortileObjectData& t);

  const TortileObjectData& data() const { return data_; }
  const Ring& ring() const { return data_.ring; }

  // d^{|target|} x d^{|source|}. Validates d first.
  MatrixR evaluate(const MorseDiagram& d) const;
  // Closed diagrams only (BoundaryError otherwise).
  TruncatedScalar evaluate_closed(const MorseDiagram& d, PrefixCache* cache = nullptr) const;

  // Local matrix of a slice kind, d^{|out|} x d^{|in|}.
  const MatrixR& local(SliceKind k) const { return local_[static_cast<std::size_t>(k)]; }

  // State of an evaluation in progress: coefficient buffer of d^w basis
  // vectors, each a run of order + 1 field elements.
  struct State {
    Signature signature;
    std::vector<FieldElem> amps;
  };
  State unit_state() const;  // empty signature, amplitude 1
  // Applies one slice (assumed to match the state's signature).
  void apply(State& s, const Slice& slice) const { s = applied(s, slice); }
  State applied(const State& s, const Slice& slice) const;
  TruncatedScalar scalar(const State& s) const;  // requires an empty signature

 private:
  struct Entry {
    std::size_t row;
    std::vector<FieldElem> coeffs;
  };
  using Columns = std::vector<std::vector<Entry>>;

  TortileObjectData data_;
  std::vector<MatrixR> local_;
  std::array<Columns, 12> sparse_;
};

// Convenience wrappers over a fresh Evaluator.
MatrixR evaluate(const MorseDiagram& d, const TortileObjectData& t);
TruncatedScalar evaluate_link(const MorseDiagram& d, const TortileObjectData& t);

// Bottom-to-top product of Kronecker-whiskered slice matrices. Slow, kept as
// an independent route for cross-checks.
MatrixR evaluate_dense(const MorseDiagram& d, const TortileObjectData& t);

// Coefficient of eps^k. OrderError when k exceeds the order, BoundaryError
// for open diagrams.
FieldElem vassiliev_coeff(const MorseDiagram& d, const TortileObjectData& t, unsigned k);

struct SignedDiagram {
  int sign;
  MorseDiagram diagram;
};
// 2^s resolutions; CrSing -> (+CrPos, -CrNeg), TwSing -> (+TwPos, -TwNeg).
std::vector<SignedDiagram> resolve_singular(const MorseDiagram& d);

struct TypeBoundResult {
  TruncatedScalar value;
  bool vanishes;
};
// PreconditionError when the data fails its structural or infinitesimal
// symmetry checks, or when d has fewer than order + 1 singular slices.
TypeBoundResult verify_type_bound(const MorseDiagram& d, const TortileObjectData& t);
TypeBoundResult verify_type_bound(const MorseDiagram& d, const Evaluator& ev, const AxiomReport& report);

// evaluate(d) / unknot^{components}. NonUnitError if the unknot value is not
// a unit.
TruncatedScalar normalized_value(const MorseDiagram& d, const TortileObjectData& t);
TruncatedScalar normalized_value(const MorseDiagram& d, const Evaluator& ev);

MorseDiagram unknot_diagram();

struct DisjointUnionCheck {
  TruncatedScalar value_a, value_b, value_union;
  std::vector<FieldElem> convolution;  // sum_i v_i(a) v_{k-i}(b)
  bool product_ok;
  bool convolution_ok;
  bool ok() const { return product_ok && convolution_ok; }
};
DisjointUnionCheck check_disjoint_union(const MorseDiagram& a, const MorseDiagram& b, const TortileObjectData& t);
DisjointUnionCheck check_disjoint_union(const MorseDiagram& a, const MorseDiagram& b, const Evaluator& ev);

}  // namespace qdef
