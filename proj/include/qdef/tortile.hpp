#pragma once

// Braiding, twist and duality data at a single object X over R_n.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdef/linalg.hpp"

namespace qdef {

struct TortileObjectData {
  std::size_t dim = 0;
  Ring ring;
  MatrixR c_plus{Ring{}, 0, 0};  // d^2 x d^2, sigma_{X,X}
  MatrixR theta{Ring{}, 0, 0};   // d x d
  MatrixR ev_r{Ring{}, 0, 0};    // 1 x d^2, X (x) X* -> I
  MatrixR coev_r{Ring{}, 0, 0};  // d^2 x 1, I -> X* (x) X
  MatrixR ev_l{Ring{}, 0, 0};    // 1 x d^2, X* (x) X -> I
  MatrixR coev_l{Ring{}, 0, 0};  // d^2 x 1, I -> X (x) X*

  unsigned order() const { return ring.order; }
  // Throws ShapeError when a matrix has the wrong shape or ring.
  void check_shapes() const;
};

struct AxiomResult {
  std::string name;
  bool pass = true;
  // First differing entry (row, column) when the check fails.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

struct AxiomReport {
  std::vector<AxiomResult> structural;  // braiding, dualities, twist relations
  std::vector<AxiomResult> symmetry;    // c - c^{-1} and theta - theta^{-1} vanish mod eps

  bool structural_ok() const;
  bool infinitesimally_symmetric() const;
  bool all_pass() const { return structural_ok() && infinitesimally_symmetric(); }
  const AxiomResult* find(const std::string& name) const;
};

AxiomReport check_axioms(const TortileObjectData& t);

// Kauffman bracket data on a 2-dimensional X with A = exp(eps) truncated at
// the given order. Throws UnsupportedModelError over F_p.
TortileObjectData kauffman_data(unsigned order, Field field = Field::rationals());
// Flip braiding, identity twist, standard pairings.
TortileObjectData symmetric_data(std::size_t dim, Ring ring);
// Throws OrderError when k exceeds the order.
TortileObjectData reduce_data(const TortileObjectData& t, unsigned k);

// kron(Id_{d^left}, m, Id_{d^right})
MatrixR whisker(const MatrixR& m, std::size_t left_dim, std::size_t right_dim);

}  // namespace qdef
