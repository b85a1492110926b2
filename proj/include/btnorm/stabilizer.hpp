#pragma once

// The order End(alpha), its unit group (the integral stabilizer), and the
// filtration of the special fiber.
//
// Slot convention: for an endomorphism h and a splitting basis (e_i), write
// h(e_i) = sum_j h_ij e_j. Then h is bounded iff val(h_ij) >= a_j - a_i for
// all slots, and the operator log-norm is
//
//   hom_norm(h) = max_{i,j} (a_j - a_i - val(h_ij)).
//
// Degrees of the filtration are taken in (-1, 0]: ball(d) contains
// ball(-1) = p ball(0) for every such d, so levels <= -1 reduce to the identity
// on the special fiber.

#include <functional>
#include <map>
#include <vector>

#include "btnorm/norms.hpp"

namespace btnorm {

struct GradedOrderSummary {
  /// Degree in (-1, 0] -> dimension of the graded piece; zero entries omitted.
  std::map<Rational, size_t, std::greater<>> class_dims;
  size_t n = 0;
};

struct FiberStructure {
  /// Value-class multiplicities, ordered by class representative in [0, 1).
  std::vector<size_t> levi_blocks;
  size_t unipotent_dim = 0;
  size_t total_dim = 0;
};

/// h is given in standard coordinates.
Value hom_norm(const SplitNorm& norm, const Matrix& h);

bool is_stabilizer_element(const SplitNorm& norm, const Matrix& g);

GradedOrderSummary graded_dims(const SplitNorm& norm);

FiberStructure fiber_structure(const SplitNorm& norm);

BallChainPeriod chain_period(const SplitNorm& norm);

/// hom_norm(g - 1), or bottom when that is <= -1 (trivial reduction). g
/// reduces into U_{<=d} iff the level is <= d. Requires g to stabilize norm.
Value filtration_level(const SplitNorm& norm, const Matrix& g);

}  // namespace btnorm
