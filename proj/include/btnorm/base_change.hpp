#pragma once

// Invariants of the base change of a split norm to a (virtual) totally
// ramified extension m. No arithmetic in m is performed: every invariant here
// depends only on the classes of the values modulo val(Q^*) = Z.

#include <functional>
#include <map>
#include <utility>

#include "btnorm/norms.hpp"

namespace btnorm {

struct VirtualExtension {
  /// Unbounded models |m^*| = Q; index 1 is the unramified case.
  RamIndex ram_index;
};

struct WeightMultiset {
  /// Class in [0, 1) -> multiplicity.
  std::map<Rational, size_t> weights;
};

/// Weights of the grading cocharacter on any ball of the base-changed norm.
WeightMultiset chi_weights(const SplitNorm& norm);

/// Dimension of the centralizer of the grading: sum of squared multiplicities.
size_t centralizer_dim(const SplitNorm& norm);

/// Dimension of the kernel of the base-change map on special fibers.
size_t kernel_dim(const SplitNorm& norm);

struct GradedBallDims {
  size_t lhs = 0;  // length of ball(g + d) / open ball(g + d), from lattices
  size_t rhs = 0;  // multiplicity of the class [g + d] in chi_weights
};

/// One entry per value class of the norm, keyed by the degree d in (-1, 0].
std::map<Rational, GradedBallDims, std::greater<>> graded_ball_dims(const SplitNorm& norm, const Rational& g);

/// The norm over m in units of m's normalized valuation (values scaled by e),
/// with p standing in for a uniformizer of m. Requires a bounded index.
SplitNorm refine(const SplitNorm& norm, const VirtualExtension& ext);

/// Number of distinct lattices in one period of the ball chain over m.
size_t refined_chain_length(const SplitNorm& norm, const VirtualExtension& ext);

}  // namespace btnorm
