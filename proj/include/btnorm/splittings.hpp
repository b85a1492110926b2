#pragma once

// Pairs (L, chi) of a lattice and diagonal weights. The norm of the pair is
// the split norm whose basis is the lattice basis and whose values are the
// weights: the lattice norm of L, shifted on each weight space by its weight.

#include "btnorm/norms.hpp"

namespace btnorm {

struct SplittingPair {
  LatticeBasis lattice;
  /// Weight of each lattice basis column. Canonical pairs have weights in [0, 1).
  Vector weights;
};

SplitNorm norm_from_pair(const SplittingPair& pair);

/// The canonical pair: column i is p^floor(a_i) e_i with weight frac(a_i).
SplittingPair pair_from_norm(const SplitNorm& norm);

SplittingPair translate_pair(const Matrix& g, const SplittingPair& pair);

bool verify_splitting(const SplitNorm& norm, const SplittingPair& pair);

}  // namespace btnorm
