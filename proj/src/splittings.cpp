#include "btnorm/splittings.hpp"

#include "btnorm/error.hpp"

namespace btnorm {

SplitNorm norm_from_pair(const SplittingPair& pair) {
  if (pair.weights.size() != pair.lattice.dim()) fail(Errc::dimension_mismatch, "pair needs one weight per lattice column");
  return SplitNorm(pair.lattice.cfg(), pair.lattice.matrix(), pair.weights);
}

SplittingPair pair_from_norm(const SplitNorm& norm) {
  Matrix lattice = norm.basis();
  Vector weights(norm.dim());
  for (size_t i = 0; i < norm.dim(); ++i) {
    Integer k = floor(norm.values()[i]);
    weights[i] = norm.values()[i] - Rational(k);
    Rational s = prime_power(norm.cfg(), k);
    for (size_t r = 0; r < norm.dim(); ++r) lattice(r, i) *= s;
  }
  return {LatticeBasis(norm.cfg(), std::move(lattice)), std::move(weights)};
}

SplittingPair translate_pair(const Matrix& g, const SplittingPair& pair) {
  if (g.rows() != pair.lattice.dim() || g.cols() != pair.lattice.dim()) {
    fail(Errc::dimension_mismatch, "group element has the wrong size");
  }
  if (!g.try_inverse()) fail(Errc::singular, "group element is singular");
  return {LatticeBasis(pair.lattice.cfg(), g * pair.lattice.matrix()), pair.weights};
}

bool verify_splitting(const SplitNorm& norm, const SplittingPair& pair) {
  if (pair.lattice.dim() != norm.dim()) return false;
  return equals(norm, norm_from_pair(pair));
}

}  // namespace btnorm
