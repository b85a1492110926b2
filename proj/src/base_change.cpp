#include "btnorm/base_change.hpp"

#include "btnorm/stabilizer.hpp"

namespace btnorm {

WeightMultiset chi_weights(const SplitNorm& norm) {
  WeightMultiset out;
  for (const auto& a : norm.values()) ++out.weights[frac(a)];
  return out;
}

size_t centralizer_dim(const SplitNorm& norm) {
  size_t dim = 0;
  for (const auto& [cls, m] : chi_weights(norm).weights) dim += m * m;
  return dim;
}

size_t kernel_dim(const SplitNorm& norm) { return fiber_structure(norm).unipotent_dim; }

std::map<Rational, GradedBallDims, std::greater<>> graded_ball_dims(const SplitNorm& norm, const Rational& g) {
  std::map<Rational, GradedBallDims, std::greater<>> out;
  const auto weights = chi_weights(norm).weights;
  for (const auto& cls : value_classes(norm)) {
    Rational degree = degree_representative(cls - g);
    Rational level = g + degree;
    auto it = weights.find(frac(level));
    out[degree] = {graded_rank(norm, level), it == weights.end() ? 0 : it->second};
  }
  return out;
}

SplitNorm refine(const SplitNorm& norm, const VirtualExtension& ext) {
  Rational e(static_cast<unsigned long>(ext.ram_index.value()));
  Vector values;
  for (const auto& a : norm.values()) values.push_back(a * e);
  return SplitNorm(norm.cfg(), norm.basis(), values);
}

size_t refined_chain_length(const SplitNorm& norm, const VirtualExtension& ext) {
  if (ext.ram_index.is_unbounded()) return norm.dim() > 0 ? 1 : 0;
  return chain_period(refine(norm, ext)).lattices.size();
}

}  // namespace btnorm
