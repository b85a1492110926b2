#include "btnorm/stabilizer.hpp"

#include "btnorm/error.hpp"

namespace btnorm {

Value hom_norm(const SplitNorm& norm, const Matrix& h) {
  const size_t n = norm.dim();
  if (h.rows() != n || h.cols() != n) fail(Errc::dimension_mismatch, "endomorphism has the wrong size");
  // Column i of the coordinate matrix holds the coefficients of h(e_i).
  Matrix coords = norm.basis_inverse() * h * norm.basis();
  const Vector& a = norm.values();
  Value out = Value::bottom();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      const Rational& hij = coords(j, i);
      if (hij == 0) continue;
      out = max(out, Value(Rational(a[j] - a[i] - valuation(hij, norm.cfg()))));
    }
  }
  return out;
}

bool is_stabilizer_element(const SplitNorm& norm, const Matrix& g) {
  if (g.rows() != norm.dim() || g.cols() != norm.dim()) fail(Errc::dimension_mismatch, "group element has the wrong size");
  auto inv = g.try_inverse();
  if (!inv) fail(Errc::singular, "group element is singular");
  return hom_norm(norm, g) <= Value(0) && hom_norm(norm, *inv) <= Value(0);
}

GradedOrderSummary graded_dims(const SplitNorm& norm) {
  GradedOrderSummary out;
  out.n = norm.dim();
  for (const auto& ai : norm.values())
    for (const auto& aj : norm.values()) ++out.class_dims[degree_representative(ai - aj)];
  return out;
}

FiberStructure fiber_structure(const SplitNorm& norm) {
  FiberStructure out;
  for (const auto& [cls, m] : class_multiplicities(norm)) out.levi_blocks.push_back(m);
  for (const auto& [degree, dim] : graded_dims(norm).class_dims) {
    if (degree != 0) out.unipotent_dim += dim;
  }
  out.total_dim = norm.dim() * norm.dim();
  return out;
}

BallChainPeriod chain_period(const SplitNorm& norm) {
  BallChainPeriod out;
  out.classes = value_classes(norm);
  for (const auto& c : out.classes) out.lattices.push_back(ball_basis(norm, c));
  const size_t m = out.lattices.size();
  const Rational p(norm.cfg().prime_z());
  for (size_t k = 0; k < m; ++k) {
    Matrix cert = k + 1 < m ? out.lattices[k + 1].matrix().inverse() * out.lattices[k].matrix()
                            : out.lattices[0].matrix().inverse() * out.lattices[k].matrix();
    if (k + 1 == m) {
      for (size_t r = 0; r < cert.rows(); ++r)
        for (size_t c = 0; c < cert.cols(); ++c) cert(r, c) *= p;
    }
    if (!is_integral(cert, norm.cfg())) fail(Errc::internal, "ball chain is not increasing");
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

Value filtration_level(const SplitNorm& norm, const Matrix& g) {
  if (!is_stabilizer_element(norm, g)) fail(Errc::precondition, "element does not stabilize the norm");
  Value level = hom_norm(norm, g - Matrix::identity(norm.dim()));
  if (level <= Value(-1)) return Value::bottom();
  return level;
}

}  // namespace btnorm
