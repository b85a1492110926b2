#include "btnorm/building.hpp"

#include <algorithm>

#include "btnorm/error.hpp"

namespace btnorm {

SplitNorm norm_from_apartment(const ApartmentPoint& x, const FieldConfig& cfg) {
  return SplitNorm(cfg, Matrix::identity(x.coords.size()), x.coords);
}

std::optional<ApartmentPoint> apartment_coords(const SplitNorm& norm, const Matrix& frame) {
  if (frame.rows() != norm.dim() || frame.cols() != norm.dim()) fail(Errc::dimension_mismatch, "frame has the wrong size");
  if (!frame.try_inverse()) fail(Errc::singular, "frame is singular");
  ApartmentPoint x;
  for (const auto& column : frame.columns()) x.coords.push_back(evaluate(norm, column).magnitude());
  if (!equals(norm, SplitNorm(norm.cfg(), frame, x.coords))) return std::nullopt;
  return x;
}

Vector torus_translation(const Matrix& t, const FieldConfig& cfg) {
  if (!t.is_square()) fail(Errc::precondition, "torus element must be square");
  Vector out;
  for (size_t i = 0; i < t.rows(); ++i) {
    for (size_t j = 0; j < t.cols(); ++j) {
      if (i != j && t(i, j) != 0) fail(Errc::precondition, "torus element is not diagonal");
    }
    if (t(i, i) == 0) fail(Errc::singular, "torus element is singular");
    out.push_back(Rational(valuation(t(i, i), cfg)));
  }
  return out;
}

Vector cartan_position(const SplitNorm& a, const SplitNorm& b) {
  CommonBasis common = common_splitting_basis(a, b);
  Vector out;
  for (size_t i = 0; i < a.dim(); ++i) out.push_back(common.b_values[i] - common.a_values[i]);
  std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) { return x > y; });
  return out;
}

std::vector<size_t> point_type(const SplitNorm& norm) {
  std::vector<size_t> out;
  for (const auto& [cls, m] : class_multiplicities(norm)) out.push_back(m);
  return out;
}

SplitNorm shift(const SplitNorm& norm, const Rational& amount) {
  Vector values = norm.values();
  for (auto& v : values) v += amount;
  return SplitNorm(norm.cfg(), norm.basis(), values);
}

bool homothetic(const SplitNorm& a, const SplitNorm& b) {
  if (a.cfg() != b.cfg() || a.dim() != b.dim()) return false;
  if (a.dim() == 0) return true;
  Vector probe = a.basis().column(0);
  Rational k = evaluate(a, probe).magnitude() - evaluate(b, probe).magnitude();
  if (k.get_den() != 1) return false;
  return equals(a, shift(b, k));
}

std::vector<SplitNorm> tree_neighbors(const SplitNorm& vertex) {
  if (vertex.dim() != 2) fail(Errc::precondition, "tree vertices live in dimension 2");
  const Rational cls = frac(vertex.values()[0]);
  if (frac(vertex.values()[1]) != cls) fail(Errc::precondition, "a vertex needs both values in one class");

  const FieldConfig& cfg = vertex.cfg();
  const Matrix lattice = ball_basis(vertex, cls).matrix();
  const Vector l1 = lattice.column(0);
  const Vector l2 = lattice.column(1);
  const Rational p(cfg.prime_z());
  auto sublattice_norm = [&](const Vector& u, const Vector& w) {
    return shift(lattice_norm(LatticeBasis(cfg, Matrix::from_columns({u, w}, 2))), cls);
  };
  auto scaled = [](Vector v, const Rational& s) {
    for (auto& x : v) x *= s;
    return v;
  };

  std::vector<SplitNorm> out;
  out.push_back(sublattice_norm(scaled(l1, p), l2));
  for (unsigned long t = 0; t < cfg.prime(); ++t) {
    Vector u = l1;
    for (size_t r = 0; r < 2; ++r) u[r] += Rational(t) * l2[r];
    out.push_back(sublattice_norm(u, scaled(l2, p)));
  }
  return out;
}

}  // namespace btnorm
