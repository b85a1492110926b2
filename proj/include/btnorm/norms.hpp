#pragma once

// Splittable norms on Q^n.
//
// A SplitNorm is stored as a splitting basis e_1..e_n (the columns of an
// invertible matrix) together with values a_i = c(e_i). The norm of
// v = sum lambda_i e_i is
//
//   c(v) = max_i (a_i - val(lambda_i)),
//
// and the closed ball V^{c <= g} is the lattice spanned by p^{k_i} e_i with
// k_i = ceil(a_i - g). Every operation here keeps norms in split form.

#include <optional>
#include <vector>

#include "btnorm/matrix.hpp"
#include "btnorm/valued_field.hpp"

namespace btnorm {

/// Columns generate a full-rank Z_(p)-lattice in Q^n.
class LatticeBasis {
 public:
  LatticeBasis(FieldConfig cfg, Matrix matrix);

  const FieldConfig& cfg() const { return cfg_; }
  const Matrix& matrix() const { return matrix_; }
  size_t dim() const { return matrix_.rows(); }

 private:
  FieldConfig cfg_;
  Matrix matrix_;
};

/// True iff every entry of m has valuation >= 0.
bool is_integral(const Matrix& m, const FieldConfig& cfg);

/// inner is contained in outer.
bool lattice_contains(const LatticeBasis& outer, const LatticeBasis& inner);

/// Same lattice: the transition matrix and its inverse are both integral.
bool same_lattice(const LatticeBasis& a, const LatticeBasis& b);

/// Z_(p)-length of outer/inner, i.e. val(det(outer^-1 inner)). Requires inner in outer.
long lattice_index(const LatticeBasis& outer, const LatticeBasis& inner);

class SplitNorm {
 public:
  /// Throws Error(singular) if basis is singular, Error(dimension_mismatch) on
  /// shape errors.
  SplitNorm(FieldConfig cfg, Matrix basis, Vector values);

  const FieldConfig& cfg() const { return cfg_; }
  size_t dim() const { return values_.size(); }
  const Matrix& basis() const { return basis_; }
  const Matrix& basis_inverse() const { return inverse_; }
  const Vector& values() const { return values_; }

  /// Coordinates of v in the splitting basis.
  Vector coordinates(const Vector& v) const;

 private:
  FieldConfig cfg_;
  Matrix basis_;
  Matrix inverse_;
  Vector values_;
};

/// Classes of the values modulo Z, in [0, 1).
struct BallChainPeriod {
  std::vector<Rational> classes;
  std::vector<LatticeBasis> lattices;
  /// certificates[k] expresses lattices[k] in the basis of the next lattice of
  /// the cycle (the last one against p^-1 times the first); all entries are
  /// integral.
  std::vector<Matrix> certificates;
};

Value evaluate(const SplitNorm& norm, const Vector& v);

SplitNorm lattice_norm(const LatticeBasis& lattice);

LatticeBasis ball_basis(const SplitNorm& norm, const Rational& g);
LatticeBasis ball_basis_open(const SplitNorm& norm, const Rational& g);

/// The norm v -> c(g^-1 v).
SplitNorm act(const Matrix& g, const SplitNorm& norm);

bool equals(const SplitNorm& a, const SplitNorm& b);

SplitNorm tensor(const SplitNorm& a, const SplitNorm& b);
SplitNorm dual(const SplitNorm& norm);
SplitNorm direct_sum(const SplitNorm& a, const SplitNorm& b);

/// Restriction to the column span of span (n x d, rank d). The result lives on
/// Q^d, with coordinates taken relative to the columns of span.
SplitNorm restrict(const SplitNorm& norm, const Matrix& span);

struct QuotientResult {
  /// Image norm on Q^n / W in the coordinates of `complement`.
  SplitNorm norm;
  /// n x (n - d) matrix; its columns map to a basis of Q^n / W.
  Matrix complement;
};

QuotientResult quotient(const SplitNorm& norm, const Matrix& span);

struct CommonBasis {
  Matrix basis;
  Vector a_values;
  Vector b_values;
};

/// A basis splitting both norms. Each vector is scaled so that its a-value
/// lies in [0, 1).
CommonBasis common_splitting_basis(const SplitNorm& a, const SplitNorm& b);

struct Distance {
  Rational d_inf;
  /// a-value minus b-value on a common splitting basis, sorted descending.
  Vector diffs;
};

Distance distance(const SplitNorm& a, const SplitNorm& b);

/// Sorted distinct classes of the values modulo Z, in [0, 1).
std::vector<Rational> value_classes(const SplitNorm& norm);

/// Number of values in each class modulo Z, ordered by class.
std::vector<std::pair<Rational, size_t>> class_multiplicities(const SplitNorm& norm);

/// Length of ball(g) / open_ball(g), computed from the two lattices.
size_t graded_rank(const SplitNorm& norm, const Rational& g);

}  // namespace btnorm
