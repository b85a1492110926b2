#include "btnorm/norms.hpp"

#include <algorithm>
#include <set>

#include "btnorm/error.hpp"

namespace btnorm {

namespace {

void require_same_cfg(const FieldConfig& a, const FieldConfig& b) {
  if (a != b) fail(Errc::config_mismatch, "norms are defined over different primes");
}

void require_same_dim(const SplitNorm& a, const SplitNorm& b) {
  require_same_cfg(a.cfg(), b.cfg());
  if (a.dim() != b.dim()) fail(Errc::dimension_mismatch, "norms live on spaces of different dimension");
}

Matrix scaled_columns(const SplitNorm& norm, const Rational& g, bool open) {
  Matrix m = norm.basis();
  for (size_t i = 0; i < norm.dim(); ++i) {
    Rational d = norm.values()[i] - g;
    Integer k = open ? Integer(floor(d) + 1) : ceil(d);
    Rational s = prime_power(norm.cfg(), k);
    for (size_t r = 0; r < m.rows(); ++r) m(r, i) *= s;
  }
  return m;
}

// Weight of coordinate x at a slot of value a: a - val(x).
Rational slot_weight(const Rational& a, const Rational& x, const FieldConfig& cfg) {
  return a - valuation(x, cfg);
}

// Valuated elimination of the columns of coords (given in splitting-basis
// coordinates of a norm with the given values). Column operations only, so the
// span is preserved; afterwards column k attains its norm at pivot_rows[k] and
// every other column vanishes there. Such a family splits the restriction of
// the norm to its span.
struct Adapted {
  Matrix columns;    // n x d, the adapted vectors in splitting coordinates
  Matrix transform;  // d x d, columns = transform applied to the input columns
  std::vector<size_t> pivot_rows;
  Vector values;
};

Adapted adapt_columns(const Vector& values, Matrix coords, const FieldConfig& cfg) {
  const size_t n = coords.rows();
  const size_t d = coords.cols();
  if (coords.rank() != d) fail(Errc::precondition, "spanning matrix is rank-deficient");
  Adapted out{coords, Matrix::identity(d), std::vector<size_t>(d), Vector(d)};
  std::vector<bool> done(d, false);
  for (size_t step = 0; step < d; ++step) {
    std::optional<Rational> best;
    size_t bi = 0, bk = 0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = 0; k < d; ++k) {
        if (done[k] || out.columns(i, k) == 0) continue;
        Rational w = slot_weight(values[i], out.columns(i, k), cfg);
        if (!best || w > *best) {
          best = w;
          bi = i;
          bk = k;
        }
      }
    }
    if (!best) fail(Errc::internal, "elimination ran out of pivots");
    for (size_t j = 0; j < d; ++j) {
      if (j == bk || out.columns(bi, j) == 0) continue;
      Rational s = out.columns(bi, j) / out.columns(bi, bk);
      out.columns.column_axpy(j, s, bk);
      out.transform.column_axpy(j, s, bk);
    }
    done[bk] = true;
    out.pivot_rows[bk] = bi;
  }
  for (size_t k = 0; k < d; ++k) {
    out.values[k] = slot_weight(values[out.pivot_rows[k]], out.columns(out.pivot_rows[k], k), cfg);
  }
  return out;
}

// Completes an adapted family to a splitting basis of the ambient norm by
// adding the splitting-basis vectors at the non-pivot rows.
std::vector<size_t> free_rows(size_t n, const std::vector<size_t>& pivot_rows) {
  std::vector<bool> used(n, false);
  for (size_t r : pivot_rows) used[r] = true;
  std::vector<size_t> out;
  for (size_t i = 0; i < n; ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

SplitNorm completed_norm(const SplitNorm& norm, const Adapted& adapted) {
  const size_t n = norm.dim();
  const size_t d = adapted.columns.cols();
  auto rest = free_rows(n, adapted.pivot_rows);
  Matrix coords(n, n);
  Vector values;
  for (size_t k = 0; k < d; ++k) {
    for (size_t r = 0; r < n; ++r) coords(r, k) = adapted.columns(r, k);
    values.push_back(adapted.values[k]);
  }
  for (size_t j = 0; j < rest.size(); ++j) {
    coords(rest[j], d + j) = 1;
    values.push_back(norm.values()[rest[j]]);
  }
  return SplitNorm(norm.cfg(), norm.basis() * coords, values);
}

Adapted adapt_subspace(const SplitNorm& norm, const Matrix& span) {
  if (span.rows() != norm.dim()) fail(Errc::dimension_mismatch, "spanning vectors have the wrong length");
  if (span.cols() > norm.dim()) fail(Errc::precondition, "spanning matrix is rank-deficient");
  Adapted adapted = adapt_columns(norm.values(), norm.basis_inverse() * span, norm.cfg());
  if (!equals(norm, completed_norm(norm, adapted))) {
    fail(Errc::internal, "adapted basis failed the splitting self-check");
  }
  return adapted;
}

}  // namespace

LatticeBasis::LatticeBasis(FieldConfig cfg, Matrix matrix) : cfg_(cfg), matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) fail(Errc::dimension_mismatch, "lattice basis must be square");
  if (!matrix_.try_inverse()) fail(Errc::singular, "lattice basis is singular");
}

bool is_integral(const Matrix& m, const FieldConfig& cfg) {
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && valuation(m(r, c), cfg) < 0) return false;
  return true;
}

bool lattice_contains(const LatticeBasis& outer, const LatticeBasis& inner) {
  require_same_cfg(outer.cfg(), inner.cfg());
  return is_integral(outer.matrix().inverse() * inner.matrix(), outer.cfg());
}

bool same_lattice(const LatticeBasis& a, const LatticeBasis& b) {
  require_same_cfg(a.cfg(), b.cfg());
  if (a.dim() != b.dim()) return false;
  Matrix t = a.matrix().inverse() * b.matrix();
  return is_integral(t, a.cfg()) && is_integral(t.inverse(), a.cfg());
}

long lattice_index(const LatticeBasis& outer, const LatticeBasis& inner) {
  if (!lattice_contains(outer, inner)) fail(Errc::precondition, "lattice index needs an inclusion");
  return valuation((outer.matrix().inverse() * inner.matrix()).determinant(), outer.cfg());
}

SplitNorm::SplitNorm(FieldConfig cfg, Matrix basis, Vector values)
    : cfg_(cfg), basis_(std::move(basis)), values_(std::move(values)) {
  if (!basis_.is_square() || basis_.rows() != values_.size()) {
    fail(Errc::dimension_mismatch, "basis must be n x n with n values");
  }
  inverse_ = basis_.inverse();
}

Vector SplitNorm::coordinates(const Vector& v) const {
  if (v.size() != dim()) fail(Errc::dimension_mismatch, "vector length does not match the norm's dimension");
  return inverse_ * v;
}

Value evaluate(const SplitNorm& norm, const Vector& v) {
  Vector lambda = norm.coordinates(v);
  Value out = Value::bottom();
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) continue;
    out = max(out, Value(slot_weight(norm.values()[i], lambda[i], norm.cfg())));
  }
  return out;
}

SplitNorm lattice_norm(const LatticeBasis& lattice) {
  return SplitNorm(lattice.cfg(), lattice.matrix(), Vector(lattice.dim(), Rational(0)));
}

LatticeBasis ball_basis(const SplitNorm& norm, const Rational& g) {
  return LatticeBasis(norm.cfg(), scaled_columns(norm, g, false));
}

LatticeBasis ball_basis_open(const SplitNorm& norm, const Rational& g) {
  return LatticeBasis(norm.cfg(), scaled_columns(norm, g, true));
}

SplitNorm act(const Matrix& g, const SplitNorm& norm) {
  if (g.rows() != norm.dim() || g.cols() != norm.dim()) fail(Errc::dimension_mismatch, "group element has the wrong size");
  if (!g.try_inverse()) fail(Errc::singular, "group element is singular");
  return SplitNorm(norm.cfg(), g * norm.basis(), norm.values());
}

// A split norm is determined by its closed balls at the values it attains, and
// ball(g - 1) = p ball(g); so comparing balls at one period of the union of the
// value classes of both norms decides equality.
bool equals(const SplitNorm& a, const SplitNorm& b) {
  require_same_dim(a, b);
  std::set<Rational> classes;
  for (const auto& x : a.values()) classes.insert(frac(x));
  for (const auto& x : b.values()) classes.insert(frac(x));
  for (const auto& g : classes) {
    if (!same_lattice(ball_basis(a, g), ball_basis(b, g))) return false;
  }
  return true;
}

SplitNorm tensor(const SplitNorm& a, const SplitNorm& b) {
  require_same_cfg(a.cfg(), b.cfg());
  Vector values;
  for (const auto& x : a.values())
    for (const auto& y : b.values()) values.push_back(x + y);
  return SplitNorm(a.cfg(), kronecker(a.basis(), b.basis()), values);
}

SplitNorm dual(const SplitNorm& norm) {
  Vector values;
  for (const auto& x : norm.values()) values.push_back(-x);
  return SplitNorm(norm.cfg(), norm.basis_inverse().transpose(), values);
}

SplitNorm direct_sum(const SplitNorm& a, const SplitNorm& b) {
  require_same_cfg(a.cfg(), b.cfg());
  Vector values = a.values();
  values.insert(values.end(), b.values().begin(), b.values().end());
  return SplitNorm(a.cfg(), block_diagonal(a.basis(), b.basis()), values);
}

SplitNorm restrict(const SplitNorm& norm, const Matrix& span) {
  Adapted adapted = adapt_subspace(norm, span);
  return SplitNorm(norm.cfg(), adapted.transform, adapted.values);
}

QuotientResult quotient(const SplitNorm& norm, const Matrix& span) {
  Adapted adapted = adapt_subspace(norm, span);
  auto rest = free_rows(norm.dim(), adapted.pivot_rows);
  Matrix complement(norm.dim(), rest.size());
  Vector values;
  for (size_t j = 0; j < rest.size(); ++j) {
    complement.set_column(j, norm.basis().column(rest[j]));
    values.push_back(norm.values()[rest[j]]);
  }
  return {SplitNorm(norm.cfg(), Matrix::identity(rest.size()), values), complement};
}

// Works on the transition matrix T from b's splitting basis to a's. Picking the
// entry of maximal weight a_i - val(T_ij) - b_j and clearing its row by column
// operations changes b's basis only by elements fixing b. The matching row
// operations (a change of a's basis fixing a) would clear its column without
// touching the rest of the matrix, so they are left implicit: the final column
// set is a multiple of a splitting basis of a.
CommonBasis common_splitting_basis(const SplitNorm& a, const SplitNorm& b) {
  require_same_dim(a, b);
  const size_t n = a.dim();
  const FieldConfig& cfg = a.cfg();
  Matrix t = a.basis_inverse() * b.basis();
  Matrix h = Matrix::identity(n);
  std::vector<bool> row_done(n, false), col_done(n, false);
  for (size_t step = 0; step < n; ++step) {
    std::optional<Rational> best;
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < n; ++i) {
      if (row_done[i]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (col_done[j] || t(i, j) == 0) continue;
        Rational w = a.values()[i] - valuation(t(i, j), cfg) - b.values()[j];
        if (!best || w > *best) {
          best = w;
          bi = i;
          bj = j;
        }
      }
    }
    if (!best) fail(Errc::internal, "common basis elimination ran out of pivots");
    for (size_t j = 0; j < n; ++j) {
      if (col_done[j] || j == bj || t(bi, j) == 0) continue;
      Rational s = t(bi, j) / t(bi, bj);
      t.column_axpy(j, s, bj);
      h.column_axpy(j, s, bj);
    }
    row_done[bi] = true;
    col_done[bj] = true;
  }

  Matrix basis = b.basis() * h;
  CommonBasis out{Matrix(n, n), Vector(n), Vector(n)};
  for (size_t j = 0; j < n; ++j) {
    Vector f = basis.column(j);
    Rational av = evaluate(a, f).magnitude();
    Integer k = floor(av);
    Rational s = prime_power(cfg, k);
    for (auto& x : f) x *= s;
    out.basis.set_column(j, f);
    out.a_values[j] = av - Rational(k);
    out.b_values[j] = b.values()[j] - Rational(k);
  }
  if (!equals(a, SplitNorm(cfg, out.basis, out.a_values)) || !equals(b, SplitNorm(cfg, out.basis, out.b_values))) {
    fail(Errc::internal, "common splitting basis failed the self-check");
  }
  return out;
}

Distance distance(const SplitNorm& a, const SplitNorm& b) {
  CommonBasis common = common_splitting_basis(a, b);
  Distance out{Rational(0), {}};
  for (size_t i = 0; i < a.dim(); ++i) {
    Rational d = common.a_values[i] - common.b_values[i];
    out.diffs.push_back(d);
    if (abs(d) > out.d_inf) out.d_inf = abs(d);
  }
  std::sort(out.diffs.begin(), out.diffs.end(), [](const Rational& x, const Rational& y) { return x > y; });
  return out;
}

std::vector<Rational> value_classes(const SplitNorm& norm) {
  std::set<Rational> classes;
  for (const auto& x : norm.values()) classes.insert(frac(x));
  return {classes.begin(), classes.end()};
}

std::vector<std::pair<Rational, size_t>> class_multiplicities(const SplitNorm& norm) {
  std::vector<std::pair<Rational, size_t>> out;
  for (const auto& c : value_classes(norm)) {
    size_t m = 0;
    for (const auto& x : norm.values())
      if (frac(x) == c) ++m;
    out.emplace_back(c, m);
  }
  return out;
}

size_t graded_rank(const SplitNorm& norm, const Rational& g) {
  return static_cast<size_t>(lattice_index(ball_basis(norm, g), ball_basis_open(norm, g)));
}

}  // namespace btnorm
