#pragma once

// Shared fixtures, random generators and reference oracles for the tests.
// The oracles deliberately avoid the library's own elimination and ball code:
// linear solves, valuations and lattice inclusion are recomputed here.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "btnorm/base_change.hpp"
#include "btnorm/building.hpp"
#include "btnorm/norms.hpp"
#include "btnorm/splittings.hpp"
#include "btnorm/stabilizer.hpp"

namespace testing {

using namespace btnorm;

inline Rational q(const char* s) { return parse_rational(s); }

inline Vector vec(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(q(x));
  return v;
}

inline Matrix rows(std::initializer_list<std::initializer_list<long>> rs) {
  std::vector<Vector> out;
  for (const auto& r : rs) {
    Vector v;
    for (long x : r) v.push_back(Rational(x));
    out.push_back(v);
  }
  return Matrix::from_rows(out);
}

inline Matrix cols(std::initializer_list<std::initializer_list<long>> cs) { return rows(cs).transpose(); }

inline SplitNorm std_norm(unsigned long p, const Vector& values) {
  return SplitNorm(FieldConfig(p), Matrix::identity(values.size()), values);
}

inline SplitNorm alpha0() { return std_norm(2, vec({"0", "1/2"})); }
inline SplitNorm beta(size_t n = 2, unsigned long p = 2) { return std_norm(p, Vector(n, Rational(0))); }

// ---- independent arithmetic -------------------------------------------

inline long ref_val_int(Integer z, unsigned long p) {
  long k = 0;
  while (z % p == 0) {
    z /= p;
    ++k;
  }
  return k;
}

/// Valuation of a nonzero rational by repeated division.
inline long ref_val(const Rational& x, unsigned long p) {
  return ref_val_int(x.get_num(), p) - ref_val_int(x.get_den(), p);
}

/// Solves m * x = b by Gauss-Jordan on an augmented copy. m must be invertible.
inline Vector ref_solve(const Matrix& m, const Vector& b) {
  size_t n = m.rows();
  std::vector<Vector> a(n, Vector(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = b[i];
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Vector x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

/// Direct max formula: max_i (a_i - val(lambda_i)) where basis * lambda = v.
inline std::optional<Rational> ref_evaluate(const SplitNorm& norm, const Vector& v) {
  Vector lambda = ref_solve(norm.basis(), v);
  std::optional<Rational> best;
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) continue;
    Rational c = norm.values()[i] - ref_val(lambda[i], norm.cfg().prime());
    if (!best || c > *best) best = c;
  }
  return best;
}

inline Rational ref_pow(unsigned long p, long k) {
  Rational r = 1;
  for (long i = 0; i < std::abs(k); ++i) r *= p;
  return k >= 0 ? r : 1 / r;
}

inline long ref_ceil(const Rational& x) {
  Integer n = x.get_num(), d = x.get_den();
  Integer f = n / d;  // truncates toward zero
  if (f * d < n) f += 1;
  return f.get_si();
}

/// Columns p^ceil(a_i - g) * b_i: the ball {c <= g} written out by hand.
inline Matrix ref_ball(const SplitNorm& norm, const Rational& g) {
  Matrix m = norm.basis();
  for (size_t i = 0; i < norm.dim(); ++i) {
    Rational s = ref_pow(norm.cfg().prime(), ref_ceil(norm.values()[i] - g));
    for (size_t r = 0; r < m.rows(); ++r) m(r, i) *= s;
  }
  return m;
}

/// Every column of `inner` is a p-integral combination of the columns of `outer`.
inline bool ref_contains(const Matrix& outer, const Matrix& inner, unsigned long p) {
  for (size_t c = 0; c < inner.cols(); ++c) {
    for (const auto& x : ref_solve(outer, inner.column(c))) {
      if (x != 0 && ref_val(x, p) < 0) return false;
    }
  }
  return true;
}

inline bool ref_same_lattice(const Matrix& a, const Matrix& b, unsigned long p) {
  return ref_contains(a, b, p) && ref_contains(b, a, p);
}

inline Rational ref_frac(const Rational& x) { return x + Rational(ref_ceil(-x)); }

/// Sorted distinct fractional parts of the values.
inline std::vector<Rational> ref_classes(const SplitNorm& norm) {
  std::vector<Rational> out;
  for (const auto& a : norm.values()) out.push_back(ref_frac(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// g maps every ball of one period into itself, and so does g^-1.
inline bool ref_is_stabilizer(const SplitNorm& norm, const Matrix& g) {
  Matrix ginv = g.inverse();
  unsigned long p = norm.cfg().prime();
  for (const auto& cls : ref_classes(norm)) {
    Matrix ball = ref_ball(norm, cls);
    if (!ref_contains(ball, g * ball, p) || !ref_contains(ball, ginv * ball, p)) return false;
  }
  return true;
}

/// Minor of m on the given row and column index sets.
inline Rational minor_det(const Matrix& m, const std::vector<size_t>& r, const std::vector<size_t>& c) {
  size_t k = r.size();
  Matrix sub(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
  Rational det = 1;
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && sub(piv, col) == 0) ++piv;
    if (piv == k) return 0;
    if (piv != col) {
      for (size_t j = 0; j < k; ++j) std::swap(sub(piv, j), sub(col, j));
      det = -det;
    }
    det *= sub(col, col);
    for (size_t i = col + 1; i < k; ++i) {
      Rational f = sub(i, col) / sub(col, col);
      for (size_t j = col; j < k; ++j) sub(i, j) -= f * sub(col, j);
    }
  }
  return det;
}

inline void subsets(size_t n, size_t k, size_t start, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Elementary divisor exponents of an invertible matrix over Z_(p), ascending,
/// from determinantal divisors: d_k = min val of k x k minors, e_k = d_k - d_{k-1}.
inline std::vector<long> elementary_divisor_exponents(const Matrix& t, unsigned long p) {
  size_t n = t.rows();
  std::vector<long> out;
  long prev = 0;
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<size_t>> sets;
    std::vector<size_t> cur;
    subsets(n, k, 0, cur, sets);
    std::optional<long> dk;
    for (const auto& r : sets)
      for (const auto& c : sets) {
        Rational d = minor_det(t, r, c);
        if (d == 0) continue;
        long v = ref_val(d, p);
        if (!dk || v < *dk) dk = v;
      }
    out.push_back(*dk - prev);
    prev = *dk;
  }
  return out;
}

// ---- random instances ---------------------------------------------------

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  template <class T>
  T pick(const std::vector<T>& xs) {
    return xs[static_cast<size_t>(integer(0, static_cast<long>(xs.size()) - 1))];
  }

  unsigned long prime() { return pick(std::vector<unsigned long>{2, 3, 5}); }

  /// Rational with denominator dividing a number in 1..max_den, in [-range, range].
  Rational value(long range = 3, long max_den = 6) {
    long den = integer(1, max_den);
    Rational r(integer(-range * den, range * den), den);
    r.canonicalize();
    return r;
  }

  /// Small nonzero rational whose valuation varies.
  Rational scalar(unsigned long p) {
    long num = 0;
    while (num == 0) num = integer(-7, 7);
    Rational r(num, integer(1, 4));
    r.canonicalize();
    return r * ref_pow(p, integer(-2, 2));
  }

  Rational entry(unsigned long p) {
    if (integer(0, 2) == 0) return 0;
    return scalar(p);
  }

  Vector vector(size_t n, unsigned long p) {
    Vector v(n);
    for (auto& x : v) x = entry(p);
    return v;
  }

  Vector nonzero_vector(size_t n, unsigned long p) {
    while (true) {
      Vector v = vector(n, p);
      if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) return v;
    }
  }

  Matrix invertible(size_t n, unsigned long p) {
    while (true) {
      Matrix m(n, n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = (i == j || coin()) ? entry(p) : Rational(0);
      if (m.determinant() != 0) return m;
    }
  }

  Matrix diagonal(size_t n, unsigned long p) {
    Vector d(n);
    for (auto& x : d) x = scalar(p);
    return Matrix::diagonal(d);
  }

  Vector values(size_t n, long max_den = 6) {
    Vector v(n);
    for (auto& x : v) x = value(3, max_den);
    return v;
  }

  Vector integer_values(size_t n) {
    Vector v(n);
    for (auto& x : v) x = integer(-3, 3);
    return v;
  }

  SplitNorm norm(size_t n, unsigned long p, long max_den = 6) {
    return SplitNorm(FieldConfig(p), invertible(n, p), values(n, max_den));
  }

  SplitNorm norm() {
    size_t n = static_cast<size_t>(integer(1, 5));
    return norm(n, prime());
  }

  /// A product of elementary matrices; factors are often, but not always,
  /// conjugated into the norm's splitting basis so both outcomes occur.
  Matrix elementary_product(const SplitNorm& norm) {
    size_t n = norm.dim();
    unsigned long p = norm.cfg().prime();
    Matrix g = Matrix::identity(n);
    long factors = integer(1, 4);
    for (long f = 0; f < factors; ++f) {
      Matrix e = Matrix::identity(n);
      size_t i = static_cast<size_t>(integer(0, static_cast<long>(n) - 1));
      size_t j = static_cast<size_t>(integer(0, static_cast<long>(n) - 1));
      if (i == j) {
        Rational unit(integer(1, static_cast<long>(p) - 1) * (coin() ? 1 : -1));
        e(i, i) = coin() ? unit : unit * ref_pow(p, integer(-1, 1));
      } else {
        // Aim near the slot weight so that membership is borderline.
        Rational slot = norm.values()[i] - norm.values()[j];
        long k = ref_ceil(slot) + integer(-1, 1);
        e(i, j) = Rational(integer(1, 3) * (coin() ? 1 : -1)) * ref_pow(p, k);
      }
      if (integer(0, 3) != 0) e = norm.basis() * e * norm.basis_inverse();
      g = g * e;
    }
    return g;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
