#pragma once

// The base field is Q with the p-adic valuation. Norms are stored additively:
// a multiplicative norm alpha is represented by c = log_p(alpha), so that
//   c(lambda * v) = c(v) - val(lambda),
//   "alpha <= 1"  becomes  "c <= 0",
//   |l^*|         becomes  the integers inside (Q, +).
// The norm of the zero vector is the bottom element of Value.

#include <compare>
#include <optional>
#include <string>

#include "btnorm/rational.hpp"

namespace btnorm {

class FieldConfig {
 public:
  /// Throws Error(precondition) unless prime is a prime number.
  explicit FieldConfig(unsigned long prime);

  unsigned long prime() const { return prime_; }
  Integer prime_z() const { return Integer(prime_); }

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

 private:
  unsigned long prime_;
};

bool is_prime(unsigned long n);

/// An element of (Q, +) together with a bottom element, the additive image of
/// Gamma u {0}. Bottom is minimal and absorbing under addition.
class Value {
 public:
  Value() = default;  // bottom
  Value(Rational magnitude) : magnitude_(std::move(magnitude)) {}
  Value(long n) : magnitude_(Rational(n)) {}

  static Value bottom() { return Value(); }

  bool is_bottom() const { return !magnitude_.has_value(); }
  const Rational& magnitude() const;

  friend bool operator==(const Value& a, const Value& b) { return a.magnitude_ == b.magnitude_; }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Rational& shift);

 private:
  std::optional<Rational> magnitude_;
};

Value max(const Value& a, const Value& b);

/// "-inf" for bottom, the canonical rational string otherwise.
std::string to_string(const Value& v);
Value parse_value(std::string_view text);

/// Ramification index of a (virtual) extension: a positive integer, or
/// unbounded (value group of the extension is all of Q).
class RamIndex {
 public:
  RamIndex() = default;  // unbounded
  explicit RamIndex(unsigned long e);
  static RamIndex unbounded() { return RamIndex(); }

  bool is_unbounded() const { return !e_.has_value(); }
  unsigned long value() const;

 private:
  std::optional<unsigned long> e_;
};

struct ValueClass {
  Rational representative;
  friend bool operator==(const ValueClass&, const ValueClass&) = default;
  friend std::strong_ordering operator<=>(const ValueClass& a, const ValueClass& b) {
    return cmp(a.representative, b.representative) <=> 0;
  }
};

/// p^k for any integer k.
Rational prime_power(const FieldConfig& cfg, const Integer& k);

/// Exponent of p in x; bottom for x = 0.
Value val(const Rational& x, const FieldConfig& cfg);

/// val(x) for x != 0, as a plain integer. Throws Error(precondition) on zero.
long valuation(const Rational& x, const FieldConfig& cfg);

/// Canonical representative of r modulo (1/e)Z, taken in [0, 1/e). For an
/// unbounded index every value is its own representative.
ValueClass class_of(const Value& r, const RamIndex& e = RamIndex(1));

/// The additive image (-1, 0] of the fundamental interval (|pi|, 1].
bool in_fundamental_interval(const Rational& d);

/// Representative of d modulo Z in (-1, 0].
Rational degree_representative(const Rational& d);

}  // namespace btnorm
