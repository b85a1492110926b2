#include "btnorm/valued_field.hpp"

#include "btnorm/error.hpp"

namespace btnorm {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldConfig::FieldConfig(unsigned long prime) : prime_(prime) {
  if (!is_prime(prime)) fail(Errc::precondition, "prime " + std::to_string(prime) + " is not a prime number");
}

const Rational& Value::magnitude() const {
  if (!magnitude_) fail(Errc::precondition, "bottom value has no magnitude");
  return *magnitude_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.is_bottom() || b.is_bottom()) return !a.is_bottom() <=> !b.is_bottom();
  int c = cmp(*a.magnitude_, *b.magnitude_);
  return c <=> 0;
}

Value operator+(const Value& a, const Value& b) {
  if (a.is_bottom() || b.is_bottom()) return Value::bottom();
  return Value(Rational(*a.magnitude_ + *b.magnitude_));
}

Value operator-(const Value& a, const Rational& shift) {
  if (a.is_bottom()) return a;
  return Value(Rational(*a.magnitude_ - shift));
}

Value max(const Value& a, const Value& b) { return a < b ? b : a; }

std::string to_string(const Value& v) { return v.is_bottom() ? "-inf" : to_string(v.magnitude()); }

Value parse_value(std::string_view text) {
  if (text == "-inf") return Value::bottom();
  return Value(parse_rational(text));
}

RamIndex::RamIndex(unsigned long e) : e_(e) {
  if (e == 0) fail(Errc::precondition, "ramification index must be at least 1");
}

unsigned long RamIndex::value() const {
  if (!e_) fail(Errc::precondition, "unbounded ramification index has no integer value");
  return *e_;
}

Rational prime_power(const FieldConfig& cfg, const Integer& k) {
  Integer p = cfg.prime_z();
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), Integer(abs(k)).get_ui());
  return k >= 0 ? Rational(power) : Rational(Integer(1), power);
}

long valuation(const Rational& x, const FieldConfig& cfg) {
  if (x == 0) fail(Errc::precondition, "valuation of zero");
  Integer p = cfg.prime_z();
  Integer rest;
  long up = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t()));
  long down = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t()));
  return up - down;
}

Value val(const Rational& x, const FieldConfig& cfg) {
  if (x == 0) return Value::bottom();
  return Value(valuation(x, cfg));
}

ValueClass class_of(const Value& r, const RamIndex& e) {
  if (r.is_bottom()) fail(Errc::precondition, "the bottom value has no class");
  if (e.is_unbounded()) return {r.magnitude()};
  Rational step(1, e.value());
  Rational scaled = r.magnitude() / step;
  return {Rational(r.magnitude() - Rational(floor(scaled)) * step)};
}

bool in_fundamental_interval(const Rational& d) { return d > -1 && d <= 0; }

Rational degree_representative(const Rational& d) { return d - Rational(ceil(d)); }

}  // namespace btnorm
