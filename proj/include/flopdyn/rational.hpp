#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace flopdyn {

// Exact rational number backed by GMP. Always in lowest terms with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& n);
  explicit Rational(mpq_class q);

  // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

Rational abs(const Rational& r);
// Integer power; negative exponents invert (zero base throws).
Rational pow(const Rational& r, std::int64_t e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

using Vector = std::vector<Rational>;

Vector vec(std::initializer_list<std::int64_t> xs);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

}  // namespace flopdyn
