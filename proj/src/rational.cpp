#include "flopdyn/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>

#include "flopdyn/errors.hpp"

namespace flopdyn {
namespace {

mpz_class to_mpz(std::int64_t n) {
  // mpz_class has no int64 constructor on every platform; go through strings
  // only for the values a long cannot hold.
  if (n >= LONG_MIN && n <= LONG_MAX) return mpz_class(static_cast<long>(n));
  return mpz_class(std::to_string(n));
}

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t n) : q_(to_mpz(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(to_mpz(num), to_mpz(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& n) : q_(n) {}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(t)) throw ParseError("not a rational number: '" + std::string(text) + "'");
    return Rational(parse_int(t));
  }
  const std::string_view num = trim(t.substr(0, slash));
  const std::string_view den = trim(t.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-') {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  const mpz_class d = parse_int(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_int(num), d);
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, std::int64_t e) {
  if (e < 0) return Rational(1) / pow(r, -e);
  Rational result(1);
  Rational base = r;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Vector vec(std::initializer_list<std::int64_t> xs) {
  Vector v;
  v.reserve(xs.size());
  for (auto x : xs) v.emplace_back(x);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

}  // namespace flopdyn
