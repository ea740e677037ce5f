#include "tropsym/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace tropsym {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer literal: '" + std::string(s) +
                                "'");
  }
  std::string text(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(text, 10);
}

}  // namespace

Rational::Rational(std::int64_t value) {
  // mpq_class has no int64 constructor on all platforms.
  value_ = mpq_class(mpz_class(std::to_string(value), 10));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(num), 10),
                     mpz_class(std::to_string(den), 10));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(text)));
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("denominator must be unsigned: '" +
                                std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::overflow_error("not an integer: " + str());
  const mpz_class& n = value_.get_num();
  if (n > mpz_class(std::to_string(std::numeric_limits<std::int64_t>::max())) ||
      n < mpz_class(std::to_string(std::numeric_limits<std::int64_t>::min()))) {
    throw std::overflow_error("integer out of int64 range: " + str());
  }
  return std::stoll(n.get_str());
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  std::size_t h = std::hash<std::string>{}(value_.get_num().get_str(16));
  h ^= std::hash<std::string>{}(value_.get_den().get_str(16)) + 0x9e3779b9 +
       (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

mpz_class floor(const Rational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(),
             r.raw().get_den_mpz_t());
  return out;
}

}  // namespace tropsym
