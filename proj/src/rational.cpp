#include "tropbundle/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace tropbundle {

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

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, 1);
  q /= den;
  return q;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str(10);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + to_string(q));
  const mpz_class& n = q.get_num();
  if (n < std::numeric_limits<long>::min() || n > std::numeric_limits<long>::max()) {
    throw std::domain_error("integer out of range: " + to_string(q));
  }
  return static_cast<std::int64_t>(n.get_si());
}

Rational floor_div(const Rational& a, const Rational& b) {
  Rational quotient = a / b;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), quotient.get_num_mpz_t(), quotient.get_den_mpz_t());
  return Rational(f);
}

Rational mod_positive(const Rational& a, const Rational& m) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  Rational r = a - floor_div(a, m) * m;
  r.canonicalize();
  return r;
}

}  // namespace tropbundle
