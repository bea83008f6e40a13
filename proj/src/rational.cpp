#include "symprod/rational.hpp"

#include <cctype>
#include <ostream>

#include "symprod/errors.hpp"

namespace symprod {

namespace {

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Int int_from_string(const std::string& s) {
  if (!looks_like_integer(s)) fail(Errc::parse_error, "not an integer literal: '" + s + "'");
  return Int(s, 10);
}

std::string int_to_string(const Int& v) { return v.get_str(10); }

Int isqrt_floor(const Int& v) {
  if (sgn(v) < 0) fail(Errc::invalid_argument, "isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) fail(Errc::invalid_argument, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(int_from_string(s));
  Int num = int_from_string(s.substr(0, slash));
  std::string den_s = s.substr(slash + 1);
  Int den = int_from_string(den_s);
  if (sgn(den) == 0) fail(Errc::parse_error, "zero denominator in '" + s + "'");
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::invalid_argument, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inv() const {
  if (is_zero()) fail(Errc::invalid_argument, "inverse of zero");
  return Rational(den(), num());
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str(10);
  return num().get_str(10) + "/" + den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int ceil_div(const Int& num, const Int& den) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace symprod
