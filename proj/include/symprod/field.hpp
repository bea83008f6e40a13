#pragma once

#include <cstdint>
#include <string>

#include "symprod/rational.hpp"

namespace symprod {

// Field objects are passed (or stored) by value and carry everything the
// arithmetic needs: nothing for Q, the modulus for F_p. Generic code routes
// every operation through the field so the same elimination routines serve
// both scalars.

struct RationalField {
  using Elem = Rational;
  static constexpr bool is_rational = true;

  Elem zero() const { return Rational(); }
  Elem one() const { return Rational(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inv(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.str(); }
  Elem parse(const std::string& s) const { return Rational::from_string(s); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

bool is_prime_u32(std::uint32_t n);

// F_p for prime p < 2^31: elements are uint32_t in [0, p), products fit in a
// uint64_t, inverses via Fermat.
class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool is_rational = false;

  explicit PrimeField(std::uint32_t p);  // throws unless p prime and < 2^31

  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t(a) * b % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;  // throws on zero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const;  // any integer literal, reduced mod p

  Elem from_int(const Int& n) const;
  Elem from_rational(const Rational& r) const;  // throws if p divides the denominator

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace symprod
