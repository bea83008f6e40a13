#include "symprod/field.hpp"

#include "symprod/errors.hpp"

namespace symprod {

namespace {

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

bool miller_rabin(std::uint32_t n, std::uint32_t a) {
  if (a % n == 0) return true;
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

// Bases {2, 7, 61} are a deterministic Miller-Rabin certificate for every
// 32-bit input, so this is a full primality proof, not a probabilistic test.
bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (std::uint32_t a : {2u, 7u, 61u})
    if (!miller_rabin(n, a)) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31))
    fail(Errc::invalid_argument, "prime modulus must be < 2^31, got " + std::to_string(p));
  if (!is_prime_u32(p))
    fail(Errc::invalid_argument, std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) fail(Errc::invalid_argument, "inverse of zero in F_p");
  return static_cast<Elem>(powmod_u64(a, p_ - 2, p_));
}

PrimeField::Elem PrimeField::from_int(const Int& n) const {
  // mpz_fdiv_ui uses floor division: the result is already in [0, p).
  return static_cast<Elem>(mpz_fdiv_ui(n.get_mpz_t(), p_));
}

PrimeField::Elem PrimeField::from_rational(const Rational& r) const {
  Elem den = from_int(r.den());
  if (den == 0)
    fail(Errc::invalid_argument,
         "denominator of " + r.str() + " vanishes mod " + std::to_string(p_));
  return div(from_int(r.num()), den);
}

PrimeField::Elem PrimeField::parse(const std::string& s) const {
  return from_int(int_from_string(s));
}

}  // namespace symprod
