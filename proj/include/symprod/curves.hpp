#pragma once

#include <map>
#include <optional>
#include <string>

namespace symprod::curves {

enum class CurveClass { very_general, hyperelliptic, non_hyperelliptic, arbitrary };

std::string curve_class_name(CurveClass c);
CurveClass curve_class_from_name(const std::string& s);  // throws Errc::parse_error

// Numerical profile of an abstract smooth projective curve. Only data, no
// geometry: the bound modules read it. validate() enforces internal
// consistency; every operation that takes a profile calls it first.
struct CurveProfile {
  long long genus = 0;
  CurveClass cls = CurveClass::arbitrary;
  std::optional<long long> gonality;
  std::map<int, long long> delta;  // m -> minimal degree of a birational model in P^m, m in {1,2,3}
  std::optional<long long> elliptic_cover_degree;  // degree of a cover of an elliptic curve

  void validate() const;  // throws Errc::inconsistent

  // Gonality when it is pinned down by the data: supplied value,
  // hyperelliptic => 2, very general => generic formula, g <= 2 closed form.
  std::optional<long long> resolved_gonality() const;
  // delta_m when pinned down; m = 1 is the gonality.
  std::optional<long long> resolved_delta(int m) const;
};

// Brill-Noether number rho = g - (r+1)(g-d+r).
long long brill_noether_rho(long long g, long long r, long long d);

// Least d with rho(g, r, d) >= 0: g + r - floor(g/(r+1)).
long long generic_min_degree(long long g, long long r);

// Gonality of a general curve: 1, 2, 2 for g = 0, 1, 2 and floor((g+3)/2) after.
long long generic_gonality(long long g);

// Clifford: dim |D| <= deg(D)/2 for special divisors.
long long clifford_max_dim(long long deg);

enum class CliffordCase {
  not_extremal,         // 2 dim < deg
  zero_divisor,         // equality at deg = 0
  canonical,            // equality at deg = 2g-2, dim = g-1
  forces_hyperelliptic  // any other equality case
};
CliffordCase clifford_equality_case(long long g, long long deg, long long dim);

// Martens: dim W^r_m <= m - 2r - 1 (hypotheses: non-hyperelliptic, g >= 5,
// 2 <= m <= g-2, 0 < 2r <= m -- the caller's duty, see martens_applicable).
long long martens_bound(long long m, long long r);
bool martens_applicable(const CurveProfile& p);

// Degree bound for maps to P^1 from a divisor spanning a subspace of P^n:
// deg - 1 - span_dim.
long long geometric_rr(long long deg, long long span_dim);

}  // namespace symprod::curves
