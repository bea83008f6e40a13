#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symprod/rational.hpp"

namespace symprod::nefcone {

// Class a*x + b*(delta/2) in the Neron-Severi plane of the second symmetric
// product of a genus-g curve. Intersection numbers: x^2 = 1,
// x . delta/2 = 1, (delta/2)^2 = 1 - g.
struct NSClass {
  Rational coeff_x;
  Rational coeff_half_delta;
};

// The (a, b) parametrization used for moving curves: (a+b) x - b delta/2.
NSClass from_ab(const Rational& a, const Rational& b);

Rational intersect(const NSClass& u, const NSClass& v, long long g);

// Boundary rays of the nef cone once the slope invariant tau is known:
// (g-1) x - delta/2 (the diagonal side) and (tau+1) x - delta/2.
std::pair<NSClass, NSClass> nef_boundary_rays(long long g, const Rational& tau);

struct GonalityConstant {
  long long c = 0;
  bool paper_default = false;  // true for g in {6,7,8}, where the value is pinned
};

// Constant feeding the positivity polynomial: gonality of a general curve of
// genus g-1, bumped by one from genus 7 on. Outside 6..8 it is an
// extrapolation and is flagged as such.
GonalityConstant default_gonality_constant(long long g);

// Everything needed to audit a slope certificate. f(m) = A m^2 + B m + C
// with A = L^2 - b^2, B = -L^2 + 2b, C = L^2 c - 1, which is
// L^2 (m^2 - m + c) - (b m - 1)^2 expanded.
struct CertReport {
  bool valid = false;
  long long g = 0;
  long long c = 0;
  Int a, b;
  Rational ratio;       // a/b
  Int l_squared;        // a^2 - b^2 (g-1)
  Int A, B, C;
  std::optional<Int> discriminant;                    // B^2 - 4AC when it was computed
  std::vector<std::pair<long long, Int>> checked_points;  // (m, f(m)) for audited integers
  std::optional<std::string> failed_check;            // "ratio" | "positivity" | "leading" | "integer-point"
};

// Checks that the class (a+b) x - b delta/2 certifies slope a/b: ratio at
// least tau_prev, positive self-intersection, and f(m) > 0 for every integer
// m >= 2 (decided exactly: negative discriminant, or finitely many integer
// evaluations up to the larger real root).
CertReport verify_tau_certificate(long long g, const Int& a, const Int& b,
                                  const Rational& tau_prev, long long c);

struct SearchResult {
  Int a, b;
  CertReport report;
};

// Smallest certified ratio a/b with 1 <= b <= b_max (ties to smaller b).
// Throws Errc::no_certificate when the range yields nothing.
SearchResult search_min_ratio(long long g, long long c, const Rational& tau_prev,
                              long long b_max);

}  // namespace symprod::nefcone
