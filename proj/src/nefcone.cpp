#include "symprod/nefcone.hpp"

#include "symprod/curves.hpp"
#include "symprod/errors.hpp"

namespace symprod::nefcone {

NSClass from_ab(const Rational& a, const Rational& b) {
  return NSClass{a + b, -b};
}

Rational intersect(const NSClass& u, const NSClass& v, long long g) {
  // Bilinear over the basis {x, delta/2} with the pairing matrix
  // [[1, 1], [1, 1-g]].
  return u.coeff_x * v.coeff_x + u.coeff_x * v.coeff_half_delta +
         u.coeff_half_delta * v.coeff_x +
         u.coeff_half_delta * v.coeff_half_delta * Rational(1 - g);
}

std::pair<NSClass, NSClass> nef_boundary_rays(long long g, const Rational& tau) {
  NSClass diagonal_side{Rational(g - 1), Rational(-1)};
  NSClass slope_side{tau + Rational(1), Rational(-1)};
  return {diagonal_side, slope_side};
}

GonalityConstant default_gonality_constant(long long g) {
  if (g < 3) fail(Errc::invalid_argument, "gonality constant needs g >= 3");
  GonalityConstant out;
  out.c = curves::generic_gonality(g - 1) + (g >= 7 ? 1 : 0);
  out.paper_default = (g >= 6 && g <= 8);
  return out;
}

CertReport verify_tau_certificate(long long g, const Int& a, const Int& b,
                                  const Rational& tau_prev, long long c) {
  if (g < 3) fail(Errc::invalid_argument, "certificate verification needs g >= 3");
  if (sgn(a) <= 0 || sgn(b) <= 0)
    fail(Errc::invalid_argument, "certificate needs positive integers a, b");
  if (c < 0) fail(Errc::invalid_argument, "gonality constant must be >= 0");

  CertReport r;
  r.g = g;
  r.c = c;
  r.a = a;
  r.b = b;
  r.ratio = Rational(a, b);
  r.l_squared = a * a - b * b * int_of(g - 1);

  if (r.ratio < tau_prev) {
    r.failed_check = "ratio";
    return r;
  }
  if (sgn(r.l_squared) <= 0) {
    r.failed_check = "positivity";
    return r;
  }

  r.A = r.l_squared - b * b;
  r.B = -r.l_squared + 2 * b;
  r.C = r.l_squared * int_of(c) - 1;

  if (sgn(r.A) <= 0) {
    // f opens downward (or degenerates): it cannot stay positive for all m.
    r.failed_check = "leading";
    return r;
  }

  auto f_at = [&](long long m) {
    Int mi = int_of(m);
    return Int(r.A * mi * mi + r.B * mi + r.C);
  };

  r.discriminant = r.B * r.B - 4 * r.A * r.C;
  if (sgn(*r.discriminant) < 0) {
    // No real roots and positive leading coefficient: f > 0 everywhere.
    r.valid = true;
    return r;
  }

  // Real roots exist. Beyond the larger root f is positive, so it is enough
  // to audit every integer in [2, ceil(larger root)], exactly:
  // m >= (-B + sqrt(disc)) / (2A)  <=>  2Am + B >= 0 and (2Am + B)^2 >= disc.
  auto at_least_root = [&](const Int& m) {
    Int t = 2 * r.A * m + r.B;
    return sgn(t) >= 0 && t * t >= *r.discriminant;
  };
  Int s = isqrt_floor(*r.discriminant);
  Int guess = (-r.B + s) / (2 * r.A);
  Int upper = guess - 2;
  while (!at_least_root(upper)) upper += 1;  // smallest integer >= larger root
  if (upper > Int(1'000'000))
    fail(Errc::too_large, "certificate audit range [2, " + int_to_string(upper) +
                              "] exceeds the 10^6 evaluation guard");

  bool all_positive = true;
  for (Int m = 2; m <= upper; m += 1) {
    long long ml = m.get_si();
    Int fm = f_at(ml);
    r.checked_points.emplace_back(ml, fm);
    if (sgn(fm) <= 0) {
      all_positive = false;
      break;
    }
  }
  if (all_positive) {
    r.valid = true;
  } else {
    r.failed_check = "integer-point";
  }
  return r;
}

SearchResult search_min_ratio(long long g, long long c, const Rational& tau_prev,
                              long long b_max) {
  if (g < 3) fail(Errc::invalid_argument, "search needs g >= 3");
  if (b_max < 1) fail(Errc::invalid_argument, "search needs b_max >= 1");

  std::optional<SearchResult> best;
  for (long long bl = 1; bl <= b_max; ++bl) {
    Int b = int_of(bl);
    // a must clear both the ratio floor and L^2 > 0; start there.
    Int a0 = 1;
    if (tau_prev.sign() > 0) a0 = ceil_div(b * tau_prev.num(), tau_prev.den());
    Int l2_floor = isqrt_floor(b * b * int_of(g - 1)) + 1;
    if (l2_floor > a0) a0 = l2_floor;
    Int a_cap = a0 + 10 * b + 256;
    for (Int a = a0; a <= a_cap; a += 1) {
      CertReport rep = verify_tau_certificate(g, a, b, tau_prev, c);
      if (!rep.valid) continue;
      bool better = !best;
      if (best) {
        Int lhs = a * best->b, rhs = best->a * b;  // compare a/b vs best
        better = lhs < rhs || (lhs == rhs && b < best->b);
      }
      if (better) best = SearchResult{a, b, std::move(rep)};
      break;  // minimal a for this b found; larger a only worsens the ratio
    }
  }
  if (!best) fail(Errc::no_certificate, "no valid certificate with b <= " + std::to_string(b_max));
  return std::move(*best);
}

}  // namespace symprod::nefcone
