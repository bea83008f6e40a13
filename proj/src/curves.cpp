#include "symprod/curves.hpp"

#include "symprod/errors.hpp"

namespace symprod::curves {

std::string curve_class_name(CurveClass c) {
  switch (c) {
    case CurveClass::very_general: return "very_general";
    case CurveClass::hyperelliptic: return "hyperelliptic";
    case CurveClass::non_hyperelliptic: return "non_hyperelliptic";
    case CurveClass::arbitrary: return "arbitrary";
  }
  fail(Errc::invalid_argument, "unknown curve class");
}

CurveClass curve_class_from_name(const std::string& s) {
  std::string t = s;  // accept hyphenated spellings on the command line
  for (auto& ch : t)
    if (ch == '-') ch = '_';
  if (t == "very_general") return CurveClass::very_general;
  if (t == "hyperelliptic") return CurveClass::hyperelliptic;
  if (t == "non_hyperelliptic") return CurveClass::non_hyperelliptic;
  if (t == "arbitrary") return CurveClass::arbitrary;
  fail(Errc::parse_error, "unknown curve class '" + s + "'");
}

long long brill_noether_rho(long long g, long long r, long long d) {
  if (g < 0 || r < 0 || d < 0) fail(Errc::invalid_argument, "rho needs g, r, d >= 0");
  return g - (r + 1) * (g - d + r);
}

long long generic_min_degree(long long g, long long r) {
  if (g < 0 || r < 1) fail(Errc::invalid_argument, "generic_min_degree needs g >= 0, r >= 1");
  return g + r - g / (r + 1);
}

long long generic_gonality(long long g) {
  if (g < 0) fail(Errc::invalid_argument, "genus must be >= 0");
  if (g == 0) return 1;
  if (g <= 2) return 2;
  return (g + 3) / 2;
}

void CurveProfile::validate() const {
  if (genus < 0) fail(Errc::inconsistent, "genus must be >= 0");
  if (cls == CurveClass::hyperelliptic) {
    if (genus < 2) fail(Errc::inconsistent, "hyperelliptic requires genus >= 2");
    if (gonality && *gonality != 2)
      fail(Errc::inconsistent, "hyperelliptic curves have gonality 2");
  }
  if (genus == 2 && cls != CurveClass::hyperelliptic)
    fail(Errc::inconsistent, "every genus 2 curve is hyperelliptic; say so explicitly");
  if (cls == CurveClass::non_hyperelliptic && genus < 3)
    fail(Errc::inconsistent, "non-hyperelliptic requires genus >= 3");
  if (gonality && *gonality < 1) fail(Errc::inconsistent, "gonality must be >= 1");
  if (cls == CurveClass::very_general) {
    if (gonality && *gonality != generic_gonality(genus))
      fail(Errc::inconsistent, "very general curve has the generic gonality");
    for (const auto& [m, val] : delta) {
      if (m < 1 || m > 3) fail(Errc::inconsistent, "delta keys must be in {1,2,3}");
      long long generic = (m == 1) ? generic_gonality(genus) : generic_min_degree(genus, m);
      if (val != generic)
        fail(Errc::inconsistent, "very general curve has the generic delta_" + std::to_string(m));
    }
  } else {
    for (const auto& [m, val] : delta) {
      if (m < 1 || m > 3) fail(Errc::inconsistent, "delta keys must be in {1,2,3}");
      if (val < 1) fail(Errc::inconsistent, "delta values must be >= 1");
    }
    if (delta.count(1) && gonality && delta.at(1) != *gonality)
      fail(Errc::inconsistent, "delta_1 is the gonality; the two values disagree");
  }
  if (elliptic_cover_degree) {
    if (*elliptic_cover_degree < 2)
      fail(Errc::inconsistent, "an elliptic cover has degree >= 2");
    if (cls == CurveClass::very_general)
      fail(Errc::inconsistent, "a very general curve covers no elliptic curve");
    if (genus < 1) fail(Errc::inconsistent, "a cover of an elliptic curve has genus >= 1");
  }
}

std::optional<long long> CurveProfile::resolved_gonality() const {
  if (gonality) return gonality;
  if (delta.count(1)) return delta.at(1);
  if (cls == CurveClass::hyperelliptic) return 2;
  if (cls == CurveClass::very_general) return generic_gonality(genus);
  if (genus <= 2) return generic_gonality(genus);  // 1, 2, 2 hold for every curve
  return std::nullopt;
}

std::optional<long long> CurveProfile::resolved_delta(int m) const {
  if (m == 1) return resolved_gonality();
  if (delta.count(m)) return delta.at(m);
  if (cls == CurveClass::very_general)
    return generic_min_degree(genus, m);
  return std::nullopt;
}

long long clifford_max_dim(long long deg) {
  if (deg < 0) fail(Errc::invalid_argument, "degree must be >= 0");
  return deg / 2;
}

CliffordCase clifford_equality_case(long long g, long long deg, long long dim) {
  if (g < 0 || deg < 0 || dim < 0) fail(Errc::invalid_argument, "bad Clifford data");
  if (2 * dim != deg) return CliffordCase::not_extremal;
  if (deg == 0) return CliffordCase::zero_divisor;
  if (deg == 2 * g - 2 && dim == g - 1) return CliffordCase::canonical;
  return CliffordCase::forces_hyperelliptic;
}

long long martens_bound(long long m, long long r) {
  if (m < 2 || r < 1) fail(Errc::invalid_argument, "martens_bound needs m >= 2, r >= 1");
  return m - 2 * r - 1;
}

bool martens_applicable(const CurveProfile& p) {
  bool known_non_hyper =
      p.cls == CurveClass::non_hyperelliptic ||
      (p.cls == CurveClass::very_general && p.genus >= 3) ||
      (p.resolved_gonality() && *p.resolved_gonality() >= 3);
  return known_non_hyper && p.genus >= 5;
}

long long geometric_rr(long long deg, long long span_dim) {
  if (span_dim < 0 || span_dim > deg - 1)
    fail(Errc::invalid_argument, "geometric_rr needs 0 <= span_dim <= deg - 1");
  return deg - 1 - span_dim;
}

}  // namespace symprod::curves
