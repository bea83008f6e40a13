#include "symprod/bounds.hpp"

#include <algorithm>

#include "symprod/errors.hpp"

namespace symprod::bounds {

using curves::CurveClass;

namespace {

struct Candidate {
  long long value;
  std::string tag;
};

void raise_lo(std::vector<Candidate>& lows, long long v, const std::string& tag) {
  lows.push_back({v, tag});
}

void lower_hi(std::vector<Candidate>& highs, long long v, const std::string& tag) {
  highs.push_back({v, tag});
}

BoundInterval assemble(const std::vector<Candidate>& lows, const std::vector<Candidate>& highs,
                       std::vector<std::string> notes) {
  BoundInterval out;
  out.lo = 1;
  std::string lo_tag;
  for (const auto& c : lows)
    if (lo_tag.empty() || c.value > out.lo) {
      out.lo = c.value;
      lo_tag = c.tag;
    }
  if (!lo_tag.empty()) out.provenance.push_back(lo_tag);
  if (!highs.empty()) {
    auto best = std::min_element(highs.begin(), highs.end(),
                                 [](const Candidate& a, const Candidate& b) {
                                   return a.value < b.value;
                                 });
    out.hi = best->value;
    if (best->tag != lo_tag) out.provenance.push_back(best->tag);
  }
  if (out.hi && *out.hi < out.lo)
    fail(Errc::inconsistent, "profile data forces an empty bound interval");
  out.exact = out.hi && *out.hi == out.lo;
  out.notes = std::move(notes);
  return out;
}

}  // namespace

BoundInterval degirr_interval(const CurveProfile& p) {
  p.validate();
  const long long g = p.genus;

  if (g == 0) {
    // The surface is rational; one point maps isomorphically.
    return BoundInterval{1, 1, true, {"g0-rational"}, {}};
  }
  if (g == 1) {
    return BoundInterval{2, 2, true, {"g1-elliptic"}, {}};
  }

  std::vector<Candidate> lows, highs;
  std::vector<std::string> notes;
  raise_lo(lows, 3, "prop5.1");  // g >= 2: never rational or 2-to-1 over P^2

  const bool hyper = p.cls == CurveClass::hyperelliptic;
  const bool known_non_hyper =
      p.cls == CurveClass::non_hyperelliptic || p.cls == CurveClass::very_general;

  if (hyper) {
    if (g >= 4) {
      raise_lo(lows, 4, "thm1.2ii");
      lower_hi(highs, 4, "thm1.2ii");
    } else {
      // g in {2, 3}: pinched between 3 and 4, neither side settled.
      lower_hi(highs, 4, "thm1.2i");
      notes.push_back("value is 3 or 4; not determined for hyperelliptic genus " +
                      std::to_string(g));
    }
  }

  if (known_non_hyper) {
    if (g == 3 || g == 4) raise_lo(lows, 3, "thm1.4i");
    if (g == 5) raise_lo(lows, 4, "thm1.4ii");
    if (g == 6) raise_lo(lows, 5, "thm1.4iii");
    if (g >= 7) {
      raise_lo(lows, 6, "thm1.4iv");
      if (auto gon = p.resolved_gonality()) raise_lo(lows, *gon, "thm1.4iv");
    }
  }
  if (p.cls == CurveClass::very_general && g >= 4) raise_lo(lows, g - 1, "thm1.3");

  // Upper bounds from explicit projections of a degree-delta_m model in P^m.
  if (auto d1 = p.resolved_delta(1)) lower_hi(highs, (*d1) * (*d1), "prop1.1");
  if (auto d2 = p.resolved_delta(2)) lower_hi(highs, (*d2) * (*d2 - 1) / 2, "prop1.1");
  if (auto d3 = p.resolved_delta(3))
    lower_hi(highs, (*d3 - 1) * (*d3 - 2) / 2 - g, "prop1.1");

  if (p.elliptic_cover_degree) {
    const long long dc = *p.elliptic_cover_degree;
    if (g >= 2 * dc * dc + 2) {
      lower_hi(highs, 2 * dc * dc, "ex6.5");
      notes.push_back("degree-" + std::to_string(dc) +
                      " elliptic cover gives an upper bound 2d^2 = " +
                      std::to_string(2 * dc * dc) + " < g - 1 = " + std::to_string(g - 1));
    }
  }

  return assemble(lows, highs, std::move(notes));
}

long long degirr_kfold_lower(long long g, long long k) {
  if (k < 2 || g < k) fail(Errc::invalid_argument, "kfold lower bound needs g >= k >= 2");
  return k + 1;
}

BoundInterval deg_gonality(const CurveProfile& p, long long k) {
  p.validate();
  if (k < 2) fail(Errc::invalid_argument, "deg_gonality needs k >= 2");
  const long long g = p.genus;

  if (k == 2) {
    if (g <= 1) return BoundInterval{1, 1, true, {"sec5-uniruled"}, {}};
    if (g == 2) return BoundInterval{2, 2, true, {"sec5-g2"}, {}};
    auto gon = p.resolved_gonality();
    if (!gon)
      fail(Errc::missing_gonality,
           "degree of gonality for g >= 3 needs the gonality; supply it or narrow the class");
    return BoundInterval{*gon, *gon, true, {"thm1.6"}, {}};
  }

  // k >= 3: beyond the Abel-Jacobi threshold the fibers are rationally
  // connected enough to give 1; below it only the fibration upper bound is
  // proved, equality being conjectural.
  if (k > g) return BoundInterval{1, 1, true, {"sec5-jacobian"}, {}};
  auto gon = p.resolved_gonality();
  if (!gon)
    fail(Errc::missing_gonality,
         "degree of gonality for 3 <= k <= g needs the gonality; supply it or narrow the class");
  return BoundInterval{1,
                       *gon,
                       false,
                       {"sec5-cover"},
                       {"equality with the gonality is conjectural for 2 < k <= g"}};
}

MovingGonalityBound moving_gonality_lower(const CurveProfile& p) {
  p.validate();
  if (p.genus < 3) fail(Errc::invalid_argument, "moving gonality bound needs genus >= 3");
  auto gon = p.resolved_gonality();
  if (!gon) fail(Errc::missing_gonality, "moving gonality bound needs the gonality");
  MovingGonalityBound out;
  out.bound = *gon;
  // Equality needs the rigidity argument: genus >= 6 and trivial
  // automorphisms. Trivial Aut is only *known* from this profile for a very
  // general curve (of genus >= 3); hyperelliptic curves always fail it.
  if (p.cls == CurveClass::very_general && p.genus >= 6) {
    out.rigidity_applicable = true;
    out.equality_note = "equality holds: genus >= 6 and a very general curve has no "
                        "nontrivial automorphisms";
  } else if (p.cls == CurveClass::hyperelliptic) {
    out.rigidity_applicable = false;
    out.equality_note = "rigidity inapplicable: the hyperelliptic involution is a "
                        "nontrivial automorphism";
  } else if (p.genus < 6) {
    out.rigidity_applicable = false;
    out.equality_note = "rigidity needs genus >= 6";
  } else {
    out.rigidity_applicable = false;
    out.equality_note = "rigidity needs Aut(C) = {id}, unknown for this profile";
  }
  return out;
}

}  // namespace symprod::bounds
