#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symprod/curves.hpp"

namespace symprod::bounds {

using curves::CurveProfile;

// Interval of possible values for a birational invariant, with provenance
// tags naming the classical results each side comes from ("thm1.3",
// "prop1.1", ...). Tags are stable strings: consumers may switch on them.
struct BoundInterval {
  long long lo = 1;
  std::optional<long long> hi;
  bool exact = false;  // implies hi == lo
  std::vector<std::string> provenance;
  std::vector<std::string> notes;
};

// Degree of irrationality of the second symmetric product of a curve with
// the given profile: least degree of a dominant rational map to P^2.
BoundInterval degirr_interval(const CurveProfile& p);

// Lower bound k+1 for the k-fold symmetric product, valid for g >= k >= 2.
long long degirr_kfold_lower(long long g, long long k);

// Degree of gonality of the k-fold symmetric product: least degree of a
// covering family of rational curves. Exact for k = 2 and for k > g.
BoundInterval deg_gonality(const CurveProfile& p, long long k = 2);

struct MovingGonalityBound {
  long long bound = 0;
  bool rigidity_applicable = false;
  std::string equality_note;
};

// Lower bound gon(C) for the gonality of a moving curve through a general
// point of C^(2); rigidity upgrades it to equality when g >= 6 and the curve
// has no nontrivial automorphisms.
MovingGonalityBound moving_gonality_lower(const CurveProfile& p);

}  // namespace symprod::bounds
