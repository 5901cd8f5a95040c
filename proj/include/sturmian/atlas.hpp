#pragma once

#include "sturmian/angle.hpp"
#include "sturmian/farey.hpp"

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace sturmian {

/// Digitwise substitution 0 -> W_01(bulb), 1 -> W_10(bulb) applied to the
/// canonical expansion of phi.
PeriodicAngle tune(const PeriodicAngle& phi, const Fraction& bulb);
/// Same, on an expansion taken literally (a dyadic angle has two).
PeriodicAngle tune(std::string_view preperiod, const BinaryWord& period, const Fraction& bulb);

/// PreconditionUnmet unless the period of phi contains both symbols (so that
/// 01 and 10 occur cyclically).
bool tuned_is_nonsturmian(const PeriodicAngle& phi, const Fraction& bulb);

/// phi_1 < ... < phi_Q: the rays landing at the junction point, each with
/// preperiod length nQ and period length Q.
std::vector<PeriodicAngle> junction_rays(const Fraction& P_over_Q, std::size_t n, Convention convention);

struct SpokeLocation {
  Fraction limb;
  Fraction sublimb_internal_angle;
  std::size_t spoke_index = 0;
  std::pair<PeriodicAngle, PeriodicAngle> bracketing_rays;
  std::size_t junction_preperiod = 0;
};

/// BracketingFailed if the broken-line angle is not between the two rays.
SpokeLocation locate(const BrokenLineSpec& spec);

struct EnumeratedSpec {
  BrokenLineSpec spec;
  Fraction angle;
};

struct Collision {
  Fraction angle;
  std::vector<BrokenLineSpec> specs;
};

struct Enumeration {
  /// One entry per distinct angle, sorted by angle.
  std::vector<EnumeratedSpec> entries;
  std::vector<Collision> collisions;
};

/// Every valid spec with a/b of denominator exactly b (b >= 3), both
/// conventions.
Enumeration enumerate_specs(std::size_t period_b);

std::size_t euler_phi(std::size_t n);

struct Census {
  std::size_t period = 0;
  std::size_t constructed = 0;
  std::size_t formula = 0;
  std::size_t brute = 0;
  /// Angles counted by brute force but not produced by any broken line.
  std::vector<Fraction> missing;
  /// Angles produced by a broken line but not counted by brute force.
  std::vector<Fraction> unexpected;

  bool agrees() const { return constructed == formula && formula == brute; }
};

/// constructed = distinct angles of enumerate_specs(b); formula = (b-2)phi(b);
/// brute = Sturmian angles of exact period b whose pairing partner lies on a
/// different doubling orbit. 3 <= b <= 20.
Census sturmian_census(std::size_t period_b);

}  // namespace sturmian
