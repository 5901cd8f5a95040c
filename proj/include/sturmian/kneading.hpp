#pragma once

#include "sturmian/angle.hpp"
#include "sturmian/farey.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace sturmian {

/// Word over {0,1,*} with a single trailing *.
class KneadingSequence {
 public:
  explicit KneadingSequence(std::string symbols);

  const std::string& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t star_position() const noexcept { return symbols_.size() - 1; }

  friend bool operator==(const KneadingSequence&, const KneadingSequence&) = default;

 private:
  std::string symbols_;
};

/// Itinerary of theta under doubling against the partition at theta/2 and
/// (theta+1)/2. NotPeriodic for an even denominator or period 1.
KneadingSequence kneading_of_angle(const Fraction& theta);

/// Same sequence read off the W/X word structure of the broken line.
KneadingSequence kneading_of_spec(const BrokenLineSpec& spec);

struct InvertedKneading {
  BrokenLineSpec spec;
  PeriodicAngle angle;
};

/// Recovers (P/Q, a/b, n) from K. NotBrokenLineKneading when K does not
/// parse into the block shapes of a broken line in this convention.
InvertedKneading invert_kneading(const KneadingSequence& K, Convention convention);
InvertedKneading invert_kneading(std::string_view K, Convention convention);

enum class Side { Below, Above };

/// First b symbols of K(theta - eps) (Below) or K(theta + eps) (Above) for
/// all sufficiently small eps > 0, computed exactly.
std::string one_sided_kneading(const Fraction& theta, Side side);

/// Minimal period of the limit from below.
std::size_t lower_kneading_period(const Fraction& theta);

/// K(mediant) from the kneading sequences of lower = p/q and upper = s/t
/// (same P/Q, n, convention): Gamma 1 Omega * for 01, Omega 1 Gamma * for 10.
bool kneading_concat_check(const BrokenLineSpec& lower, const BrokenLineSpec& upper, const BrokenLineSpec& med);

}  // namespace sturmian
