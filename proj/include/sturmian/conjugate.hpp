#pragma once

#include "sturmian/angle.hpp"
#include "sturmian/farey.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sturmian {

/// Concatenation of the primed blocks B'_{n,m_i}, length b.
BinaryWord conjugate_word(const BrokenLineSpec& spec);
PeriodicAngle conjugate_angle(const BrokenLineSpec& spec);

/// Which ordering the four points of step k took. `lemma_case` is 1 when
/// 2^{b-k} theta lies outside the open arc (theta/2, (theta+1)/2), else 2.
/// `ordering` lists the labels theta1, d(b-1), d(b-k), thetak by increasing
/// value, e.g. "theta1 < d(b-1) < d(b-k) < thetak".
struct UnlinkCertificate {
  std::size_t k = 0;
  int lemma_case = 0;
  std::string ordering;
};

struct ConjugateChain {
  PeriodicAngle theta;
  /// theta_k_list[k-1] = theta_k, k = 1..b.
  std::vector<PeriodicAngle> theta_k_list;
  /// One per k = 2..b.
  std::vector<UnlinkCertificate> unlink_certificates;
  Fraction closed_form;
};

/// Builds theta_k = 0.alpha'_{b-k+1}...alpha'_b (alpha)^inf and verifies the
/// doubling relation, unlinkedness at every k (UnlinkViolation otherwise) and
/// that theta + (theta_b - theta)/(1 - 2^-b) is the conjugate angle.
ConjugateChain build_chain(const BrokenLineSpec& spec);

/// True iff the chords {x1, x2} and {y1, y2} do not cross; shared endpoints
/// count as crossing.
bool unlinked(const Fraction& x1, const Fraction& x2, const Fraction& y1, const Fraction& y2);

struct AnglePair {
  Fraction lower;
  Fraction upper;
  friend bool operator==(const AnglePair&, const AnglePair&) = default;
};

/// Non-crossing pairing of all angles of exact period `period` (2..20).
std::vector<AnglePair> lavaurs_pairs(std::size_t period);

}  // namespace sturmian
