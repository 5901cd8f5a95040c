#pragma once

#include "sturmian/angle.hpp"
#include "sturmian/farey.hpp"
#include "sturmian/words.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace sturmian {

/// Grid crossings of y = (p/q)x on (0, q]: 0 for a vertical line, 1 for a
/// horizontal one, closed by "01" or "10" at the lattice point (q, p).
BinaryWord cutting_sequence(const Fraction& p_over_q, Convention convention);

/// Deletes the 0 cyclically preceding each 1 (01 -> 1).
BinaryWord substitute_T(const BinaryWord& kappa);

/// Length-q word W with theta_conv(p/q) = 0.(W)^inf. Also accepts 1/1 under
/// 01 ("1") and 0/1 under 10 ("0").
BinaryWord m_word(const Fraction& p_over_q, Convention convention);

/// (theta_01(p/q), theta_10(p/q)).
std::pair<Fraction, Fraction> characteristic_pair_of_bulb(const Fraction& p_over_q);

/// W_{P/Q} in the context's convention.
BinaryWord base_word(const FareyContext& context);
/// W_{S/T} for 01, W_{A/B} for 10.
BinaryWord neighbor_word(const FareyContext& context);
/// B_{n,0} = W; B_{n,m} = W^n (X W^{n-1})^{m-1} X.
BinaryWord block_word(const FareyContext& context, std::size_t m);

PeriodicAngle broken_line_angle(const BrokenLineSpec& spec);

struct BlockDecomposition {
  BrokenLineSpec spec;
  std::size_t base_m = 0;
  std::vector<std::size_t> exponents;
  std::map<std::size_t, BinaryWord> block_words;

  BinaryWord concatenation() const;
};

BlockDecomposition block_decomposition(const BrokenLineSpec& spec);

/// The period word read as a sequence of W (base) and X (neighbour) words.
enum class Unit { Base, Neighbor };
std::vector<Unit> unit_sequence(const BlockDecomposition& blocks);

}  // namespace sturmian
