#pragma once

#include "sturmian/angle.hpp"
#include "sturmian/words.hpp"

#include <cstddef>
#include <utility>

namespace sturmian {

struct FareyContext {
  Fraction P_over_Q;
  Fraction A_over_B;
  Fraction S_over_T;
  std::size_t hinge_n = 1;
  Convention convention = Convention::ZeroOne;
  /// S_n/T_n for 01 (upper bound on a/b), A_n/B_n for 10 (lower bound).
  Fraction bound_fraction;
};

struct BrokenLineSpec {
  FareyContext context;
  Fraction a_over_b;

  std::size_t period() const { return to_size(a_over_b.den()); }
  const Fraction& P_over_Q() const { return context.P_over_Q; }
  std::size_t hinge() const { return context.hinge_n; }
  Convention convention() const { return context.convention; }

  friend bool operator==(const BrokenLineSpec& x, const BrokenLineSpec& y) {
    return x.context.P_over_Q == y.context.P_over_Q && x.a_over_b == y.a_over_b &&
           x.context.hinge_n == y.context.hinge_n && x.context.convention == y.context.convention;
  }
};

Fraction mediant(const Fraction& x, const Fraction& y);
/// Farey neighbours (A/B, S/T), A/B < S/T, whose mediant is p/q.
std::pair<Fraction, Fraction> farey_parents(const Fraction& p_over_q);
Fraction bound_fraction(const Fraction& P_over_Q, std::size_t n, Convention convention);
FareyContext make_context(const Fraction& P_over_Q, std::size_t n, Convention convention);
/// (P + m*bound.num)/(Q + m*bound.den).
Fraction p_m_q_m(const FareyContext& context, const Integer& m);

BrokenLineSpec validate_spec(const Fraction& P_over_Q, const Fraction& a_over_b, std::size_t n,
                             Convention convention);
/// Same, but takes a/b as raw integers so unreduced input is reported.
BrokenLineSpec validate_spec(const Fraction& P_over_Q, const Integer& a, const Integer& b, std::size_t n,
                             Convention convention);

/// S*Q - T*P = 1 with P the least positive solution; returns (P, S).
std::pair<Integer, Integer> bezout_min_p(const Integer& Q, const Integer& T);
/// P*B - A*Q = 1 with P the least positive solution; returns (P, A).
std::pair<Integer, Integer> bezout_min_p_mirror(const Integer& Q, const Integer& B);

std::string describe(const BrokenLineSpec& spec);

}  // namespace sturmian
