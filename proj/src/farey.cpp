#include "sturmian/farey.hpp"

#include "sturmian/errors.hpp"

#include <boost/integer/mod_inverse.hpp>

namespace sturmian {

namespace {

void require_open_unit(const Fraction& x, const char* name) {
  if (x.num() == 0 || x.num() == x.den()) {
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " must lie strictly between 0 and 1");
  }
}

[[noreturn]] void violated(const std::string& constraint, const std::string& message) {
  throw Error(ErrorKind::HypothesisViolated, message + " (" + constraint + ")", constraint);
}

}  // namespace

Fraction mediant(const Fraction& x, const Fraction& y) {
  return Fraction::reduce(x.num() + y.num(), x.den() + y.den());
}

std::pair<Fraction, Fraction> farey_parents(const Fraction& p_over_q) {
  require_open_unit(p_over_q, "p/q");
  Integer ln = 0, ld = 1, rn = 1, rd = 1;
  const Integer& p = p_over_q.num();
  const Integer& q = p_over_q.den();
  // Stern-Brocot descent, taking runs of equal moves in one step.
  for (;;) {
    Integer mn = ln + rn, md = ld + rd;
    if (mn == p && md == q) break;
    if (mn * q < p * md) {
      // Move right: L <- L + k R while still left of p/q (strictly).
      // Largest k with (ln + k rn)/(ld + k rd) < p/q, k >= 1.
      Integer k = (p * ld - q * ln - 1) / (q * rn - p * rd);
      ln += k * rn;
      ld += k * rd;
    } else {
      Integer k = (q * rn - p * rd - 1) / (p * ld - q * ln);
      rn += k * ln;
      rd += k * ld;
    }
  }
  return {Fraction(ln, ld), Fraction(rn, rd)};
}

Fraction bound_fraction(const Fraction& P_over_Q, std::size_t n, Convention convention) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "hinge n must be positive");
  auto [lower, upper] = farey_parents(P_over_Q);
  const Integer k = n - 1;
  if (convention == Convention::ZeroOne) {
    return Fraction(k * P_over_Q.num() + upper.num(), k * P_over_Q.den() + upper.den());
  }
  return Fraction(lower.num() + k * P_over_Q.num(), lower.den() + k * P_over_Q.den());
}

FareyContext make_context(const Fraction& P_over_Q, std::size_t n, Convention convention) {
  auto [lower, upper] = farey_parents(P_over_Q);
  return FareyContext{P_over_Q, lower, upper, n, convention, bound_fraction(P_over_Q, n, convention)};
}

Fraction p_m_q_m(const FareyContext& context, const Integer& m) {
  return Fraction::reduce(context.P_over_Q.num() + m * context.bound_fraction.num(),
                          context.P_over_Q.den() + m * context.bound_fraction.den());
}

BrokenLineSpec validate_spec(const Fraction& P_over_Q, const Integer& a, const Integer& b, std::size_t n,
                             Convention convention) {
  if (b <= 0 || a < 0 || a > b) violated("0 <= a/b <= 1", "a/b = " + a.str() + "/" + b.str() + " out of range");
  if (gcd(a, b) != 1) violated("gcd(a,b) = 1", "a/b = " + a.str() + "/" + b.str() + " is not reduced");
  return validate_spec(P_over_Q, Fraction(a, b), n, convention);
}

BrokenLineSpec validate_spec(const Fraction& P_over_Q, const Fraction& a_over_b, std::size_t n,
                             Convention convention) {
  if (P_over_Q.num() == 0 || P_over_Q.num() == P_over_Q.den()) {
    violated("0 < P/Q < 1", "P/Q = " + P_over_Q.str() + " must lie strictly inside (0,1)");
  }
  if (n == 0) violated("n >= 1", "hinge n must be positive");
  FareyContext ctx = make_context(P_over_Q, n, convention);
  const std::string ab = a_over_b.str();
  if (convention == Convention::ZeroOne) {
    if (!(P_over_Q < a_over_b)) violated("P/Q < a/b", ab + " is not above P/Q = " + P_over_Q.str());
    if (!(a_over_b < ctx.bound_fraction)) {
      violated("a/b < S_n/T_n", ab + " is not below S_n/T_n = " + ctx.bound_fraction.str());
    }
  } else {
    if (!(a_over_b < P_over_Q)) violated("a/b < P/Q", ab + " is not below P/Q = " + P_over_Q.str());
    if (!(ctx.bound_fraction < a_over_b)) {
      violated("A_n/B_n < a/b", ab + " is not above A_n/B_n = " + ctx.bound_fraction.str());
    }
  }
  return BrokenLineSpec{std::move(ctx), a_over_b};
}

std::pair<Integer, Integer> bezout_min_p(const Integer& Q, const Integer& T) {
  if (T <= 0 || T >= Q) throw Error(ErrorKind::InvalidArgument, "bezout_min_p needs 0 < T < Q");
  if (gcd(Q, T) != 1) throw Error(ErrorKind::NotCoprime, "Q = " + Q.str() + " and T = " + T.str() + " share a factor");
  // T*P = -1 (mod Q)
  Integer P = Q - boost::integer::mod_inverse(Integer(T % Q), Q);
  if (P == 0) P = Q;
  Integer S = (1 + T * P) / Q;
  return {P, S};
}

std::pair<Integer, Integer> bezout_min_p_mirror(const Integer& Q, const Integer& B) {
  if (B <= 0 || B >= Q) throw Error(ErrorKind::InvalidArgument, "bezout_min_p_mirror needs 0 < B < Q");
  if (gcd(Q, B) != 1) throw Error(ErrorKind::NotCoprime, "Q = " + Q.str() + " and B = " + B.str() + " share a factor");
  Integer P = boost::integer::mod_inverse(Integer(B % Q), Q);
  Integer A = (P * B - 1) / Q;
  return {P, A};
}

std::string describe(const BrokenLineSpec& spec) {
  return "P/Q=" + spec.P_over_Q().str() + " a/b=" + spec.a_over_b.str() + " n=" + std::to_string(spec.hinge()) +
         " convention=" + std::string(to_string(spec.convention()));
}

}  // namespace sturmian
