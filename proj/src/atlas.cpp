#include "sturmian/atlas.hpp"

#include "sturmian/conjugate.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/mechanical.hpp"
#include "sturmian/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sturmian {

namespace {

std::string power(const std::string& w, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i < k; ++i) out += w;
  return out;
}

std::string rotate_left(std::string w, std::size_t shift) {
  std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(shift % w.size()), w.end());
  return w;
}

}  // namespace

PeriodicAngle tune(std::string_view preperiod, const BinaryWord& period, const Fraction& bulb) {
  if (bulb.num() == 0 || bulb.num() == bulb.den()) {
    throw Error(ErrorKind::InvalidArgument, "bulb " + bulb.str() + " must lie strictly between 0 and 1");
  }
  const std::string zero = m_word(bulb, Convention::ZeroOne).bits();
  const std::string one = m_word(bulb, Convention::OneZero).bits();
  auto substitute = [&](std::string_view bits) {
    std::string out;
    for (char c : bits) out += c == '0' ? zero : one;
    return out;
  };
  return PeriodicAngle(substitute(preperiod), BinaryWord(substitute(period.bits())));
}

PeriodicAngle tune(const PeriodicAngle& phi, const Fraction& bulb) {
  return tune(phi.preperiod(), phi.period(), bulb);
}

bool tuned_is_nonsturmian(const PeriodicAngle& phi, const Fraction& bulb) {
  const std::string& w = phi.period().bits();
  if (w.find('0') == std::string::npos || w.find('1') == std::string::npos) {
    throw Error(ErrorKind::PreconditionUnmet, phi.str() + " does not contain both 01 and 10 in its period");
  }
  return !is_sturmian(tune(phi, bulb).period());
}

std::vector<PeriodicAngle> junction_rays(const Fraction& P_over_Q, std::size_t n, Convention convention) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "hinge n must be positive");
  const auto [lower, upper] = farey_parents(P_over_Q);
  (void)upper;
  const std::size_t P = to_size(P_over_Q.num());
  const std::size_t Q = to_size(P_over_Q.den());
  const std::size_t B = to_size(lower.den());
  const std::string w = m_word(P_over_Q, convention).bits();
  const std::string wp = prime(BinaryWord(w), convention).bits();
  const std::string head_plain = power(w, n);
  const std::string head_primed = power(w, n - 1) + wp;

  std::vector<PeriodicAngle> rays;
  for (std::size_t k = 1; k <= Q; ++k) {
    const std::size_t shift = ((k - 1) * B) % Q;
    const bool early = k <= Q - P;
    if (convention == Convention::ZeroOne) {
      rays.emplace_back(early ? head_plain : head_primed, BinaryWord(rotate_left(wp, shift)));
    } else {
      rays.emplace_back(early ? head_primed : head_plain, BinaryWord(rotate_left(w, shift)));
    }
  }
  for (std::size_t k = 1; k < Q; ++k) {
    if (!(rays[k - 1].value() < rays[k].value())) {
      throw Error(ErrorKind::CheckFailed, "junction rays are not increasing at k = " + std::to_string(k));
    }
  }
  return rays;
}

SpokeLocation locate(const BrokenLineSpec& spec) {
  const std::size_t n = spec.hinge();
  const std::size_t Q = to_size(spec.P_over_Q().den());
  const std::vector<PeriodicAngle> rays = junction_rays(spec.P_over_Q(), n, spec.convention());
  const bool zero_one = spec.convention() == Convention::ZeroOne;
  const std::size_t j = zero_one ? 1 : Q - 1;
  const Fraction theta = broken_line_angle(spec).value();
  const PeriodicAngle& left = rays[j - 1];
  const PeriodicAngle& right = rays[j];
  if (!(left.value() < theta && theta < right.value())) {
    throw Error(ErrorKind::BracketingFailed, theta.str() + " is not between " + left.str() + " and " + right.str() +
                                                 " for " + describe(spec));
  }
  return SpokeLocation{spec.P_over_Q(), zero_one ? Fraction(1, n + 1) : Fraction(n, n + 1), j, {left, right}, n * Q};
}

Enumeration enumerate_specs(std::size_t period_b) {
  if (period_b < 3) throw Error(ErrorKind::InvalidArgument, "enumeration needs b >= 3");
  const Integer b = period_b;
  std::map<Fraction, std::vector<BrokenLineSpec>> by_angle;
  for (std::size_t Q = 2; Q < period_b; ++Q) {
    for (std::size_t P = 1; P < Q; ++P) {
      if (std::gcd(P, Q) != 1) continue;
      const Fraction PQ(P, Q);
      const auto [lower, upper] = farey_parents(PQ);
      for (Convention c : {Convention::ZeroOne, Convention::OneZero}) {
        // A fraction strictly between the Farey neighbours P/Q and the bound
        // has denominator at least Q plus the bound's denominator.
        const std::size_t step = to_size(c == Convention::ZeroOne ? upper.den() : lower.den());
        for (std::size_t n = 1; n * Q + step <= period_b; ++n) {
          const Fraction bound = bound_fraction(PQ, n, c);
          const Fraction& lo = c == Convention::ZeroOne ? PQ : bound;
          const Fraction& hi = c == Convention::ZeroOne ? bound : PQ;
          // lo < a/b < hi
          const Integer a_min = lo.num() * b / lo.den() + 1;
          const Integer a_max = (hi.num() * b - 1) / hi.den();
          for (Integer a = a_min; a <= a_max; ++a) {
            if (gcd(a, b) != 1) continue;
            BrokenLineSpec spec = validate_spec(PQ, Fraction(a, b), n, c);
            by_angle[broken_line_angle(spec).value()].push_back(std::move(spec));
          }
        }
      }
    }
  }
  Enumeration out;
  for (auto& [angle, specs] : by_angle) {
    out.entries.push_back({specs.front(), angle});
    if (specs.size() > 1) out.collisions.push_back({angle, specs});
  }
  return out;
}

std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Census sturmian_census(std::size_t period_b) {
  if (period_b < 3 || period_b > 20) throw Error(ErrorKind::InvalidArgument, "census needs 3 <= b <= 20");
  Census census;
  census.period = period_b;
  census.formula = (period_b - 2) * euler_phi(period_b);

  std::set<Fraction> constructed;
  for (const auto& e : enumerate_specs(period_b).entries) constructed.insert(e.angle);
  census.constructed = constructed.size();

  auto orbit_of = [](const Fraction& x) {
    std::set<Fraction> orbit{x};
    for (Fraction y = double_angle(x); y != x; y = double_angle(y)) orbit.insert(y);
    return orbit;
  };
  std::set<Fraction> brute;
  for (const AnglePair& pair : lavaurs_pairs(period_b)) {
    if (orbit_of(pair.lower).count(pair.upper)) continue;
    for (const Fraction& x : {pair.lower, pair.upper}) {
      if (is_sturmian(fraction_to_expansion(x).period())) brute.insert(x);
    }
  }
  census.brute = brute.size();
  std::set_difference(brute.begin(), brute.end(), constructed.begin(), constructed.end(),
                      std::back_inserter(census.missing));
  std::set_difference(constructed.begin(), constructed.end(), brute.begin(), brute.end(),
                      std::back_inserter(census.unexpected));
  return census;
}

}  // namespace sturmian
