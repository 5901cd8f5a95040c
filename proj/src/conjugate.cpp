#include "sturmian/conjugate.hpp"

#include "sturmian/errors.hpp"
#include "sturmian/mechanical.hpp"
#include "sturmian/words.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

namespace sturmian {

BinaryWord conjugate_word(const BrokenLineSpec& spec) {
  const BlockDecomposition blocks = block_decomposition(spec);
  std::string out;
  for (std::size_t m : blocks.exponents) out += prime(blocks.block_words.at(m), spec.convention()).bits();
  return BinaryWord(std::move(out));
}

PeriodicAngle conjugate_angle(const BrokenLineSpec& spec) { return PeriodicAngle(conjugate_word(spec)); }

bool unlinked(const Fraction& x1, const Fraction& x2, const Fraction& y1, const Fraction& y2) {
  if (y1 == x1 || y1 == x2 || y2 == x1 || y2 == x2) return false;
  const Fraction& lo = std::min(x1, x2);
  const Fraction& hi = std::max(x1, x2);
  auto inside = [&](const Fraction& y) { return lo < y && y < hi; };
  return inside(y1) == inside(y2);
}

namespace {

std::string describe_order(std::array<std::pair<Fraction, const char*>, 4> points) {
  std::stable_sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out = points[0].second;
  for (std::size_t i = 1; i < points.size(); ++i) {
    out += points[i].first == points[i - 1].first ? " = " : " < ";
    out += points[i].second;
  }
  return out;
}

}  // namespace

ConjugateChain build_chain(const BrokenLineSpec& spec) {
  const PeriodicAngle theta = broken_line_angle(spec);
  const std::string alpha = theta.period().bits();
  const std::string alpha_prime = conjugate_word(spec).bits();
  const std::size_t b = alpha.size();
  const Fraction value = theta.value();

  std::vector<PeriodicAngle> chain;
  std::vector<Fraction> values;
  chain.reserve(b);
  for (std::size_t k = 1; k <= b; ++k) {
    chain.emplace_back(std::string_view(alpha_prime).substr(b - k), theta.period());
    values.push_back(chain.back().value());
  }

  // orbit[j] = 2^j theta mod 1
  std::vector<Fraction> orbit{value};
  for (std::size_t j = 1; j < b; ++j) orbit.push_back(double_angle(orbit.back()));

  const Rational r = value.to_rational();
  const Rational first = spec.convention() == Convention::ZeroOne ? Rational(r / 2) : Rational((r + 1) / 2);
  if (values[0].to_rational() != first || double_angle(values[0]) != value) {
    throw Error(ErrorKind::CheckFailed, "theta_1 is not the expected preimage for " + describe(spec));
  }
  for (std::size_t k = 2; k <= b; ++k) {
    if (double_angle(values[k - 1]) != values[k - 2]) {
      throw Error(ErrorKind::CheckFailed, "doubling does not map theta_" + std::to_string(k) + " to theta_" +
                                              std::to_string(k - 1) + " for " + describe(spec));
    }
  }

  const Fraction half_lo = Fraction::from_rational(r / 2);
  const Fraction half_hi = Fraction::from_rational((r + 1) / 2);
  std::vector<UnlinkCertificate> certificates;
  for (std::size_t k = 2; k <= b; ++k) {
    const Fraction& t1 = values[0];
    const Fraction& d1 = orbit[b - 1];
    const Fraction& dk = orbit[b - k];
    const Fraction& tk = values[k - 1];
    if (!unlinked(t1, d1, dk, tk)) {
      throw Error(ErrorKind::UnlinkViolation, "chords linked at k = " + std::to_string(k) + " for " + describe(spec),
                  std::to_string(k));
    }
    const bool in_arc = half_lo < dk && dk < half_hi;
    certificates.push_back(UnlinkCertificate{
        k, in_arc ? 2 : 1, describe_order({{{t1, "theta1"}, {d1, "d(b-1)"}, {dk, "d(b-k)"}, {tk, "thetak"}}})});
  }

  const Rational tb = values[b - 1].to_rational();
  const Rational scale = 1 - Rational(1, pow2(b));
  const Rational closed = r + (tb - r) / scale;
  const Fraction conj = PeriodicAngle(BinaryWord(alpha_prime)).value();
  if (closed != conj.to_rational()) {
    throw Error(ErrorKind::CheckFailed, "closed form disagrees with the primed blocks for " + describe(spec));
  }
  return ConjugateChain{theta, std::move(chain), std::move(certificates), conj};
}

std::vector<AnglePair> lavaurs_pairs(std::size_t period) {
  if (period < 2 || period > 20) throw Error(ErrorKind::InvalidArgument, "lavaurs_pairs needs 2 <= period <= 20");

  struct Point {
    std::uint64_t k;
    std::uint32_t p;
  };
  auto rotl = [](std::uint64_t v, std::uint32_t s, std::uint32_t p) {
    const std::uint64_t mask = (std::uint64_t{1} << p) - 1;
    return ((v << s) | (v >> (p - s))) & mask;
  };
  auto exact_period = [&](std::uint64_t k, std::uint32_t p) {
    for (std::uint32_t d = 1; d < p; ++d) {
      if (p % d == 0 && rotl(k, d, p) == k) return d;
    }
    return p;
  };

  // Every angle of exact period <= `period`; 0 has period 1.
  std::vector<Point> points;
  for (std::uint32_t p = 1; p <= period; ++p) {
    const std::uint64_t top = (std::uint64_t{1} << p) - 1;
    for (std::uint64_t k = 0; k < top; ++k) {
      if (exact_period(k, p) == p) points.push_back({k, p});
    }
  }
  // k1/(2^p1 - 1) < k2/(2^p2 - 1)
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    const std::uint64_t da = (std::uint64_t{1} << a.p) - 1, db = (std::uint64_t{1} << b.p) - 1;
    return a.k * db < b.k * da;
  });

  const std::size_t N = points.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> partner(N, none);
  for (std::uint32_t p = 2; p <= period; ++p) {
    for (std::size_t i = 0; i < N; ++i) {
      if (points[i].p != p || partner[i] != none) continue;
      std::size_t j = i + 1;
      while (j < N) {
        if (partner[j] != none) {
          if (partner[j] < j) throw Error(ErrorKind::CheckFailed, "crossing chord in the angle pairing");
          j = partner[j] + 1;
          continue;
        }
        if (points[j].p == p) break;
        ++j;  // unpaired angle of higher period
      }
      if (j >= N) throw Error(ErrorKind::CheckFailed, "unpaired angle in the angle pairing");
      partner[i] = j;
      partner[j] = i;
    }
  }

  std::vector<AnglePair> out;
  for (std::size_t i = 0; i < N; ++i) {
    if (points[i].p != period || partner[i] < i) continue;
    const Integer den = pow2(period) - 1;
    out.push_back({Fraction::reduce(points[i].k, den), Fraction::reduce(points[partner[i]].k, den)});
  }
  return out;
}

}  // namespace sturmian
