#include "sturmian/kneading.hpp"

#include "sturmian/errors.hpp"
#include "sturmian/mechanical.hpp"
#include "sturmian/words.hpp"

#include <algorithm>
#include <vector>

namespace sturmian {

KneadingSequence::KneadingSequence(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2 || symbols_.back() != '*' || symbols_.find_first_not_of("01*") != std::string::npos ||
      std::count(symbols_.begin(), symbols_.end(), '*') != 1) {
    throw Error(ErrorKind::ParseError, "kneading sequence \"" + symbols_ + "\" must be 0/1 symbols followed by a single *");
  }
}

namespace {

struct Orbit {
  Integer den;
  std::vector<Integer> nums;  // 2^i theta = nums[i]/den
};

Orbit periodic_orbit(const Fraction& theta) {
  if (!bit_test(theta.den(), 0)) {
    throw Error(ErrorKind::NotPeriodic, theta.str() + " has an even denominator");
  }
  Orbit o{theta.den(), {theta.num()}};
  for (;;) {
    Integer next = o.nums.back() * 2;
    if (next >= o.den) next -= o.den;
    if (next == theta.num()) break;
    o.nums.push_back(next);
  }
  if (o.nums.size() < 2) throw Error(ErrorKind::NotPeriodic, theta.str() + " has period 1");
  return o;
}

}  // namespace

KneadingSequence kneading_of_angle(const Fraction& theta) {
  const Orbit o = periodic_orbit(theta);
  const std::size_t b = o.nums.size();
  // In units of 1/(2 den): the cut points are num and num + den.
  const Integer lo = theta.num();
  const Integer hi = theta.num() + o.den;
  std::string out;
  for (std::size_t i = 0; i < b; ++i) {
    const Integer x = o.nums[i] * 2;
    if (x == lo || x == hi) {
      if (i + 1 != b) {
        throw Error(ErrorKind::CheckFailed, "orbit of " + theta.str() + " hits the partition early");
      }
      out += '*';
    } else {
      out += (lo < x && x < hi) ? '1' : '0';
    }
  }
  if (out.back() != '*') throw Error(ErrorKind::CheckFailed, "orbit of " + theta.str() + " misses the partition");
  return KneadingSequence(std::move(out));
}

KneadingSequence kneading_of_spec(const BrokenLineSpec& spec) {
  const BlockDecomposition blocks = block_decomposition(spec);
  const std::vector<Unit> units = unit_sequence(blocks);
  const std::size_t Q = spec.P_over_Q().den().convert_to<std::size_t>();
  const std::size_t x_len = neighbor_word(spec.context).size();
  const std::size_t n = spec.hinge();
  const std::size_t b = spec.period();

  // Symbol at word position i (0-based) is 0 iff a unit starts there and is
  // followed, cyclically, by fewer than n base words before the next X.
  std::string out(b, '1');
  std::size_t pos = 0;
  for (std::size_t u = 0; u < units.size(); ++u) {
    std::size_t s = 0;
    while (s < units.size() && units[(u + s) % units.size()] == Unit::Base) ++s;
    if (s < n && pos > 0) out[pos - 1] = '0';
    pos += units[u] == Unit::Base ? Q : x_len;
  }
  out[b - 1] = '*';
  return KneadingSequence(std::move(out));
}

InvertedKneading invert_kneading(std::string_view K, Convention convention) {
  KneadingSequence seq = [&]() {
    try {
      return KneadingSequence(std::string(K));
    } catch (const Error& e) {
      throw Error(ErrorKind::NotBrokenLineKneading, e.what());
    }
  }();
  return invert_kneading(seq, convention);
}

InvertedKneading invert_kneading(const KneadingSequence& K, Convention convention) {
  const std::string& k = K.symbols();
  auto reject = [&](const std::string& why) {
    return Error(ErrorKind::NotBrokenLineKneading, "\"" + k + "\" is not a broken-line kneading sequence: " + why);
  };

  // Blocks end in 0 or *.
  std::vector<std::size_t> lengths;
  std::size_t start = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == '0' || k[i] == '*') {
      lengths.push_back(i + 1 - start);
      start = i + 1;
    }
  }
  const std::size_t Q = lengths.front();
  if (Q < 2) throw reject("first block is shorter than 2");
  std::size_t n = 0;
  while (n < lengths.size() && lengths[n] == Q && k[(n + 1) * Q - 1] == '0') ++n;
  if (n == 0) throw reject("no leading block ends in 0");
  auto other = std::find_if(lengths.begin(), lengths.end(), [&](std::size_t l) { return l != Q; });
  if (other == lengths.end()) throw reject("every block has the same length");
  const std::size_t residue = *other % Q;
  if (residue == 0) throw reject("block lengths are all multiples of Q");

  Integer P;
  Fraction X;
  try {
    if (convention == Convention::ZeroOne) {
      auto [p, s] = bezout_min_p(Q, residue);
      P = p;
      X = Fraction(s, residue);
    } else {
      auto [p, a] = bezout_min_p_mirror(Q, residue);
      P = p;
      X = Fraction(a, residue);
    }
  } catch (const Error& e) {
    throw reject(e.what());
  }
  if (P >= Q) throw reject("no admissible P/Q");
  const Fraction P_over_Q(P, Q);
  const std::string w = m_word(P_over_Q, convention).bits();
  const std::string x = m_word(X, convention).bits();

  std::string word;
  for (std::size_t len : lengths) {
    if (len == Q) {
      word += w;
    } else if (len >= residue && (len - residue) % Q == 0) {
      word += x;
      for (std::size_t i = 0; i < (len - residue) / Q; ++i) word += w;
    } else {
      throw reject("block of length " + std::to_string(len) + " fits neither shape");
    }
  }
  if (word.size() != k.size()) throw reject("rebuilt word has the wrong length");

  const std::size_t ones = static_cast<std::size_t>(std::count(word.begin(), word.end(), '1'));
  BrokenLineSpec spec = [&]() {
    try {
      return validate_spec(P_over_Q, Integer(ones), Integer(word.size()), n, convention);
    } catch (const Error& e) {
      throw reject(e.what());
    }
  }();
  PeriodicAngle angle = broken_line_angle(spec);
  if (angle.period().bits() != word || kneading_of_spec(spec) != K) {
    throw reject("rebuilt broken line does not reproduce it");
  }
  return InvertedKneading{std::move(spec), std::move(angle)};
}

std::string one_sided_kneading(const Fraction& theta, Side side) {
  const Orbit o = periodic_orbit(theta);
  const std::size_t b = o.nums.size();
  // Orbit points and cut points are at least 1/(2 den) >= 2^-(b+1) apart;
  // moving theta by 2^-N shifts the first b iterates by at most 2^(b-1-N)
  // and the cut points by 2^-(N+1), so N = 2b + 4 keeps every comparison.
  const std::size_t N = 2 * b + 4;
  const Rational eps(Integer(1), pow2(N));
  const Rational alpha = theta.to_rational() + (side == Side::Below ? -eps : eps);
  const Rational lo = alpha / 2;
  const Rational hi = (alpha + 1) / 2;
  std::string out;
  Rational x = alpha;
  for (std::size_t i = 0; i < b; ++i) {
    out += (lo < x && x < hi) ? '1' : '0';
    x *= 2;
    if (x >= 1) x -= 1;
  }
  return out;
}

std::size_t lower_kneading_period(const Fraction& theta) {
  return minimal_period(one_sided_kneading(theta, Side::Below));
}

bool kneading_concat_check(const BrokenLineSpec& lower, const BrokenLineSpec& upper, const BrokenLineSpec& med) {
  const bool same_line = lower.P_over_Q() == upper.P_over_Q() && upper.P_over_Q() == med.P_over_Q() &&
                         lower.hinge() == upper.hinge() && upper.hinge() == med.hinge() &&
                         lower.convention() == upper.convention() && upper.convention() == med.convention();
  if (!same_line || !(lower.a_over_b < upper.a_over_b) || mediant(lower.a_over_b, upper.a_over_b) != med.a_over_b) {
    throw Error(ErrorKind::InvalidArgument, "kneading_concat_check needs two specs and their mediant on one line");
  }
  const std::string omega = kneading_of_spec(lower).symbols();
  const std::string gamma = kneading_of_spec(upper).symbols();
  const std::string o = omega.substr(0, omega.size() - 1);
  const std::string g = gamma.substr(0, gamma.size() - 1);
  const std::string expected = med.convention() == Convention::ZeroOne ? g + "1" + o + "*" : o + "1" + g + "*";
  return kneading_of_spec(med).symbols() == expected;
}

}  // namespace sturmian
