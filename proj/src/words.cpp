#include "sturmian/words.hpp"

#include "sturmian/errors.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace sturmian {

std::string_view to_string(Convention c) noexcept {
  return c == Convention::ZeroOne ? "01" : "10";
}

Convention parse_convention(std::string_view text) {
  if (text == "01") return Convention::ZeroOne;
  if (text == "10") return Convention::OneZero;
  throw Error(ErrorKind::ParseError, "convention must be 01 or 10, got \"" + std::string(text) + "\"");
}

Convention mirror(Convention c) noexcept {
  return c == Convention::ZeroOne ? Convention::OneZero : Convention::ZeroOne;
}

BinaryWord prime_plus(const BinaryWord& w) {
  std::string s = w.bits();
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it == '0') {
      *it = '1';
      break;
    }
    *it = '0';
  }
  return BinaryWord(std::move(s));
}

BinaryWord prime_minus(const BinaryWord& w) {
  std::string s = w.bits();
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it == '1') {
      *it = '0';
      break;
    }
    *it = '1';
  }
  return BinaryWord(std::move(s));
}

BinaryWord prime(const BinaryWord& w, Convention c) {
  return c == Convention::ZeroOne ? prime_plus(w) : prime_minus(w);
}

bool is_sturmian(const BinaryWord& w) {
  const std::size_t n = w.size();
  // prefix[i] = number of ones in the first i symbols of w w
  std::vector<std::size_t> prefix(2 * n + 1, 0);
  for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + (w[i % n] == '1');
  for (std::size_t l = 1; l <= n; ++l) {
    std::size_t lo = prefix[l], hi = prefix[l];
    for (std::size_t s = 1; s < n; ++s) {
      std::size_t c = prefix[s + l] - prefix[s];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

RotationDiagnostics rotation_diagnostics(const BinaryWord& w) {
  const std::size_t n = w.size();
  if (minimal_period(w) != n) {
    throw Error(ErrorKind::NonMinimalPeriod, "word \"" + w.bits() + "\" is a proper power");
  }
  // All orbit points share the denominator 2^n - 1, so the rotations compare
  // as bit strings. Rotation i is 2^i theta.
  std::vector<std::string> orbit;
  orbit.reserve(n);
  for (std::size_t i = 0; i < n; ++i) orbit.push_back(w.rotated_left(i).bits());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return orbit[a] < orbit[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t j = 0; j < n; ++j) rank[order[j]] = j;

  const std::size_t shift = rank[(order[0] + 1) % n];
  bool preserves = true;
  for (std::size_t j = 0; j < n && preserves; ++j) {
    std::size_t image = (order[j] + 1) % n;
    preserves = rank[image] == (j + shift) % n;
  }
  return {Fraction::reduce(w.count_ones(), n), preserves};
}

std::size_t first_difference(const BinaryWord& a_word, const BinaryWord& c_word, Convention convention) {
  const std::size_t bound = convention == Convention::ZeroOne ? a_word.size() : c_word.size();
  for (std::size_t r = 1; r <= bound; ++r) {
    char a = a_word[(r - 1) % a_word.size()];
    char c = c_word[(r - 1) % c_word.size()];
    if (a == c) continue;
    if (a != '0' || c != '1') {
      throw Error(ErrorKind::InvalidArgument, "words differ in the wrong direction at position " + std::to_string(r));
    }
    return r;
  }
  throw Error(ErrorKind::NoDifference,
              "\"" + a_word.bits() + "\" and \"" + c_word.bits() + "\" agree through position " + std::to_string(bound));
}

}  // namespace sturmian
