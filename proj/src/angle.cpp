#include "sturmian/angle.hpp"

#include "sturmian/errors.hpp"

#include <algorithm>
#include <limits>

namespace sturmian {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::ParseError, "expected p/q, got \"" + std::string(whole) + "\"");
  }
  return Integer(std::string(digits));
}

}  // namespace

Fraction::Fraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ <= 0 || num_ < 0 || num_ > den_) {
    throw Error(ErrorKind::InvalidArgument, "fraction " + num_.str() + "/" + den_.str() + " is not in [0,1]");
  }
  if (gcd(num_, den_) != 1) {
    throw Error(ErrorKind::InvalidArgument, "fraction " + num_.str() + "/" + den_.str() + " is not reduced");
  }
}

Fraction Fraction::reduce(const Integer& num, const Integer& den) {
  if (den <= 0) throw Error(ErrorKind::InvalidArgument, "zero or negative denominator");
  Integer g = gcd(num, den);
  if (g == 0) g = 1;
  return Fraction(num / g, den / g);
}

Fraction Fraction::from_rational(const Rational& r) {
  return Fraction(numerator(r), denominator(r));
}

std::pair<Integer, Integer> parse_ratio(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "expected p/q, got \"" + std::string(text) + "\"");
  }
  return {parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text)};
}

Fraction Fraction::parse(std::string_view text) {
  auto [p, q] = parse_ratio(text);
  if (q == 0 || p > q) {
    throw Error(ErrorKind::ParseError, "fraction \"" + std::string(text) + "\" is not in [0,1]");
  }
  if (gcd(p, q) != 1) {
    throw Error(ErrorKind::ParseError, "fraction \"" + std::string(text) + "\" is not in lowest terms");
  }
  return Fraction(p, q);
}

std::string Fraction::str() const { return num_.str() + "/" + den_.str(); }

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw Error(ErrorKind::InvalidArgument, "empty binary word");
  if (bits_.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorKind::InvalidArgument, "binary word \"" + bits_ + "\" has symbols other than 0/1");
  }
}

std::size_t BinaryWord::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

BinaryWord BinaryWord::repeated(std::size_t times) const {
  if (times == 0) throw Error(ErrorKind::InvalidArgument, "zero repetition of a binary word");
  std::string out;
  out.reserve(bits_.size() * times);
  for (std::size_t i = 0; i < times; ++i) out += bits_;
  return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::rotated_left(std::size_t shift) const {
  std::string out = bits_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return BinaryWord(std::move(out));
}

Integer pow2(std::size_t exponent) {
  Integer r = 1;
  r <<= exponent;
  return r;
}

Integer bits_value(std::string_view bits) {
  Integer v = 0;
  for (char c : bits) {
    v <<= 1;
    if (c == '1') v |= 1;
  }
  return v;
}

std::string bits_of(const Integer& value, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if (bit_test(value, width - 1 - i)) out[i] = '1';
  }
  return out;
}

std::size_t to_size(const Integer& value) {
  if (value < 0 || value > Integer(std::numeric_limits<std::size_t>::max())) {
    throw Error(ErrorKind::InvalidArgument, "integer " + value.str() + " does not fit a machine size");
  }
  return static_cast<std::size_t>(value);
}

std::size_t minimal_period(std::string_view w) {
  const std::size_t n = w.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "minimal period of an empty word");
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return d;
  }
  return n;
}

PeriodicAngle::PeriodicAngle(std::string_view preperiod, const BinaryWord& period) : period_(period) {
  if (preperiod.find_first_not_of("01") != std::string_view::npos) {
    throw Error(ErrorKind::InvalidArgument, "preperiod has symbols other than 0/1");
  }
  std::string u(preperiod);
  std::string w = period.bits().substr(0, minimal_period(period.bits()));

  if (w == "1") {
    // 0.u(1)^inf = 0.(u+1)(0)^inf
    auto last_zero = u.find_last_of('0');
    if (last_zero == std::string::npos) {
      u.clear();
    } else {
      u[last_zero] = '1';
      std::fill(u.begin() + static_cast<std::ptrdiff_t>(last_zero) + 1, u.end(), '0');
    }
    w = "0";
  }

  // Absorb the common suffix of u and the periodic tail into the period.
  const std::size_t L = w.size();
  std::size_t k = 0;
  while (k < u.size() && u[u.size() - 1 - k] == w[(L - 1 - (k % L))]) ++k;
  u.resize(u.size() - k);
  std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>((L - k % L) % L), w.end());

  preperiod_ = std::move(u);
  period_ = BinaryWord(std::move(w));
}

PeriodicAngle PeriodicAngle::parse(std::string_view text) {
  auto [u, w] = parse_literal(text);
  return PeriodicAngle(u, w);
}

std::pair<std::string, BinaryWord> PeriodicAngle::parse_literal(std::string_view text) {
  auto fail = [&]() {
    return Error(ErrorKind::ParseError, "expected 0.(w) or 0.[u](w), got \"" + std::string(text) + "\"");
  };
  if (text.substr(0, 2) != "0.") throw fail();
  std::string_view rest = text.substr(2);
  std::string_view u;
  if (!rest.empty() && rest.front() == '[') {
    auto close = rest.find(']');
    if (close == std::string_view::npos || close == 1) throw fail();
    u = rest.substr(1, close - 1);
    rest = rest.substr(close + 1);
  }
  if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') throw fail();
  std::string_view w = rest.substr(1, rest.size() - 2);
  if (w.empty() || w.find_first_not_of("01") != std::string_view::npos ||
      u.find_first_not_of("01") != std::string_view::npos) {
    throw fail();
  }
  return {std::string(u), BinaryWord(std::string(w))};
}

Fraction PeriodicAngle::value() const {
  const Integer cycle = pow2(period_.size()) - 1;
  Integer num = bits_value(preperiod_) * cycle + bits_value(period_.bits());
  Integer den = pow2(preperiod_.size()) * cycle;
  return Fraction::reduce(num, den);
}

std::string PeriodicAngle::str() const {
  std::string out = "0.";
  if (!preperiod_.empty()) out += "[" + preperiod_ + "]";
  out += "(" + period_.bits() + ")";
  return out;
}

Fraction word_to_fraction(const BinaryWord& w) {
  Integer den = pow2(w.size()) - 1;
  Integer num = bits_value(w.bits());
  if (num == den) return Fraction();
  return Fraction::reduce(num, den);
}

PeriodicAngle fraction_to_expansion(const Fraction& x) {
  if (x.num() >= x.den()) throw Error(ErrorKind::InvalidArgument, "angle must lie in [0,1)");
  Integer odd = x.den();
  std::size_t twos = 0;
  while (!bit_test(odd, 0)) {
    odd >>= 1;
    ++twos;
  }
  // Long division in base 2: preperiod digits, then digits until the
  // remainder after the preperiod recurs.
  std::string u;
  Integer r = x.num();
  for (std::size_t i = 0; i < twos; ++i) {
    r <<= 1;
    if (r >= x.den()) {
      u += '1';
      r -= x.den();
    } else {
      u += '0';
    }
  }
  const Integer start = r;
  std::string w;
  do {
    r <<= 1;
    if (r >= x.den()) {
      w += '1';
      r -= x.den();
    } else {
      w += '0';
    }
  } while (r != start);
  return PeriodicAngle(u, BinaryWord(std::move(w)));
}

Fraction double_angle(const Fraction& x) {
  if (x.num() >= x.den()) throw Error(ErrorKind::InvalidArgument, "angle must lie in [0,1)");
  Integer n = x.num() * 2;
  if (n >= x.den()) n -= x.den();
  return Fraction::reduce(n, x.den());
}

PrefixOrder compare_prefix_classes(const BinaryWord& u, const BinaryWord& v) {
  const std::size_t l = std::min(u.size(), v.size());
  int c = u.bits().compare(0, l, v.bits(), 0, l);
  if (c < 0) return PrefixOrder::LT;
  if (c > 0) return PrefixOrder::GT;
  return PrefixOrder::Incomparable;
}

std::string_view to_string(PrefixOrder order) noexcept {
  switch (order) {
    case PrefixOrder::LT: return "LT";
    case PrefixOrder::GT: return "GT";
    case PrefixOrder::Incomparable: return "INCOMPARABLE";
  }
  return "";
}

}  // namespace sturmian
