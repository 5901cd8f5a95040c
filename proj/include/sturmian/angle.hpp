#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace sturmian {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Reduced rational in [0,1].
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  /// Requires gcd(num, den) = 1 and 0 <= num <= den; throws otherwise.
  Fraction(Integer num, Integer den);

  static Fraction reduce(const Integer& num, const Integer& den);
  static Fraction from_rational(const Rational& r);
  /// Parses "p/q". Unreduced input is rejected.
  static Fraction parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  Rational to_rational() const { return Rational(num_, den_); }
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  Integer num_;
  Integer den_;
};

/// Splits "p/q" into its two integers without reducing.
std::pair<Integer, Integer> parse_ratio(std::string_view text);

/// Non-empty bit string over '0'/'1'.
class BinaryWord {
 public:
  explicit BinaryWord(std::string bits);
  explicit BinaryWord(const char* bits) : BinaryWord(std::string(bits)) {}

  const std::string& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  char operator[](std::size_t i) const { return bits_[i]; }
  std::size_t count_ones() const;

  BinaryWord repeated(std::size_t times) const;
  BinaryWord rotated_left(std::size_t shift) const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;
  friend BinaryWord operator+(const BinaryWord& a, const BinaryWord& b) {
    return BinaryWord(a.bits_ + b.bits_);
  }

 private:
  std::string bits_;
};

/// 0.u(w)^inf in canonical form: w primitive, u as short as possible, and the
/// all-ones period folded into the dyadic expansion (value in [0,1)).
class PeriodicAngle {
 public:
  explicit PeriodicAngle(const BinaryWord& period) : PeriodicAngle("", period) {}
  PeriodicAngle(std::string_view preperiod, const BinaryWord& period);

  /// Parses "0.(w)" or "0.[u](w)".
  static PeriodicAngle parse(std::string_view text);
  /// The (u, w) of "0.[u](w)" exactly as written, before normalization.
  static std::pair<std::string, BinaryWord> parse_literal(std::string_view text);

  /// Possibly empty.
  const std::string& preperiod() const noexcept { return preperiod_; }
  const BinaryWord& period() const noexcept { return period_; }
  bool purely_periodic() const noexcept { return preperiod_.empty(); }

  Fraction value() const;
  std::string str() const;

  friend bool operator==(const PeriodicAngle&, const PeriodicAngle&) = default;

 private:
  std::string preperiod_;
  BinaryWord period_;
};

enum class PrefixOrder { LT, GT, Incomparable };

Integer pow2(std::size_t exponent);
/// Integer whose base-2 digits are `bits`.
Integer bits_value(std::string_view bits);
/// The length-`width` base-2 digits of `value` (0 <= value < 2^width).
std::string bits_of(const Integer& value, std::size_t width);
std::size_t to_size(const Integer& value);

/// Value of 0.(w)^inf; the all-ones word gives 0.
Fraction word_to_fraction(const BinaryWord& w);
PeriodicAngle fraction_to_expansion(const Fraction& x);
Fraction double_angle(const Fraction& x);
std::size_t minimal_period(std::string_view w);
inline std::size_t minimal_period(const BinaryWord& w) { return minimal_period(w.bits()); }
PrefixOrder compare_prefix_classes(const BinaryWord& u, const BinaryWord& v);

std::string_view to_string(PrefixOrder order) noexcept;

}  // namespace sturmian
