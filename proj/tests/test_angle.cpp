#include "sturmian/angle.hpp"
#include "sturmian/errors.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace sturmian;

namespace {

std::string bits(unsigned value, unsigned width) {
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i) s[i] = (value >> (width - 1 - i)) & 1 ? '1' : '0';
  return s;
}

std::string primitive_root(const std::string& w) { return w.substr(0, minimal_period(w)); }

}  // namespace

TEST_CASE("word_to_fraction examples") {
  CHECK(word_to_fraction(BinaryWord("0111")) == Fraction(7, 15));
  CHECK(word_to_fraction(BinaryWord("0")) == Fraction(0, 1));
  CHECK(word_to_fraction(BinaryWord("01001010010101001")) == Fraction(38057, 131071));
  CHECK(word_to_fraction(BinaryWord("1111")) == Fraction(0, 1));
}

TEST_CASE("fraction_to_expansion examples") {
  auto e = fraction_to_expansion(Fraction(8, 15));
  CHECK(e.preperiod().empty());
  CHECK(e.period().bits() == "1000");
  e = fraction_to_expansion(Fraction(0, 1));
  CHECK(e.preperiod().empty());
  CHECK(e.period().bits() == "0");
  e = fraction_to_expansion(Fraction(5, 12));
  CHECK(e.preperiod() == "01");
  CHECK(e.period().bits() == "10");
  CHECK(fraction_to_expansion(Fraction(1, 2)).str() == "0.[1](0)");
}

TEST_CASE("double_angle examples") {
  CHECK(double_angle(Fraction(7, 15)) == Fraction(14, 15));
  CHECK(double_angle(Fraction(14, 15)) == Fraction(13, 15));
  CHECK(double_angle(Fraction(0, 1)) == Fraction(0, 1));
  CHECK_THROWS_AS(double_angle(Fraction(1, 1)), Error);
}

TEST_CASE("minimal_period examples") {
  CHECK(minimal_period(BinaryWord("0101")) == 2);
  CHECK(minimal_period(BinaryWord("01001")) == 5);
  CHECK(minimal_period(BinaryWord("0111")) == 4);
}

TEST_CASE("compare_prefix_classes examples") {
  CHECK(compare_prefix_classes(BinaryWord("0110"), BinaryWord("10")) == PrefixOrder::LT);
  CHECK(compare_prefix_classes(BinaryWord("010"), BinaryWord("0101")) == PrefixOrder::Incomparable);
  CHECK(compare_prefix_classes(BinaryWord("1000"), BinaryWord("1011")) == PrefixOrder::LT);
  CHECK(compare_prefix_classes(BinaryWord("11"), BinaryWord("10")) == PrefixOrder::GT);
}

TEST_CASE("fractions are reduced and in the unit interval") {
  CHECK_THROWS_AS(Fraction(2, 4), Error);
  CHECK_THROWS_AS(Fraction(3, 2), Error);
  CHECK(Fraction::reduce(6, 8) == Fraction(3, 4));
  CHECK(Fraction::parse("7/17") == Fraction(7, 17));
  CHECK_THROWS_AS(Fraction::parse("2/4"), Error);
  CHECK_THROWS_AS(Fraction::parse("x/4"), Error);
  CHECK_THROWS_AS(Fraction::parse("3"), Error);
  CHECK(Fraction(1, 3) < Fraction(1, 2));
}

TEST_CASE("periodic angles are stored canonically") {
  // non-primitive period
  CHECK(PeriodicAngle(BinaryWord("0101")).period().bits() == "01");
  // shortenable preperiod: 0.1(01)^inf = 0.(10)^inf
  PeriodicAngle a("1", BinaryWord("01"));
  CHECK(a.preperiod().empty());
  CHECK(a.period().bits() == "10");
  // all-ones period folds into the dyadic form
  CHECK(PeriodicAngle(BinaryWord("1")).str() == "0.(0)");
  CHECK(PeriodicAngle("0", BinaryWord("1")).str() == "0.[1](0)");
  CHECK(PeriodicAngle("0011", BinaryWord("1")).str() == "0.[01](0)");
  CHECK(PeriodicAngle("11", BinaryWord("11")).str() == "0.(0)");
  CHECK(PeriodicAngle("0", BinaryWord("1")).value() == Fraction(1, 2));
}

TEST_CASE("expansion text format") {
  CHECK(PeriodicAngle::parse("0.(0111)").value() == Fraction(7, 15));
  CHECK(PeriodicAngle::parse("0.[01](10)").value() == Fraction(5, 12));
  CHECK(PeriodicAngle::parse("0.[01](10)").str() == "0.[01](10)");
  for (const char* bad : {"0.[01]((10))", "0.()", "0.[](1)", ".(01)", "0.(012)", "0.[01]", "0.(01"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(PeriodicAngle::parse(bad), Error);
  }
}

TEST_CASE("round trip through expansions, |w| <= 20") {
  for (unsigned len = 1; len <= 20; ++len) {
    const unsigned step = len <= 12 ? 1 : 97;  // dense for short words, sampled above
    for (unsigned v = 0; v < (1u << len); v += step) {
      const std::string w = bits(v, len);
      const PeriodicAngle e = fraction_to_expansion(word_to_fraction(BinaryWord(w)));
      CHECK(e.preperiod().empty());
      if (w.find('0') == std::string::npos) {
        CHECK(e.period().bits() == "0");
      } else {
        CHECK(e.period().bits() == primitive_root(w));
      }
    }
  }
}

TEST_CASE("every rational with a small denominator round trips") {
  for (unsigned q = 1; q <= 64; ++q) {
    for (unsigned p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Fraction x(p, q);
      const PeriodicAngle e = fraction_to_expansion(x);
      CHECK(e.value() == x);
      CHECK(e.purely_periodic() == (q % 2 == 1));
      CHECK(PeriodicAngle::parse(e.str()) == e);
      CHECK(Fraction::parse(x.str()) == x);
    }
  }
}

TEST_CASE("doubling shifts the word, |w| <= 16") {
  for (unsigned len = 1; len <= 16; ++len) {
    for (unsigned v = 0; v < (1u << len); ++v) {
      const BinaryWord w(bits(v, len));
      CHECK(double_angle(word_to_fraction(w)) == word_to_fraction(w.rotated_left(1)));
    }
  }
}

TEST_CASE("orbit length equals minimal period") {
  for (unsigned len = 1; len <= 12; ++len) {
    for (unsigned v = 0; v + 1 < (1u << len); ++v) {
      const BinaryWord w(bits(v, len));
      const Fraction x = word_to_fraction(w);
      std::set<Fraction> orbit{x};
      for (Fraction y = double_angle(x); y != x; y = double_angle(y)) orbit.insert(y);
      CHECK(orbit.size() == minimal_period(w));
    }
  }
}

TEST_CASE("prefix classes agree with the order of angles") {
  // If u and v differ within their common length, the class order is the
  // order of any angles with those prefixes, in particular of 0.(u)^inf, 0.(v)^inf.
  for (unsigned lu = 1; lu <= 10; ++lu) {
    for (unsigned lv = 1; lv <= 10; ++lv) {
      for (unsigned a = 0; a < (1u << lu); a += (lu > 7 ? 13 : 1)) {
        for (unsigned b = 0; b < (1u << lv); b += (lv > 7 ? 11 : 1)) {
          const BinaryWord u(bits(a, lu)), v(bits(b, lv));
          const PrefixOrder o = compare_prefix_classes(u, v);
          if (o == PrefixOrder::Incomparable) continue;
          const Fraction x = PeriodicAngle(u.bits(), BinaryWord("0")).value();
          const Fraction y = PeriodicAngle(v.bits(), BinaryWord("0")).value();
          // upper ends of the two cylinders
          const Rational xs = x.to_rational() + Rational(1, pow2(lu));
          const Rational ys = y.to_rational() + Rational(1, pow2(lv));
          if (o == PrefixOrder::LT) {
            CHECK(x < y);
            CHECK(xs <= y.to_rational());
          } else {
            CHECK(y < x);
            CHECK(ys <= x.to_rational());
          }
        }
      }
    }
  }
}
