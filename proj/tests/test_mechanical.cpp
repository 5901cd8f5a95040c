#include "sturmian/errors.hpp"
#include "sturmian/mechanical.hpp"
#include "sturmian/words.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace sturmian;
using sturmian::testing::all_valid_specs;

namespace {

const Convention c01 = Convention::ZeroOne;
const Convention c10 = Convention::OneZero;

// Literal pair rewriting 01 -> 1, scanning the doubled word left to right and
// keeping the middle copy's worth of output.
std::string pair_rewrite(const std::string& kappa) {
  const std::string doubled = kappa + kappa;
  std::string out;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    if (doubled[i] == '0' && i + 1 < doubled.size() && doubled[i + 1] == '1') {
      out += '1';
      origin.push_back(i + 1);
      ++i;
    } else {
      out += doubled[i];
      origin.push_back(i);
    }
  }
  // symbols whose source lies in the second copy, reindexed to start at 0
  std::string result;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (origin[i] >= kappa.size()) result += out[i];
  }
  return result;
}

std::vector<std::pair<unsigned, unsigned>> reduced(unsigned max_q) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned q = 2; q <= max_q; ++q) {
    for (unsigned p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

// Digit j (1-based) of the bulb word from the rotation by p/q.
char rotation_digit(unsigned p, unsigned q, unsigned j) {
  const unsigned x = (j * p) % q;  // R^{j-1}(p/q) = jp/q mod 1
  return x > q - p ? '1' : '0';
}

// theta(p/q) as a sequence of words W_{a/b}, W_{c/d} following the Farey
// recursion below the pair (a/b, c/d).
std::vector<Fraction> zeta(const Fraction& x, const Fraction& lo, const Fraction& hi) {
  if (x == lo || x == hi) return {x};
  const auto [l, r] = farey_parents(x);
  auto left = zeta(r, lo, hi);
  auto right = zeta(l, lo, hi);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

TEST_CASE("cutting_sequence examples") {
  CHECK(cutting_sequence(Fraction(1, 3), c01).bits() == "0001");
  CHECK(cutting_sequence(Fraction(1, 3), c10).bits() == "0010");
  CHECK(cutting_sequence(Fraction(2, 5), c01).bits() == "0010001");
}

TEST_CASE("substitute_T examples") {
  CHECK(substitute_T(BinaryWord("0001")).bits() == "001");
  CHECK(substitute_T(BinaryWord("0010")).bits() == "010");
  CHECK(substitute_T(BinaryWord("0010001")).bits() == "01001");
  for (const char* bad : {"0110", "1", "11", "0011"}) {
    CAPTURE(bad);
    try {
      substitute_T(BinaryWord(bad));
      FAIL("expected MalformedCuttingSequence");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MalformedCuttingSequence);
    }
  }
}

TEST_CASE("m_word examples") {
  CHECK(m_word(Fraction(2, 5), c01).bits() == "01001");
  CHECK(m_word(Fraction(2, 5), c10).bits() == "01010");
  CHECK(m_word(Fraction(7, 17), c01).bits() == "01" + std::string("01001") + "01001" + "01001");
  CHECK(m_word(Fraction(1, 1), c01).bits() == "1");
  CHECK(m_word(Fraction(0, 1), c10).bits() == "0");
  CHECK_THROWS_AS(m_word(Fraction(0, 1), c01), Error);
  CHECK_THROWS_AS(m_word(Fraction(1, 1), c10), Error);
}

TEST_CASE("characteristic_pair_of_bulb examples") {
  CHECK(characteristic_pair_of_bulb(Fraction(1, 3)) == std::pair{Fraction(1, 7), Fraction(2, 7)});
  CHECK(characteristic_pair_of_bulb(Fraction(1, 2)) == std::pair{Fraction(1, 3), Fraction(2, 3)});
  CHECK(characteristic_pair_of_bulb(Fraction(2, 5)) == std::pair{Fraction(9, 31), Fraction(10, 31)});
}

TEST_CASE("broken_line_angle examples") {
  auto a = broken_line_angle(validate_spec(Fraction(1, 2), Fraction(3, 4), 1, c01));
  CHECK(a.str() == "0.(0111)");
  CHECK(a.value() == Fraction(7, 15));
  a = broken_line_angle(validate_spec(Fraction(2, 5), Fraction(7, 17), 2, c01));
  CHECK(a.period().bits() == "01001010010101001");
  CHECK(a.value() == Fraction(38057, 131071));
  a = broken_line_angle(validate_spec(Fraction(1, 2), Fraction(1, 4), 1, c10));
  CHECK(a.str() == "0.(1000)");
  CHECK(a.value() == Fraction(8, 15));
}

TEST_CASE("block_decomposition examples") {
  auto d = block_decomposition(validate_spec(Fraction(1, 2), Fraction(3, 4), 1, c01));
  CHECK(d.exponents == std::vector<std::size_t>{2});
  CHECK(d.block_words.at(2).bits() == "0111");
  d = block_decomposition(validate_spec(Fraction(2, 5), Fraction(7, 17), 2, c01));
  CHECK(d.exponents == std::vector<std::size_t>{1, 0});
  CHECK(d.base_m == 0);
  // 7/17 = P_1/Q_1 when n = 3: one block
  d = block_decomposition(validate_spec(Fraction(2, 5), Fraction(7, 17), 3, c01));
  CHECK(d.exponents == std::vector<std::size_t>{1});
  CHECK(d.block_words.at(1).bits() == "01001010010100101");
}

TEST_CASE("base formulas for 1/m") {
  for (std::size_t m = 2; m <= 10; ++m) {
    const Fraction x(1, m);
    CHECK(m_word(x, c01).bits() == std::string(m - 1, '0') + "1");
    CHECK(m_word(x, c10).bits() == std::string(m - 2, '0') + "10");
  }
}

TEST_CASE("geometric and recursive words agree, q <= 50") {
  for (auto [p, q] : reduced(50)) {
    for (Convention c : {c01, c10}) {
      const Fraction x(p, q);
      const BinaryWord kappa = cutting_sequence(x, c);
      const BinaryWord w = m_word(x, c);
      CAPTURE(x.str());
      CHECK(kappa.size() == p + q);
      CHECK(substitute_T(kappa) == w);
      CHECK(pair_rewrite(kappa.bits()) == substitute_T(kappa).bits());
      CHECK(w.count_ones() == p);
      CHECK(minimal_period(w) == q);
    }
  }
}

TEST_CASE("bulb words follow the rotation digits, q <= 50") {
  for (auto [p, q] : reduced(50)) {
    std::string head;
    for (unsigned j = 1; j + 2 <= q; ++j) head += rotation_digit(p, q, j);
    CAPTURE(p);
    CAPTURE(q);
    CHECK(m_word(Fraction(p, q), c01).bits() == head + "01");
    CHECK(m_word(Fraction(p, q), c10).bits() == head + "10");
  }
}

TEST_CASE("broken-line angles are Sturmian of period b, b <= 24") {
  for (const BrokenLineSpec& s : all_valid_specs(3, 24)) {
    const PeriodicAngle a = broken_line_angle(s);
    CAPTURE(describe(s));
    CHECK(a.period().size() == s.period());
    CHECK(minimal_period(a.period()) == s.period());
    CHECK(is_sturmian(a.period()));
    const BlockDecomposition d = block_decomposition(s);
    CHECK(d.concatenation() == a.period());
    const bool single = p_m_q_m(s.context, d.base_m) == s.a_over_b;
    CHECK((d.exponents.size() == 1) == single);
    for (const auto& [m, word] : d.block_words) {
      const std::size_t n = s.hinge(), Q = to_size(s.P_over_Q().den());
      const std::size_t X = neighbor_word(s.context).size();
      CHECK(word.size() == (m == 0 ? Q : n * Q + (m - 1) * (X + (n - 1) * Q) + X));
    }
  }
}

TEST_CASE("broken-line words concatenate along Farey mediants, g <= 30") {
  for (std::size_t g = 3; g <= 30; ++g) {
    for (const BrokenLineSpec& s : all_valid_specs(g)) {
      const auto [lo, hi] = farey_parents(s.a_over_b);
      const Fraction& PQ = s.P_over_Q();
      BrokenLineSpec low, high;
      try {
        low = validate_spec(PQ, lo, s.hinge(), s.convention());
        high = validate_spec(PQ, hi, s.hinge(), s.convention());
      } catch (const Error&) {
        continue;  // a parent leaves the admissible interval
      }
      const std::string a = broken_line_angle(low).period().bits();
      const std::string c = broken_line_angle(high).period().bits();
      const std::string f = broken_line_angle(s).period().bits();
      CAPTURE(describe(s));
      CHECK(f == (s.convention() == c01 ? c + a : a + c));
    }
  }
}

TEST_CASE("blockwise shifts compare below the full word, b <= 24") {
  for (const BrokenLineSpec& s : all_valid_specs(3, 24)) {
    const BlockDecomposition d = block_decomposition(s);
    const std::vector<std::size_t>& m = d.exponents;
    const std::size_t k = m.size();
    if (k < 2) continue;
    const std::string tail = base_word(s.context).repeated(s.hinge()).bits();
    std::string full;
    for (std::size_t i = 0; i < k; ++i) full += d.block_words.at(m[i]).bits();
    full += tail;
    CAPTURE(describe(s));
    for (std::size_t j = 2; j <= k; ++j) {
      std::size_t r = 0;
      while (r <= k - j && m[r] == m[j - 1 + r]) ++r;
      CHECK(r <= k - j);
      if (r <= k - j) CHECK(m[r] > m[j - 1 + r]);
      std::string shifted;
      for (std::size_t i = j - 1; i < k; ++i) shifted += d.block_words.at(m[i]).bits();
      shifted += tail;
      const PrefixOrder o = compare_prefix_classes(BinaryWord(shifted), BinaryWord(full));
      CHECK(o == (s.convention() == c01 ? PrefixOrder::LT : PrefixOrder::GT));
    }
  }
}

TEST_CASE("wordwise shifts compare below the full word, q <= 30") {
  const auto fractions = reduced(30);
  for (auto [a, b] : fractions) {
    for (unsigned d = 1; d <= 30; ++d) {
      for (unsigned c = 1; c <= d; ++c) {
        if (std::gcd(c, d) != 1 || long(c) * b - long(a) * d != 1) continue;
        const Fraction lo(a, b), hi(c, d);
        for (auto [p, q] : fractions) {
          const Fraction x(p, q);
          if (!(lo < x && x < hi)) continue;
          const std::vector<Fraction> z = zeta(x, lo, hi);
          const std::size_t k = z.size();
          CAPTURE(x.str());
          CAPTURE(lo.str());
          CAPTURE(hi.str());
          std::string joined;
          for (const auto& f : z) joined += m_word(f, c01).bits();
          REQUIRE(joined == m_word(x, c01).bits());
          CHECK(k >= 2);
          CHECK(z.front() == hi);
          CHECK(z.back() == lo);
          for (std::size_t j = 2; j <= k; ++j) {
            std::size_t r = 0;
            while (r <= k - j && z[r] == z[j - 1 + r]) ++r;
            CHECK(r <= k - j);
            if (r <= k - j) CHECK(z[j - 1 + r] < z[r]);
            std::string shifted;
            for (std::size_t i = j - 1; i < k; ++i) shifted += m_word(z[i], c01).bits();
            CHECK(compare_prefix_classes(BinaryWord(shifted), BinaryWord(joined)) == PrefixOrder::LT);
          }
        }
      }
    }
  }
}
