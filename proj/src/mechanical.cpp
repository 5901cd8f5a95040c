#include "sturmian/mechanical.hpp"

#include "sturmian/errors.hpp"

#include <functional>

namespace sturmian {

namespace {

void require_open_unit(const Fraction& x) {
  if (x.num() == 0 || x.num() == x.den()) {
    throw Error(ErrorKind::InvalidArgument, "slope " + x.str() + " must lie strictly between 0 and 1");
  }
}

std::string power(const std::string& w, std::size_t k) {
  std::string out;
  out.reserve(w.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += w;
  return out;
}

}  // namespace

BinaryWord cutting_sequence(const Fraction& p_over_q, Convention convention) {
  require_open_unit(p_over_q);
  const std::size_t p = to_size(p_over_q.num());
  const std::size_t q = to_size(p_over_q.den());
  using wide = unsigned __int128;
  std::string out;
  out.reserve(p + q);
  // Vertical line x = i against horizontal line y = j (x = jq/p): i*p vs j*q.
  std::size_t i = 1, j = 1;
  while (i < q || j < p) {
    if (j >= p || (i < q && wide(i) * p < wide(j) * q)) {
      out += '0';
      ++i;
    } else {
      out += '1';
      ++j;
    }
  }
  out += convention == Convention::ZeroOne ? "01" : "10";
  return BinaryWord(std::move(out));
}

BinaryWord substitute_T(const BinaryWord& kappa) {
  const std::string& k = kappa.bits();
  const std::size_t n = k.size();
  std::vector<bool> drop(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (k[i] != '1') continue;
    std::size_t prev = (i + n - 1) % n;
    if (k[prev] != '0' || drop[prev] || prev == i) {
      throw Error(ErrorKind::MalformedCuttingSequence,
                  "symbol 1 at position " + std::to_string(i + 1) + " of \"" + k + "\" has no preceding 0");
    }
    drop[prev] = true;
  }
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!drop[i]) out += k[i];
  }
  if (out.empty()) throw Error(ErrorKind::MalformedCuttingSequence, "\"" + k + "\" reduces to the empty word");
  return BinaryWord(std::move(out));
}

BinaryWord m_word(const Fraction& p_over_q, Convention convention) {
  const bool zero_one = convention == Convention::ZeroOne;
  if (p_over_q.num() == p_over_q.den()) {
    if (zero_one) return BinaryWord("1");
    throw Error(ErrorKind::InvalidArgument, "1/1 has no word under the 10 convention");
  }
  if (p_over_q.num() == 0) {
    if (!zero_one) return BinaryWord("0");
    throw Error(ErrorKind::InvalidArgument, "0/1 has no word under the 01 convention");
  }
  const Integer& p = p_over_q.num();
  const Integer& q = p_over_q.den();
  // Descent from (0/1, 1/1). The edge fractions have no word of their own on
  // one side; mediants touching that edge take the closed forms 0^{m-1}1 (01)
  // and 1^{m-1}0 (10).
  Integer ln = 0, ld = 1, rn = 1, rd = 1;
  std::string lw = zero_one ? "" : "0";
  std::string rw = zero_one ? "1" : "";
  for (;;) {
    Integer mn = ln + rn, md = ld + rd;
    std::string w;
    if (zero_one && ln == 0) {
      w = std::string(to_size(md) - 1, '0') + "1";
    } else if (!zero_one && rn == rd) {
      w = std::string(to_size(md) - 1, '1') + "0";
    } else {
      w = zero_one ? rw + lw : lw + rw;
    }
    if (mn == p && md == q) return BinaryWord(std::move(w));
    if (mn * q < p * md) {
      ln = mn;
      ld = md;
      lw = std::move(w);
    } else {
      rn = mn;
      rd = md;
      rw = std::move(w);
    }
  }
}

std::pair<Fraction, Fraction> characteristic_pair_of_bulb(const Fraction& p_over_q) {
  require_open_unit(p_over_q);
  return {word_to_fraction(m_word(p_over_q, Convention::ZeroOne)),
          word_to_fraction(m_word(p_over_q, Convention::OneZero))};
}

BinaryWord base_word(const FareyContext& context) { return m_word(context.P_over_Q, context.convention); }

BinaryWord neighbor_word(const FareyContext& context) {
  return context.convention == Convention::ZeroOne ? m_word(context.S_over_T, Convention::ZeroOne)
                                                   : m_word(context.A_over_B, Convention::OneZero);
}

namespace {

std::string block_bits(const std::string& w, const std::string& x, std::size_t n, std::size_t m) {
  if (m == 0) return w;
  std::string out = power(w, n);
  const std::string tail = x + power(w, n - 1);
  for (std::size_t i = 1; i < m; ++i) out += tail;
  out += x;
  return out;
}

}  // namespace

BinaryWord block_word(const FareyContext& context, std::size_t m) {
  return BinaryWord(block_bits(base_word(context).bits(), neighbor_word(context).bits(), context.hinge_n, m));
}

PeriodicAngle broken_line_angle(const BrokenLineSpec& spec) {
  const BinaryWord w = base_word(spec.context);
  const BinaryWord v = m_word(spec.a_over_b, spec.convention());
  PeriodicAngle angle(power(w.bits(), spec.hinge()), v);
  if (!angle.purely_periodic() || angle.period().size() != spec.period()) {
    throw Error(ErrorKind::CheckFailed, "broken line " + describe(spec) + " did not close up with period b");
  }
  return angle;
}

BinaryWord BlockDecomposition::concatenation() const {
  std::string out;
  for (std::size_t m : exponents) out += block_words.at(m).bits();
  return BinaryWord(std::move(out));
}

BlockDecomposition block_decomposition(const BrokenLineSpec& spec) {
  const FareyContext& ctx = spec.context;
  const Integer& P = ctx.P_over_Q.num();
  const Integer& Q = ctx.P_over_Q.den();
  const Integer& a = spec.a_over_b.num();
  const Integer& b = spec.a_over_b.den();
  const Integer& bn = ctx.bound_fraction.num();
  const Integer& bd = ctx.bound_fraction.den();

  Integer num, den;
  if (ctx.convention == Convention::ZeroOne) {
    // P_m/Q_m <= a/b < P_{m+1}/Q_{m+1}
    num = a * Q - P * b;
    den = bn * b - a * bd;
  } else {
    // P_{m+1}/Q_{m+1} < a/b <= P_m/Q_m
    num = P * b - a * Q;
    den = a * bd - bn * b;
  }
  const std::size_t m = to_size(num / den);
  const bool exact = num % den == 0;

  const std::string period = broken_line_angle(spec).period().bits();
  const std::string w = base_word(ctx).bits();
  const std::string x = neighbor_word(ctx).bits();

  BlockDecomposition out{spec, m, {}, {}};
  std::vector<std::size_t> candidates = exact ? std::vector<std::size_t>{m} : std::vector<std::size_t>{m + 1, m};
  std::vector<std::string> words;
  for (std::size_t c : candidates) {
    words.push_back(block_bits(w, x, ctx.hinge_n, c));
    out.block_words.emplace(c, BinaryWord(words.back()));
  }

  // Longest-first matching with backtracking; dead[pos] marks suffixes that
  // cannot be tiled.
  std::vector<bool> dead(period.size() + 1, false);
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> tile = [&](std::size_t pos) -> bool {
    if (pos == period.size()) return true;
    if (dead[pos]) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const std::string& blk = words[i];
      if (period.compare(pos, blk.size(), blk) != 0 || pos + blk.size() > period.size()) continue;
      chosen.push_back(candidates[i]);
      if (tile(pos + blk.size())) return true;
      chosen.pop_back();
    }
    dead[pos] = true;
    return false;
  };
  if (!tile(0)) {
    throw Error(ErrorKind::CheckFailed, "no block tiling for " + describe(spec));
  }
  out.exponents = std::move(chosen);

  const bool shape_ok = exact ? out.exponents.size() == 1
                              : out.exponents.size() >= 2 && out.exponents.front() == m + 1 &&
                                    out.exponents.back() == m;
  if (!shape_ok || out.concatenation().bits() != period) {
    throw Error(ErrorKind::CheckFailed, "unexpected block shape for " + describe(spec));
  }
  return out;
}

std::vector<Unit> unit_sequence(const BlockDecomposition& blocks) {
  const std::size_t n = blocks.spec.hinge();
  std::vector<Unit> units;
  for (std::size_t m : blocks.exponents) {
    if (m == 0) {
      units.push_back(Unit::Base);
      continue;
    }
    units.insert(units.end(), n, Unit::Base);
    for (std::size_t i = 1; i < m; ++i) {
      units.push_back(Unit::Neighbor);
      units.insert(units.end(), n - 1, Unit::Base);
    }
    units.push_back(Unit::Neighbor);
  }
  return units;
}

}  // namespace sturmian
