#pragma once

#include "sturmian/angle.hpp"

#include <string_view>

namespace sturmian {

/// Which lattice-point symbol pair closes a cutting sequence.
enum class Convention { ZeroOne, OneZero };

std::string_view to_string(Convention c) noexcept;
/// Accepts "01" or "10".
Convention parse_convention(std::string_view text);
Convention mirror(Convention c) noexcept;

/// W + 1 in |W|-bit arithmetic; 1^k wraps to 0^k.
BinaryWord prime_plus(const BinaryWord& w);
/// W - 1 in |W|-bit arithmetic; 0^k wraps to 1^k.
BinaryWord prime_minus(const BinaryWord& w);
/// prime_plus for 01, prime_minus for 10.
BinaryWord prime(const BinaryWord& w, Convention c);

/// Balance test on the bi-infinite periodic word w^inf.
bool is_sturmian(const BinaryWord& w);

struct RotationDiagnostics {
  Fraction rotation_number;
  bool preserves_cyclic_order;
};

/// Requires w to be primitive (NonMinimalPeriod otherwise).
RotationDiagnostics rotation_diagnostics(const BinaryWord& w);

/// Least r (1-based) where a_word^inf and c_word^inf differ, for the words of
/// Farey neighbours a/b < c/d. The search runs through |a_word| for 01 and
/// through |c_word| for 10; NoDifference if nothing differs in that range.
std::size_t first_difference(const BinaryWord& a_word, const BinaryWord& c_word,
                             Convention convention = Convention::ZeroOne);

}  // namespace sturmian
