#include "support.hpp"

#include "sturmian/errors.hpp"

#include <numeric>

namespace sturmian::testing {

std::vector<BrokenLineSpec> all_valid_specs(std::size_t b) {
  std::vector<BrokenLineSpec> out;
  for (std::size_t Q = 2; Q < b; ++Q) {
    for (std::size_t P = 1; P < Q; ++P) {
      if (std::gcd(P, Q) != 1) continue;
      const Fraction PQ(P, Q);
      for (Convention c : {Convention::ZeroOne, Convention::OneZero}) {
        for (std::size_t n = 1; n * Q < b; ++n) {
          for (std::size_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            try {
              out.push_back(validate_spec(PQ, Fraction(a, b), n, c));
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::HypothesisViolated) throw;
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<BrokenLineSpec> all_valid_specs(std::size_t lo, std::size_t hi) {
  std::vector<BrokenLineSpec> out;
  for (std::size_t b = lo; b <= hi; ++b) {
    auto part = all_valid_specs(b);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace sturmian::testing
