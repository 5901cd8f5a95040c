#pragma once

#include "sturmian/farey.hpp"

#include <cstddef>
#include <vector>

namespace sturmian::testing {

/// Every spec accepted by validate_spec with a/b of denominator exactly b,
/// found by trying every (P/Q, n, convention, a) directly.
std::vector<BrokenLineSpec> all_valid_specs(std::size_t b);

/// all_valid_specs for every period in [lo, hi].
std::vector<BrokenLineSpec> all_valid_specs(std::size_t lo, std::size_t hi);

}  // namespace sturmian::testing
