#pragma once

#include <cstdint>
#include <vector>

namespace tgw {

/// Diagonal reduction of an integer relation matrix, working modulo D.
///
/// The quotient Z^n / (row span + D Z^n) is isomorphic to the direct sum of
/// Z / factors[i]. A vector x maps to the coordinates (x V)_i mod factors[i].
struct SmithForm {
  std::vector<std::int64_t> diagonal;  // one entry per column, 0 past the rank
  std::vector<std::int64_t> factors;   // gcd(diagonal[i], D), with gcd(0, D) = D
  std::vector<std::vector<std::int64_t>> transform;  // n x n column operations V
};

SmithForm smith_normal_form_mod(std::vector<std::vector<std::int64_t>> rows, int columns,
                                std::int64_t modulus);

}  // namespace tgw
