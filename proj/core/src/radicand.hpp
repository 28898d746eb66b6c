#pragma once

#include <cstdint>
#include <vector>

namespace eqlines::exact::detail {

// Pairwise coprime integers > 1 such that each input is a product of a
// subset of them. Square roots of distinct products of the base are
// linearly independent over Q when the inputs are square-free.
std::vector<std::uint64_t> coprime_base(std::vector<std::uint64_t> values);

// d * e / gcd(d, e)^2, together with gcd(d, e). Raises UnsupportedRadicand
// on 64-bit overflow.
struct RadicalProduct {
  std::uint64_t rad;
  std::uint64_t gcd;
};
RadicalProduct multiply_radicands(std::uint64_t d, std::uint64_t e);

}  // namespace eqlines::exact::detail
