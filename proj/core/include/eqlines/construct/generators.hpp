#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "eqlines/frames/line_set.hpp"

namespace eqlines::construct {

using frames::LineSet;

enum class Family {
  simplex,
  one_third,
  one_fifth_a,
  one_fifth_b,
  three_n_plus_one,
  two_angle,
  circ_sa_n,
  circ_sa_2n,
  circ_shift,
};

// "one_third" style names; parse_family also accepts '-' for '_'.
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();
// Smallest valid size parameter.
std::size_t family_min_size(Family f);

struct GeneratorSpec {
  Family family;
  std::size_t n;
};

// All generators raise exact::DomainError below their minimum size.

// N + 1 vectors in R^(N+1): -N/sqrt(N(N+1)) on the diagonal, 1/sqrt(N(N+1))
// elsewhere; pairwise inner product -1/N.
LineSet simplex(std::size_t n);
// (sqrt(1/3), +-sqrt(2/3) e_k) for k = 2..N.
LineSet family_one_third(std::size_t n);
// N - 1 vectors in R^N at 1/5. Row pairs (sqrt(1/5), u, +-v) on coordinates
// (1, 2k, 2k+1); for even N a closing row (sqrt(1/5), 0, ..., 0, sqrt(4/5)).
// Variant a uses u = v = sqrt(2/5), variant b u = sqrt(1/5), v = sqrt(3/5).
LineSet family_one_fifth_a(std::size_t n);
LineSet family_one_fifth_b(std::size_t n);
// K copies of BB5 sharing the first coordinate; copy j also uses
// coordinates 3j-1, 3j, 3j+1.
LineSet family_three_n_plus_one(std::size_t k);
// 2N vectors in R^N: rows (+-x e_k + y e_{k+1}) for k < N and
// (y e_1 +- x e_N), with x = theta, y = (1 + sqrt 5)/2 theta.
LineSet two_angle(std::size_t n);
// The +x and -x rows of two_angle(N) as two circulant N x N halves.
std::pair<LineSet, LineSet> split_circulant(std::size_t n);
// a everywhere except -b on the diagonal; a = 2/N, b = (N-2)/N.
LineSet circ_sa_n(std::size_t n);
// 2N x 2N with -b at column i + N (mod 2N); a = 1/N, b = (N-1)/N.
LineSet circ_sa_2n(std::size_t n);
// -b at column i + 1 (mod N); a = 2/N, b = (N-2)/N.
LineSet circ_shift(std::size_t n);

LineSet generate(const GeneratorSpec& spec);

// Row i + 1 equals row i shifted right by one position (cyclically), and
// row 1 equals the shift of row N.
bool is_circulant(const LineSet& ls);

}  // namespace eqlines::construct
