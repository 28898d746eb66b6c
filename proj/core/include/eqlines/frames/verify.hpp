#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "eqlines/frames/line_set.hpp"

namespace eqlines::frames {

// Raises DomainError on a length mismatch.
Surd inner_product(std::span<const Surd> u, std::span<const Surd> v);
// <f_i, f_j>, 0-based rows.
Surd inner_product(const LineSet& ls, std::size_t i, std::size_t j);
// M x M matrix of inner products.
Matrix gram(const LineSet& ls);
// S = sum_i f_i f_i^T, an N x N matrix.
Matrix frame_operator(const LineSet& ls);
// Exact rank by fraction-free elimination.
std::size_t rank(const Matrix& a);
std::size_t rank(const LineSet& ls);

struct Tightness {
  bool tight = false;
  // m / rank when tight
  std::optional<Rational> frame_bound;
  std::size_t rank = 0;
};
// Tight on the span: S^2 = (M / r) S with r = rank. For r = N this is
// S = (M / N) I.
Tightness is_tight(const LineSet& ls);

// (M - N) / (N (M - 1)); requires M >= 2 and 1 <= N <= M.
Rational welch_bound_sq(std::size_t m, std::size_t n);
// N (N + 1) / 2
std::uint64_t gerzon_bound(std::size_t n);

enum class NeumannStatus { not_applicable, pass, violation };
std::string_view to_string(NeumannStatus s);
// For M > 2N a common angle c must be 1/alpha with alpha an odd integer.
NeumannStatus neumann_lint(std::size_t m, std::size_t n, const Surd& c);

// Orthonormal rows; raises DomainError when not square.
bool is_unitary(const LineSet& ls);

struct AngleCount {
  Surd angle;  // |<f_i, f_j>|
  std::size_t count = 0;
};
// Distinct absolute inner products over pairs i < j, ascending.
// Raises DomainError unless every row has unit norm.
std::vector<AngleCount> angle_spectrum(const LineSet& ls);

enum class Status { equiangular, multiple_angles, not_unit_norm, parallel_lines };
std::string_view to_string(Status s);

// Row numbers start at 1. For not_unit_norm, i == j and value = |f_i|^2.
struct PairValue {
  std::size_t i = 0;
  std::size_t j = 0;
  Surd value;
  friend bool operator==(const PairValue&, const PairValue&) = default;
};

struct VerificationReport {
  std::size_t m = 0;
  std::size_t n = 0;
  Status status = Status::equiangular;
  // Absent for a single vector or when the set is not equiangular.
  std::optional<Surd> common_angle;
  std::vector<AngleCount> angle_spectrum;
  // Pairs responsible for a negative verdict: wrong norms, parallel pairs,
  // or pairs away from the most frequent angle.
  std::vector<PairValue> offending_pairs;
  bool is_tight = false;
  std::optional<Rational> frame_bound;
  std::size_t rank = 0;
  // equiangular, M >= 2 and c^2 equals the Welch bound for (M, rank)
  bool welch_equality = false;
  std::int64_t gerzon_slack = 0;
  NeumannStatus neumann = NeumannStatus::not_applicable;
};

VerificationReport verify_equiangular(const LineSet& ls);

// Equiangular tight frame over its span. Raises std::logic_error if
// Welch equality and tightness disagree for an equiangular set.
bool is_etf(const LineSet& ls);

inline bool operator==(const AngleCount& a, const AngleCount& b) { return a.angle == b.angle && a.count == b.count; }

}  // namespace eqlines::frames
