#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eqlines/exact/surd.hpp"

namespace eqlines::frames {

using exact::Rational;
using exact::Surd;

// Dense row-major matrix of exact entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Surd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Surd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  static Matrix identity(std::size_t n);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Surd> data_;
};

// M vectors in R^N, one per row. Immutable once built.
class LineSet {
 public:
  // Raises DomainError unless m, n >= 1 and entries.size() == m * n.
  LineSet(std::size_t m, std::size_t n, std::vector<Surd> entries);
  static LineSet from_rows(const std::vector<std::vector<Surd>>& rows);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  // 0-based indices
  const Surd& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const Surd> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
  const std::vector<Surd>& entries() const { return entries_; }
  // Row-major double approximations.
  std::vector<double> to_doubles() const;

  friend bool operator==(const LineSet&, const LineSet&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Surd> entries_;
};

}  // namespace eqlines::frames
