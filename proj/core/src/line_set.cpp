#include "eqlines/frames/line_set.hpp"

namespace eqlines::frames {

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Surd(1);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw exact::DomainError("matrix shapes do not match");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Surd& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

LineSet::LineSet(std::size_t m, std::size_t n, std::vector<Surd> entries)
    : m_(m), n_(n), entries_(std::move(entries)) {
  if (m_ == 0 || n_ == 0) throw exact::DomainError("a line set needs at least one row and one column");
  if (entries_.size() != m_ * n_) throw exact::DomainError("entry count does not match m * n");
}

LineSet LineSet::from_rows(const std::vector<std::vector<Surd>>& rows) {
  if (rows.empty() || rows[0].empty()) throw exact::DomainError("a line set needs at least one row and one column");
  std::size_t n = rows[0].size();
  std::vector<Surd> flat;
  flat.reserve(rows.size() * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw exact::DomainError("ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return LineSet(rows.size(), n, std::move(flat));
}

std::vector<double> LineSet::to_doubles() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.to_double());
  return out;
}

}  // namespace eqlines::frames
