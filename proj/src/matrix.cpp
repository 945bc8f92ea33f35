#include "mpcshield/matrix.hpp"

#include <utility>

namespace mpcshield {

MatrixZp::MatrixZp(std::size_t rows, std::size_t cols, PrimeModulus p)
    : rows_(rows), cols_(cols), modulus_(p),
      entries_(rows * cols, p.element(0)) {}

MatrixZp::MatrixZp(std::size_t rows, std::size_t cols,
                   std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols),
      modulus_(entries.empty() ? throw InvalidParams("empty matrix")
                               : entries.front().modulus()),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw InvalidParams("entry count does not match dimensions");
  for (const FieldElement& e : entries_)
    if (e.modulus() != modulus_) throw ModulusMismatch{};
}

MatrixZp MatrixZp::identity(std::size_t n, PrimeModulus p) {
  MatrixZp m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p.element(1);
  return m;
}

FieldElement& MatrixZp::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange{};
  return entries_[r * cols_ + c];
}

FieldElement MatrixZp::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange{};
  return entries_[r * cols_ + c];
}

FieldElement determinant(const MatrixZp& a) {
  if (a.rows() != a.cols()) throw NonSquare{};
  const PrimeModulus p = a.modulus();
  const std::size_t n = a.rows();
  MatrixZp m = a;
  FieldElement det = p.element(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return p.element(0);
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c)
        std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    const FieldElement inv = mod_inverse(m.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const FieldElement factor = m.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        m.at(r, c) -= factor * m.at(col, c);
    }
  }
  return det;
}

FieldElement minor_determinant(const MatrixZp& a, std::size_t drop_row,
                               std::size_t drop_col) {
  if (a.rows() != a.cols()) throw NonSquare{};
  if (drop_row >= a.rows() || drop_col >= a.cols()) throw IndexOutOfRange{};
  const std::size_t n = a.rows();
  MatrixZp sub(n - 1, n - 1, a.modulus());
  for (std::size_t r = 0, sr = 0; r < n; ++r) {
    if (r == drop_row) continue;
    for (std::size_t c = 0, sc = 0; c < n; ++c) {
      if (c == drop_col) continue;
      sub.at(sr, sc) = a.at(r, c);
      ++sc;
    }
    ++sr;
  }
  return determinant(sub);
}

LinearSolution solve_gaussian(const MatrixZp& a,
                              const std::vector<FieldElement>& b) {
  if (b.size() != a.rows()) throw InvalidParams("rhs length != row count");
  const PrimeModulus p = a.modulus();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  MatrixZp m = a;
  std::vector<FieldElement> rhs = b;
  std::vector<std::size_t> pivot_col;
  pivot_col.reserve(cols);

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < cols; ++c)
        std::swap(m.at(pivot, c), m.at(row, c));
      std::swap(rhs[pivot], rhs[row]);
    }
    const FieldElement inv = mod_inverse(m.at(row, col));
    for (std::size_t c = col; c < cols; ++c) m.at(row, c) *= inv;
    rhs[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const FieldElement factor = m.at(r, col);
      for (std::size_t c = col; c < cols; ++c)
        m.at(r, c) -= factor * m.at(row, c);
      rhs[r] -= factor * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }

  for (std::size_t r = row; r < rows; ++r)
    if (!rhs[r].is_zero()) return {LinearSolution::Kind::Inconsistent, {}};

  std::vector<FieldElement> x(cols, p.element(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = rhs[r];

  const auto kind = pivot_col.size() == cols
                        ? LinearSolution::Kind::Unique
                        : LinearSolution::Kind::Underdetermined;
  return {kind, std::move(x)};
}

std::vector<FieldElement> solve_linear_system(const MatrixZp& a,
                                              const std::vector<FieldElement>& b) {
  if (a.rows() != a.cols()) throw NonSquare{};
  LinearSolution sol = solve_gaussian(a, b);
  switch (sol.kind) {
    case LinearSolution::Kind::Unique:
      return std::move(sol.x);
    case LinearSolution::Kind::Inconsistent:
      throw SingularSystem(true);
    case LinearSolution::Kind::Underdetermined:
    default:
      throw SingularSystem(false);
  }
}

}  // namespace mpcshield
