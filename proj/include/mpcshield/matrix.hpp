#pragma once

#include <cstddef>
#include <vector>

#include "mpcshield/field.hpp"

namespace mpcshield {

/// Dense row-major matrix over Z_p. All entries share one modulus.
class MatrixZp {
 public:
  MatrixZp(std::size_t rows, std::size_t cols, PrimeModulus p);
  MatrixZp(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  static MatrixZp identity(std::size_t n, PrimeModulus p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  PrimeModulus modulus() const { return modulus_; }

  FieldElement& at(std::size_t r, std::size_t c);
  FieldElement at(std::size_t r, std::size_t c) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeModulus modulus_;
  std::vector<FieldElement> entries_;
};

/// Determinant by Gaussian elimination with row pivoting; 0 for singular.
FieldElement determinant(const MatrixZp& a);

/// Determinant of a with one row and one column removed (0-based indices).
FieldElement minor_determinant(const MatrixZp& a, std::size_t drop_row,
                               std::size_t drop_col);

struct LinearSolution {
  enum class Kind { Unique, Underdetermined, Inconsistent };
  Kind kind;
  /// Present for Unique and Underdetermined; free variables fixed to 0.
  std::vector<FieldElement> x;
};

/// Row reduction of [a | b]; accepts rectangular systems.
LinearSolution solve_gaussian(const MatrixZp& a,
                              const std::vector<FieldElement>& b);

/// Square systems only; throws SingularSystem unless the solution is unique.
std::vector<FieldElement> solve_linear_system(const MatrixZp& a,
                                              const std::vector<FieldElement>& b);

}  // namespace mpcshield
