#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "orbitsep/field.hpp"

namespace orbitsep {

// Dense matrix over one coefficient field. Immutable once built; the
// elimination routines below work on private copies.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field f);
  static Matrix from_rows(Field f,
                          const std::vector<std::vector<FieldElem>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  const FieldElem& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, FieldElem v);

  std::vector<FieldElem> row(std::size_t i) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<FieldElem> entries_;  // row-major
};

struct RrefResult {
  std::size_t rank;
  Matrix echelon;                      // the unique reduced row echelon form
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form. Over the rationals the forward pass is
// fraction-free (Bareiss) on a denominator-cleared integer copy; a final
// normalization pass produces the canonical RREF (pivots 1, zeros above).
RrefResult rref(const Matrix& m);

// Basis of the right kernel {v : m v = 0}, one vector per non-pivot column,
// canonical: vector for free column f has entry 1 at f, entry 0 at every
// other free column. Size is always cols - rank.
std::vector<std::vector<FieldElem>> nullspace(const Matrix& m);

// Determinant of the submatrix selected by strictly increasing row and
// column index lists of equal length, computed fraction-free.
FieldElem minor_det(const Matrix& m, std::span<const std::size_t> row_idx,
                    std::span<const std::size_t> col_idx);

Matrix transpose(const Matrix& m);

}  // namespace orbitsep
