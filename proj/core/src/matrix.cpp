#include "orbitsep/matrix.hpp"

#include <algorithm>
#include <utility>

namespace orbitsep {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f),
      entries_(rows * cols, FieldElem::zero(f)) {}

Matrix Matrix::from_rows(Field f,
                         const std::vector<std::vector<FieldElem>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc)
      throw UsageError("ragged rows in matrix construction");
    for (std::size_t j = 0; j < nc; ++j) {
      if (!(rows[i][j].field() == f))
        throw UsageError("mixed coefficient fields in matrix");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

const FieldElem& Matrix::at(std::size_t i, std::size_t j) const {
  return entries_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, FieldElem v) {
  if (!(v.field() == field_))
    throw UsageError("mixed coefficient fields in matrix");
  entries_[i * cols_ + j] = std::move(v);
}

std::vector<FieldElem> Matrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
         a.entries_ == b.entries_;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.set(j, i, m.at(i, j));
  return t;
}

namespace {

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("fraction-free step not exact");
  return q;
}

// Denominator-cleared integer copy: each row scaled by the lcm of its
// entries' denominators. Row scaling preserves rank, pivots and kernel.
std::vector<std::vector<mpz_class>> cleared_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m.at(i, j).rat().get_den().get_mpz_t());
    rows[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m.at(i, j).rat();
      rows[i][j] = q.get_num() * exact_div(l, q.get_den());
    }
  }
  return rows;
}

// One-step fraction-free forward elimination (Bareiss) with column
// skipping. Returns pivot columns; `rows` is left upper-echelon with exact
// integer entries.
std::vector<std::size_t> bareiss_forward(
    std::vector<std::vector<mpz_class>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j)
        rows[i][j] =
            exact_div(rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j], prev);
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RrefResult rref_rational(const Matrix& m) {
  auto rows = cleared_rows(m);
  auto pivots = bareiss_forward(rows, m.cols());
  std::size_t rank = pivots.size();

  // Normalization pass: scale pivots to 1 and eliminate above.
  std::vector<std::vector<mpq_class>> red(rank,
                                          std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      red[i][j] = mpq_class(rows[i][j]) / mpq_class(rows[i][pivots[i]]);
      red[i][j].canonicalize();
    }
  for (std::size_t i = rank; i-- > 0;)
    for (std::size_t k = 0; k < i; ++k) {
      mpq_class f = red[k][pivots[i]];
      if (f == 0) continue;
      for (std::size_t j = pivots[i]; j < m.cols(); ++j) {
        red[k][j] -= f * red[i][j];
        red[k][j].canonicalize();
      }
    }

  Matrix ech(m.rows(), m.cols(), m.field());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      ech.set(i, j, FieldElem::rational(red[i][j]));
  return {rank, std::move(ech), std::move(pivots)};
}

RrefResult rref_prime(const Matrix& m) {
  std::vector<std::vector<FieldElem>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    FieldElem inv = rows[r][c].inverse();
    for (std::size_t j = c; j < m.cols(); ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      FieldElem f = rows[i][c];
      for (std::size_t j = c; j < m.cols(); ++j)
        rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix ech(m.rows(), m.cols(), m.field());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) ech.set(i, j, rows[i][j]);
  return {pivots.size(), std::move(ech), std::move(pivots)};
}

}  // namespace

RrefResult rref(const Matrix& m) {
  return m.field().rational() ? rref_rational(m) : rref_prime(m);
}

std::vector<std::vector<FieldElem>> nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<FieldElem> v(m.cols(), FieldElem::zero(m.field()));
    v[f] = FieldElem::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i)
      v[r.pivot_cols[i]] = -r.echelon.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldElem minor_det(const Matrix& m, std::span<const std::size_t> row_idx,
                    std::span<const std::size_t> col_idx) {
  if (row_idx.size() != col_idx.size())
    throw UsageError("minor_det requires a square selection");
  auto check = [&](std::span<const std::size_t> idx, std::size_t bound) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= bound) throw UsageError("minor_det index out of range");
      if (k > 0 && idx[k] <= idx[k - 1])
        throw UsageError("minor_det indices must be strictly increasing");
    }
  };
  check(row_idx, m.rows());
  check(col_idx, m.cols());

  std::size_t k = row_idx.size();
  if (k == 0) return FieldElem::one(m.field());

  Matrix sub(k, k, m.field());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      sub.set(i, j, m.at(row_idx[i], col_idx[j]));

  if (m.field().rational()) {
    auto rows = cleared_rows(sub);
    mpq_class scale = 1;  // det(sub) = det(cleared) / prod(row multipliers)
    for (std::size_t i = 0; i < k; ++i) {
      mpz_class l = 1;
      for (std::size_t j = 0; j < k; ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                sub.at(i, j).rat().get_den().get_mpz_t());
      scale *= mpq_class(l);
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t sel = c;
      while (sel < k && rows[sel][c] == 0) ++sel;
      if (sel == k) return FieldElem::zero(m.field());
      if (sel != c) {
        std::swap(rows[c], rows[sel]);
        sign = -sign;
      }
      for (std::size_t i = c + 1; i < k; ++i) {
        for (std::size_t j = c + 1; j < k; ++j)
          rows[i][j] = exact_div(
              rows[c][c] * rows[i][j] - rows[i][c] * rows[c][j], prev);
        rows[i][c] = 0;
      }
      prev = rows[c][c];
    }
    mpq_class det = mpq_class(rows[k - 1][k - 1]) / scale;
    if (sign < 0) det = -det;
    det.canonicalize();
    return FieldElem::rational(det);
  }

  // prime field: plain elimination, tracking the scaling
  std::vector<std::vector<FieldElem>> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = sub.row(i);
  FieldElem det = FieldElem::one(m.field());
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t sel = c;
    while (sel < k && rows[sel][c].is_zero()) ++sel;
    if (sel == k) return FieldElem::zero(m.field());
    if (sel != c) {
      std::swap(rows[c], rows[sel]);
      det = -det;
    }
    det *= rows[c][c];
    FieldElem inv = rows[c][c].inverse();
    for (std::size_t i = c + 1; i < k; ++i) {
      FieldElem f = rows[i][c] * inv;
      for (std::size_t j = c; j < k; ++j) rows[i][j] -= f * rows[c][j];
    }
  }
  return det;
}

}  // namespace orbitsep
