#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "orbitsep/matrix.hpp"

using namespace orbitsep;

namespace {

Matrix qmat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<FieldElem>> elems;
  for (const auto& r : rows) {
    std::vector<FieldElem> row;
    for (long v : r) row.push_back(FieldElem::rational(v));
    elems.push_back(std::move(row));
  }
  return Matrix::from_rows(kRationals, elems);
}

oracle::Mat to_oracle(const Matrix& m) {
  oracle::Mat out(m.rows(), oracle::Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).rat();
  return out;
}

}  // namespace

TEST_CASE("rank of proportional rows") {
  auto r = rref(qmat({{1, 2}, {2, 4}}));
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("full-rank 2x2 reduces to identity") {
  // hand elimination: [[1,2],[3,4]] -> [[1,2],[0,-2]] -> [[1,0],[0,1]]
  auto r = rref(qmat({{1, 2}, {3, 4}}));
  CHECK(r.rank == 2);
  CHECK(r.echelon.at(0, 0).is_one());
  CHECK(r.echelon.at(0, 1).is_zero());
  CHECK(r.echelon.at(1, 0).is_zero());
  CHECK(r.echelon.at(1, 1).is_one());
}

TEST_CASE("empty matrix") {
  Matrix m(0, 3, kRationals);
  auto r = rref(m);
  CHECK(r.rank == 0);
  CHECK(r.pivot_cols.empty());
  CHECK(nullspace(m).size() == 3);
}

TEST_CASE("nullspace of 2x3 system") {
  // solve by hand: rows (1,2,0),(1,2,2) force x3 = 0, x1 = -2 x2
  auto basis = nullspace(qmat({{1, 2, 0}, {1, 2, 2}}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == FieldElem::rational(-2));
  CHECK(basis[0][1] == FieldElem::rational(1));
  CHECK(basis[0][2] == FieldElem::rational(0));
}

TEST_CASE("nullspace of identity is empty") {
  CHECK(nullspace(qmat({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("nullspace of zero matrix is the standard basis") {
  auto basis = nullspace(qmat({{0, 0, 0}}));
  REQUIRE(basis.size() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(basis[j][k] == FieldElem::rational(j == k ? 1 : 0));
  }
}

TEST_CASE("minor determinants") {
  Matrix m = qmat({{1, 2}, {3, 4}});
  std::vector<std::size_t> all{0, 1};
  CHECK(minor_det(m, all, all) == FieldElem::rational(-2));
  std::vector<std::size_t> r0{0}, c1{1};
  CHECK(minor_det(m, r0, c1) == FieldElem::rational(2));

  Matrix rep = qmat({{1, 2}, {1, 2}});
  CHECK(minor_det(rep, all, all).is_zero());

  std::vector<std::size_t> bad{1, 0};
  CHECK_THROWS_AS(minor_det(m, bad, all), UsageError);
  CHECK_THROWS_AS(minor_det(m, r0, all), UsageError);
}

TEST_CASE("rref is idempotent and matches the oracle on random matrices") {
  std::mt19937_64 eng(12345);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4), dim(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = dim(eng), cols = dim(eng);
    std::vector<std::vector<FieldElem>> elems(rows);
    for (auto& r : elems)
      for (std::size_t j = 0; j < cols; ++j)
        r.push_back(FieldElem::rational(num(eng), den(eng)));
    Matrix m = Matrix::from_rows(kRationals, elems);

    auto ours = rref(m);
    auto naive = oracle::rref(to_oracle(m), cols);
    REQUIRE(ours.rank == naive.rank);
    CHECK(ours.pivot_cols == naive.pivots);
    for (std::size_t i = 0; i < ours.rank; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        CHECK(ours.echelon.at(i, j).rat() == naive.echelon[i][j]);

    // idempotence
    auto again = rref(ours.echelon);
    CHECK(again.rank == ours.rank);
    for (std::size_t i = 0; i < ours.rank; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        CHECK(again.echelon.at(i, j) == ours.echelon.at(i, j));

    // rank(m) = rank(transpose(m))
    CHECK(rref(transpose(m)).rank == ours.rank);

    // exact annihilation of the kernel
    for (const auto& v : nullspace(m)) {
      for (std::size_t i = 0; i < rows; ++i) {
        FieldElem acc = FieldElem::zero(kRationals);
        for (std::size_t j = 0; j < cols; ++j) acc += m.at(i, j) * v[j];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("rank over Q agrees with rank mod a random large prime") {
  std::mt19937_64 eng(777);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5), dim(1, 6);
  std::uniform_int_distribution<std::uint64_t> pr(1 << 20, (1 << 21));
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = dim(eng), cols = dim(eng);
    std::vector<std::vector<FieldElem>> elems(rows);
    for (auto& r : elems)
      for (std::size_t j = 0; j < cols; ++j)
        r.push_back(FieldElem::rational(num(eng), den(eng)));
    Matrix m = Matrix::from_rows(kRationals, elems);
    std::size_t rank_q = rref(m).rank;

    // bad-prime guard: retry when the reduction is undefined or loses rank
    bool agreed = false;
    for (int attempt = 0; attempt < 10 && !agreed; ++attempt) {
      std::uint64_t p = pr(eng);
      while (!is_prime_modulus(p)) ++p;
      try {
        Matrix mp(rows, cols, Field{p});
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < cols; ++j)
            mp.set(i, j, m.at(i, j).to_field(Field{p}));
        agreed = rref(mp).rank == rank_q;
      } catch (const BadPrimeError&) {
      }
    }
    CHECK(agreed);
  }
}
