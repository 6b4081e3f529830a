#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncequiv/scalar.hpp"

namespace ncequiv {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldPtr field = Field::rationals());
  static Matrix identity(std::size_t n, FieldPtr field = Field::rationals());
  // Row-major entries.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  // Field of the entries; the rationals if all entries are rational.
  FieldPtr field() const;

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  Scalar trace() const;
  Matrix transpose() const;
  Matrix conj_transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix pow(std::size_t k) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RankNullspace {
  std::size_t rank = 0;
  std::vector<std::vector<Scalar>> nullspace;
};

struct AffineSolution {
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> nullspace;
};

RankNullspace rank_nullspace(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<AffineSolution> solve_affine(const Matrix& m, const std::vector<Scalar>& rhs);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace ncequiv
