#include "ncequiv/matrix.hpp"

#include <stdexcept>

#include "ncequiv/linsolve.hpp"

namespace ncequiv {

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldPtr field)
    : rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(std::size_t n, FieldPtr field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  FieldPtr f = Field::rationals();
  for (const auto& r : rows)
    for (const auto& s : r) f = common_field(f, s.field());
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), nc, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j].in_field(f);
  }
  return m;
}

FieldPtr Matrix::field() const {
  for (const auto& s : a_)
    if (s.coeffs().size() > 1) return s.field();
  return Field::rationals();
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(field());
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj_transpose() const {
  Matrix t(cols_, rows_, field());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc, field());
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block outside matrix");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& s : a_) s *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  Matrix c(a.rows_, b.cols_, common_field(a.field(), b.field()));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.a_.size(); ++k)
    if (!(a.a_[k] == b.a_[k])) return false;
  return true;
}

Matrix Matrix::pow(std::size_t k) const {
  if (!is_square()) throw std::invalid_argument("power of a non-square matrix");
  Matrix r = identity(rows_, field());
  Matrix b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return r;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), common_field(a.field(), b.field()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = x * b(p, q);
    }
  return k;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix s(a.rows() + b.rows(), a.cols() + b.cols(), common_field(a.field(), b.field()));
  s.set_block(0, 0, a);
  s.set_block(a.rows(), a.cols(), b);
  return s;
}

namespace {

using ZRows = std::vector<std::vector<mpz_class>>;

// Rows scaled to integers; returns the product of the scale factors.
Rational integer_rows(const Matrix& m, ZRows& z) {
  Rational scale = 1;
  z.assign(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class d = m(i, j).to_rational().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j).to_rational();
      z[i][j] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }
  return scale;
}

// Fraction-free elimination; returns the rank and leaves the last pivot,
// which is the determinant up to sign for a nonsingular square matrix.
std::size_t bareiss(ZRows& a, std::size_t cols, int& sign) {
  const std::size_t rows = a.size();
  std::size_t k = 0;
  mpz_class prev = 1;
  sign = 1;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t r = k;
    while (r < rows && a[r][col] == 0) ++r;
    if (r == rows) continue;
    if (r != k) {
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[k][col] * a[i][j] - a[i][col] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[k][col];
    ++k;
  }
  return k;
}

SparseEchelon echelon(const Matrix& m) {
  SparseEchelon e(m.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) row.emplace_back(static_cast<std::uint32_t>(j), m(i, j));
    e.add_row(std::move(row));
  }
  return e;
}

bool all_rational(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).coeffs().size() > 1) return false;
  return true;
}

}  // namespace

RankNullspace rank_nullspace(const Matrix& m) {
  SparseEchelon e = echelon(m);
  return {e.rank(), e.nullspace()};
}

std::size_t rank(const Matrix& m) {
  if (all_rational(m)) {
    ZRows z;
    integer_rows(m, z);
    int sign = 1;
    return bareiss(z, m.cols(), sign);
  }
  return echelon(m).rank();
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  FieldPtr f = m.field();
  for (const auto& r : rhs) f = common_field(f, r.field());
  SparseEchelon e(m.cols(), f);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) row.emplace_back(static_cast<std::uint32_t>(j), m(i, j));
    e.add_row(std::move(row), rhs[i]);
  }
  auto p = e.particular();
  if (!p) return std::nullopt;
  return AffineSolution{std::move(*p), e.nullspace()};
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (all_rational(m)) {
    ZRows z;
    Rational scale = integer_rows(m, z);
    int sign = 1;
    if (bareiss(z, n, sign) < n) return Scalar(0);
    Rational d(z[n - 1][n - 1] * sign);
    return Scalar(d / scale);
  }
  Matrix a = m;
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a(r, c).is_zero()) ++r;
    if (r == n) return Scalar::zero(m.field());
    if (r != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n, m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a(r, c).is_zero()) ++r;
    if (r == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(r, j), a(c, j));
      std::swap(inv(r, j), inv(c, j));
    }
    Scalar p = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= p;
      inv(c, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace ncequiv
