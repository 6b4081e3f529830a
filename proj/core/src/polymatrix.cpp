#include "ncequiv/polymatrix.hpp"

#include <stdexcept>

namespace ncequiv {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

FieldPtr PolyMatrix::field() const {
  for (const auto& p : a_)
    if (!p.field()->is_rational()) return p.field();
  return Field::rationals();
}

Matrix PolyMatrix::at(const Scalar& lambda) const {
  Matrix m(rows_, cols_, common_field(field(), lambda.field()));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j)(lambda);
  return m;
}

namespace {

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("fraction-free step left a remainder");
  return q;
}

}  // namespace

KtRank rank_over_kt(const PolyMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<UniPoly>> a(rows, std::vector<UniPoly>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  std::size_t k = 0;
  UniPoly prev(Scalar(1));
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    // Lowest-degree pivot keeps the minors small.
    std::size_t best = rows;
    for (std::size_t r = k; r < rows; ++r)
      if (!a[r][col].is_zero() && (best == rows || a[r][col].degree() < a[best][col].degree())) best = r;
    if (best == rows) continue;
    std::swap(a[best], a[k]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      if (a[i][col].is_zero()) {
        for (std::size_t j = col + 1; j < cols; ++j)
          if (!a[i][j].is_zero()) a[i][j] = exact_quotient(a[k][col] * a[i][j], prev);
        continue;
      }
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i][j] = exact_quotient(a[k][col] * a[i][j] - a[i][col] * a[k][j], prev);
      a[i][col] = UniPoly();
    }
    prev = a[k][col];
    ++k;
  }

  KtRank out;
  out.rank = k;
  if (k == 0 || prev.degree() == std::size_t{0}) return out;
  // Every k x k minor vanishes at a drop point, in particular the last pivot.
  UniPoly d = squarefree_part(prev);
  if (d.has_rational_coeffs()) {
    for (const Rational& r : rational_roots(d)) {
      Scalar lambda(r);
      if (rank(m.at(lambda)) < k) out.drop_set.push_back(lambda);
      d = divmod(d, UniPoly::root_factor(lambda)).first;
    }
  }
  out.residual = d.monic();
  return out;
}

}  // namespace ncequiv
