#pragma once

#include <cstddef>
#include <vector>

#include "ncequiv/matrix.hpp"
#include "ncequiv/unipoly.hpp"

namespace ncequiv {

// Matrix over k[t].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  UniPoly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const UniPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  FieldPtr field() const;

  // Specialization t = lambda.
  Matrix at(const Scalar& lambda) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<UniPoly> a_;
};

struct KtRank {
  std::size_t rank = 0;
  // Rational points where the specialized rank is smaller, each verified.
  std::vector<Scalar> drop_set;
  // Monic squarefree factor of the last pivot minor carrying any remaining
  // (irrational) drop points; 1 when there are none.
  UniPoly residual = UniPoly(Scalar(1));
};

// Rank over k(t) by fraction-free elimination on k[t] entries.
KtRank rank_over_kt(const PolyMatrix& m);

}  // namespace ncequiv
