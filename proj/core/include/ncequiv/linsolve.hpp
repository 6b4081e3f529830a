#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ncequiv/scalar.hpp"

namespace ncequiv {

// Sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

// Incremental row echelon form over a field. Rows may carry a right-hand
// side; pivots are the smallest surviving column of each reduced row.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols, FieldPtr field = Field::rationals());

  // Returns true if the row was independent of those already added.
  bool add_row(SparseRow row, const Scalar& rhs = Scalar());

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return consistent_; }
  bool is_pivot(std::size_t col) const { return pivot_of_[col] >= 0; }

  // Basis of the homogeneous solution space, one vector per free column.
  std::vector<std::vector<Scalar>> nullspace() const;
  // Solution with every free variable zero.
  std::optional<std::vector<Scalar>> particular() const;

 private:
  struct Pivot {
    std::uint32_t col;
    SparseRow row;  // leading entry 1 at col
    Scalar rhs;
  };

  std::size_t cols_;
  FieldPtr field_;
  std::vector<Pivot> pivots_;
  std::vector<long> pivot_of_;
  bool consistent_ = true;
};

}  // namespace ncequiv
