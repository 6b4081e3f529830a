#include "ncequiv/linsolve.hpp"

#include <stdexcept>

namespace ncequiv {

SparseEchelon::SparseEchelon(std::size_t cols, FieldPtr field)
    : cols_(cols), field_(std::move(field)), pivot_of_(cols, -1) {}

namespace {

// a - f * b, where both lead with the same column which cancels.
SparseRow axpy_cancel(const SparseRow& a, const Scalar& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 1, j = 1;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add_row(SparseRow row, const Scalar& rhs_in) {
  Scalar rhs = rhs_in;
  for (const auto& [c, v] : row)
    if (c >= cols_) throw std::out_of_range("column out of range");
  while (!row.empty()) {
    long p = pivot_of_[row[0].first];
    if (p < 0) break;
    const Pivot& piv = pivots_[static_cast<std::size_t>(p)];
    Scalar f = row[0].second;
    row = axpy_cancel(row, f, piv.row);
    if (!piv.rhs.is_zero()) rhs -= f * piv.rhs;
  }
  if (row.empty()) {
    if (!rhs.is_zero()) consistent_ = false;
    return false;
  }
  Scalar inv = row[0].second.inverse();
  for (auto& [c, v] : row) v *= inv;
  rhs *= inv;
  std::uint32_t col = row[0].first;
  pivot_of_[col] = static_cast<long>(pivots_.size());
  pivots_.push_back({col, std::move(row), std::move(rhs)});
  return true;
}

std::vector<std::vector<Scalar>> SparseEchelon::nullspace() const {
  std::vector<std::size_t> order;  // pivot indices by decreasing column
  order.reserve(pivots_.size());
  for (std::size_t c = cols_; c-- > 0;)
    if (pivot_of_[c] >= 0) order.push_back(static_cast<std::size_t>(pivot_of_[c]));
  const Scalar zero = Scalar::zero(field_);
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_of_[f] >= 0) continue;
    std::vector<Scalar> x(cols_, zero);
    x[f] = Scalar::one(field_);
    for (std::size_t p : order) {
      const Pivot& piv = pivots_[p];
      if (piv.col > f) continue;
      Scalar s = zero;
      for (std::size_t k = 1; k < piv.row.size(); ++k) {
        const auto& [c, v] = piv.row[k];
        if (!x[c].is_zero()) s -= v * x[c];
      }
      x[piv.col] = std::move(s);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<Scalar>> SparseEchelon::particular() const {
  if (!consistent_) return std::nullopt;
  const Scalar zero = Scalar::zero(field_);
  std::vector<Scalar> x(cols_, zero);
  for (std::size_t c = cols_; c-- > 0;) {
    long p = pivot_of_[c];
    if (p < 0) continue;
    const Pivot& piv = pivots_[static_cast<std::size_t>(p)];
    Scalar s = piv.rhs;
    for (std::size_t k = 1; k < piv.row.size(); ++k) {
      const auto& [cc, v] = piv.row[k];
      if (!x[cc].is_zero()) s -= v * x[cc];
    }
    x[c] = std::move(s);
  }
  return x;
}

}  // namespace ncequiv
