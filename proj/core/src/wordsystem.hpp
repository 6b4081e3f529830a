#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ncequiv/linsolve.hpp"
#include "ncequiv/ncpoly.hpp"

namespace ncequiv::detail {

// Letter codes occurring in the given polynomials, in increasing order.
std::vector<char> alphabet_of(std::initializer_list<const NcPoly*> polys);

// Every word of length at most d over the alphabet, in print order.
std::vector<Word> words_up_to(const std::vector<char>& alphabet, std::size_t d);
std::vector<Word> words_of_length(const std::vector<char>& alphabet, std::size_t d);

// Linear equations in the coefficients of unknown polynomials U_k with
// prescribed supports:  sum over terms of scale * left * U_k * right = target.
class WordSystem {
 public:
  explicit WordSystem(FieldPtr field) : field_(std::move(field)) {}

  std::size_t add_unknown(std::vector<Word> basis);
  void add_term(std::size_t unknown, const NcPoly& left, const NcPoly& right, const Scalar& scale = Scalar(1));
  void set_target(const NcPoly& target) { target_ = target; }
  // Only equations on words passing the filter are imposed.
  void keep_rows(std::function<bool(const Word&)> keep) { keep_ = std::move(keep); }

  std::size_t num_unknowns() const { return offsets_.empty() ? 0 : offsets_.back(); }

  struct Solution {
    std::size_t rank = 0;
    // One polynomial per unknown.
    std::optional<std::vector<NcPoly>> particular;
    std::vector<std::vector<NcPoly>> nullspace;
  };
  Solution solve(bool want_nullspace = true) const;

  std::vector<NcPoly> split(const std::vector<Scalar>& x) const;

 private:
  struct Term {
    std::size_t unknown;
    NcPoly left, right;
    Scalar scale;
  };

  FieldPtr field_;
  std::vector<std::vector<Word>> bases_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Term> terms_;
  NcPoly target_;
  std::function<bool(const Word&)> keep_;
};

}  // namespace ncequiv::detail
