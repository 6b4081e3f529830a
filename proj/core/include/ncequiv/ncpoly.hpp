#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ncequiv/scalar.hpp"
#include "ncequiv/word.hpp"

namespace ncequiv {

class UniPoly;

// Element of the free algebra k<x, x*>: a finitely supported map from words
// to nonzero scalars.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar, GradedLex>;

  NcPoly() = default;
  explicit NcPoly(FieldPtr field);
  NcPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  NcPoly(long c) : NcPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  NcPoly(int c) : NcPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static NcPoly monomial(const Word& w, const Scalar& c = Scalar(1));
  static NcPoly variable(std::size_t var, bool star = false);

  const FieldPtr& field() const;
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  bool has_star() const;
  Degree degree() const;
  // Smallest word length in the support; requires a nonzero polynomial.
  std::size_t low_degree() const;
  std::size_t num_vars() const;

  Scalar coeff(const Word& w) const;
  Scalar constant_term() const { return coeff(Word{}); }
  // First term in print order; requires a nonzero polynomial.
  const Word& leading_word() const;
  const Scalar& leading_coeff() const;

  void add_term(const Word& w, const Scalar& c);
  NcPoly homogeneous_component(std::size_t d) const;
  // Entry d is the degree-d part; empty for the zero polynomial.
  std::vector<NcPoly> homogeneous_components() const;
  NcPoly star() const;
  NcPoly pow(std::size_t k) const;
  NcPoly in_field(const FieldPtr& f) const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
  friend bool operator==(const NcPoly& a, const NcPoly& b);

 private:
  void adopt_field(const FieldPtr& f);

  FieldPtr field_;  // null means the rationals
  Terms terms_;
};

// p(f), the constant term of p becoming a multiple of the empty word.
NcPoly compose(const UniPoly& p, const NcPoly& f);

// f - g is a sum of commutators.
bool cyclically_equivalent(const NcPoly& f, const NcPoly& g);

// Collapses every word to its least rotation.
NcPoly cyclic_canonical(const NcPoly& f);

}  // namespace ncequiv
