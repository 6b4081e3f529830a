#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncequiv/scalar.hpp"
#include "ncequiv/word.hpp"

namespace ncequiv {

// Dense univariate polynomial in t, coefficients listed from degree 0 up.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);
  UniPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)

  static UniPoly t();
  static UniPoly monomial(std::size_t k, const Scalar& c = Scalar(1));
  // t - r
  static UniPoly root_factor(const Scalar& r);

  const FieldPtr& field() const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1); }
  Scalar coeff(std::size_t i) const;
  const Scalar& leading_coeff() const;
  bool has_rational_coeffs() const;

  Scalar operator()(const Scalar& x) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  // p(c t)
  UniPoly scale_argument(const Scalar& c) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Scalar> c_;
};

// Quotient and remainder; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);
// Yun's algorithm: pairs (s_i, i) with p = lc * prod s_i^i, each s_i monic and
// squarefree, pairwise coprime; factors equal to 1 are omitted.
std::vector<std::pair<UniPoly, std::size_t>> squarefree_decomposition(const UniPoly& p);
// Distinct rational roots in increasing order; requires rational coefficients.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace ncequiv
