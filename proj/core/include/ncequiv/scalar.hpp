#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncequiv {

using Rational = mpq_class;

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

// Coordinates over the monomial basis of a quadratic tower: bit j of the
// index says whether generator j appears.
using Coeffs = boost::container::small_vector<Rational, 1>;

// Q(g_1)...(g_m) with g_j^2 = r_j, r_j in the field below g_j.
class Field {
 public:
  struct Generator {
    std::string name;
    Coeffs radicand;  // over the first `index` generators
    bool imaginary;   // complex conjugation sends g to -g instead of g
  };

  static FieldPtr rationals();
  static FieldPtr gaussian();
  static FieldPtr adjoin(const FieldPtr& base, std::string name, const Scalar& radicand);

  std::size_t depth() const { return gens_.size(); }
  std::size_t dimension() const { return std::size_t{1} << gens_.size(); }
  bool is_rational() const { return gens_.empty(); }
  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<std::size_t> generator_index(std::string_view name) const;

  // Declaration text accepted by parse_field.
  const std::string& declaration() const { return decl_; }

  friend bool same_field(const Field& a, const Field& b) {
    return &a == &b || a.decl_ == b.decl_;
  }

 private:
  std::vector<Generator> gens_;
  std::string decl_ = "Q";
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// Field of the result of combining the two; throws FieldMismatch.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

class Scalar {
 public:
  Scalar();
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  Scalar(FieldPtr field, Coeffs c);

  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar generator(const FieldPtr& f, std::size_t index);

  // The rational field is stored as a null pointer so that copies of
  // rational scalars never touch a reference count.
  const FieldPtr& field() const;
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Requires is_rational().
  const Rational& to_rational() const;

  Scalar in_field(const FieldPtr& f) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  // Complex conjugation under the principal embedding.
  Scalar conj() const;
  std::string to_string() const;
  // True when to_string() needs brackets inside a product.
  bool is_compound() const;

 private:
  FieldPtr field_;
  Coeffs c_;
};

}  // namespace ncequiv
