#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncequiv/ncpoly.hpp"
#include "ncequiv/scalar.hpp"
#include "ncequiv/unipoly.hpp"

namespace ncequiv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return msg_; }

 private:
  std::string msg_;
  std::size_t line_, column_;
};

using VarNames = std::vector<std::string>;

// x, y, z for n <= 3, else x1..xn.
VarNames default_varnames(std::size_t n);

// Names used by the given sources: the default names for the largest
// variable mentioned.
VarNames infer_varnames(const std::vector<std::string>& sources, const FieldPtr& field = Field::rationals());

// "Q", "Q(i)", "Q(sqrt5)(xi: xi^2=29+13*sqrt5)", optionally prefixed by "field".
FieldPtr parse_field(std::string_view text);

// A source may open with a "field ..." line; that declaration must agree
// with `field` unless `field` is the rationals.
NcPoly parse(std::string_view src, const VarNames& vars, const FieldPtr& field = Field::rationals());
Scalar parse_scalar(std::string_view src, const FieldPtr& field = Field::rationals());
UniPoly parse_unipoly(std::string_view src, const FieldPtr& field = Field::rationals(), const std::string& var = "t");

std::string print(const NcPoly& f, const VarNames& vars);
std::string print_word(const Word& w, const VarNames& vars);

}  // namespace ncequiv
