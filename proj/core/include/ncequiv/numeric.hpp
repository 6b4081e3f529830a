#pragma once

#include <optional>

#include "ncequiv/eval.hpp"

namespace ncequiv {

struct NormPair {
  double frobenius = 0;
  double operator_norm = 0;
};

// Floating evaluation of f(X) in the principal complex embedding of the
// tuple's field; 53-bit, or 256-bit when high_precision is set.
NormPair numeric_norms(const NcPoly& f, const MatrixTuple& x, bool high_precision = false);
// Largest entry modulus of f(X).
double numeric_max_abs(const NcPoly& f, const MatrixTuple& x, bool high_precision = false);

// Dyadic complex samples; checks Frobenius and operator norms.
std::optional<RefutationWitness> norm_refuter(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg);

}  // namespace ncequiv
