#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncequiv/matrix.hpp"
#include "ncequiv/ncpoly.hpp"

namespace ncequiv {

// f = q * h
std::optional<NcPoly> divide_right_by(const NcPoly& f, const NcPoly& h);
// f = h * q
std::optional<NcPoly> divide_left_by(const NcPoly& f, const NcPoly& h);

enum class Side { Left, Right };

// Right: f*u + g*v = 1.  Left: u*f + v*g = 1.
struct ComaxCertificate {
  NcPoly f, g, u, v;
  Side side = Side::Right;

  bool verify() const;
};

std::optional<ComaxCertificate> comaximality_certificate(const NcPoly& f, const NcPoly& g, Side side);

// p = q_p * h, q = q_q * h, s*p + t*q = h.
struct GcrdResult {
  NcPoly h, q_p, q_q, s, t;

  bool verify(const NcPoly& p, const NcPoly& q) const;
};

// Certified greatest common right divisor within degree budget `deg_bound`
// for the combiners (default deg p + deg q); nullopt means undecided.
std::optional<GcrdResult> gcrd_bounded(const NcPoly& p, const NcPoly& q, std::optional<std::size_t> deg_bound = {});

struct Flattening {
  Matrix matrix;
  std::vector<Word> row_words, col_words;  // only words occurring in the support
};

// Coefficient matrix F[u, v] = coeff of u*v with |u| = e.
Flattening flattening(const NcPoly& f, std::size_t e);

// Irreducible homogeneous factors, left to right; all but the last have
// leading coefficient 1.
std::vector<NcPoly> factor_homogeneous(const NcPoly& f);

}  // namespace ncequiv
