#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncequiv/eval.hpp"
#include "ncequiv/ideal.hpp"
#include "ncequiv/ncpoly.hpp"
#include "ncequiv/unipoly.hpp"

namespace ncequiv {

struct EquivOptions {
  // Degree budget for intertwiner searches.
  std::size_t max_degree = 12;
  // Random combinations tried inside each solution space.
  std::size_t combinations = 32;
  std::uint64_t seed = 1;
  RefuterConfig refuter;
};

// Basis of {a : f a = a g, deg a <= degree}.
struct IntertwinerSpace {
  std::size_t degree = 0;
  std::vector<NcPoly> basis;
};

IntertwinerSpace intertwiner_space(const NcPoly& f, const NcPoly& g, std::size_t d);
// Normalized to leading coefficient 1; nullopt when none exists up to d_max.
std::optional<NcPoly> minimal_intertwiner(const NcPoly& f, const NcPoly& g, std::size_t d_max);

// f = p(core); core has no constant term, leading coefficient 1, and
// commutes with no nonconstant polynomial of smaller degree.
struct Decomposition {
  UniPoly p;
  NcPoly core;
};

Decomposition decompose(const NcPoly& f);
// p(q(t))
UniPoly compose(const UniPoly& p, const UniPoly& q);

struct IsospectralVerdict {
  bool isospectral = false;
  std::optional<NcPoly> intertwiner;  // f a = a g
  std::optional<RefutationWitness> witness;
  std::string reason;
};

IsospectralVerdict is_isospectral(const NcPoly& f, const NcPoly& g, const EquivOptions& opt = {});

// from = lambda + a b, to = lambda + b a.
struct ChainStep {
  Scalar lambda;
  NcPoly a, b, from, to;

  bool verify() const;
};

std::optional<ChainStep> elementary_intertwined(const NcPoly& f, const NcPoly& g, const EquivOptions& opt = {});

struct ChainResult {
  std::optional<std::vector<ChainStep>> steps;  // f = steps[0].from, ..., steps.back().to = g
  std::string diagnostic;
};

ChainResult intertwining_chain(const NcPoly& f, const NcPoly& g, const EquivOptions& opt = {});
bool verify_chain(const std::vector<ChainStep>& steps, const NcPoly& f, const NcPoly& g);

enum class Verdict { Associated, NotAssociated, Undecided };
std::string to_string(Verdict v);

// Associated: f a = b g with f u + b v = 1 (right) and u' a + v' g = 1 (left).
struct StableAssocVerdict {
  Verdict verdict = Verdict::Undecided;
  NcPoly a, b;
  std::optional<ComaxCertificate> right, left;
  std::optional<RefutationWitness> refutation;
  std::string reason;

  bool verify(const NcPoly& f, const NcPoly& g) const;
};

StableAssocVerdict stable_association(const NcPoly& f, const NcPoly& g, const EquivOptions& opt = {});

// Pointwise similarity coincides with equality.
bool pointwise_similar(const NcPoly& f, const NcPoly& g);

struct NormVerdict {
  bool equivalent = false;
  std::optional<Scalar> zeta;  // g = zeta f
  // f f* and g g* agree up to cyclic rotation (implied by equivalence).
  bool cyclic_check = false;
  std::optional<RefutationWitness> witness;
};

// When cfg is given and the answer is negative, a numeric norm witness is
// searched for.
NormVerdict norm_equivalent(const NcPoly& f, const NcPoly& g, const RefuterConfig* cfg = nullptr);

// X and k with rank (ab)(X)^k != rank (ba)(X)^k; nullopt when a, b commute
// or the budget runs out.
std::optional<RefutationWitness> noncommutativity_witness(const NcPoly& a, const NcPoly& b, const RefuterConfig& cfg);

}  // namespace ncequiv
