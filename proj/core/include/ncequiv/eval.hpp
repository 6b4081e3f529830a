#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncequiv/matrix.hpp"
#include "ncequiv/ncpoly.hpp"
#include "ncequiv/unipoly.hpp"

namespace ncequiv {

struct MatrixTuple {
  std::size_t size = 0;
  std::vector<Matrix> mats;

  MatrixTuple() = default;
  explicit MatrixTuple(std::vector<Matrix> m);
  FieldPtr field() const;
  MatrixTuple conjugated(const Matrix& s) const;  // S^-1 X_j S
};

MatrixTuple direct_sum(const MatrixTuple& a, const MatrixTuple& b);

// Starred letters evaluate to conjugate transposes.
Matrix evaluate(const NcPoly& f, const MatrixTuple& x);
// p(M) by Horner.
Matrix evaluate(const UniPoly& p, const Matrix& m);

// det(tI - M), division-free (Berkowitz).
UniPoly char_poly(const Matrix& m);

struct JordanPart {
  UniPoly factor;                  // t - lambda, or a squarefree factor without rational roots
  std::optional<Scalar> eigenvalue;
  std::vector<std::size_t> ranks;  // rank factor(M)^j for j = 1.. until it repeats
};

struct JordanProfile {
  std::vector<JordanPart> parts;
  std::vector<std::string> diagnostics;
};

// Ranks of factor(M)^j, j = 1, 2, ... up to the first repeat.
std::vector<std::size_t> power_ranks(const Matrix& m, const UniPoly& factor);
JordanProfile jordan_profile(const Matrix& m);
bool operator==(const JordanPart& a, const JordanPart& b);

struct SampleOptions {
  bool hermitian = false;
  // 0 for full rank; otherwise each matrix is a product through this rank.
  std::size_t low_rank = 0;
  // Dyadic entries a/2^20 + i b/2^20 in the unit box instead of integers.
  bool unit_box = false;
  bool complex = false;
};

MatrixTuple sample_tuple(std::size_t k, std::size_t nvars, long bound, std::uint64_t seed,
                         const SampleOptions& opt = {});

// Independent stream per (seed, size, index).
std::uint64_t derive_seed(std::uint64_t seed, std::size_t size, std::size_t index);

struct RefuterConfig {
  std::size_t min_size = 1, max_size = 5, samples = 50;
  std::uint64_t seed = 1;
  long bound = 10;
  double tolerance = 1e-8;
  bool high_precision = false;
  const std::atomic<bool>* cancel = nullptr;
};

struct RefutationWitness {
  enum class Kind { Rank, Charpoly, Jordan, Norm };
  Kind kind = Kind::Rank;
  MatrixTuple x;
  std::size_t power = 1;  // compared f(X)^power with g(X)^power
  std::size_t rank_f = 0, rank_g = 0;
  UniPoly charpoly_f, charpoly_g;
  UniPoly factor;  // jordan: ranks of factor(f(X))^power differ
  std::string norm;  // "frobenius" or "operator"
  double norm_f = 0, norm_g = 0;

  // Re-evaluates the discrepancy exactly (numerically for norms).
  bool verify(const NcPoly& f, const NcPoly& g, double tolerance = 1e-8) const;
};

std::string to_string(RefutationWitness::Kind k);

// Sampling schedule shared by the refuters: small entries, generic
// entries, low-rank and sparse tuples in rotation.
MatrixTuple refuter_sample(std::size_t k, std::size_t nvars, std::size_t index, const RefuterConfig& cfg);

std::optional<RefutationWitness> rank_refuter(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg);
std::optional<RefutationWitness> charpoly_refuter(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg);
// Characteristic polynomials first, then Jordan structure.
std::optional<RefutationWitness> similarity_refuter(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg);
// Ranks of (f(X))^k versus (g(X))^k for k up to the size.
std::optional<RefutationWitness> power_rank_refuter(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg);

// Jordan witness comparing two matrices, if their structures differ.
std::optional<std::pair<UniPoly, std::size_t>> jordan_difference(const Matrix& a, const Matrix& b);

using NcMatrix = std::vector<std::vector<NcPoly>>;
Matrix evaluate(const NcMatrix& f, const MatrixTuple& x);
// max over sampled X of ceil(rank f(X) / k).
std::size_t inner_rank_lower_bound(const NcMatrix& f, std::size_t max_size, std::size_t samples, std::uint64_t seed);

}  // namespace ncequiv
