#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncequiv/eval.hpp"
#include "ncequiv/matrix.hpp"

namespace ncequiv {

// Homogeneous: sum_j A_j x_j over all coefficients.
// Affine: A_0 + sum_{j>=1} A_j x_j, the first coefficient being constant.
struct LinearPencil {
  bool homogeneous = true;
  std::vector<Matrix> coeffs;

  LinearPencil() = default;
  LinearPencil(bool homogeneous, std::vector<Matrix> coeffs);
  std::size_t size() const { return coeffs.empty() ? 0 : coeffs[0].rows(); }
  std::size_t arity() const { return homogeneous ? coeffs.size() : coeffs.size() - 1; }
};

// sum_j A_j (x) X_j, with A_0 (x) I for the affine constant.
Matrix pencil_eval(const LinearPencil& l, const MatrixTuple& x);

// max over sampled X of ceil(rank L(X) / k); a lower bound for the inner rank.
std::size_t pencil_rank_lower_bound(const LinearPencil& l, std::size_t max_size, std::size_t samples,
                                    std::uint64_t seed);

enum class Similarity { Similar, NotSimilar, Undecided };
std::string to_string(Similarity s);

struct JointSimilarity {
  Similarity verdict = Similarity::Undecided;
  std::optional<Matrix> p;  // P A_j = B_j P, det P != 0
  std::string reason;
  // Pencil evaluation point separating the two, when that is the reason.
  std::optional<MatrixTuple> witness;
  // Word whose A- and B-values differ in trace or rank.
  std::optional<Word> word;

  bool verify(const MatrixTuple& a, const MatrixTuple& b) const;
};

struct SimilarityOptions {
  std::size_t combinations = 32;
  std::size_t max_word_length = 8;
  std::size_t max_words = 4096;
  std::size_t max_size = 3, samples = 20;
  std::uint64_t seed = 1;
};

JointSimilarity joint_similarity(const MatrixTuple& a, const MatrixTuple& b, const SimilarityOptions& opt = {});

struct PaddedPencil {
  std::size_t p_tilde = 0;
  LinearPencil pencil;  // affine in the y variables, ordered (i, row, column)
  std::size_t claimed_rank = 0;   // p~ d - dim ker Lambda(T)
  std::size_t verified_rank = 0;  // randomized lower bound
  // Point Y attaining verified_rank: ceil(rank L(Y) / size) = verified_rank.
  std::optional<MatrixTuple> rank_point;
};

// lambda homogeneous and full; t holds n matrices of shape p x q with p >= q.
PaddedPencil pad_pencil(const LinearPencil& lambda, const std::vector<Matrix>& t, std::size_t samples = 20,
                        std::uint64_t seed = 1);

}  // namespace ncequiv
