#include "ncequiv/pencil.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ncequiv {

LinearPencil::LinearPencil(bool h, std::vector<Matrix> c) : homogeneous(h), coeffs(std::move(c)) {
  if (!homogeneous && coeffs.empty()) throw std::invalid_argument("affine pencil without a constant term");
  for (const auto& a : coeffs)
    if (!a.is_square() || a.rows() != size()) throw std::invalid_argument("pencil coefficients must be square of equal size");
}

Matrix pencil_eval(const LinearPencil& l, const MatrixTuple& x) {
  if (x.mats.size() != l.arity())
    throw std::invalid_argument("pencil has arity " + std::to_string(l.arity()) + ", tuple has " +
                                std::to_string(x.mats.size()));
  const std::size_t d = l.size();
  const std::size_t k = l.homogeneous || !x.mats.empty() ? x.size : 1;
  Matrix out(d * k, d * k);
  const Matrix id = Matrix::identity(k);
  // Only nonzero coefficient entries contribute a block.
  for (std::size_t j = 0; j < l.coeffs.size(); ++j) {
    const Matrix& a = l.coeffs[j];
    const Matrix& xj = l.homogeneous ? x.mats[j] : (j == 0 ? id : x.mats[j - 1]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        if (a(r, c).is_zero()) continue;
        for (std::size_t u = 0; u < k; ++u)
          for (std::size_t v = 0; v < k; ++v)
            if (!xj(u, v).is_zero()) out(r * k + u, c * k + v) += a(r, c) * xj(u, v);
      }
  }
  return out;
}

std::size_t pencil_rank_lower_bound(const LinearPencil& l, std::size_t max_size, std::size_t samples,
                                    std::uint64_t seed) {
  std::size_t best = 0;
  for (std::size_t k = 1; k <= max_size; ++k)
    for (std::size_t i = 0; i < samples; ++i) {
      MatrixTuple x = sample_tuple(k, l.arity(), 10, derive_seed(seed, k, i));
      x.size = k;
      std::size_t r = rank(pencil_eval(l, x));
      best = std::max(best, (r + k - 1) / k);
      if (best == l.size()) return best;
    }
  return best;
}

std::string to_string(Similarity s) {
  switch (s) {
    case Similarity::Similar:
      return "similar";
    case Similarity::NotSimilar:
      return "not-similar";
    case Similarity::Undecided:
      return "undecided";
  }
  return "undecided";
}

bool JointSimilarity::verify(const MatrixTuple& a, const MatrixTuple& b) const {
  if (verdict != Similarity::Similar) return true;
  if (!p || determinant(*p).is_zero()) return false;
  for (std::size_t j = 0; j < a.mats.size(); ++j)
    if (!(*p * a.mats[j] == b.mats[j] * *p)) return false;
  return true;
}

namespace {

// Words over the tuple, shortest first, with their A- and B-products.
template <class Visit>
bool for_each_word(const MatrixTuple& a, const MatrixTuple& b, std::size_t max_len, std::size_t max_words,
                   Visit visit) {
  struct Entry {
    Word w;
    Matrix pa, pb;
  };
  std::vector<Entry> layer{{Word{}, Matrix::identity(a.size), Matrix::identity(b.size)}};
  std::size_t seen = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Entry> next;
    for (const auto& e : layer)
      for (std::size_t j = 0; j < a.mats.size(); ++j) {
        if (++seen > max_words) return false;
        next.push_back({e.w * Word::letter(j), e.pa * a.mats[j], e.pb * b.mats[j]});
        if (visit(next.back().w, next.back().pa, next.back().pb)) return true;
      }
    layer = std::move(next);
  }
  return false;
}

}  // namespace

JointSimilarity joint_similarity(const MatrixTuple& a, const MatrixTuple& b, const SimilarityOptions& opt) {
  if (a.size != b.size || a.mats.size() != b.mats.size()) throw std::invalid_argument("tuple shapes differ");
  JointSimilarity res;
  const std::size_t c = a.size, n = a.mats.size();
  FieldPtr f = common_field(a.field(), b.field());

  // vec(P) with P(r, s) at column r c + s; rows (j, r, s) of P A_j - B_j P.
  Matrix m(n * c * c, c * c, f);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < c; ++r)
      for (std::size_t s = 0; s < c; ++s) {
        std::size_t row = j * c * c + r * c + s;
        for (std::size_t k = 0; k < c; ++k) {
          m(row, r * c + k) += a.mats[j](k, s);
          m(row, k * c + s) -= b.mats[j](r, k);
        }
      }
  auto space = rank_nullspace(m).nullspace;
  if (space.empty()) {
    res.verdict = Similarity::NotSimilar;
    res.reason = "no nonzero P with P A_j = B_j P";
    return res;
  }
  auto to_matrix = [&](const std::vector<Scalar>& v) {
    Matrix p(c, c, f);
    for (std::size_t i = 0; i < c * c; ++i) p(i / c, i % c) = v[i];
    return p;
  };
  auto try_p = [&](const Matrix& p) {
    if (determinant(p).is_zero()) return false;
    res.verdict = Similarity::Similar;
    res.p = p;
    res.reason = "invertible intertwiner";
    return true;
  };
  std::mt19937_64 rng(derive_seed(opt.seed, c, 0));
  std::uniform_int_distribution<int> w(-5, 5);
  if (space.size() > 1)
    for (std::size_t k = 0; k < opt.combinations; ++k) {
      std::vector<Scalar> v(c * c, Scalar::zero(f));
      for (const auto& s : space) {
        Scalar wk(w(rng));
        for (std::size_t i = 0; i < c * c; ++i) v[i] += wk * s[i];
      }
      if (try_p(to_matrix(v))) return res;
    }
  for (const auto& s : space)
    if (try_p(to_matrix(s))) return res;
  if (space.size() == 1) {
    res.verdict = Similarity::NotSimilar;
    res.reason = "the intertwiner space is spanned by a singular matrix";
    return res;
  }

  // Exact invariants of the similarity class.
  std::string why;
  bool separated = for_each_word(a, b, std::min(opt.max_word_length, 2 * c * c), opt.max_words,
                                 [&](const Word& w, const Matrix& x, const Matrix& y) {
                                   if (!(x.trace() == y.trace())) {
                                     why = "traces of a word differ";
                                   } else if (rank(x) != rank(y)) {
                                     why = "ranks of a word differ";
                                   } else {
                                     return false;
                                   }
                                   res.word = w;
                                   return true;
                                 });
  if (separated) {
    res.verdict = Similarity::NotSimilar;
    res.reason = why;
    return res;
  }

  std::vector<Matrix> ca{Matrix::identity(c)}, cb{Matrix::identity(c)};
  ca.insert(ca.end(), a.mats.begin(), a.mats.end());
  cb.insert(cb.end(), b.mats.begin(), b.mats.end());
  LinearPencil la(true, ca), lb(true, cb);
  for (std::size_t k = 1; k <= opt.max_size; ++k)
    for (std::size_t i = 0; i < opt.samples; ++i) {
      MatrixTuple x = sample_tuple(k, n + 1, 10, derive_seed(opt.seed, k, i));
      if (rank(pencil_eval(la, x)) != rank(pencil_eval(lb, x))) {
        res.verdict = Similarity::NotSimilar;
        res.reason = "homogeneous pencil ranks differ";
        res.witness = std::move(x);
        return res;
      }
    }
  res.reason = "no invertible intertwiner found and no separating invariant";
  return res;
}

PaddedPencil pad_pencil(const LinearPencil& lambda, const std::vector<Matrix>& t, std::size_t samples,
                        std::uint64_t seed) {
  if (!lambda.homogeneous) throw std::invalid_argument("padding needs a homogeneous pencil");
  if (t.size() != lambda.arity()) throw std::invalid_argument("tuple arity does not match the pencil");
  const std::size_t d = lambda.size(), n = t.size();
  const std::size_t p = t.empty() ? 0 : t[0].rows(), q = t.empty() ? 0 : t[0].cols();
  for (const auto& ti : t)
    if (ti.rows() != p || ti.cols() != q) throw std::invalid_argument("rectangular tuple shapes differ");
  if (p < q) throw std::invalid_argument("padding needs p >= q");
  if (pencil_rank_lower_bound(lambda, 3, 10, seed) < d) throw DomainError("pencil not verified full");

  PaddedPencil out;
  const std::size_t pt = p + (p - q) * (d - 1);
  out.p_tilde = pt;

  // Lambda(T) = sum A_i (x) T_i, of size dp x dq.
  Matrix lt(d * p, d * q);
  for (std::size_t i = 0; i < n; ++i) lt += kron(lambda.coeffs[i], t[i]);
  const std::size_t ker = d * q - rank(lt);
  out.claimed_rank = pt * d - ker;

  Matrix l0(pt * d, pt * d);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix block(pt, pt);
    block.set_block(0, 0, t[i]);
    l0 += kron(lambda.coeffs[i], block);
  }
  std::vector<Matrix> coeffs{l0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < pt; ++r)
      for (std::size_t s = 0; s < pt - q; ++s) {
        Matrix e(pt, pt);
        e(r, q + s) = Scalar(1);
        coeffs.push_back(kron(lambda.coeffs[i], e));
      }
  out.pencil = LinearPencil(false, std::move(coeffs));

  // Lower bound at matrix points of sizes 1..3 in rotation.
  const std::size_t nv = out.pencil.arity();
  for (std::size_t i = 0; i < samples && out.verified_rank < out.claimed_rank; ++i) {
    std::size_t k = 1 + i % 3;
    MatrixTuple y = nv ? sample_tuple(k, nv, 10, derive_seed(seed, k, i)) : MatrixTuple{};
    if (!nv) y.size = 1;
    std::size_t r = rank(pencil_eval(out.pencil, y));
    if (std::size_t v = (r + y.size - 1) / y.size; v > out.verified_rank || !out.rank_point) {
      out.verified_rank = std::max(out.verified_rank, v);
      if (v == out.verified_rank) out.rank_point = y;
    }
  }
  return out;
}

}  // namespace ncequiv
