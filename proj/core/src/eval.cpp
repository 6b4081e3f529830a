#include "ncequiv/eval.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ncequiv/numeric.hpp"

namespace ncequiv {

MatrixTuple::MatrixTuple(std::vector<Matrix> m) : mats(std::move(m)) {
  size = mats.empty() ? 0 : mats[0].rows();
  for (const auto& x : mats)
    if (x.rows() != size || x.cols() != size) throw std::invalid_argument("tuple matrices must be square of equal size");
}

FieldPtr MatrixTuple::field() const {
  FieldPtr f = Field::rationals();
  for (const auto& m : mats) f = common_field(f, m.field());
  return f;
}

MatrixTuple MatrixTuple::conjugated(const Matrix& s) const {
  auto inv = inverse(s);
  if (!inv) throw DomainError("conjugating by a singular matrix");
  std::vector<Matrix> out;
  for (const auto& m : mats) out.push_back(*inv * m * s);
  return MatrixTuple(std::move(out));
}

MatrixTuple direct_sum(const MatrixTuple& a, const MatrixTuple& b) {
  if (a.mats.size() != b.mats.size()) throw std::invalid_argument("tuple arity mismatch");
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < a.mats.size(); ++j) out.push_back(direct_sum(a.mats[j], b.mats[j]));
  return MatrixTuple(std::move(out));
}

Matrix evaluate(const NcPoly& f, const MatrixTuple& x) {
  if (f.num_vars() > x.mats.size())
    throw std::invalid_argument("polynomial uses " + std::to_string(f.num_vars()) + " variables, tuple has " +
                                std::to_string(x.mats.size()));
  const std::size_t k = x.size;
  Matrix out(k, k, common_field(f.field(), x.field()));
  std::vector<Matrix> adj;
  if (f.has_star())
    for (const auto& m : x.mats) adj.push_back(m.conj_transpose());
  // Words in lexicographic order share prefixes with their predecessor.
  std::map<Word, Scalar> lex(f.terms().begin(), f.terms().end());
  std::vector<Matrix> stack{Matrix::identity(k)};
  std::string_view prev;
  for (const auto& [w, c] : lex) {
    std::string_view cw = w.codes();
    std::size_t l = 0;
    while (l < prev.size() && l < cw.size() && l + 1 < stack.size() && prev[l] == cw[l]) ++l;
    stack.resize(l + 1);
    for (std::size_t i = l; i < cw.size(); ++i) {
      Letter let = Letter::from_code(cw[i]);
      stack.push_back(stack.back() * (let.star ? adj[let.var] : x.mats[let.var]));
    }
    out += c * stack[cw.size()];
    prev = cw;
  }
  return out;
}

Matrix evaluate(const UniPoly& p, const Matrix& m) {
  Matrix r(m.rows(), m.cols(), common_field(p.field(), m.field()));
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    r = r * m;
    r += Matrix::identity(m.rows()) * p.coeffs()[i];
  }
  return r;
}

UniPoly char_poly(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return UniPoly(Scalar(1));
  FieldPtr f = a.field();
  // Coefficients from the leading one down.
  std::vector<Scalar> v{Scalar(1), -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Column of the Toeplitz matrix: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C.
    std::vector<Scalar> q{Scalar(1), -a(r, r)};
    std::vector<Scalar> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = a(i, r);
    for (std::size_t p = 0; p < r; ++p) {
      Scalar s = Scalar::zero(f);
      for (std::size_t i = 0; i < r; ++i) s += a(r, i) * c[i];
      q.push_back(-s);
      std::vector<Scalar> nc(r, Scalar::zero(f));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (!c[j].is_zero()) nc[i] += a(i, j) * c[j];
      c = std::move(nc);
    }
    std::vector<Scalar> nv(r + 2, Scalar::zero(f));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nv[i] += q[i - j] * v[j];
    v = std::move(nv);
  }
  std::reverse(v.begin(), v.end());
  return UniPoly(std::move(v));
}

std::vector<std::size_t> power_ranks(const Matrix& m, const UniPoly& factor) {
  Matrix s = evaluate(factor, m);
  std::vector<std::size_t> ranks;
  Matrix p = s;
  std::size_t r = rank(p);
  ranks.push_back(r);
  while (true) {
    p = p * s;
    std::size_t r2 = rank(p);
    if (r2 == r) return ranks;
    ranks.push_back(r2);
    r = r2;
  }
}

bool operator==(const JordanPart& a, const JordanPart& b) { return a.factor == b.factor && a.ranks == b.ranks; }

namespace {

// Squarefree factors to probe: t - lambda for each rational root, and the
// remaining part of the squarefree kernel.
std::vector<std::pair<UniPoly, std::optional<Scalar>>> probe_factors(const UniPoly& chi, std::string* diag) {
  std::vector<std::pair<UniPoly, std::optional<Scalar>>> out;
  UniPoly s = squarefree_part(chi);
  if (s.has_rational_coeffs()) {
    for (const Rational& r : rational_roots(s)) {
      out.emplace_back(UniPoly::root_factor(Scalar(r)), Scalar(r));
      s = divmod(s, UniPoly::root_factor(Scalar(r))).first;
    }
  }
  if (s.degree() > std::size_t{0}) {
    if (diag) *diag = "eigenvalues outside the base field: roots of " + s.to_string();
    out.emplace_back(s, std::nullopt);
  }
  return out;
}

}  // namespace

JordanProfile jordan_profile(const Matrix& m) {
  JordanProfile prof;
  std::string diag;
  for (auto& [f, ev] : probe_factors(char_poly(m), &diag)) prof.parts.push_back({f, ev, power_ranks(m, f)});
  if (!diag.empty()) prof.diagnostics.push_back(diag);
  return prof;
}

std::optional<std::pair<UniPoly, std::size_t>> jordan_difference(const Matrix& a, const Matrix& b) {
  UniPoly ca = char_poly(a), cb = char_poly(b);
  auto fa = probe_factors(ca, nullptr), fb = probe_factors(cb, nullptr);
  std::vector<UniPoly> factors;
  for (auto* fs : {&fa, &fb})
    for (auto& [f, ev] : *fs)
      if (std::find(factors.begin(), factors.end(), f) == factors.end()) factors.push_back(f);
  for (const auto& f : factors) {
    auto ra = power_ranks(a, f), rb = power_ranks(b, f);
    for (std::size_t j = 0; j < std::max(ra.size(), rb.size()); ++j) {
      std::size_t x = ra[std::min(j, ra.size() - 1)], y = rb[std::min(j, rb.size() - 1)];
      if (x != y) return std::make_pair(f, j + 1);
    }
  }
  return std::nullopt;
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t size, std::size_t index) {
  // splitmix64 over the three inputs.
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ size) ^ index);
}

MatrixTuple sample_tuple(std::size_t k, std::size_t nvars, long bound, std::uint64_t seed, const SampleOptions& opt) {
  std::mt19937_64 rng(seed);
  const long box = 1L << 20;
  std::uniform_int_distribution<long> ent(-bound, bound), fine(-box, box);
  FieldPtr f = opt.complex ? Field::gaussian() : Field::rationals();
  auto draw = [&]() -> Scalar {
    Rational re = opt.unit_box ? Rational(fine(rng), box) : Rational(ent(rng));
    re.canonicalize();
    if (!opt.complex) return Scalar(re);
    Rational im = opt.unit_box ? Rational(fine(rng), box) : Rational(ent(rng));
    im.canonicalize();
    return Scalar(re) + Scalar(im) * Scalar::generator(f, 0);
  };
  auto dense = [&](std::size_t r, std::size_t c) {
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = draw();
    return m;
  };
  std::vector<Matrix> mats;
  for (std::size_t v = 0; v < nvars; ++v) {
    Matrix m;
    if (opt.low_rank > 0 && opt.low_rank < k) {
      m = dense(k, opt.low_rank) * dense(opt.low_rank, k);
    } else {
      m = dense(k, k);
    }
    if (opt.hermitian) {
      Matrix h = m.conj_transpose();
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) m(i, j) = h(i, j);
        m(i, i) = (m(i, i) + m(i, i).conj()) * Scalar(Rational(1, 2));
      }
    }
    mats.push_back(std::move(m));
  }
  if (nvars == 0) return MatrixTuple{};
  return MatrixTuple(std::move(mats));
}

namespace {

// Tuples of matrix units, first variable varying slowest; empty when there
// are too many to fit in half the budget.
std::size_t unit_probe_count(std::size_t k, std::size_t nvars, std::size_t samples) {
  std::size_t n = 1;
  for (std::size_t v = 0; v < nvars; ++v) {
    n *= k * k;
    if (n > samples / 2) return 0;
  }
  return n;
}

MatrixTuple unit_probe(std::size_t k, std::size_t nvars, std::size_t index) {
  std::vector<Matrix> mats(nvars, Matrix(k, k));
  for (std::size_t v = nvars; v-- > 0;) {
    std::size_t d = index % (k * k);
    index /= k * k;
    mats[v](d / k, d % k) = Scalar(1);
  }
  return MatrixTuple(std::move(mats));
}

}  // namespace

MatrixTuple refuter_sample(std::size_t k, std::size_t nvars, std::size_t index, const RefuterConfig& cfg) {
  if (std::size_t probes = unit_probe_count(k, nvars, cfg.samples)) {
    if (index < probes) return unit_probe(k, nvars, index);
    index -= probes;
  }
  std::uint64_t s = derive_seed(cfg.seed, k, index);
  SampleOptions opt;
  long bound = cfg.bound;
  switch (index % 4) {
    case 0:
      bound = 1;
      break;
    case 2:
      bound = 2;
      opt.low_rank = k > 1 ? 1 + index / 4 % (k - 1) : 0;
      break;
    case 3: {
      // Sparse: most entries vanish.
      MatrixTuple x = sample_tuple(k, nvars, cfg.bound, s);
      std::mt19937_64 rng(s ^ 0x5bd1e995ULL);
      for (auto& m : x.mats)
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (rng() % 3 != 0) m(i, j) = Scalar(0);
      return x;
    }
    default:
      break;
  }
  return sample_tuple(k, nvars, bound, s, opt);
}

std::string to_string(RefutationWitness::Kind k) {
  switch (k) {
    case RefutationWitness::Kind::Rank:
      return "rank";
    case RefutationWitness::Kind::Charpoly:
      return "charpoly";
    case RefutationWitness::Kind::Jordan:
      return "jordan";
    case RefutationWitness::Kind::Norm:
      return "norm";
  }
  return "unknown";
}

bool RefutationWitness::verify(const NcPoly& f, const NcPoly& g, double tolerance) const {
  switch (kind) {
    case Kind::Rank: {
      Matrix a = evaluate(f, x).pow(power), b = evaluate(g, x).pow(power);
      return rank(a) == rank_f && rank(b) == rank_g && rank_f != rank_g;
    }
    case Kind::Charpoly: {
      UniPoly a = char_poly(evaluate(f, x)), b = char_poly(evaluate(g, x));
      return a == charpoly_f && b == charpoly_g && !(a == b);
    }
    case Kind::Jordan: {
      Matrix a = evaluate(factor, evaluate(f, x)).pow(power), b = evaluate(factor, evaluate(g, x)).pow(power);
      return rank(a) == rank_f && rank(b) == rank_g && rank_f != rank_g;
    }
    case Kind::Norm: {
      NormPair a = numeric_norms(f, x, false), b = numeric_norms(g, x, false);
      double va = norm == "operator" ? a.operator_norm : a.frobenius;
      double vb = norm == "operator" ? b.operator_norm : b.frobenius;
      return std::abs(va - vb) > tolerance * std::max(1.0, va);
    }
  }
  return false;
}

namespace {

std::size_t nvars_of(const NcPoly& f, const NcPoly& g) { return std::max<std::size_t>({f.num_vars(), g.num_vars(), 1}); }

bool cancelled(const RefuterConfig& cfg) { return cfg.cancel && cfg.cancel->load(); }

template <class Probe>
std::optional<RefutationWitness> scan(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg, Probe probe) {
  const std::size_t n = nvars_of(f, g);
  for (std::size_t k = cfg.min_size; k <= cfg.max_size; ++k)
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      if (cancelled(cfg)) return std::nullopt;
      MatrixTuple x = refuter_sample(k, n, i, cfg);
      if (auto w = probe(x)) return w;
    }
  return std::nullopt;
}

}  // namespace

std::optional<RefutationWitness> rank_refuter(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg) {
  return scan(f, g, cfg, [&](const MatrixTuple& x) -> std::optional<RefutationWitness> {
    std::size_t a = rank(evaluate(f, x)), b = rank(evaluate(g, x));
    if (a == b) return std::nullopt;
    RefutationWitness w;
    w.kind = RefutationWitness::Kind::Rank;
    w.x = x;
    w.rank_f = a;
    w.rank_g = b;
    return w;
  });
}

std::optional<RefutationWitness> power_rank_refuter(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg) {
  return scan(f, g, cfg, [&](const MatrixTuple& x) -> std::optional<RefutationWitness> {
    Matrix a = evaluate(f, x), b = evaluate(g, x);
    Matrix pa = a, pb = b;
    for (std::size_t k = 1; k <= x.size; ++k) {
      if (k > 1) {
        pa = pa * a;
        pb = pb * b;
      }
      std::size_t ra = rank(pa), rb = rank(pb);
      if (ra != rb) {
        RefutationWitness w;
        w.kind = RefutationWitness::Kind::Rank;
        w.x = x;
        w.power = k;
        w.rank_f = ra;
        w.rank_g = rb;
        return w;
      }
    }
    return std::nullopt;
  });
}

std::optional<RefutationWitness> charpoly_refuter(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg) {
  return scan(f, g, cfg, [&](const MatrixTuple& x) -> std::optional<RefutationWitness> {
    UniPoly a = char_poly(evaluate(f, x)), b = char_poly(evaluate(g, x));
    if (a == b) return std::nullopt;
    RefutationWitness w;
    w.kind = RefutationWitness::Kind::Charpoly;
    w.x = x;
    w.charpoly_f = a;
    w.charpoly_g = b;
    return w;
  });
}

std::optional<RefutationWitness> similarity_refuter(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg) {
  if (auto w = charpoly_refuter(f, g, cfg)) return w;
  return scan(f, g, cfg, [&](const MatrixTuple& x) -> std::optional<RefutationWitness> {
    Matrix a = evaluate(f, x), b = evaluate(g, x);
    auto d = jordan_difference(a, b);
    if (!d) return std::nullopt;
    RefutationWitness w;
    w.kind = RefutationWitness::Kind::Jordan;
    w.x = x;
    w.factor = d->first;
    w.power = d->second;
    w.rank_f = rank(evaluate(w.factor, a).pow(w.power));
    w.rank_g = rank(evaluate(w.factor, b).pow(w.power));
    return w;
  });
}

Matrix evaluate(const NcMatrix& f, const MatrixTuple& x) {
  const std::size_t r = f.size(), c = r ? f[0].size() : 0, k = x.size;
  Matrix out(r * k, c * k);
  for (std::size_t i = 0; i < r; ++i) {
    if (f[i].size() != c) throw std::invalid_argument("ragged polynomial matrix");
    for (std::size_t j = 0; j < c; ++j) out.set_block(i * k, j * k, evaluate(f[i][j], x));
  }
  return out;
}

std::size_t inner_rank_lower_bound(const NcMatrix& f, std::size_t max_size, std::size_t samples, std::uint64_t seed) {
  std::size_t n = 1;
  for (const auto& row : f)
    for (const auto& p : row) n = std::max(n, p.num_vars());
  std::size_t best = 0;
  RefuterConfig cfg;
  cfg.seed = seed;
  for (std::size_t k = 1; k <= max_size; ++k)
    for (std::size_t i = 0; i < samples; ++i) {
      // Generic entries only: low-rank samples cannot raise the bound.
      MatrixTuple x = sample_tuple(k, n, cfg.bound, derive_seed(seed, k, i));
      std::size_t r = rank(evaluate(f, x));
      best = std::max(best, (r + k - 1) / k);
    }
  return best;
}

}  // namespace ncequiv
