#include "ncequiv/numeric.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <complex>
#include <map>

namespace ncequiv {

namespace {

using Wide = boost::multiprecision::cpp_complex<77>;

template <class C>
using Mat = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>;

template <class C>
C from_rational(const Rational& q) {
  if constexpr (std::is_same_v<C, std::complex<double>>) {
    return C(q.get_d(), 0);
  } else {
    using R = typename C::value_type;
    return C(R(q.get_num().get_str()) / R(q.get_den().get_str()));
  }
}

template <class C>
C combine(const Coeffs& c, const std::vector<C>& g) {
  C s(0);
  for (std::size_t mask = 0; mask < c.size(); ++mask) {
    if (sgn(c[mask]) == 0) continue;
    C t = from_rational<C>(c[mask]);
    for (std::size_t j = 0; j < g.size(); ++j)
      if (mask >> j & 1) t *= g[j];
    s += t;
  }
  return s;
}

// Generator values in the embedding: positive square roots of positive
// radicands, i times the root of the negation otherwise.
template <class C>
std::vector<C> generator_values(const FieldPtr& f) {
  std::vector<C> g;
  if (!f) return g;
  for (const auto& gen : f->generators()) {
    C r = combine(gen.radicand, g);
    auto re = real(r);
    if (gen.imaginary) {
      g.push_back(C(0, sqrt(-re)));
    } else {
      g.push_back(C(sqrt(re), 0));
    }
  }
  return g;
}

template <class C>
C approx(const Scalar& s, const std::vector<C>& g) {
  if (s.is_rational()) return from_rational<C>(s.to_rational());
  return combine(s.coeffs(), g);
}

template <class C>
Mat<C> evaluate_approx(const NcPoly& f, const MatrixTuple& x) {
  FieldPtr field = common_field(f.field(), x.field());
  auto g = generator_values<C>(field);
  const auto k = static_cast<Eigen::Index>(x.size);
  std::vector<Mat<C>> m, adj;
  for (const auto& a : x.mats) {
    Mat<C> e(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) e(i, j) = approx<C>(a(i, j), g);
    adj.push_back(e.adjoint());
    m.push_back(std::move(e));
  }
  if (f.num_vars() > m.size()) throw std::invalid_argument("polynomial uses more variables than the tuple has");
  Mat<C> out = Mat<C>::Zero(k, k);
  std::map<Word, Scalar> lex(f.terms().begin(), f.terms().end());
  std::vector<Mat<C>> stack{Mat<C>::Identity(k, k)};
  std::string_view prev;
  for (const auto& [w, c] : lex) {
    std::string_view cw = w.codes();
    std::size_t l = 0;
    while (l < prev.size() && l < cw.size() && l + 1 < stack.size() && prev[l] == cw[l]) ++l;
    stack.resize(l + 1);
    for (std::size_t i = l; i < cw.size(); ++i) {
      Letter let = Letter::from_code(cw[i]);
      Mat<C> next = stack.back() * (let.star ? adj[let.var] : m[let.var]);
      stack.push_back(std::move(next));
    }
    out += approx<C>(c, g) * stack[cw.size()];
    prev = cw;
  }
  return out;
}

template <class C>
NormPair norms(const NcPoly& f, const MatrixTuple& x) {
  Mat<C> v = evaluate_approx<C>(f, x);
  NormPair p;
  p.frobenius = static_cast<double>(v.norm());
  if (v.size() > 0) {
    Eigen::JacobiSVD<Mat<C>> svd(v);
    p.operator_norm = static_cast<double>(svd.singularValues()(0));
  }
  return p;
}

template <class C>
double max_abs(const NcPoly& f, const MatrixTuple& x) {
  Mat<C> v = evaluate_approx<C>(f, x);
  double best = 0;
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    for (Eigen::Index j = 0; j < v.cols(); ++j) best = std::max(best, static_cast<double>(abs(v(i, j))));
  return best;
}

}  // namespace

NormPair numeric_norms(const NcPoly& f, const MatrixTuple& x, bool high_precision) {
  return high_precision ? norms<Wide>(f, x) : norms<std::complex<double>>(f, x);
}

double numeric_max_abs(const NcPoly& f, const MatrixTuple& x, bool high_precision) {
  return high_precision ? max_abs<Wide>(f, x) : max_abs<std::complex<double>>(f, x);
}

std::optional<RefutationWitness> norm_refuter(const NcPoly& f, const NcPoly& g, const RefuterConfig& cfg) {
  const std::size_t n = std::max<std::size_t>({f.num_vars(), g.num_vars(), 1});
  SampleOptions opt;
  opt.unit_box = true;
  opt.complex = true;
  for (std::size_t k = cfg.min_size; k <= cfg.max_size; ++k)
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      if (cfg.cancel && cfg.cancel->load()) return std::nullopt;
      MatrixTuple x = sample_tuple(k, n, 1, derive_seed(cfg.seed, k, i), opt);
      NormPair a = numeric_norms(f, x, cfg.high_precision), b = numeric_norms(g, x, cfg.high_precision);
      for (int which = 0; which < 2; ++which) {
        double va = which ? a.operator_norm : a.frobenius, vb = which ? b.operator_norm : b.frobenius;
        if (std::abs(va - vb) <= cfg.tolerance * std::max(1.0, va)) continue;
        RefutationWitness w;
        w.kind = RefutationWitness::Kind::Norm;
        w.x = std::move(x);
        w.norm = which ? "operator" : "frobenius";
        w.norm_f = va;
        w.norm_g = vb;
        return w;
      }
    }
  return std::nullopt;
}

}  // namespace ncequiv
