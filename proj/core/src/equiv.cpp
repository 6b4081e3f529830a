#include "ncequiv/equiv.hpp"

#include "ncequiv/numeric.hpp"
#include "ncequiv/polymatrix.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "wordsystem.hpp"

namespace ncequiv {

namespace {

const NcPoly kOne{Scalar(1)};

NcPoly normalized(NcPoly a) {
  Scalar lc = a.leading_coeff();
  a *= lc.inverse();
  return a;
}

// sum c_i v_i with small nonzero integer weights.
NcPoly random_combination(const std::vector<NcPoly>& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> w(-3, 3);
  NcPoly out(basis.empty() ? FieldPtr{} : basis[0].field());
  for (const auto& b : basis) {
    int c = w(rng);
    if (c != 0) out += Scalar(c) * b;
  }
  return out;
}

// Linear system over k[t] in the coefficients of unknown polynomials.
struct KtTerm {
  std::size_t unknown;
  NcPoly left, right;
  UniPoly scale;
};

PolyMatrix kt_matrix(const std::vector<std::vector<Word>>& bases, const std::vector<KtTerm>& terms) {
  std::vector<std::size_t> off{0};
  for (const auto& b : bases) off.push_back(off.back() + b.size());
  std::map<Word, std::map<std::size_t, UniPoly>, GradedLex> rows;
  for (const auto& t : terms)
    for (const auto& [u, cu] : t.left.terms())
      for (const auto& [v, cv] : t.right.terms())
        for (std::size_t k = 0; k < bases[t.unknown].size(); ++k)
          rows[u * bases[t.unknown][k] * v][off[t.unknown] + k] += t.scale * UniPoly(cu * cv);
  PolyMatrix m(rows.size(), off.back());
  std::size_t i = 0;
  for (auto& [w, r] : rows) {
    for (auto& [j, p] : r) m(i, j) = std::move(p);
    ++i;
  }
  return m;
}

std::optional<ChainStep> step_with(const NcPoly& f, const NcPoly& g, const NcPoly& a) {
  // f = lambda + a b, then check g = lambda + b a.
  if (a.is_zero() || a.is_constant() || f.degree() < a.degree()) return std::nullopt;
  auto alpha = detail::alphabet_of({&f, &g, &a});
  detail::WordSystem sys(common_field(f.field(), a.field()));
  auto b = sys.add_unknown(detail::words_up_to(alpha, f.degree().value() - a.degree().value()));
  auto lam = sys.add_unknown({Word{}});
  sys.add_term(b, a, kOne);
  sys.add_term(lam, kOne, kOne);
  sys.set_target(f);
  auto sol = sys.solve(false);
  if (!sol.particular) return std::nullopt;
  Scalar lambda = (*sol.particular)[1].constant_term();
  ChainStep st{lambda, a, (*sol.particular)[0], f, g};
  if (!st.verify()) return std::nullopt;
  return st;
}

RefutationWitness constant_witness(const NcPoly& f, const NcPoly& g) {
  // The zero tuple of size one separates different constant terms.
  std::size_t n = std::max<std::size_t>({f.num_vars(), g.num_vars(), 1});
  RefutationWitness w;
  w.kind = RefutationWitness::Kind::Charpoly;
  w.x = MatrixTuple(std::vector<Matrix>(n, Matrix(1, 1)));
  w.charpoly_f = char_poly(evaluate(f, w.x));
  w.charpoly_g = char_poly(evaluate(g, w.x));
  return w;
}

}  // namespace

IntertwinerSpace intertwiner_space(const NcPoly& f, const NcPoly& g, std::size_t d) {
  auto alpha = detail::alphabet_of({&f, &g});
  detail::WordSystem sys(common_field(f.field(), g.field()));
  auto a = sys.add_unknown(detail::words_up_to(alpha, d));
  sys.add_term(a, f, kOne);
  sys.add_term(a, kOne, g, Scalar(-1));
  IntertwinerSpace s{d, {}};
  for (auto& v : sys.solve().nullspace) s.basis.push_back(std::move(v[a]));
  return s;
}

std::optional<NcPoly> minimal_intertwiner(const NcPoly& f, const NcPoly& g, std::size_t d_max) {
  if (f.degree() != g.degree()) return std::nullopt;
  for (std::size_t d = 0; d <= d_max; ++d) {
    auto s = intertwiner_space(f, g, d);
    if (s.basis.empty()) continue;
    if (s.basis.size() != 1) throw std::logic_error("minimal intertwiner space is not one-dimensional");
    return normalized(s.basis[0]);
  }
  return std::nullopt;
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
  UniPoly r;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * q + UniPoly(p.coeffs()[i]);
  return r;
}

Decomposition decompose(const NcPoly& f) {
  if (f.is_zero() || f.is_constant()) throw DomainError("decompose needs a nonconstant polynomial");
  const std::size_t m = f.degree().value();
  // A commuting h generates a polynomial ring containing f, so deg h | deg f.
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto s = intertwiner_space(f, f, d);
    auto it = std::find_if(s.basis.begin(), s.basis.end(), [](const NcPoly& h) { return !h.is_constant(); });
    if (it == s.basis.end()) continue;
    NcPoly h = *it;
    h -= NcPoly(h.constant_term());
    h = normalized(h);
    // f = p(h) by peeling top components.
    std::vector<Scalar> coeffs(m / d + 1, Scalar::zero(f.field()));
    NcPoly r = f;
    while (!r.is_zero()) {
      const std::size_t dr = r.degree().value();
      if (dr % d != 0) throw std::logic_error("decomposition elimination failed");
      NcPoly hk = h.pow(dr / d);
      Scalar c = r.coeff(hk.leading_word()) / hk.leading_coeff();
      r -= c * hk;
      if (!r.is_zero() && r.degree() >= dr) throw std::logic_error("decomposition elimination failed");
      coeffs[dr / d] = c;
    }
    Decomposition inner = decompose(h);
    return {compose(UniPoly(std::move(coeffs)), inner.p), inner.core};
  }
  Scalar c0 = f.constant_term(), lc = f.leading_coeff();
  NcPoly core = f - NcPoly(c0);
  core *= lc.inverse();
  return {UniPoly(std::vector<Scalar>{c0, lc}), core};
}

IsospectralVerdict is_isospectral(const NcPoly& f, const NcPoly& g, const EquivOptions& opt) {
  IsospectralVerdict v;
  auto refute = [&](std::string why) {
    v.isospectral = false;
    v.reason = std::move(why);
    v.witness = charpoly_refuter(f, g, opt.refuter);
    return v;
  };
  if (!(f.constant_term() == g.constant_term())) {
    v.reason = "constant terms differ";
    v.witness = constant_witness(f, g);
    return v;
  }
  if (f.degree() != g.degree()) return refute("degrees differ");
  if (f == g) {
    v.isospectral = true;
    v.intertwiner = kOne;
    v.reason = "equal polynomials";
    return v;
  }
  if (f.is_constant()) {
    // Equal constants were caught above.
    return refute("constants differ");
  }

  Decomposition df = decompose(f), dg = decompose(g);
  if (!(df.p == dg.p)) return refute("outer univariate parts differ");

  // Nonzero A(t), B(t) of degree < m with (F - t) A = B (G - t) over k(t).
  const NcPoly& F = df.core;
  const NcPoly& G = dg.core;
  const std::size_t m = F.degree().value();
  auto alpha = detail::alphabet_of({&F, &G});
  auto basis = detail::words_up_to(alpha, m - 1);
  UniPoly one(Scalar(1)), t = UniPoly::t();
  PolyMatrix M = kt_matrix({basis, basis}, {{0, F, kOne, one},
                                           {0, kOne, kOne, -t},
                                           {1, kOne, G, -one},
                                           {1, kOne, kOne, t}});
  const std::size_t cols = M.cols();
  std::mt19937_64 rng(derive_seed(opt.seed, 0, 0));
  std::uniform_int_distribution<long> pick(-1000, 1000);
  for (int s = 0; s < 2; ++s)
    if (rank(M.at(Scalar(pick(rng)))) == cols) return refute("the k(t) system has full rank");

  if (auto a = minimal_intertwiner(f, g, opt.max_degree)) {
    v.isospectral = true;
    v.intertwiner = std::move(a);
    v.reason = "intertwined";
    return v;
  }
  if (rank_over_kt(M).rank == cols) return refute("the k(t) system has full rank");
  v.isospectral = true;
  v.reason = "the k(t) system has a nonzero solution; no intertwiner of degree <= " + std::to_string(opt.max_degree);
  return v;
}

bool ChainStep::verify() const {
  NcPoly l(lambda);
  return from == l + a * b && to == l + b * a;
}

bool verify_chain(const std::vector<ChainStep>& steps, const NcPoly& f, const NcPoly& g) {
  if (steps.empty()) return f == g;
  if (!(steps.front().from == f) || !(steps.back().to == g)) return false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!steps[i].verify()) return false;
    if (i + 1 < steps.size() && !(steps[i].to == steps[i + 1].from)) return false;
  }
  return true;
}

std::optional<ChainStep> elementary_intertwined(const NcPoly& f, const NcPoly& g, const EquivOptions& opt) {
  if (!(f.constant_term() == g.constant_term()) || f.degree() != g.degree()) return std::nullopt;
  if (f == g) {
    Scalar l = f.constant_term();
    NcPoly a = f - NcPoly(l);
    if (a.is_zero()) return ChainStep{l, kOne, NcPoly(f.field()), f, g};
    return ChainStep{l, a, kOne, f, g};
  }
  std::mt19937_64 rng(derive_seed(opt.seed, 1, 0));
  const std::size_t m = f.degree().value();
  for (std::size_t e = 1; e < m; ++e) {
    auto s = intertwiner_space(f, g, e);
    if (s.basis.empty()) continue;
    std::vector<NcPoly> cands = s.basis;
    if (s.basis.size() > 1)
      for (std::size_t k = 0; k < opt.combinations; ++k) cands.push_back(random_combination(s.basis, rng));
    for (const auto& a : cands)
      if (auto st = step_with(f, g, a)) return st;
  }
  return std::nullopt;
}

ChainResult intertwining_chain(const NcPoly& f, const NcPoly& g, const EquivOptions& opt) {
  ChainResult res;
  if (f == g) {
    res.steps.emplace();
    return res;
  }
  auto a0 = minimal_intertwiner(f, g, opt.max_degree);
  if (!a0) {
    res.diagnostic = "no intertwiner of degree <= " + std::to_string(opt.max_degree);
    return res;
  }
  NcPoly a = *a0, cur = g;
  std::vector<ChainStep> rev;
  while (true) {
    if (a.is_constant()) {
      if (!(f == cur)) {
        res.diagnostic = "constant intertwiner between different polynomials";
        return res;
      }
      break;
    }
    if (auto st = step_with(f, cur, a)) {
      rev.push_back(std::move(*st));
      break;
    }
    // lambda with g - lambda and a sharing a right factor: the system
    // u (g - lambda) = v a has a nonzero solution of small degree.
    auto alpha = detail::alphabet_of({&cur, &a});
    const std::size_t da = a.degree().value(), dg = cur.degree().value();
    if (dg == 0) {
      res.diagnostic = "intertwined with a constant";
      return res;
    }
    UniPoly one(Scalar(1));
    PolyMatrix M = kt_matrix({detail::words_up_to(alpha, da - 1), detail::words_up_to(alpha, dg - 1)},
                             {{0, kOne, cur, one}, {0, kOne, kOne, -UniPoly::t()}, {1, kOne, a, -one}});
    KtRank kr = rank_over_kt(M);
    std::vector<Scalar> lambdas = kr.drop_set;
    std::sort(lambdas.begin(), lambdas.end(),
              [](const Scalar& x, const Scalar& y) { return x.to_rational() > y.to_rational(); });
    bool advanced = false;
    for (const Scalar& lambda : lambdas) {
      auto gr = gcrd_bounded(cur - NcPoly(lambda), a);
      if (!gr || gr->h.is_constant()) continue;
      ChainStep st{lambda, gr->h, gr->q_p, NcPoly(lambda) + gr->h * gr->q_p, cur};
      if (!st.verify()) throw std::logic_error("chain step failed to verify");
      a = gr->q_q;
      cur = st.from;
      rev.push_back(std::move(st));
      advanced = true;
      break;
    }
    if (!advanced) {
      res.diagnostic = "no rational eigenvalue of the eigenring action";
      if (kr.residual.degree() > std::size_t{0}) res.diagnostic += "; remaining factor " + kr.residual.to_string();
      return res;
    }
  }
  std::reverse(rev.begin(), rev.end());
  if (!verify_chain(rev, f, g)) throw std::logic_error("chain failed to verify");
  res.steps = std::move(rev);
  return res;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Associated:
      return "associated";
    case Verdict::NotAssociated:
      return "not-associated";
    case Verdict::Undecided:
      return "undecided";
  }
  return "undecided";
}

bool StableAssocVerdict::verify(const NcPoly& f, const NcPoly& g) const {
  switch (verdict) {
    case Verdict::Associated:
      return right && left && f * a == b * g && right->side == Side::Right && right->f == f && right->g == b &&
             right->verify() && left->side == Side::Left && left->f == a && left->g == g && left->verify();
    case Verdict::NotAssociated:
      return !refutation || refutation->verify(f, g);
    case Verdict::Undecided:
      return true;
  }
  return false;
}

StableAssocVerdict stable_association(const NcPoly& f, const NcPoly& g, const EquivOptions& opt) {
  if (f.is_zero() || g.is_zero()) throw DomainError("stable association of the zero polynomial");
  StableAssocVerdict v;
  if (f.degree() != g.degree()) {
    v.verdict = Verdict::NotAssociated;
    v.reason = "degrees differ";
    v.refutation = rank_refuter(f, g, opt.refuter);
    return v;
  }
  auto accept = [&](const NcPoly& a, const NcPoly& b) {
    auto r = comaximality_certificate(f, b, Side::Right);
    if (!r) return false;
    auto l = comaximality_certificate(a, g, Side::Left);
    if (!l) return false;
    v.verdict = Verdict::Associated;
    v.a = a;
    v.b = b;
    v.right = std::move(r);
    v.left = std::move(l);
    v.reason = "comaximal relation";
    return true;
  };
  if (f.is_constant()) {
    accept(kOne, f * NcPoly(g.constant_term().inverse()));
    return v;
  }

  const std::size_t m = f.degree().value();
  auto alpha = detail::alphabet_of({&f, &g});
  detail::WordSystem sys(common_field(f.field(), g.field()));
  auto basis = detail::words_up_to(alpha, m - 1);
  auto ua = sys.add_unknown(basis);
  auto ub = sys.add_unknown(basis);
  sys.add_term(ua, f, kOne);
  sys.add_term(ub, kOne, g, Scalar(-1));
  auto sol = sys.solve();

  // Echelonize the relations by the leading word of a, so that those of
  // degree <= e span the degree-e slice.
  struct Rel {
    NcPoly a, b;
  };
  std::map<Word, Rel, GradedLex> ech;
  for (auto& s : sol.nullspace) {
    Rel r{s[ua], s[ub]};
    while (!r.a.is_zero()) {
      auto it = ech.find(r.a.leading_word());
      if (it == ech.end()) break;
      Scalar c = r.a.leading_coeff() / it->second.a.leading_coeff();
      r.a -= c * it->second.a;
      r.b -= c * it->second.b;
    }
    if (!r.a.is_zero()) {
      Word lw = r.a.leading_word();
      ech.emplace(std::move(lw), std::move(r));
    }
  }
  std::mt19937_64 rng(derive_seed(opt.seed, 2, 0));
  std::uniform_int_distribution<int> w(-3, 3);
  std::vector<const Rel*> slice;
  for (auto it = ech.rbegin(); it != ech.rend();) {
    const std::size_t e = it->first.size();
    for (; it != ech.rend() && it->first.size() == e; ++it) slice.push_back(&it->second);
    for (std::size_t i = slice.size(); i-- > 0;)
      if (!slice[i]->b.is_zero() && accept(slice[i]->a, slice[i]->b)) return v;
    // Isomorphisms are dense in each slice.
    if (slice.size() > 1)
      for (std::size_t k = 0; k < opt.combinations; ++k) {
        NcPoly a(common_field(f.field(), g.field())), b = a;
        for (const Rel* r : slice) {
          int c = w(rng);
          a += Scalar(c) * r->a;
          b += Scalar(c) * r->b;
        }
        if (!a.is_zero() && !b.is_zero() && accept(a, b)) return v;
      }
  }

  if ((v.refutation = rank_refuter(f, g, opt.refuter))) {
    v.verdict = Verdict::NotAssociated;
    v.reason = "rank witness";
    return v;
  }
  v.reason = sol.nullspace.empty() ? "no relation f a = b g of degree < deg f; no rank witness within budget"
                                   : "no comaximal relation found; no rank witness within budget";
  if (sol.nullspace.empty()) {
    // Stable association forces such a relation.
    v.verdict = Verdict::NotAssociated;
    v.reason = "no relation f a = b g with deg a = deg b < deg f";
  }
  return v;
}

bool pointwise_similar(const NcPoly& f, const NcPoly& g) { return f == g; }

NormVerdict norm_equivalent(const NcPoly& f, const NcPoly& g, const RefuterConfig* cfg) {
  NormVerdict v;
  auto finish = [&]() {
    if (!v.equivalent && cfg) v.witness = norm_refuter(f, g, *cfg);
    return v;
  };
  if (f.is_zero() || g.is_zero()) {
    v.equivalent = f.is_zero() && g.is_zero();
    v.cyclic_check = v.equivalent;
    if (v.equivalent) v.zeta = Scalar(1);
    return finish();
  }
  const Word& w = f.leading_word();
  Scalar gw = g.coeff(w);
  if (gw.is_zero()) return finish();
  Scalar zeta = gw / f.leading_coeff();
  if (!(g == zeta * f) || !(zeta * zeta.conj()).is_one()) return finish();
  v.equivalent = true;
  v.zeta = zeta;
  v.cyclic_check = cyclically_equivalent(f * f.star(), g * g.star());
  if (!v.cyclic_check) throw std::logic_error("unimodular scaling failed the cyclic cross-check");
  return v;
}

std::optional<RefutationWitness> noncommutativity_witness(const NcPoly& a, const NcPoly& b, const RefuterConfig& cfg) {
  if (a * b == b * a) return std::nullopt;
  return power_rank_refuter(a * b, b * a, cfg);
}

}  // namespace ncequiv
