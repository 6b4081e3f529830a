// Acceptance run: one pass/fail line per criterion. Arguments select
// criteria by number; no arguments runs all of them.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "json_io.hpp"
#include "ncequiv/equiv.hpp"
#include "ncequiv/ideal.hpp"
#include "ncequiv/numeric.hpp"
#include "ncequiv/pencil.hpp"
#include "testing.hpp"

using namespace ncequiv;
using namespace ncequiv::testing;
using ncequiv::cli::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

const NcPoly kF1 = P("x*y + 1"), kG1 = P("y*x + 1"), kF2 = P("x*y"), kG2 = P("y*x");
const NcPoly kF3 = P("x*y*x*y + x*y + x"), kG3 = P("x*y^2*x + x*y + x");

MatrixTuple nilpotent_pair() { return pair(ints({{1, 0}, {0, 0}}), ints({{0, 1}, {0, 0}})); }
MatrixTuple swap_pair() { return pair(ints({{1, 0}, {0, 0}}), ints({{0, 1}, {1, 0}})); }
MatrixTuple rotation_pair() { return pair(ints({{1, 0}, {0, 0}}), ints({{0, 1}, {-1, 0}})); }

json cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"ncequiv", "--json"});
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  json j = out.str().empty() ? json::object() : json::parse(out.str());
  j["process_exit"] = code;
  return j;
}

bool proportional(const NcPoly& a, const NcPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_coeff() == b * a.leading_coeff();
}

NcPoly p_range(int lo, int hi) {
  NcPoly p(1);
  for (int a = lo; a <= hi; ++a) p = p * (P("x") - NcPoly(a));
  return p;
}

NcPoly waypoint(int s, int k) { return p_range(k + 1, s) * P("y") * p_range(1, k) + P("x"); }

Outcome golden_evaluations() {
  Outcome o;
  const MatrixTuple n = nilpotent_pair(), s = swap_pair();
  const std::vector<std::pair<NcPoly, std::pair<MatrixTuple, Matrix>>> cases{
      {kF1, {n, ints({{1, 1}, {0, 1}})}}, {kG1, {n, ints({{1, 0}, {0, 1}})}}, {kF2, {n, ints({{0, 1}, {0, 0}})}},
      {kG2, {n, ints({{0, 0}, {0, 0}})}}, {kF3, {s, ints({{1, 1}, {0, 0}})}}, {kG3, {s, ints({{2, 1}, {0, 0}})}}};
  for (const auto& [f, tv] : cases) {
    o.require(evaluate(f, tv.first) == tv.second, "value of " + print(f, kXY));
    o.require(naive_eval(f, tv.first) == tv.second, "oracle value of " + print(f, kXY));
  }
  return o;
}

Outcome stable_association_case() {
  Outcome o;
  json rep = cli_json({"stable-assoc", "x*y*x*y+x*y+x", "x*y^2*x+x*y+x"});
  o.require(rep["process_exit"] == 0, "stable-assoc f3 g3 exit " + rep["process_exit"].dump());
  if (!o.pass) return o;
  const json& c = rep["certificate"];
  NcPoly a = P(c["a"].get<std::string>()), b = P(c["b"].get<std::string>());
  o.require(kF3 * a == b * kG3, "relation does not expand");
  o.require(a == P("y*x + 1") && b == P("x*y + 1"), "relation differs from f3(yx+1) = (xy+1)g3");
  const json &r = c["right"], &l = c["left"];
  o.require(kF3 * P(r["u"].get<std::string>()) + b * P(r["v"].get<std::string>()) == NcPoly(1), "right comaximality");
  o.require(P(l["u"].get<std::string>()) * a + P(l["v"].get<std::string>()) * kG3 == NcPoly(1), "left comaximality");

  json neg = cli_json({"stable-assoc", "x*y", "y*x"});
  o.require(neg["process_exit"] == 1, "stable-assoc xy yx should refute");
  if (!o.pass) return o;
  RefutationWitness w = cli::witness_from_json(neg["witness"]);
  o.require(w.kind == RefutationWitness::Kind::Rank, "witness kind " + to_string(w.kind));
  o.require(w.x.size == 2, "witness size " + std::to_string(w.x.size));
  o.require(rank(naive_eval(kF2, w.x)) != rank(naive_eval(kG2, w.x)), "witness ranks agree");
  o.detail = "a = " + print(a, kXY) + ", b = " + print(b, kXY) + "; xy/yx ranks " + std::to_string(w.rank_f) + " vs " +
             std::to_string(w.rank_g) + " at size 2";
  return o;
}

Outcome isospectrality_case() {
  Outcome o;
  auto v = is_isospectral(kF1, kG1);
  o.require(v.isospectral && v.intertwiner, "xy+1, yx+1 not certified");
  if (!o.pass) return o;
  o.require(*v.intertwiner == P("x"), "intertwiner " + print(*v.intertwiner, kXY));
  o.require(kF1 * P("x") == P("x") * kG1, "f1 x != x g1");

  auto n = is_isospectral(kF3, kG3);
  o.require(!n.isospectral, "f3, g3 reported isospectral");
  RefuterConfig cfg;
  cfg.max_size = 3;
  cfg.samples = 50;
  auto w = charpoly_refuter(kF3, kG3, cfg);
  o.require(w.has_value(), "no char-poly witness within 50 samples at sizes <= 3");
  if (!o.pass) return o;
  o.require(w->kind == RefutationWitness::Kind::Charpoly && w->x.size <= 3, "witness shape");
  o.require(charpoly_by_interpolation(naive_eval(kF3, w->x)) != charpoly_by_interpolation(naive_eval(kG3, w->x)),
            "oracle char polys agree at the witness");
  o.detail = "char-poly witness at size " + std::to_string(w->x.size);
  return o;
}

Outcome chains_case() {
  Outcome o;
  std::string detail;
  for (int s = 2; s <= 3; ++s) {
    const NcPoly f = waypoint(s, 0), g = waypoint(s, s);
    auto ch = intertwining_chain(f, g);
    o.require(ch.steps.has_value(), "no chain for s = " + std::to_string(s) + ": " + ch.diagnostic);
    if (!o.pass) return o;
    const auto& st = *ch.steps;
    o.require(st.size() == static_cast<std::size_t>(s), "chain length " + std::to_string(st.size()));
    o.require(verify_chain(st, f, g), "chain does not verify");
    for (const auto& step : st) {
      o.require(step.from == NcPoly(step.lambda) + step.a * step.b, "step from");
      o.require(step.to == NcPoly(step.lambda) + step.b * step.a, "step to");
    }
    for (int k = 1; k < s && o.pass; ++k)
      o.require(proportional(st[k].from - NcPoly(st[k].from.constant_term()),
                             waypoint(s, k) - NcPoly(waypoint(s, k).constant_term())),
                "waypoint " + std::to_string(k) + " for s = " + std::to_string(s));
    auto fwd = minimal_intertwiner(f, g, s * s);
    auto rev = minimal_intertwiner(g, f, s * s);
    o.require(fwd && fwd->degree() == static_cast<std::size_t>(s), "forward intertwiner degree");
    o.require(rev && rev->degree() == static_cast<std::size_t>(s * s), "reverse intertwiner degree");
    if (fwd && rev)
      detail += "s=" + std::to_string(s) + ": length " + std::to_string(st.size()) + ", degrees " +
                std::to_string(fwd->degree().value()) + "/" + std::to_string(rev->degree().value()) + "; ";
  }
  if (o.pass) o.detail = detail;
  return o;
}

Outcome powers_case() {
  Outcome o;
  const MatrixTuple t = rotation_pair();
  Matrix fv = naive_eval(kF3, t), gv = naive_eval(kG3, t);
  o.require(gauss_rank(fv * fv) >= 1, "f3(X,Y)^2 = 0");
  o.require((gv * gv).is_zero(), "g3(X,Y)^2 != 0");
  const NcPoly f = kF3 * kF3, g = kG3 * kG3;
  auto v = stable_association(f, g);
  o.require(v.verdict != Verdict::Associated, "f3^2, g3^2 certified associated");
  o.require(v.refutation.has_value(), "refuter found no witness");
  if (!o.pass) return o;
  o.require(v.refutation->kind == RefutationWitness::Kind::Rank && v.refutation->verify(f, g), "witness invalid");
  o.require(v.refutation->x.size == 2, "witness size " + std::to_string(v.refutation->x.size));
  RefutationWitness shown;
  shown.x = t;
  shown.rank_f = gauss_rank(naive_eval(f, t));
  shown.rank_g = gauss_rank(naive_eval(g, t));
  o.require(shown.verify(f, g), "displayed tuple is not a rank witness");
  o.detail = "refuter witness at size 2 with ranks " + std::to_string(v.refutation->rank_f) + " vs " +
             std::to_string(v.refutation->rank_g);
  return o;
}

MatrixTuple quartic_pair() {
  FieldPtr k = parse_field("Q(sqrt5)(xi: xi^2=29+13*sqrt5)");
  const Scalar r5 = Scalar::generator(k, 0), xi = Scalar::generator(k, 1);
  const Scalar one = Scalar::one(k);
  auto q = [&](long n, long d) { return one * Scalar(Rational(n, d)); };
  Matrix x(4, 4, k), y(4, 4, k);
  x(0, 0) = one;
  x(1, 1) = (r5 - one) / Scalar(2);
  x(2, 2) = -one;
  x(3, 3) = (q(11, 1) - Scalar(5) * r5) / Scalar(4) * xi;
  y(0, 1) = (q(-5, 1) - r5) / Scalar(10);
  y(1, 0) = one;
  y(1, 1) = -one;
  y(1, 2) = q(2, 1);
  y(2, 0) = one;
  y(2, 1) = -one / (Scalar(2) * r5);
  y(2, 3) = (q(5, 1) - Scalar(3) * r5) / Scalar(10) * xi;
  y(3, 0) = (r5 - q(3, 1)) / Scalar(4);
  y(3, 1) = -r5 / Scalar(2);
  y(3, 2) = (r5 - q(3, 1)) / Scalar(2);
  y(3, 3) = xi - q(4, 1) - Scalar(2) * r5;
  return pair(x, y);
}

Outcome unexpected_case() {
  Outcome o;
  const NcPoly a = P("y*x^3*y + x*y + y*x"), b = P("x*y*x*y*x + x*y + y*x");
  const NcPoly u = P("1 + x^2*y"), v = P("1 + x*y*x"), w = P("1 + y*x^2");
  o.require(convolve(b, u) == convolve(v, a), "b u != v a");
  o.require(convolve(a, v) == convolve(w, b), "a v != w b");
  const NcPoly f = a * b, g = b * a;
  o.require(f * u == w * g, "(ab)u != w(ba)");

  auto sa = stable_association(f, g);
  o.require(sa.verdict == Verdict::Associated && sa.verify(f, g), "ab, ba not certified associated");
  if (!o.pass) return o;
  o.require(proportional(sa.a, u) && proportional(sa.b, w), "certificate is not the relation (ab)u = w(ba): a = " +
                                                                 print(sa.a, kXY) + ", b = " + print(sa.b, kXY));

  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    MatrixTuple x = rng.tuple(3, 2, 4);
    Matrix fv = evaluate(f, x), gv = evaluate(g, x);
    o.require(jordan_profile(fv).parts == jordan_profile(gv).parts, "jordan profiles differ at sample " + std::to_string(i));
    o.require(!jordan_difference(fv, gv), "jordan difference at sample " + std::to_string(i));
  }

  MatrixTuple t = quartic_pair();
  Matrix fv = naive_eval(f, t), gv = naive_eval(g, t);
  o.require((fv * fv).is_zero(), "f(X,Y)^2 != 0");
  o.require(!(gv * gv).is_zero(), "g(X,Y)^2 = 0");
  if (o.pass) o.detail = "rank g(X,Y)^2 = " + std::to_string(gauss_rank(gv * gv));
  return o;
}

Outcome norm_case() {
  Outcome o;
  FieldPtr qi = Field::gaussian();
  const Scalar i = Scalar::generator(qi, 0);
  const std::vector<Scalar> units{Scalar::one(qi), -Scalar::one(qi), i, -i};
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    NcPoly f = rng.poly(rng.index(4), 2, 4, qi);
    Scalar z = units[k % 4];
    auto v = norm_equivalent(f, f * z);
    o.require(v.equivalent && v.zeta && *v.zeta == z, "norm_equivalent(f, zeta f) failed at " + std::to_string(k));
  }
  RefuterConfig cfg;
  cfg.max_size = 3;
  cfg.samples = 20;
  double worst = 1;
  for (int k = 0; k < 50; ++k) {
    NcPoly f = rng.poly(rng.index(4), 2, 4, qi), g = rng.poly(rng.index(4), 2, 4, qi);
    if (norm_equivalent(f, g).equivalent) continue;
    cfg.seed = 1000 + k;
    auto w = norm_refuter(f, g, cfg);
    o.require(w.has_value(), "no norm witness for pair " + std::to_string(k));
    if (!w) break;
    double gap = std::abs(w->norm_f - w->norm_g) / std::max(w->norm_f, w->norm_g);
    worst = std::min(worst, gap);
    o.require(gap > 1e-4, "relative gap " + std::to_string(gap));
    o.require(w->verify(f, g), "norm witness does not re-verify");
  }
  if (o.pass) o.detail = "smallest relative gap " + std::to_string(worst);
  return o;
}

Outcome isospectral_property() {
  Outcome o;
  Rng rng(8);
  for (int k = 0; k < 100 && o.pass; ++k) {
    NcPoly a = rng.poly(1 + rng.index(2), 2, 3), b = rng.poly(1 + rng.index(2), 2, 3);
    Scalar lambda = rng.scalar();
    NcPoly f = NcPoly(lambda) + a * b, g = NcPoly(lambda) + b * a;
    for (std::size_t s = 2; s <= 4; ++s)
      for (int j = 0; j < 5; ++j) {
        MatrixTuple x = rng.tuple(s, 2, 3);
        o.require(char_poly(evaluate(f, x)) == char_poly(evaluate(g, x)), "char polys differ at case " + std::to_string(k));
      }
    auto sp = intertwiner_space(f, g, a.degree().value());
    // a is in the span iff appending it does not raise the rank.
    std::vector<NcPoly> with = sp.basis;
    with.push_back(a);
    auto rank_of = [](const std::vector<NcPoly>& ps) {
      std::map<Word, std::size_t, GradedLex> cols;
      for (const auto& p : ps)
        for (const auto& [w, c] : p.terms()) cols.emplace(w, cols.size());
      Matrix m(ps.size(), cols.size());
      for (std::size_t r = 0; r < ps.size(); ++r)
        for (const auto& [w, c] : ps[r].terms()) m(r, cols[w]) = c;
      return gauss_rank(m);
    };
    o.require(rank_of(with) == rank_of(sp.basis), "a not in the intertwiner space at case " + std::to_string(k));
    o.require(f * a == a * g, "f a != a g");
  }
  return o;
}

Outcome rank_property() {
  Outcome o;
  Rng rng(9);
  for (int k = 0; k < 50 && o.pass; ++k) {
    // lambda + ab, lambda + ba with lambda != 0: (lambda + ab) a = a (lambda + ba) is comaximal
    // since (lambda + ab) - a b = lambda and -b a + (lambda + ba) = lambda. Every other case
    // multiplies two such pairs.
    auto make = [&](NcPoly& f, NcPoly& g) {
      NcPoly a = rng.poly(1 + rng.index(2), 2, 3), b = rng.poly(1 + rng.index(2), 2, 3);
      Scalar lambda = rng.nonzero_scalar();
      f = NcPoly(lambda) + a * b;
      g = NcPoly(lambda) + b * a;
      Scalar li = lambda.inverse();
      o.require(f * NcPoly(li) + a * (-b * li) == NcPoly(1), "right comaximality of the constructed relation");
      o.require((-b * li) * a + NcPoly(li) * g == NcPoly(1), "left comaximality of the constructed relation");
      o.require(f * a == a * g, "constructed relation");
    };
    NcPoly f, g;
    make(f, g);
    if (k % 2 == 1) {
      NcPoly f2, g2;
      make(f2, g2);
      f = f * f2;
      g = g * g2;
    }
    for (std::size_t s = 2; s <= 4; ++s)
      for (int j = 0; j < 10; ++j) {
        SampleOptions so;
        so.low_rank = j % 2 ? 1 : 0;
        MatrixTuple x = sample_tuple(s, 2, 4, rng.engine()(), so);
        o.require(gauss_rank(evaluate(f, x)) == gauss_rank(evaluate(g, x)), "ranks differ at case " + std::to_string(k));
      }
  }
  return o;
}

Outcome axioms_case() {
  Outcome o;
  Rng rng(10);
  for (int k = 0; k < 100 && o.pass; ++k) {
    NcPoly f = rng.poly(rng.index(4), 2, 4);
    MatrixTuple x = rng.tuple(1 + rng.index(3), 2), y = rng.tuple(1 + rng.index(3), 2);
    Matrix fx = naive_eval(f, x), fy = naive_eval(f, y);
    Matrix sum(x.size + y.size, x.size + y.size);
    sum.set_block(0, 0, fx);
    sum.set_block(x.size, x.size, fy);
    o.require(evaluate(f, direct_sum(x, y)) == sum, "direct-sum identity at case " + std::to_string(k));
    Matrix s = rng.invertible(x.size);
    Matrix si = *inverse(s);
    std::vector<Matrix> conj;
    for (const auto& m : x.mats) conj.push_back(si * m * s);
    o.require(evaluate(f, MatrixTuple(conj)) == si * fx * s, "conjugation identity at case " + std::to_string(k));
  }
  return o;
}

Outcome joint_similarity_case() {
  Outcome o;
  Rng rng(11);
  for (int k = 0; k < 50 && o.pass; ++k) {
    std::size_t c = 1 + rng.index(4), n = 1 + rng.index(3);
    MatrixTuple a = rng.tuple(c, n, 3);
    Matrix p = rng.invertible(c), pi = *inverse(p);
    std::vector<Matrix> bm;
    for (const auto& m : a.mats) bm.push_back(p * m * pi);
    MatrixTuple b(bm);
    auto r = joint_similarity(a, b);
    o.require(r.verdict == Similarity::Similar && r.p, "no certificate at case " + std::to_string(k));
    if (!r.p) break;
    for (std::size_t j = 0; j < n; ++j) o.require(*r.p * a.mats[j] == b.mats[j] * *r.p, "P A != B P");
    o.require(!laplace_det(*r.p).is_zero(), "singular P");
  }
  auto n1 = joint_similarity(MatrixTuple({ints({{0, 1}, {0, 0}})}), MatrixTuple({ints({{0, 0}, {0, 0}})}));
  o.require(n1.verdict == Similarity::NotSimilar, "n = 1 pair not refuted: " + n1.reason);
  if (o.pass) o.detail = "n = 1 pair: " + n1.reason;
  return o;
}

Outcome padding_case() {
  Outcome o;
  Rng rng(12);
  int deficient = 0;
  for (int k = 0; k < 20 && o.pass; ++k) {
    std::size_t d = 1 + rng.index(3), n = 1 + rng.index(2);
    std::vector<Matrix> coeffs;
    coeffs.push_back(rng.invertible(d));
    for (std::size_t i = 1; i < n; ++i) coeffs.push_back(rng.matrix(d, d, 3));
    LinearPencil lambda(true, coeffs);
    std::size_t p = 1 + rng.index(4), q = 1 + rng.index(p);
    std::vector<Matrix> t;
    for (std::size_t i = 0; i < n; ++i) {
      switch (k % 3) {
        case 0: t.push_back(rng.matrix(p, q, 3)); break;
        case 1: t.push_back(rng.matrix(p, 1, 2) * rng.matrix(1, q, 2)); break;
        default: t.push_back(Matrix(p, q)); break;
      }
    }
    // Lambda(T) = sum A_i (x) T_i, assembled entrywise.
    Matrix lt(d * p, d * q);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s)
          for (std::size_t u = 0; u < p; ++u)
            for (std::size_t v = 0; v < q; ++v) lt(r * p + u, s * q + v) += coeffs[i](r, s) * t[i](u, v);
    const std::size_t ker = d * q - gauss_rank(lt);
    if (ker > 0) ++deficient;
    const std::size_t pt = p + (p - q) * (d - 1);
    const std::size_t expect = pt * d - ker;
    auto res = pad_pencil(lambda, t, 20, 100 + k);
    o.require(res.p_tilde == pt, "p~ mismatch at case " + std::to_string(k));
    o.require(res.claimed_rank == expect, "claimed rank mismatch at case " + std::to_string(k));
    o.require(res.verified_rank == expect,
              "verified " + std::to_string(res.verified_rank) + " != " + std::to_string(expect) + " at case " +
                  std::to_string(k));
    if (res.rank_point) {
      std::size_t r = gauss_rank(pencil_eval(res.pencil, *res.rank_point));
      std::size_t l = res.rank_point->mats.empty() ? 1 : res.rank_point->size;
      o.require((r + l - 1) / l == res.verified_rank, "rank point does not attain the verified rank");
    }
  }
  o.require(deficient > 0, "no rank-deficient Lambda(T) exercised");
  if (o.pass) o.detail = std::to_string(deficient) + " of 20 instances with nontrivial kernel";
  return o;
}

Outcome opspec_case() {
  Outcome o;
  Matrix x = ints({{0, 1}, {0, 0}});
  Matrix y = ints({{1, 1}, {1, 1}}) * Scalar(Rational(1, 2));
  MatrixTuple t = pair(x, y);
  o.require(naive_eval(P("y*x^2*y"), t).is_zero(), "g(X,Y) != 0");
  Matrix fv = naive_eval(P("x*y^2*x"), t);
  o.require(fv == x * Scalar(Rational(1, 2)), "f(X,Y) != X/2");
  o.require(!fv.is_zero(), "f(X,Y) = 0");
  o.require(evaluate(P("x*y^2*x"), t) == fv, "library value differs");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "golden evaluations", 1, golden_evaluations},
      {2, "stable association", 5, stable_association_case},
      {3, "isospectrality", 10, isospectrality_case},
      {4, "intertwining chains", 60, chains_case},
      {5, "powers counterexample", 5, powers_case},
      {6, "unexpected pair", 120, unexpected_case},
      {7, "norm equivalence suite", 60, norm_case},
      {8, "elementary pairs are isospectral", 60, isospectral_property},
      {9, "associated pairs are rank-equivalent", 60, rank_property},
      {10, "evaluation axioms", 10, axioms_case},
      {11, "joint similarity", 30, joint_similarity_case},
      {12, "padded pencils", 60, padding_case},
      {13, "operator pair golden values", 1, opspec_case},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > c.limit_s) {
      o.pass = false;
      o.detail = "over the time limit of " + std::to_string(c.limit_s) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d %-40s %s  %.3fs  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
