#include "corpus.hpp"

#include <functional>

#include "ncequiv/equiv.hpp"
#include "ncequiv/numeric.hpp"
#include "ncequiv/parse.hpp"
#include "ncequiv/pencil.hpp"

namespace ncequiv::corpus {

namespace {

const VarNames kXY{"x", "y"};

Matrix mat(const std::vector<std::vector<std::string>>& rows, const FieldPtr& f = Field::rationals()) {
  Matrix m(rows.size(), rows[0].size(), f);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_scalar(rows[i][j], f);
  return m;
}

MatrixTuple pair(const Matrix& x, const Matrix& y) { return MatrixTuple({x, y}); }

}  // namespace

NcPoly poly(const std::string& src) { return parse(src, kXY); }

MatrixTuple nilpotent_pair() { return pair(mat({{"1", "0"}, {"0", "0"}}), mat({{"0", "1"}, {"0", "0"}})); }
MatrixTuple swap_pair() { return pair(mat({{"1", "0"}, {"0", "0"}}), mat({{"0", "1"}, {"1", "0"}})); }
MatrixTuple rotation_pair() { return pair(mat({{"1", "0"}, {"0", "0"}}), mat({{"0", "1"}, {"-1", "0"}})); }
MatrixTuple projection_pair() { return pair(mat({{"0", "1"}, {"0", "0"}}), mat({{"1/2", "1/2"}, {"1/2", "1/2"}})); }

MatrixTuple quartic_pair() {
  FieldPtr f = parse_field("Q(sqrt5)(xi: xi^2=29+13*sqrt5)");
  Matrix x = mat({{"1", "0", "0", "0"},
                  {"0", "-1/2 + 1/2*sqrt5", "0", "0"},
                  {"0", "0", "-1", "0"},
                  {"0", "0", "0", "(11/4 - 5/4*sqrt5)*xi"}},
                 f);
  Matrix y = mat({{"0", "-1/2 - 1/10*sqrt5", "0", "0"},
                  {"1", "-1", "2", "0"},
                  {"1", "-1/10*sqrt5", "0", "(1/2 - 3/10*sqrt5)*xi"},
                  {"-3/4 + 1/4*sqrt5", "-1/2*sqrt5", "-3/2 + 1/2*sqrt5", "xi - 4 - 2*sqrt5"}},
                 f);
  return pair(x, y);
}

NcPoly p_range(int lo, int hi) {
  NcPoly p(Scalar(1));
  for (int a = lo; a <= hi; ++a) p = p * (NcPoly::variable(0) - NcPoly(Scalar(a)));
  return p;
}

NcPoly long_waypoint(int s, int k) { return p_range(k + 1, s) * NcPoly::variable(1) * p_range(1, k) + NcPoly::variable(0); }

std::vector<Item> verify_paper(std::uint64_t seed) {
  std::vector<Item> items;
  auto check = [&](std::string name, const std::function<bool(std::string&)>& body) {
    Item it{std::move(name), false, {}};
    try {
      it.pass = body(it.detail);
    } catch (const std::exception& e) {
      it.detail = std::string("exception: ") + e.what();
    }
    items.push_back(std::move(it));
  };
  EquivOptions opt;
  opt.seed = seed;
  opt.refuter.seed = seed;

  const NcPoly f1 = poly("x*y + 1"), g1 = poly("y*x + 1"), f2 = poly("x*y"), g2 = poly("y*x");
  const NcPoly f3 = poly("x*y*x*y + x*y + x"), g3 = poly("x*y^2*x + x*y + x");
  const NcPoly x = poly("x");

  check("evaluations on the nilpotent pair", [&](std::string& d) {
    auto t = nilpotent_pair();
    bool ok = evaluate(f1, t) == mat({{"1", "1"}, {"0", "1"}}) && evaluate(g1, t) == Matrix::identity(2) &&
              evaluate(f2, t) == mat({{"0", "1"}, {"0", "0"}}) && evaluate(g2, t).is_zero();
    if (!ok) d = "value mismatch";
    return ok;
  });
  check("evaluations on the swap pair", [&](std::string& d) {
    auto t = swap_pair();
    bool ok = evaluate(f3, t) == mat({{"1", "1"}, {"0", "0"}}) && evaluate(g3, t) == mat({{"2", "1"}, {"0", "0"}});
    if (!ok) d = "value mismatch";
    return ok;
  });
  check("intertwining relations", [&](std::string&) {
    return f3 * poly("y*x + 1") == poly("x*y + 1") * g3 && f1 * x == x * g1 && f2 * x == x * g2 &&
           x * (poly("y*x + 1")) == poly("x*y + 1") * x;
  });
  check("stable association of f3, g3", [&](std::string& d) {
    auto v = stable_association(f3, g3, opt);
    d = to_string(v.verdict);
    return v.verdict == Verdict::Associated && v.verify(f3, g3);
  });
  check("xy and yx are not rank-equivalent", [&](std::string& d) {
    auto v = stable_association(f2, g2, opt);
    d = to_string(v.verdict);
    return v.verdict == Verdict::NotAssociated && v.refutation && v.refutation->x.size == 2 &&
           v.refutation->verify(f2, g2);
  });
  check("isospectrality of xy+1, yx+1", [&](std::string&) {
    auto v = is_isospectral(f1, g1, opt);
    return v.isospectral && v.intertwiner && *v.intertwiner == x;
  });
  check("f3, g3 are not isospectral", [&](std::string&) {
    auto v = is_isospectral(f3, g3, opt);
    return !v.isospectral && v.witness && v.witness->verify(f3, g3);
  });
  check("powers counterexample", [&](std::string& d) {
    auto t = rotation_pair();
    Matrix a = evaluate(f3, t), b = evaluate(g3, t);
    d = "rank f^2 = " + std::to_string(rank(a * a)) + ", g^2 zero: " + std::to_string((b * b).is_zero());
    return rank(a * a) >= 1 && (b * b).is_zero();
  });
  check("f3^2, g3^2 are not stably associated", [&](std::string& d) {
    auto v = stable_association(f3 * f3, g3 * g3, opt);
    d = to_string(v.verdict);
    return v.verdict == Verdict::NotAssociated && v.refutation && v.refutation->verify(f3 * f3, g3 * g3);
  });
  for (int s = 2; s <= 3; ++s) {
    const NcPoly f = long_waypoint(s, 0), g = long_waypoint(s, s);
    check("long chain, s = " + std::to_string(s), [&, s](std::string& d) {
      auto ch = intertwining_chain(f, g, opt);
      if (!ch.steps) {
        d = ch.diagnostic;
        return false;
      }
      if (ch.steps->size() != static_cast<std::size_t>(s) || !verify_chain(*ch.steps, f, g)) return false;
      for (int k = 1; k < s; ++k)
        if (!((*ch.steps)[k].from == long_waypoint(s, k))) return false;
      return true;
    });
    check("minimal intertwiner degrees, s = " + std::to_string(s), [&, s](std::string& d) {
      auto a = minimal_intertwiner(f, g, s * s);
      auto b = minimal_intertwiner(g, f, s * s);
      if (!a || !b) return false;
      d = std::to_string(a->degree().value()) + " and " + std::to_string(b->degree().value());
      return a->degree() == static_cast<std::size_t>(s) && b->degree() == static_cast<std::size_t>(s * s);
    });
  }
  const NcPoly a = poly("y*x^3*y + x*y + y*x"), b = poly("x*y*x*y*x + x*y + y*x");
  const NcPoly u = poly("1 + x^2*y"), v = poly("1 + x*y*x"), w = poly("1 + y*x^2");
  check("unexpected identities", [&](std::string&) { return b * u == v * a && a * v == w * b && (a * b) * u == w * (b * a); });
  check("unexpected 4x4 witness", [&](std::string& d) {
    auto t = quartic_pair();
    Matrix fv = evaluate(a * b, t), gv = evaluate(b * a, t);
    Matrix f2v = fv * fv, g2v = gv * gv;
    double hf = numeric_max_abs((a * b).pow(2), t, true), hg = numeric_max_abs((b * a).pow(2), t, true);
    d = "rank g^2 = " + std::to_string(rank(g2v)) + ", 256-bit |f^2| = " + std::to_string(hf);
    return f2v.is_zero() && !g2v.is_zero() && hf < 1e-40 && hg > 1e-3;
  });
  check("operator isospectral pair", [&](std::string&) {
    auto t = projection_pair();
    return evaluate(poly("y*x^2*y"), t).is_zero() &&
           evaluate(poly("x*y^2*x"), t) == t.mats[0] * Scalar(Rational(1, 2));
  });
  check("xx* and x*x are cyclically equivalent", [&](std::string&) {
    VarNames xs{"x"};
    return cyclically_equivalent(parse("x*x*", xs), parse("x**x", xs));
  });
  check("one-variable non-similar pair", [&](std::string& d) {
    Matrix a1 = mat({{"0", "1"}, {"0", "0"}});
    auto r = joint_similarity(MatrixTuple({a1}), MatrixTuple({Matrix(2, 2)}));
    d = r.reason;
    return r.verdict == Similarity::NotSimilar;
  });
  return items;
}

}  // namespace ncequiv::corpus
