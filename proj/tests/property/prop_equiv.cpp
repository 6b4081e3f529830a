#include <doctest.h>

#include "ncequiv/equiv.hpp"
#include "ncequiv/linsolve.hpp"
#include "ncequiv/pencil.hpp"
#include "testing.hpp"

using namespace ncequiv;
using namespace ncequiv::testing;

namespace {

// a lies in the span of `basis`.
bool in_span(const NcPoly& a, const std::vector<NcPoly>& basis) {
  std::map<Word, std::uint32_t, GradedLex> cols;
  auto col = [&](const Word& w) { return cols.emplace(w, static_cast<std::uint32_t>(cols.size())).first->second; };
  for (const auto& b : basis)
    for (const auto& [w, c] : b.terms()) col(w);
  for (const auto& [w, c] : a.terms()) col(w);
  // Columns are the basis elements; one equation per word.
  const std::size_t n = basis.size();
  std::vector<SparseRow> rows(cols.size());
  std::vector<Scalar> rhs(cols.size(), Scalar(0));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [w, c] : basis[j].terms()) rows[cols[w]].emplace_back(static_cast<std::uint32_t>(j), c);
  for (const auto& [w, c] : a.terms()) rhs[cols[w]] = c;
  SparseEchelon e(n, a.field());
  for (std::size_t i = 0; i < rows.size(); ++i) e.add_row(rows[i], rhs[i]);
  return e.consistent();
}

struct Elementary {
  NcPoly a, b, f, g;
  Scalar lambda;
};

Elementary elementary(Rng& rng, std::size_t max_deg, bool nonzero_lambda) {
  Elementary e;
  e.a = rng.poly(1 + rng.index(max_deg), 2, 3);
  e.b = rng.poly(1 + rng.index(max_deg), 2, 3);
  e.lambda = nonzero_lambda ? rng.nonzero_scalar() : rng.scalar();
  e.f = NcPoly(e.lambda) + e.a * e.b;
  e.g = NcPoly(e.lambda) + e.b * e.a;
  return e;
}

}  // namespace

TEST_SUITE("equiv properties") {
  TEST_CASE("elementary pairs are intertwined and isospectral") {
    Rng rng(501);
    for (int i = 0; i < 12; ++i) {
      Elementary e = elementary(rng, 2, false);
      CAPTURE(print(e.f, kXY));
      CAPTURE(print(e.g, kXY));
      auto sp = intertwiner_space(e.f, e.g, e.a.degree().value());
      CHECK(in_span(e.a, sp.basis));
      auto v = is_isospectral(e.f, e.g);
      CHECK(v.isospectral);
      if (v.intertwiner) CHECK(e.f * *v.intertwiner == *v.intertwiner * e.g);
      for (std::size_t k = 2; k <= 4; ++k)
        for (int j = 0; j < 10; ++j) {
          MatrixTuple x = rng.tuple(k, 2, 3);
          CHECK(char_poly(evaluate(e.f, x)) == char_poly(evaluate(e.g, x)));
        }
    }
  }

  TEST_CASE("associated verdicts re-verify and preserve ranks") {
    Rng rng(502);
    for (int i = 0; i < 10; ++i) {
      Elementary e = elementary(rng, 2, true);
      auto v = stable_association(e.f, e.g);
      REQUIRE(v.verdict == Verdict::Associated);
      CHECK(v.verify(e.f, e.g));
      CHECK(e.f * v.a == v.b * e.g);
      CHECK(v.right->verify());
      CHECK(v.left->verify());
      for (std::size_t k = 2; k <= 4; ++k)
        for (int j = 0; j < 20; ++j) {
          SampleOptions so;
          so.low_rank = rng.coin() ? 1 : 0;
          MatrixTuple x = sample_tuple(k, 2, 3, rng.engine()(), so);
          CHECK(rank(evaluate(e.f, x)) == rank(evaluate(e.g, x)));
        }
    }
  }

  TEST_CASE("chains re-verify") {
    Rng rng(503);
    for (int i = 0; i < 8; ++i) {
      Elementary e = elementary(rng, 2, false);
      auto c = intertwining_chain(e.f, e.g);
      REQUIRE(c.steps);
      CHECK(verify_chain(*c.steps, e.f, e.g));
      for (const auto& s : *c.steps) CHECK(s.verify());
    }
  }

  TEST_CASE("association of squares implies association") {
    Rng rng(504);
    for (int i = 0; i < 6; ++i) {
      Elementary e = elementary(rng, 1, true);
      auto sq = stable_association(e.f * e.f, e.g * e.g);
      if (sq.verdict != Verdict::Associated) continue;
      CHECK(sq.verify(e.f * e.f, e.g * e.g));
      auto v = stable_association(e.f, e.g);
      CHECK(v.verdict == Verdict::Associated);
      CHECK(v.verify(e.f, e.g));
    }
  }

  TEST_CASE("spectra off lambda agree") {
    Rng rng(505);
    for (int i = 0; i < 10; ++i) {
      Elementary e = elementary(rng, 2, false);
      MatrixTuple x = rng.tuple(3, 2, 3);
      UniPoly cf = char_poly(evaluate(e.f, x)), cg = char_poly(evaluate(e.g, x));
      UniPoly root = UniPoly::root_factor(e.lambda);
      // Strip every factor t - lambda, then compare.
      auto strip = [&](UniPoly p) {
        for (;;) {
          auto [q, r] = divmod(p, root);
          if (!r.is_zero()) return p;
          p = q;
        }
      };
      CHECK(strip(cf) == strip(cg));
      CHECK(cf == cg);
    }
  }
}

TEST_SUITE("eval properties") {
  TEST_CASE("direct sums") {
    Rng rng(601);
    for (int i = 0; i < 20; ++i) {
      NcPoly f = rng.poly(3, 2, 4);
      MatrixTuple x = rng.tuple(1 + rng.index(3), 2), y = rng.tuple(1 + rng.index(3), 2);
      CHECK(evaluate(f, direct_sum(x, y)) == direct_sum(evaluate(f, x), evaluate(f, y)));
    }
  }

  TEST_CASE("conjugation") {
    Rng rng(602);
    for (int i = 0; i < 20; ++i) {
      NcPoly f = rng.poly(3, 2, 4);
      std::size_t k = 1 + rng.index(3);
      MatrixTuple x = rng.tuple(k, 2);
      Matrix s = rng.invertible(k);
      Matrix si = *inverse(s);
      CHECK(evaluate(f, x.conjugated(s)) == si * evaluate(f, x) * s);
    }
  }

  TEST_CASE("Cayley-Hamilton") {
    Rng rng(603);
    for (int i = 0; i < 10; ++i) {
      Matrix m = rng.matrix(4, 4);
      CHECK(evaluate(char_poly(m), m).is_zero());
    }
  }

  TEST_CASE("unexpected pair: equal jordan structure at 3x3") {
    NcPoly a = P("y*x^3*y + x*y + y*x"), b = P("x*y*x*y*x + x*y + y*x");
    Rng rng(604);
    for (int i = 0; i < 10; ++i) {
      MatrixTuple x = rng.tuple(3, 2, 3);
      Matrix fv = evaluate(a * b, x), gv = evaluate(b * a, x);
      CHECK(char_poly(fv) == char_poly(gv));
      CHECK_FALSE(jordan_difference(fv, gv));
    }
  }

  TEST_CASE("refuter witnesses always re-verify") {
    Rng rng(605);
    RefuterConfig cfg;
    cfg.max_size = 3;
    cfg.samples = 10;
    for (int i = 0; i < 10; ++i) {
      NcPoly f = rng.poly(2), g = rng.poly(2);
      cfg.seed = rng.engine()();
      if (auto w = similarity_refuter(f, g, cfg)) CHECK(w->verify(f, g));
      if (auto w = rank_refuter(f, g, cfg)) CHECK(w->verify(f, g));
    }
  }
}

TEST_SUITE("pencil properties") {
  TEST_CASE("similarity certificates give equal pencil ranks") {
    Rng rng(701);
    for (int i = 0; i < 10; ++i) {
      std::size_t c = 2 + rng.index(2);
      MatrixTuple a = rng.tuple(c, 2, 2);
      MatrixTuple b = a.conjugated(rng.invertible(c));
      auto s = joint_similarity(a, b);
      REQUIRE(s.verdict == Similarity::Similar);
      CHECK(s.verify(a, b));
      std::vector<Matrix> ca{Matrix::identity(c)}, cb{Matrix::identity(c)};
      ca.insert(ca.end(), a.mats.begin(), a.mats.end());
      cb.insert(cb.end(), b.mats.begin(), b.mats.end());
      LinearPencil la(true, ca), lb(true, cb);
      for (int j = 0; j < 20; ++j) {
        MatrixTuple x = sample_tuple(1 + rng.index(3), 3, 3, rng.engine()());
        CHECK(rank(pencil_eval(la, x)) == rank(pencil_eval(lb, x)));
      }
    }
  }

  TEST_CASE("affine rank equality co-occurs with similarity") {
    Rng rng(702);
    for (int i = 0; i < 10; ++i) {
      // A_1 triangular with nonzero integer eigenvalues mu, nu where nu + 1 != mu.
      long mu = rng.integer(1, 4), nu = -rng.integer(1, 4);
      Matrix a1 = ints({{mu, rng.integer(-3, 3)}, {0, nu}});
      MatrixTuple a({a1, rng.matrix(2, 2, 2)});
      Matrix s = rng.invertible(2);
      bool similar = rng.coin();
      MatrixTuple shifted({similar ? a1 : a1 + Matrix::identity(2), a.mats[1]});
      MatrixTuple b = shifted.conjugated(s);
      auto js = joint_similarity(a, b);
      CHECK((js.verdict == Similarity::Similar) == similar);
      CHECK((js.verdict == Similarity::NotSimilar) == !similar);
      LinearPencil la(false, {Matrix::identity(2), a.mats[0], a.mats[1]});
      LinearPencil lb(false, {Matrix::identity(2), b.mats[0], b.mats[1]});
      // On the determinantal variety of A at x_1 = -1/mu the ranks split exactly when B is not similar.
      Matrix x1(1, 1), x2(1, 1);
      x1(0, 0) = Scalar(Rational(-1, mu));
      MatrixTuple on_variety({x1, x2});
      CHECK((rank(pencil_eval(la, on_variety)) == rank(pencil_eval(lb, on_variety))) == similar);
      if (similar)
        for (int j = 0; j < 20; ++j) {
          MatrixTuple x = sample_tuple(1 + rng.index(3), 2, 3, rng.engine()());
          CHECK(rank(pencil_eval(la, x)) == rank(pencil_eval(lb, x)));
        }
    }
  }
}
