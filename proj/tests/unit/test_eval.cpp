#include <doctest.h>

#include "ncequiv/eval.hpp"
#include "ncequiv/numeric.hpp"
#include "testing.hpp"

using namespace ncequiv;
using namespace ncequiv::testing;

namespace {
MatrixTuple nilpotent() { return pair(ints({{1, 0}, {0, 0}}), ints({{0, 1}, {0, 0}})); }
MatrixTuple swap() { return pair(ints({{1, 0}, {0, 0}}), ints({{0, 1}, {1, 0}})); }
}  // namespace

TEST_SUITE("eval") {
  TEST_CASE("displayed values") {
    CHECK(evaluate(P("x*y + 1"), nilpotent()) == ints({{1, 1}, {0, 1}}));
    CHECK(evaluate(P("y*x"), nilpotent()).is_zero());
    CHECK(evaluate(P("x*y*x*y + x*y + x"), swap()) == ints({{1, 1}, {0, 0}}));
    CHECK(evaluate(P("x*y^2*x + x*y + x"), swap()) == ints({{2, 1}, {0, 0}}));
  }

  TEST_CASE("agrees with the naive evaluator") {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
      NcPoly f = rng.poly(4, 3, 6);
      MatrixTuple x = rng.tuple(3, 3);
      CHECK(evaluate(f, x) == naive_eval(f, x));
    }
  }

  TEST_CASE("stars are conjugate transposes") {
    FieldPtr qi = Field::gaussian();
    Matrix a(2, 2, qi);
    a(0, 1) = Scalar::generator(qi, 0);
    MatrixTuple x({a});
    VarNames xs{"x"};
    Matrix v = evaluate(parse("x x*", xs, qi), x);
    CHECK(v == a * a.conj_transpose());
    CHECK(v(0, 0) == Scalar(1));
  }

  TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(Matrix::identity(2)) == UniPoly::root_factor(Scalar(1)) * UniPoly::root_factor(Scalar(1)));
    CHECK(char_poly(ints({{0, 1}, {0, 0}})) == UniPoly::monomial(2));
    Matrix comp = ints({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}});
    CHECK(char_poly(comp) == UniPoly({Scalar(-2), Scalar(0), Scalar(0), Scalar(1)}));
    Rng rng(11);
    for (int i = 0; i < 5; ++i) {
      Matrix m = rng.matrix(4, 4);
      CHECK(char_poly(m) == charpoly_by_interpolation(m));
    }
  }

  TEST_CASE("jordan profiles") {
    auto z = jordan_profile(Matrix(3, 3));
    REQUIRE(z.parts.size() == 1);
    CHECK(z.parts[0].eigenvalue == Scalar(0));
    CHECK(z.parts[0].ranks == std::vector<std::size_t>{0});

    auto j = jordan_profile(ints({{1, 1}, {0, 1}}));
    REQUIRE(j.parts.size() == 1);
    CHECK(j.parts[0].eigenvalue == Scalar(1));
    CHECK(j.parts[0].ranks == std::vector<std::size_t>{1, 0});

    CHECK(jordan_difference(ints({{1, 1}, {0, 1}}), Matrix::identity(2)));
    CHECK_FALSE(jordan_difference(ints({{1, 1}, {0, 1}}), ints({{1, 0}, {5, 1}})));
  }

  TEST_CASE("sampling is reproducible") {
    MatrixTuple a = sample_tuple(3, 2, 10, 42), b = sample_tuple(3, 2, 10, 42), c = sample_tuple(3, 2, 10, 43);
    CHECK(a.mats == b.mats);
    CHECK_FALSE(a.mats == c.mats);
    SampleOptions h;
    h.hermitian = true;
    h.complex = true;
    MatrixTuple x = sample_tuple(3, 2, 10, 5, h);
    for (const auto& m : x.mats) CHECK(m == m.conj_transpose());
    SampleOptions lr;
    lr.low_rank = 1;
    for (const auto& m : sample_tuple(4, 2, 10, 9, lr).mats) CHECK(rank(m) <= 1);
  }

  TEST_CASE("rank refuter") {
    RefuterConfig cfg;
    cfg.max_size = 3;
    auto w = rank_refuter(P("x*y"), P("y*x"), cfg);
    REQUIRE(w);
    CHECK(w->x.size == 2);
    CHECK(w->verify(P("x*y"), P("y*x")));
    CHECK_FALSE(rank_refuter(P("x*y + x"), P("x*y + x"), cfg));
  }

  TEST_CASE("power rank refuter on the powers pair") {
    NcPoly f = P("x*y*x*y + x*y + x"), g = P("x*y^2*x + x*y + x");
    RefuterConfig cfg;
    cfg.max_size = 3;
    auto w = rank_refuter(f * f, g * g, cfg);
    REQUIRE(w);
    CHECK(w->x.size == 2);
    CHECK(w->verify(f * f, g * g));
  }

  TEST_CASE("similarity refuter finds the 2x2 pair") {
    RefuterConfig cfg;
    cfg.max_size = 3;
    auto w = similarity_refuter(P("x*y + 1"), P("y*x + 1"), cfg);
    REQUIRE(w);
    CHECK(w->x.size == 2);
    CHECK(w->verify(P("x*y + 1"), P("y*x + 1")));
  }

  TEST_CASE("inner rank bound") {
    NcMatrix one{{P("x")}};
    CHECK(inner_rank_lower_bound(one, 2, 5, 1) == 1);
    NcMatrix diag{{P("x"), NcPoly()}, {NcPoly(), P("x")}};
    CHECK(inner_rank_lower_bound(diag, 2, 5, 1) == 2);
    NcMatrix zero{{NcPoly()}};
    CHECK(inner_rank_lower_bound(zero, 2, 5, 1) == 0);
  }

  TEST_CASE("norms") {
    NormPair a = numeric_norms(P("x*y"), nilpotent()), b = numeric_norms(P("y*x"), nilpotent());
    CHECK(a.frobenius == doctest::Approx(1.0));
    CHECK(b.frobenius == doctest::Approx(0.0));
    MatrixTuple one({Matrix::identity(1)});
    VarNames xs{"x"};
    CHECK(numeric_norms(parse("2 x", xs), one).operator_norm == doctest::Approx(2.0));
    RefuterConfig cfg;
    cfg.max_size = 3;
    cfg.samples = 10;
    FieldPtr qi = Field::gaussian();
    NcPoly f = P("x*y + 2*x", qi);
    CHECK_FALSE(norm_refuter(f, f * Scalar::generator(qi, 0), cfg));
    auto w = norm_refuter(P("x"), P("2*x"), cfg);
    REQUIRE(w);
    CHECK(w->verify(P("x"), P("2*x")));
  }
}
