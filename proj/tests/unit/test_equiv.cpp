#include <doctest.h>

#include "ncequiv/equiv.hpp"
#include "testing.hpp"

using namespace ncequiv;
using namespace ncequiv::testing;

namespace {
NcPoly prange(int lo, int hi) {
  NcPoly p(1);
  for (int a = lo; a <= hi; ++a) p = p * (P("x") - NcPoly(a));
  return p;
}
}  // namespace

TEST_SUITE("equiv") {
  TEST_CASE("intertwiner spaces") {
    auto s = intertwiner_space(P("x*y + 1"), P("y*x + 1"), 1);
    REQUIRE(s.basis.size() == 1);
    CHECK(s.basis[0] * Scalar(1) == s.basis[0].leading_coeff() * P("x"));
    auto c = intertwiner_space(P("x*y"), P("x*y"), 0);
    REQUIRE(c.basis.size() == 1);
    CHECK(c.basis[0].is_constant());
    CHECK(intertwiner_space(P("x"), P("y"), 4).basis.empty());
  }

  TEST_CASE("minimal intertwiners on the long family") {
    NcPoly f = prange(1, 2) * P("y") + P("x"), g = P("y") * prange(1, 2) + P("x");
    auto a = minimal_intertwiner(f, g, 6);
    REQUIRE(a);
    CHECK(*a == prange(1, 2));
    auto b = minimal_intertwiner(g, f, 6);
    REQUIRE(b);
    CHECK(b->degree() == 4u);
    CHECK(g * *b == *b * f);
    CHECK(*minimal_intertwiner(P("x"), P("x"), 2) == NcPoly(1));
  }

  TEST_CASE("decomposition") {
    auto d = decompose(P("x*y*x*y + x*y"));
    CHECK(d.p == UniPoly({Scalar(0), Scalar(1), Scalar(1)}));
    CHECK(d.core == P("x*y"));
    auto e = decompose(P("x*y"));
    CHECK(e.p == UniPoly::t());
    CHECK(e.core == P("x*y"));
    CHECK(decompose(P("x")).core == P("x"));
    auto h = decompose(P("3*(x*y + y)^3 - (x*y + y) + 2"));
    CHECK(h.p.degree() == 3u);
    CHECK(compose(h.p, h.core) == P("3*(x*y + y)^3 - (x*y + y) + 2"));
  }

  TEST_CASE("isospectrality") {
    auto a = is_isospectral(P("x*y + 1"), P("y*x + 1"));
    CHECK(a.isospectral);
    REQUIRE(a.intertwiner);
    CHECK(*a.intertwiner == P("x"));
    auto b = is_isospectral(P("x*y*x*y + x*y + x"), P("x*y^2*x + x*y + x"));
    CHECK_FALSE(b.isospectral);
    REQUIRE(b.witness);
    CHECK(b.witness->verify(P("x*y*x*y + x*y + x"), P("x*y^2*x + x*y + x")));
    CHECK(is_isospectral(P("x"), P("x")).isospectral);
    CHECK_FALSE(is_isospectral(P("x + 1"), P("x")).isospectral);
  }

  TEST_CASE("elementary steps") {
    auto s = elementary_intertwined(P("x*y"), P("y*x"));
    REQUIRE(s);
    CHECK(s->lambda.is_zero());
    CHECK(s->a == P("x"));
    CHECK(s->b == P("y"));
    NcPoly f = prange(1, 2) * P("y") + P("x"), g = P("y") * prange(1, 2) + P("x");
    CHECK_FALSE(elementary_intertwined(f, g));
    auto t = elementary_intertwined(P("1 + x*y"), P("1 + x*y"));
    REQUIRE(t);
    CHECK(t->verify());
    CHECK(t->from == P("1 + x*y"));
    CHECK(t->to == P("1 + x*y"));
  }

  TEST_CASE("chains") {
    NcPoly f = prange(1, 2) * P("y") + P("x"), g = P("y") * prange(1, 2) + P("x");
    auto c = intertwining_chain(f, g);
    REQUIRE(c.steps);
    REQUIRE(c.steps->size() == 2);
    CHECK(verify_chain(*c.steps, f, g));
    CHECK((*c.steps)[0].to == prange(2, 2) * P("y") * prange(1, 1) + P("x"));
    auto one = intertwining_chain(P("x*y"), P("y*x"));
    REQUIRE(one.steps);
    CHECK(one.steps->size() == 1);
    auto none = intertwining_chain(f, f);
    REQUIRE(none.steps);
    CHECK(none.steps->empty());
  }

  TEST_CASE("stable association") {
    NcPoly f3 = P("x*y*x*y + x*y + x"), g3 = P("x*y^2*x + x*y + x");
    auto v = stable_association(f3, g3);
    CHECK(v.verdict == Verdict::Associated);
    CHECK(v.verify(f3, g3));
    CHECK(f3 * v.a == v.b * g3);

    auto n = stable_association(P("x*y"), P("y*x"));
    CHECK(n.verdict == Verdict::NotAssociated);
    REQUIRE(n.refutation);
    MatrixTuple unit_pair = pair(ints({{1, 0}, {0, 0}}), ints({{0, 1}, {0, 0}}));
    CHECK(rank(evaluate(P("x*y"), unit_pair)) == 1);
    CHECK(rank(evaluate(P("y*x"), unit_pair)) == 0);
    CHECK(n.refutation->x.size == 2);

    auto same = stable_association(f3, f3);
    CHECK(same.verdict == Verdict::Associated);
    CHECK(same.a == NcPoly(1));
    CHECK(same.b == NcPoly(1));
    CHECK(to_string(Verdict::Undecided) == "undecided");
  }

  TEST_CASE("pointwise similarity is equality") {
    CHECK(pointwise_similar(P("x*y + 1"), P("x*y + 1")));
    CHECK_FALSE(pointwise_similar(P("x*y + 1"), P("y*x + 1")));
    NcPoly a = P("y*x^3*y + x*y + y*x"), b = P("x*y*x*y*x + x*y + y*x");
    CHECK_FALSE(pointwise_similar(a * b, b * a));
  }

  TEST_CASE("norm equivalence") {
    FieldPtr qi = Field::gaussian();
    NcPoly f = P("x*y + x", qi);
    Scalar i = Scalar::generator(qi, 0);
    auto v = norm_equivalent(f, f * i);
    CHECK(v.equivalent);
    REQUIRE(v.zeta);
    CHECK(*v.zeta == i);
    CHECK(v.cyclic_check);
    CHECK_FALSE(norm_equivalent(P("x*y"), P("y*x")).equivalent);
    CHECK_FALSE(norm_equivalent(f, f * Scalar(2)).equivalent);
    RefuterConfig cfg;
    auto w = norm_equivalent(P("x*y"), P("y*x"), &cfg);
    REQUIRE(w.witness);
    CHECK(w.witness->verify(P("x*y"), P("y*x")));
  }

  TEST_CASE("noncommutativity witness") {
    RefuterConfig cfg;
    cfg.max_size = 3;
    auto w = noncommutativity_witness(P("x"), P("y"), cfg);
    REQUIRE(w);
    CHECK(w->x.size == 2);
    CHECK(w->power == 1);
    CHECK(w->verify(P("x*y"), P("y*x")));
    CHECK_FALSE(noncommutativity_witness(P("x"), P("x^2"), cfg));
  }
}
