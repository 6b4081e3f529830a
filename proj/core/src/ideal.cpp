#include "ncequiv/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wordsystem.hpp"

namespace ncequiv {

namespace {

// Long division in the free algebra. The top component of each remainder
// determines the next quotient component through one fixed word of h.
std::optional<NcPoly> divide(const NcPoly& f, const NcPoly& h, bool right) {
  if (h.is_zero()) throw DomainError("division by the zero polynomial");
  NcPoly q(common_field(f.field(), h.field()));
  if (f.is_zero()) return q;
  const std::size_t dh = h.degree().value();
  const Word& v0 = h.leading_word();
  const Scalar inv = h.leading_coeff().inverse();
  NcPoly r = f;
  while (!r.is_zero()) {
    const std::size_t dr = r.degree().value();
    if (dr < dh) return std::nullopt;
    NcPoly qt(q.field());
    for (const auto& [w, c] : r.terms()) {
      if (w.size() != dr) break;
      if (right) {
        if (w.codes().substr(dr - dh) == v0.codes()) qt.add_term(w.substr(0, dr - dh), c * inv);
      } else {
        if (w.codes().substr(0, dh) == v0.codes()) qt.add_term(w.substr(dh), c * inv);
      }
    }
    if (qt.is_zero()) return std::nullopt;
    r -= right ? qt * h : h * qt;
    if (!r.is_zero() && r.degree() >= dr) return std::nullopt;
    q += qt;
  }
  return q;
}

}  // namespace

std::optional<NcPoly> divide_right_by(const NcPoly& f, const NcPoly& h) { return divide(f, h, true); }

std::optional<NcPoly> divide_left_by(const NcPoly& f, const NcPoly& h) { return divide(f, h, false); }

bool ComaxCertificate::verify() const {
  NcPoly one(Scalar(1));
  return side == Side::Right ? f * u + g * v == one : u * f + v * g == one;
}

std::optional<ComaxCertificate> comaximality_certificate(const NcPoly& f, const NcPoly& g, Side side) {
  ComaxCertificate c{f, g, NcPoly(f.field()), NcPoly(g.field()), side};
  if (f.is_zero() && g.is_zero()) return std::nullopt;
  if (!f.is_zero() && f.is_constant()) {
    c.u = NcPoly(f.constant_term().inverse());
    return c;
  }
  if (!g.is_zero() && g.is_constant()) {
    c.v = NcPoly(g.constant_term().inverse());
    return c;
  }
  if (f.is_zero() || g.is_zero()) return std::nullopt;

  auto alpha = detail::alphabet_of({&f, &g});
  detail::WordSystem sys(common_field(f.field(), g.field()));
  auto u = sys.add_unknown(detail::words_up_to(alpha, g.degree().value() - 1));
  auto v = sys.add_unknown(detail::words_up_to(alpha, f.degree().value() - 1));
  NcPoly one(Scalar(1));
  if (side == Side::Right) {
    sys.add_term(u, f, one);
    sys.add_term(v, g, one);
  } else {
    sys.add_term(u, one, f);
    sys.add_term(v, one, g);
  }
  sys.set_target(one);
  auto sol = sys.solve(false);
  if (!sol.particular) return std::nullopt;
  c.u = (*sol.particular)[0];
  c.v = (*sol.particular)[1];
  if (!c.verify()) throw std::logic_error("comaximality certificate failed to verify");
  return c;
}

bool GcrdResult::verify(const NcPoly& p, const NcPoly& q) const {
  return !h.is_zero() && q_p * h == p && q_q * h == q && s * p + t * q == h;
}

std::optional<GcrdResult> gcrd_bounded(const NcPoly& p, const NcPoly& q, std::optional<std::size_t> deg_bound) {
  if (p.is_zero() || q.is_zero()) throw DomainError("gcrd of the zero polynomial");
  const std::size_t dp = p.degree().value(), dq = q.degree().value();
  const std::size_t bound = deg_bound.value_or(dp + dq);
  const std::size_t e = std::min(dp, dq);

  auto alpha = detail::alphabet_of({&p, &q});
  detail::WordSystem sys(common_field(p.field(), q.field()));
  NcPoly one(Scalar(1));
  auto s = sys.add_unknown(detail::words_up_to(alpha, bound));
  auto t = sys.add_unknown(detail::words_up_to(alpha, bound));
  sys.add_term(s, one, p);
  sys.add_term(t, one, q);
  sys.keep_rows([e](const Word& w) { return w.size() > e; });
  auto sol = sys.solve();

  // Echelonize the images s*p + t*q by leading word, carrying (s, t).
  struct Img {
    NcPoly h, s, t;
  };
  std::map<Word, Img, GradedLex> basis;
  for (auto& st : sol.nullspace) {
    Img img{st[0] * p + st[1] * q, st[0], st[1]};
    while (!img.h.is_zero()) {
      auto it = basis.find(img.h.leading_word());
      if (it == basis.end()) break;
      Scalar c = img.h.leading_coeff() / it->second.h.leading_coeff();
      img.h -= c * it->second.h;
      img.s -= c * it->second.s;
      img.t -= c * it->second.t;
    }
    if (!img.h.is_zero()) {
      Word lw = img.h.leading_word();
      basis.emplace(std::move(lw), std::move(img));
    }
  }
  if (basis.empty()) return std::nullopt;

  const std::size_t dmin = basis.rbegin()->first.size();
  for (auto it = basis.rbegin(); it != basis.rend() && it->first.size() == dmin; ++it) {
    Scalar c = it->second.h.leading_coeff().inverse();
    GcrdResult r{c * it->second.h, {}, {}, c * it->second.s, c * it->second.t};
    auto qp = divide_right_by(p, r.h);
    auto qq = divide_right_by(q, r.h);
    if (!qp || !qq) continue;
    r.q_p = std::move(*qp);
    r.q_q = std::move(*qq);
    return r;
  }
  return std::nullopt;
}

Flattening flattening(const NcPoly& f, std::size_t e) {
  std::set<Word> rows, cols;
  for (const auto& [w, c] : f.terms()) {
    if (w.size() < e) throw DomainError("flattening split exceeds degree");
    rows.insert(w.substr(0, e));
    cols.insert(w.substr(e));
  }
  Flattening fl{Matrix(rows.size(), cols.size(), f.field()), {rows.begin(), rows.end()}, {cols.begin(), cols.end()}};
  for (const auto& [w, c] : f.terms()) {
    auto i = std::lower_bound(fl.row_words.begin(), fl.row_words.end(), w.substr(0, e)) - fl.row_words.begin();
    auto j = std::lower_bound(fl.col_words.begin(), fl.col_words.end(), w.substr(e)) - fl.col_words.begin();
    fl.matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
  }
  return fl;
}

std::vector<NcPoly> factor_homogeneous(const NcPoly& f) {
  if (f.is_zero()) throw DomainError("factoring the zero polynomial");
  if (!f.is_homogeneous()) throw DomainError("factor_homogeneous needs a homogeneous polynomial");
  const std::size_t d = f.degree().value();
  for (std::size_t e = 1; e < d; ++e) {
    Flattening fl = flattening(f, e);
    if (rank(fl.matrix) != 1) continue;
    // Rank one: F = column(v0) * row(u0) / F[u0, v0].
    std::size_t i0 = 0, j0 = 0;
    while (fl.matrix(i0, j0).is_zero()) {
      if (++j0 == fl.col_words.size()) {
        j0 = 0;
        ++i0;
      }
    }
    NcPoly g(f.field()), h(f.field());
    for (std::size_t i = 0; i < fl.row_words.size(); ++i) g.add_term(fl.row_words[i], fl.matrix(i, j0));
    Scalar pinv = fl.matrix(i0, j0).inverse();
    for (std::size_t j = 0; j < fl.col_words.size(); ++j) h.add_term(fl.col_words[j], fl.matrix(i0, j) * pinv);
    Scalar lc = g.leading_coeff();
    g *= lc.inverse();
    h *= lc;
    if (!(g * h == f)) throw std::logic_error("rank-one flattening did not factor");
    std::vector<NcPoly> out{g};
    auto rest = factor_homogeneous(h);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  return {f};
}

}  // namespace ncequiv
