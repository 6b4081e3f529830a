#include "ncequiv/ncpoly.hpp"

#include <algorithm>

#include "ncequiv/unipoly.hpp"

namespace ncequiv {

NcPoly::NcPoly(FieldPtr field) { adopt_field(field); }

NcPoly::NcPoly(const Scalar& c) {
  adopt_field(c.field());
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

NcPoly NcPoly::monomial(const Word& w, const Scalar& c) {
  NcPoly p(c.field());
  p.add_term(w, c);
  return p;
}

NcPoly NcPoly::variable(std::size_t var, bool star) { return monomial(Word::letter(var, star)); }

void NcPoly::adopt_field(const FieldPtr& f) {
  FieldPtr c = common_field(field(), f);
  if (!c->is_rational()) field_ = std::move(c);
}

const FieldPtr& NcPoly::field() const {
  static const FieldPtr q = Field::rationals();
  return field_ ? field_ : q;
}

bool NcPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

bool NcPoly::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

bool NcPoly::has_star() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_star(); });
}

Degree NcPoly::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree(terms_.begin()->first.size());
}

std::size_t NcPoly::low_degree() const {
  if (terms_.empty()) throw DomainError("low degree of the zero polynomial");
  return terms_.rbegin()->first.size();
}

std::size_t NcPoly::num_vars() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.num_vars());
  return n;
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field()) : it->second;
}

const Word& NcPoly::leading_word() const {
  if (terms_.empty()) throw DomainError("leading word of the zero polynomial");
  return terms_.begin()->first;
}

const Scalar& NcPoly::leading_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.begin()->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  adopt_field(c.field());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::homogeneous_component(std::size_t d) const {
  NcPoly r(field());
  for (const auto& [w, c] : terms_)
    if (w.size() == d) r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

std::vector<NcPoly> NcPoly::homogeneous_components() const {
  std::vector<NcPoly> out;
  if (terms_.empty()) return out;
  out.assign(degree().value() + 1, NcPoly(field()));
  for (const auto& [w, c] : terms_) out[w.size()].terms_.emplace(w, c);
  return out;
}

NcPoly NcPoly::star() const {
  NcPoly r(field());
  for (const auto& [w, c] : terms_) r.terms_.emplace(w.star(), c.conj());
  return r;
}

NcPoly NcPoly::pow(std::size_t k) const {
  NcPoly r = NcPoly(Scalar::one(field()));
  NcPoly b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return r;
}

NcPoly NcPoly::in_field(const FieldPtr& f) const {
  NcPoly r(f);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.in_field(f));
  r.adopt_field(field());
  return r;
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  adopt_field(o.field());
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  adopt_field(o.field());
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  adopt_field(c.field());
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly r(common_field(a.field(), b.field()));
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) r.add_term(u * v, c * d);
  return r;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  common_field(a.field(), b.field());
  auto it = b.terms_.begin();
  for (const auto& [w, c] : a.terms_) {
    if (!(w == it->first) || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

NcPoly compose(const UniPoly& p, const NcPoly& f) {
  NcPoly r(common_field(p.field(), f.field()));
  if (p.is_zero()) return r;
  // Horner.
  for (std::size_t i = p.degree().value() + 1; i-- > 0;) r = r * f + NcPoly(p.coeff(i));
  return r;
}

NcPoly cyclic_canonical(const NcPoly& f) {
  NcPoly r(f.field());
  for (const auto& [w, c] : f.terms()) r.add_term(w.min_rotation(), c);
  return r;
}

bool cyclically_equivalent(const NcPoly& f, const NcPoly& g) { return cyclic_canonical(f - g).is_zero(); }

}  // namespace ncequiv
