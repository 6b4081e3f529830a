#include "ncequiv/unipoly.hpp"

#include <algorithm>

namespace ncequiv {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    FieldPtr f = common_field(field(), c.field());
    if (!f->is_rational()) field_ = f;
  }
  trim();
}

UniPoly::UniPoly(const Scalar& c) : UniPoly(std::vector<Scalar>{c}) {}

UniPoly UniPoly::t() { return monomial(1); }

UniPoly UniPoly::monomial(std::size_t k, const Scalar& c) {
  std::vector<Scalar> v(k + 1, Scalar::zero(c.field()));
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::root_factor(const Scalar& r) { return UniPoly(std::vector<Scalar>{-r, Scalar(1)}); }

const FieldPtr& UniPoly::field() const {
  static const FieldPtr q = Field::rationals();
  return field_ ? field_ : q;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field()); }

const Scalar& UniPoly::leading_coeff() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

bool UniPoly::has_rational_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
}

Scalar UniPoly::operator()(const Scalar& x) const {
  Scalar r = Scalar::zero(common_field(field(), x.field()));
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  Scalar inv = c_.back().inverse();
  UniPoly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long>(i)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::scale_argument(const Scalar& c) const {
  std::vector<Scalar> v = c_;
  Scalar p = Scalar(1);
  for (auto& a : v) {
    a *= p;
    p *= c;
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar::zero(field()));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  FieldPtr f = common_field(field(), o.field());
  if (!f->is_rational()) field_ = f;
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(Scalar::zero(common_field(a.field(), b.field())));
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar::zero(common_field(a.field(), b.field())));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string coef;
    bool neg = false;
    if (c.is_compound()) {
      coef = "(" + c.to_string() + ")";
    } else {
      coef = c.to_string();
      if (coef[0] == '-') {
        neg = true;
        coef.erase(0, 1);
      }
    }
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (s.empty()) {
      s = neg ? "-" + term : term;
    } else {
      s += neg ? " - " : " + ";
      s += term;
    }
  }
  return s;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  FieldPtr f = common_field(a.field(), b.field());
  std::vector<Scalar> r = a.coeffs();
  const std::size_t nb = b.coeffs().size();
  if (r.size() < nb) return {UniPoly(Scalar::zero(f)), a};
  std::vector<Scalar> q(r.size() - nb + 1, Scalar::zero(f));
  Scalar inv = b.leading_coeff().inverse();
  for (std::size_t i = r.size(); i-- >= nb;) {
    Scalar c = r[i] * inv;
    q[i - nb + 1] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < nb; ++j) r[i - nb + 1 + j] -= c * b.coeffs()[j];
  }
  r.resize(nb - 1);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= std::size_t{0}) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<std::pair<UniPoly, std::size_t>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, std::size_t>> out;
  if (p.degree() <= std::size_t{0}) return out;
  UniPoly a = gcd(p, p.derivative());
  UniPoly b = divmod(p, a).first;
  UniPoly c = divmod(p.derivative(), a).first;
  UniPoly d = c - b.derivative();
  for (std::size_t i = 1; b.degree() > std::size_t{0}; ++i) {
    UniPoly g = gcd(b, d);
    if (g.degree() > std::size_t{0}) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

namespace {

using ZPoly = std::vector<mpz_class>;

ZPoly taylor_shift1(ZPoly a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
  return a;
}

std::size_t sign_variations(const ZPoly& a) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& c : a) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Roots of a in the open interval (0, 1), reported as (c, k) meaning the
// isolating interval (c/2^k, (c+1)/2^k), plus exact dyadic roots.
void isolate_unit(const ZPoly& a, const mpz_class& c, unsigned k, std::vector<std::pair<mpz_class, unsigned>>& out,
                  std::vector<Rational>& exact) {
  ZPoly rev(a.rbegin(), a.rend());
  std::size_t v = sign_variations(taylor_shift1(rev));
  if (v == 0) return;
  if (v == 1) {
    out.emplace_back(c, k);
    return;
  }
  const std::size_t n = a.size() - 1;
  ZPoly l(a.size());
  for (std::size_t i = 0; i <= n; ++i) l[i] = a[i] << static_cast<mp_bitcnt_t>(n - i);
  mpz_class at1 = 0;
  for (const auto& x : l) at1 += x;
  if (at1 == 0) {
    mpz_class num = 2 * c + 1;
    mpz_class den = mpz_class(1) << (k + 1);
    exact.emplace_back(Rational(num, den));
  }
  isolate_unit(l, 2 * c, k + 1, out, exact);
  isolate_unit(taylor_shift1(l), 2 * c + 1, k + 1, out, exact);
}

int sign_at(const ZPoly& a, const Rational& x) {
  Rational s = 0;
  for (std::size_t i = a.size(); i-- > 0;) s = s * x + a[i];
  return sgn(s);
}

// Positive rational roots of a squarefree integer polynomial with a(0) != 0.
void positive_rational_roots(const ZPoly& a, std::vector<Rational>& roots) {
  const std::size_t n = a.size() - 1;
  if (n == 0) return;
  mpz_class lc = abs(a.back());
  mpz_class mx = 0;
  for (const auto& x : a) mx = std::max(mx, mpz_class(abs(x)));
  unsigned e = static_cast<unsigned>(mpz_sizeinbase(mpz_class(mx / lc + 2).get_mpz_t(), 2));
  mpz_class bound = mpz_class(1) << e;
  // c(x) = a(bound x) has its positive roots in (0, 1).
  ZPoly s(a.size());
  for (std::size_t i = 0; i <= n; ++i) s[i] = a[i] << static_cast<mp_bitcnt_t>(e * i);
  std::vector<std::pair<mpz_class, unsigned>> iv;
  std::vector<Rational> exact;
  isolate_unit(s, 0, 0, iv, exact);
  for (auto& r : exact) {
    r *= bound;
    r.canonicalize();
    roots.push_back(r);
  }
  for (const auto& [c, k] : iv) {
    Rational lo(c * bound, mpz_class(1) << k), hi(mpz_class(c + 1) * bound, mpz_class(1) << k);
    lo.canonicalize();
    hi.canonicalize();
    int slo = sign_at(a, lo);
    bool found = false;
    // A rational root p/q has q | lc, so lc * root is an integer.
    while ((hi - lo) * lc >= 1) {
      Rational mid = (lo + hi) / 2;
      int sm = sign_at(a, mid);
      if (sm == 0) {
        roots.push_back(mid);
        found = true;
        break;
      }
      if (sm == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (found) continue;
    Rational y = lo * lc;
    mpz_class cand = y.get_num() / y.get_den() + 1;
    Rational r(cand, lc);
    r.canonicalize();
    if (r > lo && r < hi && sign_at(a, r) == 0) roots.push_back(r);
  }
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (!p.has_rational_coeffs()) throw DomainError("rational_roots needs rational coefficients");
  std::vector<Rational> roots;
  if (p.degree() <= std::size_t{0}) return roots;
  UniPoly s = squarefree_part(p);
  mpz_class den = 1;
  for (const auto& c : s.coeffs()) {
    mpz_class d = c.to_rational().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly a;
  for (const auto& c : s.coeffs()) {
    Rational q = c.to_rational() * den;
    a.push_back(q.get_num());
  }
  if (a[0] == 0) {
    roots.emplace_back(0);
    a.erase(a.begin());
  }
  positive_rational_roots(a, roots);
  ZPoly neg = a;
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  std::vector<Rational> nr;
  positive_rational_roots(neg, nr);
  for (auto& r : nr) roots.push_back(-r);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace ncequiv
