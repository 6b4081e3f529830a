#include "ncequiv/scalar.hpp"

#include <cmath>
#include <complex>
#include <span>
#include <utility>

namespace ncequiv {

namespace {

using CSpan = std::span<const Rational>;

CSpan sp(const Coeffs& c) { return {c.data(), c.size()}; }

Coeffs add(CSpan a, CSpan b) {
  Coeffs out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

bool all_zero(CSpan a) {
  for (const auto& q : a)
    if (sgn(q) != 0) return false;
  return true;
}

// (a0 + a1 g)(b0 + b1 g) = (a0 b0 + a1 b1 r) + (a0 b1 + a1 b0) g
Coeffs mul(CSpan a, CSpan b, std::size_t m, const std::vector<Field::Generator>& gens) {
  if (m == 0) return Coeffs{a[0] * b[0]};
  const std::size_t h = std::size_t{1} << (m - 1);
  auto a0 = a.first(h), a1 = a.subspan(h), b0 = b.first(h), b1 = b.subspan(h);
  const bool a1z = all_zero(a1), b1z = all_zero(b1);
  Coeffs lo = mul(a0, b0, m - 1, gens);
  Coeffs out(2 * h);
  if (!a1z && !b1z) {
    Coeffs t = mul(a1, b1, m - 1, gens);
    t = mul(sp(t), sp(gens[m - 1].radicand), m - 1, gens);
    lo = add(sp(lo), sp(t));
  }
  Coeffs hi(h);
  if (!b1z) hi = mul(a0, b1, m - 1, gens);
  if (!a1z) {
    Coeffs t2 = mul(a1, b0, m - 1, gens);
    hi = add(sp(hi), sp(t2));
  }
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = std::move(lo[i]);
    out[h + i] = std::move(hi[i]);
  }
  return out;
}

Coeffs inv(CSpan a, std::size_t m, const std::vector<Field::Generator>& gens) {
  if (m == 0) {
    if (sgn(a[0]) == 0) throw DomainError("division by zero");
    return Coeffs{1 / a[0]};
  }
  const std::size_t h = std::size_t{1} << (m - 1);
  auto a0 = a.first(h), a1 = a.subspan(h);
  if (all_zero(a1)) {
    Coeffs lo = inv(a0, m - 1, gens);
    lo.resize(2 * h);
    return lo;
  }
  Coeffs n = mul(a0, a0, m - 1, gens);
  Coeffs t = mul(a1, a1, m - 1, gens);
  t = mul(sp(t), sp(gens[m - 1].radicand), m - 1, gens);
  for (std::size_t i = 0; i < h; ++i) n[i] -= t[i];
  if (all_zero(sp(n))) {
    throw DomainError("zero divisor: radicand of " + gens[m - 1].name + " is a square");
  }
  Coeffs ninv = inv(sp(n), m - 1, gens);
  Coeffs lo = mul(a0, sp(ninv), m - 1, gens);
  Coeffs hi = mul(a1, sp(ninv), m - 1, gens);
  Coeffs out(2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = std::move(lo[i]);
    out[h + i] = -hi[i];
  }
  return out;
}

std::complex<double> approx(const Coeffs& c, const std::vector<std::complex<double>>& g) {
  std::complex<double> s = 0;
  for (std::size_t mask = 0; mask < c.size(); ++mask) {
    if (sgn(c[mask]) == 0) continue;
    std::complex<double> t = c[mask].get_d();
    for (std::size_t j = 0; j < g.size(); ++j)
      if (mask >> j & 1) t *= g[j];
    s += t;
  }
  return s;
}

std::string monomial_name(const Field& f, std::size_t mask) {
  std::string s;
  for (std::size_t j = 0; j < f.depth(); ++j) {
    if (!(mask >> j & 1)) continue;
    if (!s.empty()) s += '*';
    s += f.generators()[j].name;
  }
  return s;
}

const FieldPtr& rational_ptr() {
  static const FieldPtr q = std::make_shared<const Field>();
  return q;
}

}  // namespace

FieldPtr Field::rationals() { return rational_ptr(); }

FieldPtr Field::gaussian() {
  static const FieldPtr g = adjoin(rationals(), "i", Scalar(-1));
  return g;
}

FieldPtr Field::adjoin(const FieldPtr& base, std::string name, const Scalar& radicand) {
  if (base->generator_index(name)) throw DomainError("generator declared twice: " + name);
  Scalar r = radicand.in_field(base);
  if (r.is_zero()) throw DomainError("zero radicand for " + name);
  if (!(r.conj() == r)) throw DomainError("radicand of " + name + " is not real");
  if (r.is_rational()) {
    Rational q = r.to_rational();
    if (sgn(q) > 0) {
      mpz_class n = q.get_num(), d = q.get_den();
      if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t()))
        throw DomainError("radicand of " + name + " is a rational square");
    }
  }

  std::vector<std::complex<double>> g;
  for (const auto& gen : base->gens_) {
    double v = approx(gen.radicand, g).real();
    g.push_back(gen.imaginary ? std::complex<double>(0, std::sqrt(-v))
                              : std::complex<double>(std::sqrt(v), 0));
  }
  double v = approx(r.coeffs(), g).real();

  auto f = std::make_shared<Field>();
  f->gens_ = base->gens_;
  f->gens_.push_back({name, r.coeffs(), v < 0});

  std::string part;
  if (name == "i" && r.is_rational() && r.to_rational() == -1) {
    part = "i";
  } else if (r.is_rational() && name == "sqrt" + r.to_rational().get_str()) {
    part = name;
  } else {
    part = name + ": " + name + "^2=" + r.to_string();
  }
  f->decl_ = base->decl_ + "(" + part + ")";
  return f;
}

std::optional<std::size_t> Field::generator_index(std::string_view name) const {
  for (std::size_t j = 0; j < gens_.size(); ++j)
    if (gens_[j].name == name) return j;
  return std::nullopt;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return same_field(*a, *b); }

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b || a->is_rational()) return b;
  if (b->is_rational()) return a;
  if (same_field(*a, *b)) return a;
  throw FieldMismatch("operands over " + a->declaration() + " and " + b->declaration());
}

Scalar::Scalar() : c_{Rational(0)} {}
Scalar::Scalar(long v) : c_{Rational(v)} {}
Scalar::Scalar(const Rational& q) : c_{q} { c_[0].canonicalize(); }

Scalar::Scalar(FieldPtr field, Coeffs c) : field_(std::move(field)), c_(std::move(c)) {
  if (field_ && field_->is_rational()) field_.reset();
  const std::size_t dim = field_ ? field_->dimension() : 1;
  if (c_.size() != dim) throw std::invalid_argument("coefficient vector has wrong length");
  for (auto& q : c_) q.canonicalize();
}

Scalar Scalar::zero(const FieldPtr& f) { return Scalar(f, Coeffs(f->dimension())); }

Scalar Scalar::one(const FieldPtr& f) {
  Coeffs c(f->dimension());
  c[0] = 1;
  return Scalar(f, std::move(c));
}

Scalar Scalar::generator(const FieldPtr& f, std::size_t index) {
  Coeffs c(f->dimension());
  c.at(std::size_t{1} << index) = 1;
  return Scalar(f, std::move(c));
}

const FieldPtr& Scalar::field() const { return field_ ? field_ : rational_ptr(); }

bool Scalar::is_zero() const { return all_zero(sp(c_)); }

bool Scalar::is_one() const { return c_[0] == 1 && all_zero(sp(c_).subspan(1)); }

bool Scalar::is_rational() const { return all_zero(sp(c_).subspan(1)); }

const Rational& Scalar::to_rational() const {
  if (!is_rational()) throw DomainError("scalar is not rational: " + to_string());
  return c_[0];
}

Scalar Scalar::in_field(const FieldPtr& f) const {
  FieldPtr target = common_field(field(), f);
  if (target->is_rational() || field_) return *this;
  Coeffs c(target->dimension());
  c[0] = c_[0];
  return Scalar(target, std::move(c));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!field_ && !o.field_) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (o.c_.size() > c_.size()) *this = in_field(o.field());
  const Scalar& b = o.c_.size() < c_.size() ? o.in_field(field()) : o;
  common_field(field(), b.field());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!field_ && !o.field_) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.c_.size() == 1) {
    for (auto& q : c_) q *= o.c_[0];
    return *this;
  }
  if (c_.size() == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& q : c_) q *= s;
    return *this;
  }
  FieldPtr f = common_field(field(), o.field());
  c_ = mul(sp(c_), sp(o.c_), f->depth(), f->generators());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.c_.size() == 1) {
    if (sgn(o.c_[0]) == 0) throw DomainError("division by zero");
    for (auto& q : c_) q /= o.c_[0];
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.c_.size() == b.c_.size()) {
    if (a.c_.size() > 1) common_field(a.field(), b.field());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  const Scalar& big = a.c_.size() > b.c_.size() ? a : b;
  const Scalar& small = a.c_.size() > b.c_.size() ? b : a;
  if (small.field_) common_field(big.field(), small.field());
  return big.is_rational() && big.c_[0] == small.c_[0];
}

Scalar Scalar::inverse() const {
  if (!field_) {
    if (sgn(c_[0]) == 0) throw DomainError("division by zero");
    return Scalar(Rational(1) / c_[0]);
  }
  return Scalar(field_, inv(sp(c_), field_->depth(), field_->generators()));
}

Scalar Scalar::conj() const {
  if (!field_) return *this;
  Scalar r = *this;
  const auto& gens = field_->generators();
  for (std::size_t mask = 1; mask < r.c_.size(); ++mask) {
    bool flip = false;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if ((mask >> j & 1) && gens[j].imaginary) flip = !flip;
    if (flip) r.c_[mask] = -r.c_[mask];
  }
  return r;
}

std::string Scalar::to_string() const {
  std::string s;
  for (std::size_t mask = 0; mask < c_.size(); ++mask) {
    const Rational& q = c_[mask];
    if (sgn(q) == 0) continue;
    bool neg = sgn(q) < 0;
    Rational a = abs(q);
    std::string term;
    if (mask == 0) {
      term = a.get_str();
    } else {
      term = monomial_name(*field_, mask);
      if (a != 1) term = a.get_str() + "*" + term;
    }
    if (s.empty()) {
      s = neg ? "-" + term : term;
    } else {
      s += neg ? " - " : " + ";
      s += term;
    }
  }
  return s.empty() ? "0" : s;
}

bool Scalar::is_compound() const {
  int n = 0;
  for (const auto& q : c_) n += sgn(q) != 0;
  return n > 1;
}

}  // namespace ncequiv
