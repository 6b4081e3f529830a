#include "ncequiv/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace ncequiv {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      msg_(msg),
      line_(line),
      column_(column) {}

VarNames default_varnames(std::size_t n) {
  if (n <= 3) {
    VarNames v{"x", "y", "z"};
    v.resize(n);
    return v;
  }
  VarNames v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

namespace {

constexpr std::size_t kMaxExponent = 4096;

enum class Tok { Number, Ident, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Number;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t.text += take();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          t.text += take();
      } else if (std::string_view("+-*^()/:=;").find(c) != std::string_view::npos) {
        t.kind = Tok::Sym;
        t.text = std::string(1, take());
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char take() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) take();
  }

  std::string_view s_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const VarNames* vars, FieldPtr field)
      : t_(std::move(toks)), vars_(vars), field_(std::move(field)) {}

  const FieldPtr& field() const { return field_; }

  bool at_field_keyword() const { return peek().kind == Tok::Ident && peek().text == "field"; }

  void field_declaration() {
    if (at_field_keyword()) ++i_;
    const Token& q = expect(Tok::Ident, "field name");
    if (q.text != "Q") fail("expected Q", q);
    FieldPtr f = Field::rationals();
    while (is_sym("(")) {
      ++i_;
      const Token& name = expect(Tok::Ident, "generator name");
      try {
        if (is_sym(":")) {
          ++i_;
          const Token& again = expect(Tok::Ident, "generator name");
          if (again.text != name.text) fail("relation must square " + name.text, again);
          expect_sym("^");
          const Token& two = expect(Tok::Number, "2");
          if (two.text != "2") fail("relation must be quadratic", two);
          expect_sym("=");
          Parser sub(*this);
          sub.field_ = f;
          sub.vars_ = nullptr;
          NcPoly r = sub.expr();
          i_ = sub.i_;
          if (!r.is_constant()) fail("radicand must be a scalar", name);
          f = Field::adjoin(f, name.text, r.constant_term());
        } else if (name.text == "i") {
          f = Field::adjoin(f, "i", Scalar(-1));
        } else if (name.text.size() > 4 && name.text.compare(0, 4, "sqrt") == 0 &&
                   std::all_of(name.text.begin() + 4, name.text.end(), ::isdigit)) {
          f = Field::adjoin(f, name.text, Scalar(Rational(name.text.substr(4))));
        } else {
          fail("generator needs a relation: " + name.text + ": " + name.text + "^2=...", name);
        }
      } catch (const DomainError& e) {
        fail(e.what(), name);
      }
      expect_sym(")");
    }
    if (is_sym(";")) ++i_;
    field_ = f;
  }

  NcPoly expr() {
    NcPoly r(field_);
    bool neg = false;
    if (is_sym("+") || is_sym("-")) neg = t_[i_++].text == "-";
    NcPoly first = term();
    r = neg ? -first : first;
    while (is_sym("+") || is_sym("-")) {
      bool minus = t_[i_++].text == "-";
      NcPoly t = term();
      if (minus) {
        r -= t;
      } else {
        r += t;
      }
    }
    return r;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
  }

 private:
  const Token& peek(std::size_t k = 0) const { return t_[std::min(i_ + k, t_.size() - 1)]; }
  bool is_sym(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
  bool factor_start(std::size_t k = 0) const {
    const Token& t = peek(k);
    return t.kind == Tok::Number || t.kind == Tok::Ident || (t.kind == Tok::Sym && t.text == "(");
  }
  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what, peek());
    return t_[i_++];
  }
  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "'", peek());
    ++i_;
  }

  NcPoly term() {
    NcPoly r = factor();
    while (true) {
      if (is_sym("*") && factor_start(1)) {
        ++i_;
        r = r * factor();
      } else if (factor_start()) {
        r = r * factor();
      } else {
        return r;
      }
    }
  }

  NcPoly factor() {
    NcPoly r = primary();
    while (true) {
      if (is_sym("^")) {
        ++i_;
        if (is_sym("-")) fail("negative exponent", peek());
        const Token& n = expect(Tok::Number, "exponent");
        if (n.text.size() > 6 || std::stoul(n.text) > kMaxExponent) fail("exponent too large", n);
        r = r.pow(std::stoul(n.text));
      } else if (is_sym("*") && !factor_start(1)) {
        ++i_;
        r = r.star();
      } else {
        return r;
      }
    }
  }

  NcPoly primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++i_;
      Rational q(t.text);
      if (is_sym("/")) {
        ++i_;
        const Token& d = expect(Tok::Number, "denominator");
        mpz_class den(d.text);
        if (den == 0) fail("zero denominator", d);
        q = Rational(mpz_class(t.text), den);
        q.canonicalize();
      }
      return NcPoly(Scalar(q));
    }
    if (t.kind == Tok::Ident) {
      ++i_;
      if (vars_) {
        auto it = std::find(vars_->begin(), vars_->end(), t.text);
        if (it != vars_->end()) return NcPoly::variable(static_cast<std::size_t>(it - vars_->begin()));
      }
      if (auto g = field_->generator_index(t.text)) return NcPoly(Scalar::generator(field_, *g));
      if (t.text == "i" && field_->is_rational()) {
        field_ = Field::gaussian();
        return NcPoly(Scalar::generator(field_, 0));
      }
      fail("unknown identifier '" + t.text + "'", t);
    }
    if (is_sym("(")) {
      ++i_;
      NcPoly r = expr();
      expect_sym(")");
      return r;
    }
    if (t.kind == Tok::End) fail("unexpected end of input", t);
    fail("unexpected '" + t.text + "'", t);
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
  const VarNames* vars_;
  FieldPtr field_;
};

std::vector<Token> lex(std::string_view s) { return Lexer(s).run(); }

// Splits a leading "field ..." line off a source.
std::pair<std::string_view, std::string_view> split_preamble(std::string_view src) {
  std::size_t start = src.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos || src.compare(start, 5, "field") != 0) return {{}, src};
  std::size_t end = src.find_first_of(";\n", start);
  if (end == std::string_view::npos) return {src, {}};
  return {src.substr(0, end), src.substr(end + 1)};
}

FieldPtr merge_field(const FieldPtr& given, const FieldPtr& declared) {
  if (given->is_rational()) return declared;
  if (!same_field(given, declared))
    throw FieldMismatch("source declares " + declared->declaration() + " but " + given->declaration() + " is in use");
  return given;
}

// Blank out the preamble so that token positions still refer to the source.
std::string mask_preamble(std::string_view src, std::string_view pre) {
  std::string s(src);
  for (std::size_t k = 0; k < pre.size() + (pre.size() < src.size() ? 1 : 0); ++k)
    if (s[k] != '\n') s[k] = ' ';
  return s;
}

}  // namespace

FieldPtr parse_field(std::string_view text) {
  Parser p(lex(text), nullptr, Field::rationals());
  p.field_declaration();
  p.expect_end();
  return p.field();
}

NcPoly parse(std::string_view src, const VarNames& vars, const FieldPtr& field) {
  auto [pre, body] = split_preamble(src);
  FieldPtr f = field;
  std::string text(src);
  if (!pre.empty()) {
    f = merge_field(field, parse_field(pre));
    text = mask_preamble(src, pre);
  }
  for (const auto& v : vars)
    if (f->generator_index(v)) throw ParseError("variable name clashes with generator: " + v, 1, 1);
  Parser p(lex(text), &vars, f);
  NcPoly r = p.expr();
  p.expect_end();
  return r.in_field(p.field());
}

Scalar parse_scalar(std::string_view src, const FieldPtr& field) {
  NcPoly r = parse(src, {}, field);
  if (r.is_zero()) return Scalar::zero(r.field());
  return r.constant_term();
}

UniPoly parse_unipoly(std::string_view src, const FieldPtr& field, const std::string& var) {
  NcPoly r = parse(src, {var}, field);
  std::vector<Scalar> c;
  for (const auto& [w, s] : r.terms()) {
    if (c.size() <= w.size()) c.resize(w.size() + 1, Scalar::zero(r.field()));
    c[w.size()] = s;
  }
  return UniPoly(std::move(c));
}

VarNames infer_varnames(const std::vector<std::string>& sources, const FieldPtr& field) {
  std::size_t xyz = 0, indexed = 0;
  for (const auto& src : sources) {
    auto [pre, body] = split_preamble(src);
    FieldPtr f = pre.empty() ? field : parse_field(pre);
    for (const auto& t : lex(std::string(body))) {
      if (t.kind != Tok::Ident || f->generator_index(t.text) || t.text == "i") continue;
      if (t.text == "x") xyz = std::max<std::size_t>(xyz, 1);
      if (t.text == "y") xyz = std::max<std::size_t>(xyz, 2);
      if (t.text == "z") xyz = std::max<std::size_t>(xyz, 3);
      if (t.text.size() > 1 && t.text[0] == 'x' && std::all_of(t.text.begin() + 1, t.text.end(), ::isdigit) &&
          t.text.size() < 4)
        indexed = std::max<std::size_t>(indexed, std::stoul(t.text.substr(1)));
    }
  }
  if (indexed > 0) {
    VarNames v;
    for (std::size_t i = 1; i <= std::max(indexed, xyz); ++i) v.push_back("x" + std::to_string(i));
    return v;
  }
  return default_varnames(std::max<std::size_t>(xyz, 1));
}

std::string print_word(const Word& w, const VarNames& vars) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w[i];
    if (i > 0) s += '*';
    s += l.var < vars.size() ? vars[l.var] : "x" + std::to_string(l.var + 1);
    if (l.star) s += '*';
  }
  return s;
}

std::string print(const NcPoly& f, const VarNames& vars) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : f.terms()) {
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
    if (w.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = print_word(w, vars);
    } else {
      term = coef + "*" + print_word(w, vars);
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

}  // namespace ncequiv
