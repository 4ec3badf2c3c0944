#include "geocurv/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "geocurv/chart.hpp"

namespace geocurv {

SyntaxError::SyntaxError(const std::string& msg, std::size_t off)
    : std::runtime_error("syntax error at offset " + std::to_string(off) + ": " + msg),
      offset(off) {}

UnknownSymbolError::UnknownSymbolError(const std::string& name, std::size_t off)
    : std::runtime_error("unknown symbol '" + name + "' at offset " + std::to_string(off)),
      symbol(name),
      offset(off) {}

Expr Expr::make(Node n) { return Expr(std::make_shared<const Node>(std::move(n))); }

Expr::Expr(Rational r) {
  Node n;
  n.kind = Kind::Rational;
  n.value = std::move(r);
  node_ = std::make_shared<const Node>(std::move(n));
}

Expr Expr::symbol(const std::string& name) {
  Node n;
  n.kind = Kind::Symbol;
  n.name = name;
  return make(std::move(n));
}

Expr Expr::apply(const std::string& fn, Expr arg) {
  Node n;
  n.kind = Kind::Func;
  n.name = fn;
  n.children.push_back(std::move(arg));
  return make(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  Rational c = 0;
  for (auto& t : terms) {
    if (t.kind() == Kind::Sum) {
      for (const auto& ch : t.node().children) {
        if (ch.is_rational())
          c += ch.node().value;
        else
          flat.push_back(ch);
      }
    } else if (t.is_rational()) {
      c += t.node().value;
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (c != 0) flat.push_back(Expr(std::move(c)));
  if (flat.empty()) return Expr(Rational(0));
  if (flat.size() == 1) return flat[0];
  Node n;
  n.kind = Kind::Sum;
  n.children = std::move(flat);
  return make(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  Rational c = 1;
  for (auto& f : factors) {
    if (f.kind() == Kind::Product) {
      for (const auto& ch : f.node().children) {
        if (ch.is_rational())
          c *= ch.node().value;
        else
          flat.push_back(ch);
      }
    } else if (f.is_rational()) {
      c *= f.node().value;
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (c == 0) return Expr(Rational(0));
  if (flat.empty()) return Expr(std::move(c));
  if (c != 1) flat.insert(flat.begin(), Expr(std::move(c)));
  if (flat.size() == 1) return flat[0];
  Node n;
  n.kind = Kind::Product;
  n.children = std::move(flat);
  return make(std::move(n));
}

Expr Expr::operator-() const { return product({Expr(Rational(-1)), *this}); }

Expr Expr::operator+(const Expr& o) const { return sum({*this, o}); }

Expr Expr::operator-(const Expr& o) const { return sum({*this, -o}); }

Expr Expr::operator*(const Expr& o) const { return product({*this, o}); }

Expr Expr::operator/(const Expr& o) const {
  if (o.is_rational()) {
    if (o.node().value == 0) throw PolyError("division by literal zero");
    return product({Expr(Rational(1) / o.node().value), *this});
  }
  if (is_zero_literal()) return Expr(Rational(0));
  Node n;
  n.kind = Kind::Quot;
  n.children = {*this, o};
  return make(std::move(n));
}

Expr Expr::pow(int e) const {
  if (e == 0) throw PolyError("integer power with zero exponent");
  if (e == 1) return *this;
  if (is_rational()) {
    Rational v = node().value;
    Rational r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= v;
    if (e < 0) {
      if (r == 0) throw PolyError("division by literal zero");
      r = Rational(1) / r;
    }
    return Expr(std::move(r));
  }
  Node n;
  n.kind = Kind::Pow;
  n.children = {*this};
  n.exponent = e;
  return make(std::move(n));
}

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Sum:
      return 1;
    case Expr::Kind::Product:
    case Expr::Kind::Quot:
      return 2;
    case Expr::Kind::Pow:
      return 3;
    default:
      return 4;
  }
}

void print(std::ostream& os, const Expr& e, int parent_prec) {
  const auto& n = e.node();
  int prec = precedence(n.kind);
  bool parens = prec < parent_prec;
  if (n.kind == Expr::Kind::Rational && (n.value < 0 || denominator(n.value) != 1) &&
      parent_prec >= 2)
    parens = true;
  if (parens) os << "(";
  switch (n.kind) {
    case Expr::Kind::Rational:
      os << n.value;
      break;
    case Expr::Kind::Symbol:
      os << n.name;
      break;
    case Expr::Kind::Sum:
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const Expr& t = n.children[i];
        bool neg = false;
        Expr shown = t;
        if (t.kind() == Expr::Kind::Product && t.node().children[0].is_rational() &&
            t.node().children[0].node().value < 0) {
          neg = true;
          std::vector<Expr> rest(t.node().children.begin(), t.node().children.end());
          rest[0] = Expr(-rest[0].node().value);
          shown = Expr::product(rest);
        } else if (t.is_rational() && t.node().value < 0) {
          neg = true;
          shown = Expr(-t.node().value);
        }
        if (i == 0)
          os << (neg ? "-" : "");
        else
          os << (neg ? " - " : " + ");
        print(os, shown, prec + 1);
      }
      break;
    case Expr::Kind::Product:
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) os << "*";
        print(os, n.children[i], prec);
      }
      break;
    case Expr::Kind::Quot:
      print(os, n.children[0], prec);
      os << "/";
      print(os, n.children[1], prec + 1);
      break;
    case Expr::Kind::Pow:
      print(os, n.children[0], prec + 1);
      os << "^";
      if (n.exponent < 0)
        os << "(" << n.exponent << ")";
      else
        os << n.exponent;
      break;
    case Expr::Kind::Func:
      os << n.name << "(";
      print(os, n.children[0], 0);
      os << ")";
      break;
  }
  if (parens) os << ")";
}

}  // namespace

std::string Expr::str() const {
  std::ostringstream os;
  print(os, *this, 0);
  return os.str();
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Chart& chart) : s_(text), chart_(chart) {}

  Expr parse_all() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      if (eat('*'))
        e = e * factor();
      else if (eat('/'))
        e = e / factor();
      else
        return e;
    }
  }

  Expr factor() {
    bool neg = eat('-');
    Expr b = base();
    if (eat('^')) {
      skip_ws();
      std::size_t at = pos_;
      bool eneg = eat('-');
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw SyntaxError("expected integer exponent", pos_);
      long e = integer();
      if (eneg) e = -e;
      if (e == 0) throw SyntaxError("zero exponent not allowed", at);
      b = b.pow(static_cast<int>(e));
    }
    return neg ? -b : b;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw SyntaxError("expected integer", pos_);
    return std::stol(s_.substr(start, pos_ - start));
  }

  Expr base() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      if (eat('/')) {
        // rational literal only when a digit follows directly
        skip_ws();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          long den = integer();
          if (den <= 0) throw SyntaxError("denominator must be positive", pos_);
          return Expr(Rational(num, den));
        }
        --pos_;  // give the '/' back to term()
        while (s_[pos_] != '/') --pos_;
      }
      return Expr(Rational(num));
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!eat(')')) throw SyntaxError("expected ')'", pos_);
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (peek() == '(') {
        if (!chart_.function(name)) throw UnknownSymbolError(name, start);
        eat('(');
        Expr arg = expr();
        if (!eat(')')) throw SyntaxError("expected ')'", pos_);
        return Expr::apply(name, std::move(arg));
      }
      if (!chart_.has_symbol(name)) throw UnknownSymbolError(name, start);
      return Expr::symbol(name);
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& s_;
  const Chart& chart_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(const std::string& text, const Chart& chart) {
  return Parser(text, chart).parse_all();
}

// ------------------------------------------------------------- calculus

Expr diff(const Expr& e, const std::string& coordinate, const Chart& chart) {
  const auto& n = e.node();
  switch (n.kind) {
    case Expr::Kind::Rational:
      return Expr(Rational(0));
    case Expr::Kind::Symbol:
      return Expr(Rational(n.name == coordinate ? 1 : 0));
    case Expr::Kind::Sum: {
      std::vector<Expr> terms;
      for (const auto& t : n.children) terms.push_back(diff(t, coordinate, chart));
      return Expr::sum(std::move(terms));
    }
    case Expr::Kind::Product: {
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        std::vector<Expr> fac = n.children;
        fac[i] = diff(n.children[i], coordinate, chart);
        terms.push_back(Expr::product(std::move(fac)));
      }
      return Expr::sum(std::move(terms));
    }
    case Expr::Kind::Pow: {
      // exponent is never 0 or 1 in canonical form
      Expr db = diff(n.children[0], coordinate, chart);
      return Expr(Rational(n.exponent)) * n.children[0].pow(n.exponent - 1) * db;
    }
    case Expr::Kind::Func: {
      const FunctionSymbol* f = chart.function(n.name);
      if (!f) throw CanonError("cannot differentiate unregistered function: " + n.name);
      return f->derivative(n.children[0]) * diff(n.children[0], coordinate, chart);
    }
    case Expr::Kind::Quot: {
      const Expr& u = n.children[0];
      const Expr& v = n.children[1];
      Expr du = diff(u, coordinate, chart);
      Expr dv = diff(v, coordinate, chart);
      return (du * v - u * dv) / (v * v);
    }
  }
  throw PolyError("unreachable");
}

double eval(const Expr& e, const std::map<std::string, double>& assignment,
            const Chart& chart) {
  const auto& n = e.node();
  switch (n.kind) {
    case Expr::Kind::Rational:
      return to_double(n.value);
    case Expr::Kind::Symbol: {
      auto it = assignment.find(n.name);
      if (it == assignment.end()) throw MissingSymbolError("no value for symbol: " + n.name);
      return it->second;
    }
    case Expr::Kind::Sum: {
      double s = 0;
      for (const auto& t : n.children) s += eval(t, assignment, chart);
      return s;
    }
    case Expr::Kind::Product: {
      double p = 1;
      for (const auto& t : n.children) p *= eval(t, assignment, chart);
      return p;
    }
    case Expr::Kind::Pow: {
      double b = eval(n.children[0], assignment, chart);
      if (n.exponent < 0 && b == 0) throw PoleError("zero base with negative exponent");
      return std::pow(b, n.exponent);
    }
    case Expr::Kind::Func: {
      const FunctionSymbol* f = chart.function(n.name);
      if (!f) throw CanonError("unregistered function: " + n.name);
      double v = f->numeric(eval(n.children[0], assignment, chart));
      if (!std::isfinite(v)) throw PoleError("function pole in evaluation");
      return v;
    }
    case Expr::Kind::Quot: {
      double den = eval(n.children[1], assignment, chart);
      if (den == 0) throw PoleError("zero denominator in evaluation");
      return eval(n.children[0], assignment, chart) / den;
    }
  }
  throw PolyError("unreachable");
}

namespace {

/// 1/e as a RatFunc, descending through products, powers and quotients so
/// denominator factors stay separate (a single expanded polynomial base
/// would defeat the trial-division cancellation in RatFunc).
RatFunc canonical_recip(const Expr& e, const Chart& chart) {
  const auto& n = e.node();
  switch (n.kind) {
    case Expr::Kind::Rational:
      if (n.value == 0) throw PoleError("identically zero denominator");
      return RatFunc::constant(chart.varset(), Rational(1) / n.value);
    case Expr::Kind::Product: {
      RatFunc r = chart.rf_one();
      for (const auto& t : n.children) r = r * canonical_recip(t, chart);
      return r;
    }
    case Expr::Kind::Pow:
      return canonical_recip(n.children[0], chart).pow(n.exponent);
    case Expr::Kind::Quot:
      return canonical(n.children[1], chart) *
             canonical_recip(n.children[0], chart);
    default: {
      RatFunc den = canonical(e, chart);
      if (den.is_zero()) throw PoleError("identically zero denominator: " + e.str());
      return den.reciprocal();
    }
  }
}

}  // namespace

RatFunc canonical(const Expr& e, const Chart& chart) {
  const auto& n = e.node();
  const VarSetPtr& vs = chart.varset();
  switch (n.kind) {
    case Expr::Kind::Rational:
      return RatFunc::constant(vs, n.value);
    case Expr::Kind::Symbol: {
      int v = chart.symbol_var(n.name);
      if (v < 0) throw CanonError("symbol not in chart: " + n.name);
      return RatFunc::variable(vs, v);
    }
    case Expr::Kind::Sum: {
      RatFunc r = chart.rf_zero();
      for (const auto& t : n.children) r = r + canonical(t, chart);
      return r;
    }
    case Expr::Kind::Product: {
      RatFunc r = chart.rf_one();
      for (const auto& t : n.children) r = r * canonical(t, chart);
      return r;
    }
    case Expr::Kind::Pow:
      return canonical(n.children[0], chart).pow(n.exponent);
    case Expr::Kind::Func: {
      const Expr& arg = n.children[0];
      if (arg.kind() != Expr::Kind::Symbol)
        throw CanonError("function applied to non-coordinate argument: " + e.str());
      int ci = chart.coord_index(arg.node().name);
      if (ci < 0)
        throw CanonError("function applied to non-coordinate argument: " + e.str());
      if (n.name == "sin") return RatFunc::variable(vs, chart.sin_var(ci));
      if (n.name == "cos") return RatFunc::variable(vs, chart.cos_var(ci));
      if (n.name == "cot")
        return RatFunc::variable(vs, chart.cos_var(ci)) /
               RatFunc::variable(vs, chart.sin_var(ci));
      throw CanonError("unregistered function: " + n.name);
    }
    case Expr::Kind::Quot:
      return canonical(n.children[0], chart) * canonical_recip(n.children[1], chart);
  }
  throw PolyError("unreachable");
}

namespace {

Expr poly_to_expr(const Poly& p, const Chart& chart) {
  if (p.is_zero()) return Expr(Rational(0));
  std::vector<Expr> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::vector<Expr> factors;
    factors.push_back(Expr(it->second));
    for (std::size_t v = 0; v < it->first.size(); ++v) {
      int e = it->first[v];
      if (e == 0) continue;
      Expr ve = chart.var_expr(static_cast<int>(v));
      factors.push_back(e == 1 ? ve : ve.pow(e));
    }
    terms.push_back(Expr::product(std::move(factors)));
  }
  // rbegin order = lex descending; Expr::sum keeps the order (constants last)
  return Expr::sum(std::move(terms));
}

}  // namespace

Expr from_ratfunc(const RatFunc& rf, const Chart& chart) {
  if (rf.num().is_zero()) return Expr(Rational(0));
  // pull the rational content out of the numerator so a coefficient like
  // 1/3 prints as a denominator factor 3
  Rational content;
  Poly prim = rf.num().primitive_part(&content);
  Rational cnum = boost::multiprecision::numerator(content);
  Rational cden = boost::multiprecision::denominator(content);
  Expr num = poly_to_expr(prim * cnum, chart);
  if (rf.den().empty() && cden == 1) return num;
  std::vector<Expr> den_factors;
  if (cden != 1) den_factors.push_back(Expr(cden));
  for (const auto& f : rf.den()) {
    Expr b = poly_to_expr(f.base, chart);
    den_factors.push_back(f.exp == 1 ? b : b.pow(static_cast<int>(f.exp)));
  }
  return num / Expr::product(std::move(den_factors));
}

Expr simplified(const Expr& e, const Chart& chart) {
  return from_ratfunc(canonical(e, chart), chart);
}

bool is_zero(const Expr& e, const Chart& chart) { return canonical(e, chart).is_zero(); }

bool equal(const Expr& x, const Expr& y, const Chart& chart) {
  return is_zero(x - y, chart);
}

}  // namespace geocurv
