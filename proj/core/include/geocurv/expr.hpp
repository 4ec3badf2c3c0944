#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "geocurv/ratfunc.hpp"

namespace geocurv {

class Chart;

/// Immutable symbolic scalar expression. Shared subtrees are the norm;
/// construction applies only light, local canonicalization (flattening,
/// constant folding, pow-1 collapse). Semantic equality is decided by
/// is_zero on the difference, never structurally.
class Expr {
 public:
  enum class Kind { Rational, Symbol, Sum, Product, Pow, Func, Quot };

  struct Node {
    Kind kind;
    Rational value;               // Rational
    std::string name;             // Symbol, Func
    std::vector<Expr> children;   // Sum, Product, Func(1), Quot(2), Pow(1)
    int exponent = 0;             // Pow (nonzero, != 1)
  };

  Expr() : Expr(Rational(0)) {}
  explicit Expr(Rational r);
  explicit Expr(long v) : Expr(Rational(v)) {}

  static Expr symbol(const std::string& name);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr apply(const std::string& fn, Expr arg);

  Kind kind() const { return node_->kind; }
  const Node& node() const { return *node_; }

  Expr operator-() const;
  Expr operator+(const Expr& o) const;
  Expr operator-(const Expr& o) const;
  Expr operator*(const Expr& o) const;
  Expr operator/(const Expr& o) const;
  Expr pow(int e) const;

  bool is_rational() const { return node_->kind == Kind::Rational; }
  bool is_zero_literal() const { return is_rational() && node_->value == 0; }

  std::string str() const;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Node n);
  std::shared_ptr<const Node> node_;
};

struct SyntaxError : public std::runtime_error {
  SyntaxError(const std::string& msg, std::size_t offset);
  std::size_t offset;
};

struct UnknownSymbolError : public std::runtime_error {
  UnknownSymbolError(const std::string& name, std::size_t offset);
  std::string symbol;
  std::size_t offset;
};

/// Raised when an expression cannot be put into the rational canonical
/// form (e.g. a function applied to a non-coordinate argument).
struct CanonError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingSymbolError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse per the manifest/CLI expression grammar.
Expr parse(const std::string& text, const Chart& chart);

/// Formal partial derivative with respect to a chart coordinate.
Expr diff(const Expr& e, const std::string& coordinate, const Chart& chart);

/// Numeric evaluation; `assignment` must cover all free symbols.
double eval(const Expr& e, const std::map<std::string, double>& assignment,
            const Chart& chart);

/// Canonical rational-function form over the chart's variable universe.
RatFunc canonical(const Expr& e, const Chart& chart);

/// Rebuild an Expr from its canonical form (deterministic shape).
Expr simplified(const Expr& e, const Chart& chart);
Expr from_ratfunc(const RatFunc& rf, const Chart& chart);

/// Exact zero decision modulo the trig side relations.
bool is_zero(const Expr& e, const Chart& chart);
bool equal(const Expr& x, const Expr& y, const Chart& chart);

}  // namespace geocurv
