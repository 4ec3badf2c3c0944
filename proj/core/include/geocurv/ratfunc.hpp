#pragma once

#include <functional>
#include <vector>

#include "geocurv/poly.hpp"

namespace geocurv {

struct PoleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rational function num / prod(factors[i].base ^ factors[i].exp) with the
/// denominator kept in factored form. Factors are monic (lex leading
/// coefficient 1), sorted, and cancelled against the numerator by exact
/// division whenever possible.
class RatFunc {
 public:
  struct Factor {
    Poly base;
    unsigned exp;
  };

  RatFunc() = default;
  explicit RatFunc(Poly num) : num_(std::move(num)) {}

  static RatFunc constant(VarSetPtr vs, Rational c) {
    return RatFunc(Poly::constant(std::move(vs), std::move(c)));
  }
  static RatFunc variable(VarSetPtr vs, int index) {
    return RatFunc(Poly::variable(std::move(vs), index));
  }
  /// num / den; throws PolyError if den is the zero polynomial.
  static RatFunc quotient(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const std::vector<Factor>& den() const { return den_; }
  const VarSetPtr& varset() const { return num_.varset(); }

  bool is_zero() const { return num_.is_zero(); }
  Poly den_expanded() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc reciprocal() const;
  RatFunc pow(int e) const;

  /// d/d(var) with the trig chain rule: d sin_i = cos_i, d cos_i = -sin_i
  /// when var is the coordinate the pair belongs to. `trig_of` maps a
  /// sin/cos variable index to its coordinate's variable index (-1 if none).
  RatFunc derivative(int var, const std::vector<int>& trig_of) const;

  double eval(const std::vector<double>& point) const;

  std::string str() const;

 private:
  void normalize();

  Poly num_;
  std::vector<Factor> den_;
};

}  // namespace geocurv
