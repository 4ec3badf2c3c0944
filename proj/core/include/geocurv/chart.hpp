#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "geocurv/expr.hpp"

namespace geocurv {

/// Registered function symbol: derivative rule d/du f(u) expressed through
/// other registered symbols, plus a numeric implementation.
struct FunctionSymbol {
  std::string name;
  std::function<Expr(const Expr&)> derivative;
  std::function<double(double)> numeric;
};

/// Coordinate system: dimension, coordinate and parameter names, function
/// registry, and the polynomial variable universe used for canonical forms.
/// sin(Xi)/cos(Xi) are algebraic variables tied by sin^2 + cos^2 = 1.
class Chart {
 public:
  Chart(int dimension, std::vector<std::string> coordinates,
        std::vector<std::string> parameters);

  int dim() const { return dim_; }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<std::string>& params() const { return params_; }

  int coord_index(const std::string& name) const;  // -1 if absent
  bool has_symbol(const std::string& name) const;

  const FunctionSymbol* function(const std::string& name) const;

  const VarSetPtr& varset() const { return vs_; }
  int symbol_var(const std::string& name) const;  // coord or param, -1 if absent
  int sin_var(int coord) const { return sin_var_[coord]; }
  int cos_var(int coord) const { return cos_var_[coord]; }
  /// For each poly variable: the coordinate index it differentiates through
  /// (itself for coordinates, the angle for sin/cos vars, -1 for params).
  const std::vector<int>& trig_of_var() const { return trig_of_var_; }
  /// Poly-variable index -> Expr (coordinate, parameter, sin(..), cos(..)).
  Expr var_expr(int var) const;

  RatFunc rf_constant(Rational c) const { return RatFunc::constant(vs_, std::move(c)); }
  RatFunc rf_zero() const { return rf_constant(Rational(0)); }
  RatFunc rf_one() const { return rf_constant(Rational(1)); }

 private:
  int dim_;
  std::vector<std::string> coords_;
  std::vector<std::string> params_;
  std::map<std::string, FunctionSymbol> functions_;
  VarSetPtr vs_;
  std::map<std::string, int> symbol_var_;
  std::vector<int> sin_var_, cos_var_;
  std::vector<int> trig_of_var_;
};

struct ChartError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace geocurv
