#include "geocurv/chart.hpp"

#include <cmath>
#include <set>

namespace geocurv {

Chart::Chart(int dimension, std::vector<std::string> coordinates,
             std::vector<std::string> parameters)
    : dim_(dimension), coords_(std::move(coordinates)), params_(std::move(parameters)) {
  if (dim_ < 2) throw ChartError("chart dimension must be >= 2");
  if (static_cast<int>(coords_.size()) != dim_)
    throw ChartError("coordinate count does not match dimension");
  std::set<std::string> seen;
  for (const auto& n : coords_)
    if (!seen.insert(n).second) throw ChartError("duplicate coordinate name: " + n);
  for (const auto& n : params_)
    if (!seen.insert(n).second)
      throw ChartError("parameter name collides with another symbol: " + n);

  // parameters before coordinates: parameters then lead in the printed
  // lex-descending term order (b^2 + X2^2, not X2^2 + b^2)
  auto vs = VarSet::create();
  for (const auto& n : params_) symbol_var_[n] = vs->add(n);
  for (const auto& n : coords_) symbol_var_[n] = vs->add(n);
  sin_var_.resize(dim_);
  cos_var_.resize(dim_);
  for (int i = 0; i < dim_; ++i) {
    // cos before sin: lex-higher significance makes cos^2 -> 1-sin^2 decreasing
    cos_var_[i] = vs->add("cos(" + coords_[i] + ")",
                          static_cast<int>(vs->size()) + 1);
    sin_var_[i] = vs->add("sin(" + coords_[i] + ")");
  }
  vs_ = vs;

  trig_of_var_.assign(vs_->size(), -1);
  for (const auto& [name, v] : symbol_var_)
    if (coord_index(name) >= 0) trig_of_var_[v] = v;
  for (int i = 0; i < dim_; ++i) {
    trig_of_var_[sin_var_[i]] = symbol_var_.at(coords_[i]);
    trig_of_var_[cos_var_[i]] = symbol_var_.at(coords_[i]);
  }

  functions_["sin"] = {"sin",
                       [](const Expr& u) { return Expr::apply("cos", u); },
                       [](double x) { return std::sin(x); }};
  functions_["cos"] = {"cos",
                       [](const Expr& u) { return -Expr::apply("sin", u); },
                       [](double x) { return std::cos(x); }};
  functions_["cot"] = {"cot",
                       [](const Expr& u) {
                         return -(Expr(1L) / Expr::apply("sin", u).pow(2));
                       },
                       [](double x) { return std::cos(x) / std::sin(x); }};
}

int Chart::coord_index(const std::string& name) const {
  for (int i = 0; i < dim_; ++i)
    if (coords_[i] == name) return i;
  return -1;
}

bool Chart::has_symbol(const std::string& name) const {
  return symbol_var_.count(name) > 0;
}

const FunctionSymbol* Chart::function(const std::string& name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

int Chart::symbol_var(const std::string& name) const {
  auto it = symbol_var_.find(name);
  return it == symbol_var_.end() ? -1 : it->second;
}

Expr Chart::var_expr(int var) const {
  for (int i = 0; i < dim_; ++i) {
    if (var == sin_var_[i]) return Expr::apply("sin", Expr::symbol(coords_[i]));
    if (var == cos_var_[i]) return Expr::apply("cos", Expr::symbol(coords_[i]));
  }
  return Expr::symbol(vs_->var(var).name);
}

}  // namespace geocurv
