#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geocurv/numeric.hpp"

namespace geocurv {

/// Variable universe shared by all polynomials of one chart.
///
/// Variables are ordered by lex significance (index 0 most significant).
/// cos-variables are placed before their sin partner so that the rewrite
/// cos^2 -> 1 - sin^2 is strictly order-decreasing; reduction modulo the
/// ideal (cos_i^2 + sin_i^2 - 1) is then a unique normal form and exact
/// division keeps terminating in the quotient ring.
class VarSet {
 public:
  struct Var {
    std::string name;       // printed name, e.g. "X2", "b", "sin(X3)"
    int cos_partner = -1;   // if this is a cos-variable: index of its sin partner
  };

  std::size_t size() const { return vars_.size(); }
  const Var& var(std::size_t i) const { return vars_[i]; }

  int find(const std::string& name) const;
  int add(const std::string& name, int cos_partner = -1);

  static std::shared_ptr<VarSet> create() { return std::make_shared<VarSet>(); }

 private:
  std::vector<Var> vars_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

/// Sparse multivariate polynomial over Q, kept in the normal form with
/// every cos-variable exponent <= 1.
class Poly {
 public:
  using Monomial = std::vector<std::uint16_t>;
  using TermMap = std::map<Monomial, Rational>;  // lex order via vector compare

  Poly() = default;
  explicit Poly(VarSetPtr vs) : vs_(std::move(vs)) {}

  static Poly constant(VarSetPtr vs, Rational c);
  static Poly variable(VarSetPtr vs, int index);

  const VarSetPtr& varset() const { return vs_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  /// Leading (lex-greatest) term.
  const Monomial& lead_monomial() const;
  const Rational& lead_coeff() const;

  int degree(int var) const;
  int total_degree() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  /// Total order on polynomials of one varset, for canonical factor sorting.
  static int compare(const Poly& x, const Poly& y);

  /// Formal partial derivative with respect to one variable (no chain rule).
  Poly derivative(int var) const;

  /// Exact division; nullopt when not divisible in the quotient ring's
  /// normal-form arithmetic.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  double eval(const std::vector<double>& point) const;
  Rational eval_exact(const std::vector<Rational>& point) const;

  /// Scale so coefficients are coprime integers with positive leading
  /// coefficient; returns the factor c with *this == c * result.
  Poly primitive_part(Rational* scale = nullptr) const;

  std::string str() const;

  /// Insert c * m, then restore the cos-degree <= 1 normal form.
  void add_term(const Monomial& m, const Rational& c);

 private:
  void reduce();

  VarSetPtr vs_;
  TermMap terms_;
};

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geocurv
