#include "geocurv/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geocurv {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

int VarSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return -1;
}

int VarSet::add(const std::string& name, int cos_partner) {
  if (find(name) >= 0) throw PolyError("duplicate variable: " + name);
  vars_.push_back({name, cos_partner});
  return static_cast<int>(vars_.size()) - 1;
}

Poly Poly::constant(VarSetPtr vs, Rational c) {
  Poly p(std::move(vs));
  if (c != 0) p.terms_.emplace(Monomial(p.vs_->size(), 0), std::move(c));
  return p;
}

Poly Poly::variable(VarSetPtr vs, int index) {
  Poly p(std::move(vs));
  Monomial m(p.vs_->size(), 0);
  m.at(index) = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw PolyError("constant_value on non-constant poly");
  return terms_.begin()->second;
}

const Poly::Monomial& Poly::lead_monomial() const {
  if (terms_.empty()) throw PolyError("lead of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Poly::lead_coeff() const {
  if (terms_.empty()) throw PolyError("lead of zero polynomial");
  return terms_.rbegin()->second;
}

int Poly::degree(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (auto e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  reduce();
}

void Poly::reduce() {
  // Rewrite cos^2 -> 1 - sin^2 until every cos exponent is <= 1.
  bool again = true;
  while (again) {
    again = false;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      const Monomial& m = it->first;
      int cv = -1;
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] >= 2 && vs_->var(v).cos_partner >= 0) {
          cv = static_cast<int>(v);
          break;
        }
      }
      if (cv < 0) continue;
      const int sv = vs_->var(cv).cos_partner;
      Rational c = it->second;
      Monomial base = m;
      base[cv] -= 2;
      terms_.erase(it);
      // c * base * cos^2 = c * base - c * base * sin^2
      auto insert = [&](Monomial mm, const Rational& cc) {
        auto [jt, ins] = terms_.emplace(std::move(mm), cc);
        if (!ins) {
          jt->second += cc;
          if (jt->second == 0) terms_.erase(jt);
        }
      };
      insert(base, c);
      Monomial with_s = base;
      with_s[sv] += 2;
      insert(std::move(with_s), -c);
      again = true;
      break;
    }
  }
}

Poly Poly::operator-() const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = r.terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;  // both inputs reduced; sum needs no rewrite
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r(vs_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (std::size_t v = 0; v < m.size(); ++v) m[v] += m2[v];
      Rational c = c1 * c2;
      auto [it, inserted] = r.terms_.emplace(std::move(m), std::move(c));
      if (!inserted) {
        it->second += c1 * c2;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  r.reduce();
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(vs_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(vs_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

int Poly::compare(const Poly& x, const Poly& y) {
  auto it = x.terms_.rbegin();
  auto jt = y.terms_.rbegin();
  for (; it != x.terms_.rend() && jt != y.terms_.rend(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
    if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
  }
  if (it != x.terms_.rend()) return 1;
  if (jt != y.terms_.rend()) return -1;
  return 0;
}

Poly Poly::derivative(int var) const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.terms_.emplace(std::move(d), c * Rational(m[var]));
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw PolyError("division by zero polynomial");
  Poly rem = *this;
  Poly quot(vs_);
  const Monomial& dlm = divisor.lead_monomial();
  const Rational& dlc = divisor.lead_coeff();
  while (!rem.is_zero()) {
    const Monomial& rlm = rem.lead_monomial();
    Monomial q(rlm.size());
    for (std::size_t v = 0; v < rlm.size(); ++v) {
      if (rlm[v] < dlm[v]) return std::nullopt;
      q[v] = rlm[v] - dlm[v];
    }
    Poly t(vs_);
    t.terms_.emplace(std::move(q), rem.lead_coeff() / dlc);
    quot = quot + t;
    rem = rem - t * divisor;
  }
  return quot;
}

double Poly::eval(const std::vector<double>& point) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = to_double(c);
    for (std::size_t v = 0; v < m.size(); ++v)
      for (int e = 0; e < m[v]; ++e) t *= point[v];
    s += t;
  }
  return s;
}

Rational Poly::eval_exact(const std::vector<Rational>& point) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < m.size(); ++v)
      for (int e = 0; e < m[v]; ++e) t *= point[v];
    s += t;
  }
  return s;
}

Poly Poly::primitive_part(Rational* scale) const {
  if (terms_.empty()) {
    if (scale) *scale = 1;
    return *this;
  }
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    num_gcd = gcd(num_gcd, numerator(c));
    den_lcm = lcm(den_lcm, denominator(c));
  }
  Rational f(num_gcd, den_lcm);
  if (lead_coeff() < 0) f = -f;
  if (scale) *scale = f;
  Poly r(vs_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / f);
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print lex-descending
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const Monomial& m = it->first;
    bool has_vars = std::any_of(m.begin(), m.end(), [](auto e) { return e != 0; });
    bool printed = false;
    if (!has_vars || c != 1) {
      if (!has_vars || denominator(c) == 1) {
        os << c;
      } else {
        os << numerator(c) << "/" << denominator(c);
      }
      printed = true;
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (printed) os << "*";
      os << vs_->var(v).name;
      if (m[v] > 1) os << "^" << m[v];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace geocurv
