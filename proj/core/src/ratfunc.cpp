#include "geocurv/ratfunc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geocurv {

RatFunc RatFunc::quotient(Poly num, Poly den) {
  if (den.is_zero()) throw PolyError("zero denominator polynomial");
  RatFunc r(std::move(num));
  r.den_.push_back({std::move(den), 1});
  r.normalize();
  return r;
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  // make factors monic, folding the scalar into the numerator
  std::vector<Factor> out;
  for (auto& f : den_) {
    if (f.exp == 0 || f.base.is_constant()) {
      Rational c = f.base.is_constant() ? f.base.constant_value() : Rational(1);
      if (c == 0) throw PolyError("zero denominator factor");
      Rational inv = 1;
      for (unsigned i = 0; i < f.exp; ++i) inv /= c;
      num_ = num_ * inv;
      continue;
    }
    Rational lc = f.base.lead_coeff();
    if (lc != 1) {
      f.base = f.base * (Rational(1) / lc);
      Rational inv = 1;
      for (unsigned i = 0; i < f.exp; ++i) inv /= lc;
      num_ = num_ * inv;
    }
    out.push_back(std::move(f));
  }
  // sort and merge equal bases
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
    return Poly::compare(x.base, y.base) < 0;
  });
  den_.clear();
  for (auto& f : out) {
    if (!den_.empty() && Poly::compare(den_.back().base, f.base) == 0)
      den_.back().exp += f.exp;
    else
      den_.push_back(std::move(f));
  }
  // cancel factors into the numerator
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->exp > 0) {
      auto q = num_.divide_exact(it->base);
      if (!q) break;
      num_ = std::move(*q);
      --it->exp;
    }
    it = (it->exp == 0) ? den_.erase(it) : it + 1;
  }
}

Poly RatFunc::den_expanded() const {
  Poly d = Poly::constant(num_.varset(), 1);
  for (const auto& f : den_) d = d * f.base.pow(f.exp);
  return d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (num_.is_zero()) return o;
  if (o.num_.is_zero()) return *this;
  // lcm of factored denominators
  RatFunc r;
  std::vector<Factor> lcm;
  Poly scale_this = Poly::constant(num_.varset(), 1);
  Poly scale_other = Poly::constant(num_.varset(), 1);
  std::size_t i = 0, j = 0;
  auto push = [&](const Poly& base, unsigned e, unsigned have_this, unsigned have_other) {
    lcm.push_back({base, e});
    if (e > have_this) scale_this = scale_this * base.pow(e - have_this);
    if (e > have_other) scale_other = scale_other * base.pow(e - have_other);
  };
  while (i < den_.size() || j < o.den_.size()) {
    if (j >= o.den_.size()) {
      push(den_[i].base, den_[i].exp, den_[i].exp, 0);
      ++i;
    } else if (i >= den_.size()) {
      push(o.den_[j].base, o.den_[j].exp, 0, o.den_[j].exp);
      ++j;
    } else {
      int cmp = Poly::compare(den_[i].base, o.den_[j].base);
      if (cmp < 0) {
        push(den_[i].base, den_[i].exp, den_[i].exp, 0);
        ++i;
      } else if (cmp > 0) {
        push(o.den_[j].base, o.den_[j].exp, 0, o.den_[j].exp);
        ++j;
      } else {
        unsigned e = std::max(den_[i].exp, o.den_[j].exp);
        push(den_[i].base, e, den_[i].exp, o.den_[j].exp);
        ++i;
        ++j;
      }
    }
  }
  r.num_ = num_ * scale_this + o.num_ * scale_other;
  r.den_ = std::move(lcm);
  r.normalize();
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  RatFunc r;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  r.den_.insert(r.den_.end(), o.den_.begin(), o.den_.end());
  r.normalize();
  return r;
}

RatFunc RatFunc::reciprocal() const {
  if (num_.is_zero()) throw PolyError("reciprocal of zero");
  RatFunc r;
  r.num_ = den_expanded();
  r.den_.push_back({num_, 1});
  r.normalize();
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.reciprocal(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return reciprocal().pow(-e);
  RatFunc r = RatFunc(Poly::constant(num_.varset(), 1));
  RatFunc base = *this;
  unsigned u = static_cast<unsigned>(e);
  while (u) {
    if (u & 1u) r = r * base;
    if (u >>= 1) base = base * base;
  }
  return r;
}

RatFunc RatFunc::derivative(int var, const std::vector<int>& trig_of) const {
  const VarSetPtr& vs = num_.varset();
  auto dpoly = [&](const Poly& p) {
    Poly d(vs);
    for (std::size_t v = 0; v < vs->size(); ++v) {
      Poly pv = p.derivative(static_cast<int>(v));
      if (pv.is_zero()) continue;
      if (static_cast<int>(v) == var) {
        d = d + pv;
      } else if (trig_of[v] == var) {
        // v is sin or cos of coordinate `var`
        int cp = vs->var(v).cos_partner;
        if (cp >= 0) {
          // v is a cos-variable: d cos = -sin
          d = d - pv * Poly::variable(vs, cp);
        } else {
          // v is a sin-variable: find its cos partner
          for (std::size_t w = 0; w < vs->size(); ++w) {
            if (vs->var(w).cos_partner == static_cast<int>(v)) {
              d = d + pv * Poly::variable(vs, static_cast<int>(w));
              break;
            }
          }
        }
      }
    }
    return d;
  };
  // d(N / prod F_i^{e_i})
  //   = (dN * prod F_i - N * sum_i e_i dF_i prod_{j!=i} F_j) / prod F_i^{e_i+1}
  Poly prod_all = Poly::constant(vs, 1);
  for (const auto& f : den_) prod_all = prod_all * f.base;
  Poly top = dpoly(num_) * prod_all;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    Poly rest = Poly::constant(vs, 1);
    for (std::size_t j = 0; j < den_.size(); ++j)
      if (j != i) rest = rest * den_[j].base;
    top = top - num_ * dpoly(den_[i].base) * rest * Rational(den_[i].exp);
  }
  RatFunc r;
  r.num_ = std::move(top);
  r.den_ = den_;
  for (auto& f : r.den_) f.exp += 1;
  r.normalize();
  return r;
}

double RatFunc::eval(const std::vector<double>& point) const {
  double d = 1;
  for (const auto& f : den_) {
    double b = f.base.eval(point);
    for (unsigned i = 0; i < f.exp; ++i) d *= b;
  }
  if (d == 0 || !std::isfinite(d)) throw PoleError("denominator vanishes at evaluation point");
  return num_.eval(point) / d;
}

std::string RatFunc::str() const {
  std::ostringstream os;
  bool need_parens_num = num_.terms().size() > 1 && !den_.empty();
  if (need_parens_num)
    os << "(" << num_.str() << ")";
  else
    os << num_.str();
  for (const auto& f : den_) {
    os << "/(" << f.base.str() << ")";
    if (f.exp > 1) os << "^" << f.exp;
  }
  return os.str();
}

}  // namespace geocurv
