#include "geocurv/algebra.hpp"

namespace geocurv {

TensorField kulkarni_nomizu(const TensorField& a, const TensorField& e) {
  if (a.covariant_slots() != 2 || a.has_contravariant_slot() || e.covariant_slots() != 2 ||
      e.has_contravariant_slot())
    throw ValenceError("kulkarni_nomizu requires two (0,2) tensors");
  const Chart& chart = a.chart();
  const int n = chart.dim();
  TensorField r(chart, 4, false, "(A^E)_{y1 y2 u1 u2}");
  for (int y1 = 0; y1 < n; ++y1)
    for (int y2 = 0; y2 < n; ++y2)
      for (int u1 = 0; u1 < n; ++u1)
        for (int u2 = 0; u2 < n; ++u2)
          r.at({y1, y2, u1, u2}) = simplified(
              a.at({y1, u2}) * e.at({y2, u1}) - a.at({y1, u1}) * e.at({y2, u2}) +
                  a.at({y2, u1}) * e.at({y1, u2}) - a.at({y2, u2}) * e.at({y1, u1}),
              chart);
  return r;
}

std::vector<Expr> raise_endomorphism(const TensorField& e, const MetricSpec& metric) {
  if (e.covariant_slots() != 4 || e.has_contravariant_slot())
    throw ValenceError("endomorphism view requires a (0,4) tensor");
  const Chart& chart = e.chart();
  const int n = chart.dim();
  std::vector<Expr> raised(static_cast<std::size_t>(n) * n * n * n, Expr(Rational(0)));
  auto at = [n](std::vector<Expr>& v, int a, int y, int u1, int u2) -> Expr& {
    return v[((static_cast<std::size_t>(a) * n + y) * n + u1) * n + u2];
  };
  for (int a = 0; a < n; ++a)
    for (int y = 0; y < n; ++y)
      for (int u1 = 0; u1 < n; ++u1)
        for (int u2 = 0; u2 < n; ++u2) {
          Expr s(Rational(0));
          for (int h = 0; h < n; ++h) {
            if (metric.diagonal() && h != a) continue;
            s = s + metric.ginv(a, h) * e.at({u1, u2, y, h});
          }
          at(raised, a, y, u1, u2) = simplified(s, chart);
        }
  return raised;
}

TensorField dot_action(const TensorField& e, const TensorField& f,
                       const MetricSpec& metric) {
  if (f.has_contravariant_slot())
    throw ValenceError("dot_action acts on covariant tensors only");
  const Chart& chart = e.chart();
  const int n = chart.dim();
  const int k = f.covariant_slots();
  std::vector<Expr> raised = raise_endomorphism(e, metric);
  auto ra = [n, &raised](int a, int y, int u1, int u2) -> const Expr& {
    return raised[((static_cast<std::size_t>(a) * n + y) * n + u1) * n + u2];
  };
  TensorField r(chart, k + 2, false, "(E.F), F slots then U1 U2");
  r.for_each_index([&](const std::vector<int>& idx) {
    const int u1 = idx[k], u2 = idx[k + 1];
    Expr s(Rational(0));
    std::vector<int> fidx(idx.begin(), idx.begin() + k);
    for (int m = 0; m < k; ++m) {
      const int ym = fidx[m];
      for (int a = 0; a < n; ++a) {
        const Expr& coeff = ra(a, ym, u1, u2);
        if (coeff.is_zero_literal()) continue;
        std::vector<int> sub = fidx;
        sub[m] = a;
        s = s - coeff * f.at(sub);
      }
    }
    r.at(idx) = simplified(s, chart);
  });
  return r;
}

TensorField tachibana(const TensorField& z, const TensorField& f) {
  if (z.covariant_slots() != 2 || z.has_contravariant_slot())
    throw ValenceError("tachibana requires a (0,2) first argument");
  if (f.has_contravariant_slot())
    throw ValenceError("tachibana acts on covariant tensors only");
  const Chart& chart = z.chart();
  const int k = f.covariant_slots();
  TensorField r(chart, k + 2, false, "Q(Z,F), F slots then U1 U2");
  r.for_each_index([&](const std::vector<int>& idx) {
    const int u1 = idx[k], u2 = idx[k + 1];
    Expr s(Rational(0));
    std::vector<int> fidx(idx.begin(), idx.begin() + k);
    for (int m = 0; m < k; ++m) {
      std::vector<int> sub = fidx;
      sub[m] = u2;
      s = s + z.at({u1, fidx[m]}) * f.at(sub);
      sub[m] = u1;
      s = s - z.at({u2, fidx[m]}) * f.at(sub);
    }
    r.at(idx) = simplified(s, chart);
  });
  return r;
}

}  // namespace geocurv
