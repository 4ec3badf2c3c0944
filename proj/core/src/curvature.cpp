#include "geocurv/curvature.hpp"

#include "geocurv/algebra.hpp"

namespace geocurv {

TensorField riemann(const ConnectionSpec& connection, const MetricSpec& metric) {
  const Chart& chart = connection.chart();
  const int n = chart.dim();
  if (n < 3) throw DimensionError("curvature requires dimension >= 3");
  TensorField r(chart, 4, false, "R_{hkij}, h k i j");
  // inner bracket B^a_{kij}, then lower with g_{ha}
  std::vector<Expr> bracket(static_cast<std::size_t>(n) * n * n * n, Expr(Rational(0)));
  auto bat = [n, &bracket](int a, int k, int i, int j) -> Expr& {
    return bracket[((static_cast<std::size_t>(a) * n + k) * n + i) * n + j];
  };
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
          Expr s = diff(connection.gamma(a, k, j), chart.coords()[i], chart) -
                   diff(connection.gamma(a, k, i), chart.coords()[j], chart);
          for (int b = 0; b < n; ++b)
            s = s + connection.gamma(b, k, j) * connection.gamma(a, b, i) -
                connection.gamma(b, k, i) * connection.gamma(a, b, j);
          Expr v = simplified(s, chart);
          bat(a, k, i, j) = v;
          bat(a, k, j, i) = simplified(-v, chart);
        }
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Expr s(Rational(0));
          for (int a = 0; a < n; ++a) {
            if (metric.diagonal() && a != h) continue;
            s = s + metric.g(h, a) * bat(a, k, i, j);
          }
          r.at({h, k, i, j}) = simplified(s, chart);
        }
  return r;
}

TensorField ricci(const TensorField& riemann, const MetricSpec& metric) {
  const Chart& chart = riemann.chart();
  const int n = chart.dim();
  TensorField ric(chart, 2, false, "Ric_{ki} = g^{hj} R_{hkij}");
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      Expr s(Rational(0));
      for (int h = 0; h < n; ++h)
        for (int j = 0; j < n; ++j) {
          if (metric.diagonal() && h != j) continue;
          s = s + metric.ginv(h, j) * riemann.at({h, k, i, j});
        }
      ric.at({k, i}) = simplified(s, chart);
    }
  bool sym = true;
  for (int k = 0; k < n && sym; ++k)
    for (int i = k + 1; i < n && sym; ++i)
      if (!is_zero(ric.at({k, i}) - ric.at({i, k}), chart)) sym = false;
  if (!sym) ric.slot_meaning() += " [non-symmetric]";
  return ric;
}

Expr scalar_curvature(const TensorField& ricci, const MetricSpec& metric) {
  const Chart& chart = ricci.chart();
  const int n = chart.dim();
  Expr s(Rational(0));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (metric.diagonal() && k != i) continue;
      s = s + metric.ginv(k, i) * ricci.at({k, i});
    }
  return simplified(s, chart);
}

namespace {

TensorField combine4(const TensorField& r, const TensorField& corr, const Expr& coeff,
                     const Chart& chart, const std::string& meaning) {
  TensorField out(chart, 4, false, meaning);
  out.for_each_index([&](const std::vector<int>& idx) {
    out.at(idx) = simplified(r.at(idx) + coeff * corr.at(idx), chart);
  });
  return out;
}

}  // namespace

TensorField weyl(const CurvatureBundle& b) {
  const Chart& chart = b.chart();
  const int n = chart.dim();
  if (n < 4)
    throw DimensionError("Weyl conformal tensor requires dimension >= 4");
  TensorField g = b.metric_tensor();
  TensorField g_ric = kulkarni_nomizu(g, b.ric());
  TensorField gg = kulkarni_nomizu(g, g);
  TensorField out(chart, 4, false, "C_{hkij}");
  Expr c1 = Expr(Rational(-1, n - 2));
  Expr c2 = b.kappa() * Expr(Rational(1, 2 * (n - 1) * (n - 2)));
  out.for_each_index([&](const std::vector<int>& idx) {
    out.at(idx) =
        simplified(b.riemann().at(idx) + c1 * g_ric.at(idx) + c2 * gg.at(idx), chart);
  });
  return out;
}

TensorField conharmonic(const CurvatureBundle& b) {
  const Chart& chart = b.chart();
  const int n = chart.dim();
  if (n < 3) throw DimensionError("conharmonic tensor requires dimension >= 3");
  TensorField g = b.metric_tensor();
  TensorField g_ric = kulkarni_nomizu(g, b.ric());
  return combine4(b.riemann(), g_ric, Expr(Rational(-1, n - 2)), chart, "K_{hkij}");
}

TensorField concircular(const CurvatureBundle& b) {
  const Chart& chart = b.chart();
  const int n = chart.dim();
  if (n < 3) throw DimensionError("concircular tensor requires dimension >= 3");
  TensorField g = b.metric_tensor();
  TensorField gg = kulkarni_nomizu(g, g);
  Expr coeff = simplified(-b.kappa() * Expr(Rational(1, 2 * n * (n - 1))), chart);
  return combine4(b.riemann(), gg, coeff, chart, "W_{hkij}");
}

TensorField projective(const CurvatureBundle& b) {
  const Chart& chart = b.chart();
  const int n = chart.dim();
  if (n < 3) throw DimensionError("projective tensor requires dimension >= 3");
  // P_{hkij} = R_{hkij} - (g_{hj} Ric_{ki} - g_{kj} Ric_{hi})/(n-1);
  // this slot assignment is the one reproducing the wormhole fixture.
  TensorField out(chart, 4, false, "P_{hkij}");
  const MetricSpec& m = b.metric();
  Expr c(Rational(1, n - 1));
  out.for_each_index([&](const std::vector<int>& idx) {
    const int h = idx[0], k = idx[1], i = idx[2], j = idx[3];
    out.at(idx) = simplified(b.riemann().at(idx) -
                                 c * (m.g(h, j) * b.ric().at({k, i}) -
                                      m.g(k, j) * b.ric().at({h, i})),
                             chart);
  });
  return out;
}

TensorField ricci_power(const CurvatureBundle& b, int k) {
  if (k < 1 || k > 4) throw TensorError("ricci_power supports k in 1..4");
  return b.ricci_power(k);
}

TensorField covariant_derivative(const TensorField& t, const ConnectionSpec& connection) {
  if (t.has_contravariant_slot())
    throw ValenceError("covariant_derivative accepts covariant tensors only");
  const Chart& chart = t.chart();
  const int n = chart.dim();
  const int k = t.covariant_slots();
  TensorField out(chart, k + 1, false, "nabla first: (nabla_i T)_{j1..jk}");
  out.for_each_index([&](const std::vector<int>& idx) {
    const int i = idx[0];
    std::vector<int> tidx(idx.begin() + 1, idx.end());
    Expr s = diff(t.at(tidx), chart.coords()[i], chart);
    for (int m = 0; m < k; ++m) {
      const int jm = tidx[m];
      for (int a = 0; a < n; ++a) {
        const Expr& gam = connection.gamma(a, i, jm);
        if (gam.is_zero_literal()) continue;
        std::vector<int> sub = tidx;
        sub[m] = a;
        s = s - gam * t.at(sub);
      }
    }
    out.at(idx) = simplified(s, chart);
  });
  return out;
}

const TensorField& CurvatureBundle::ricci_power(int k) const {
  if (k < 1 || k > 4) throw TensorError("ricci_power supports k in 1..4");
  return ricci_powers_[k - 1];
}

CurvatureBundle CurvatureBundle::build(const Chart& chart, const MetricSpec& metric,
                                       const ConnectionSpec& connection) {
  CurvatureBundle b(chart, metric, connection);
  b.riemann_ = geocurv::riemann(connection, metric);
  b.ricci_ = geocurv::ricci(b.riemann_, metric);
  b.ricci_symmetric_ =
      b.ricci_.slot_meaning().find("non-symmetric") == std::string::npos;
  b.kappa_ = scalar_curvature(b.ricci_, metric);
  const int n = chart.dim();
  if (n >= 4) b.weyl_ = geocurv::weyl(b);
  b.conharmonic_ = geocurv::conharmonic(b);
  b.concircular_ = geocurv::concircular(b);
  b.projective_ = geocurv::projective(b);

  b.ricci_powers_.push_back(b.ricci_);
  for (int k = 2; k <= 4; ++k) {
    const TensorField& prev = b.ricci_powers_.back();
    TensorField next(chart, 2, false, "Ric^" + std::to_string(k));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Expr s(Rational(0));
        for (int a = 0; a < n; ++a)
          for (int bb = 0; bb < n; ++bb) {
            if (metric.diagonal() && a != bb) continue;
            s = s + prev.at({i, a}) * metric.ginv(a, bb) * b.ricci_.at({bb, j});
          }
        next.at({i, j}) = simplified(s, chart);
      }
    b.ricci_powers_.push_back(std::move(next));
  }

  b.nabla_riemann_ = covariant_derivative(b.riemann_, connection);
  b.nabla_ricci_ = covariant_derivative(b.ricci_, connection);
  if (n >= 4) b.nabla_weyl_ = covariant_derivative(b.weyl_, connection);
  b.nabla_conharmonic_ = covariant_derivative(b.conharmonic_, connection);
  b.nabla_projective_ = covariant_derivative(b.projective_, connection);
  return b;
}

}  // namespace geocurv
