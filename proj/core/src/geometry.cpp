#include "geocurv/geometry.hpp"

namespace geocurv {

namespace {

// determinant by cofactor expansion; n <= 4 in practice
Expr det_matrix(const std::vector<std::vector<Expr>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Expr d(Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Expr>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Expr> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != j) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    Expr term = m[0][j] * det_matrix(minor);
    d = (j % 2 == 0) ? d + term : d - term;
  }
  return d;
}

}  // namespace

MetricSpec::MetricSpec(const Chart& chart, std::vector<std::vector<Expr>> g)
    : chart_(&chart), g_(std::move(g)), det_(Rational(0)) {
  const int n = chart.dim();
  if (static_cast<int>(g_.size()) != n)
    throw ChartError("metric matrix size does not match chart dimension");
  for (auto& row : g_)
    if (static_cast<int>(row.size()) != n)
      throw ChartError("metric matrix size does not match chart dimension");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_zero(g_[i][j] - g_[j][i], chart))
        throw ChartError("metric is not symmetric at entry (" + std::to_string(i + 1) +
                         "," + std::to_string(j + 1) + ")");
  diagonal_ = true;
  for (int i = 0; i < n && diagonal_; ++i)
    for (int j = 0; j < n && diagonal_; ++j)
      if (i != j && !is_zero(g_[i][j], chart)) diagonal_ = false;

  ginv_.assign(n, std::vector<Expr>(n, Expr(Rational(0))));
  if (diagonal_) {
    Expr d(Rational(1));
    for (int i = 0; i < n; ++i) d = d * g_[i][i];
    det_ = simplified(d, chart);
    if (is_zero(det_, chart)) throw DegenerateMetricError("metric determinant is identically zero");
    for (int i = 0; i < n; ++i)
      ginv_[i][i] = simplified(Expr(Rational(1)) / g_[i][i], chart);
    return;
  }
  det_ = simplified(det_matrix(g_), chart);
  if (is_zero(det_, chart)) throw DegenerateMetricError("metric determinant is identically zero");
  // adjugate / determinant
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<Expr>> minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Expr> row;
        for (int cc = 0; cc < n; ++cc)
          if (cc != i) row.push_back(g_[r][cc]);
        minor.push_back(std::move(row));
      }
      Expr cof = det_matrix(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      ginv_[i][j] = simplified(cof / det_, *chart_);
    }
  }
}

TensorField MetricSpec::as_tensor() const {
  TensorField t(*chart_, 2, false, "g_{ij}");
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) t.at({i, j}) = g_[i][j];
  return t;
}

ConnectionSpec levi_civita_christoffels(const Chart& chart, const MetricSpec& metric) {
  const int n = chart.dim();
  ConnectionSpec c;
  c.kind_ = ConnectionKind::LeviCivita;
  c.chart_ = &chart;
  c.metric_ = &metric;
  c.gamma_.assign(static_cast<std::size_t>(n) * n * n, Expr(Rational(0)));
  c.pi_.assign(n, Expr(Rational(0)));
  c.p_.assign(n, Expr(Rational(0)));
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Expr s(Rational(0));
        for (int b = 0; b < n; ++b) {
          if (metric.diagonal() && b != a) continue;
          s = s + metric.ginv(a, b) *
                      (diff(metric.g(j, b), chart.coords()[i], chart) +
                       diff(metric.g(i, b), chart.coords()[j], chart) -
                       diff(metric.g(i, j), chart.coords()[b], chart));
        }
        Expr val = simplified(Expr(Rational(1, 2)) * s, chart);
        c.gamma_[c.idx(a, i, j)] = val;
        c.gamma_[c.idx(a, j, i)] = val;
      }
    }
  }
  return c;
}

ConnectionSpec ssnm_christoffels(const Chart& chart, const MetricSpec& metric,
                                 const std::vector<Expr>& p_contravariant) {
  const int n = chart.dim();
  if (static_cast<int>(p_contravariant.size()) != n)
    throw ChartError("P must have one component per coordinate");
  ConnectionSpec c = levi_civita_christoffels(chart, metric);
  c.kind_ = ConnectionKind::SemiSymmetricNonMetric;
  c.p_ = p_contravariant;
  for (int j = 0; j < n; ++j) {
    Expr pij(Rational(0));
    for (int b = 0; b < n; ++b) pij = pij + metric.g(j, b) * p_contravariant[b];
    c.pi_[j] = simplified(pij, chart);
  }
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j)
      c.gamma_[c.idx(a, a, j)] = simplified(c.gamma_[c.idx(a, a, j)] + c.pi_[j], chart);
  return c;
}

TensorField non_metricity(const ConnectionSpec& connection, const MetricSpec& metric) {
  const Chart& chart = connection.chart();
  const int n = chart.dim();
  TensorField t(chart, 3, false, "(nabla_i g)_{jk}, i j k");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Expr s = diff(metric.g(j, k), chart.coords()[i], chart);
        for (int a = 0; a < n; ++a)
          s = s - connection.gamma(a, i, j) * metric.g(a, k) -
              connection.gamma(a, i, k) * metric.g(j, a);
        t.at({i, j, k}) = simplified(s, chart);
      }
    }
  }
  return t;
}

}  // namespace geocurv
