#pragma once

#include "geocurv/geometry.hpp"

namespace geocurv {

/// (0,4) Riemann tensor of the (possibly torsionful) connection:
/// R_{hkij} = g_{ha} (d_i G^a_{kj} - d_j G^a_{ki}
///            + G^b_{kj} G^a_{bi} - G^b_{ki} G^a_{bj}),
/// where G^a_{kj} is read with k as the differentiation direction.
TensorField riemann(const ConnectionSpec& connection, const MetricSpec& metric);

/// Ric_{ki} = g^{hj} R_{hkij}; the trace slot pair is fixed by the sign of
/// the wormhole fixture. Marks `symmetric=false` in the slot-meaning string
/// when the connection makes Ricci asymmetric.
TensorField ricci(const TensorField& riemann, const MetricSpec& metric);

/// kappa = g^{ki} Ric_{ki}.
Expr scalar_curvature(const TensorField& ricci, const MetricSpec& metric);

/// All curvature data of one (chart, metric, connection) triple, computed
/// eagerly so the bundle is freely shareable across threads afterwards.
class CurvatureBundle {
 public:
  static CurvatureBundle build(const Chart& chart, const MetricSpec& metric,
                               const ConnectionSpec& connection);

  const Chart& chart() const { return *chart_; }
  const MetricSpec& metric() const { return *metric_; }
  const ConnectionSpec& connection() const { return *connection_; }
  int dim() const { return chart_->dim(); }

  const TensorField& riemann() const { return riemann_; }
  const TensorField& ric() const { return ricci_; }
  const Expr& kappa() const { return kappa_; }
  const TensorField& weyl() const { return weyl_; }
  const TensorField& conharmonic() const { return conharmonic_; }
  const TensorField& concircular() const { return concircular_; }
  const TensorField& projective() const { return projective_; }
  bool ricci_symmetric() const { return ricci_symmetric_; }

  /// Ric^k for k in 2..4 (Ric itself for k=1).
  const TensorField& ricci_power(int k) const;

  const TensorField& nabla_riemann() const { return nabla_riemann_; }
  const TensorField& nabla_ricci() const { return nabla_ricci_; }
  const TensorField& nabla_weyl() const { return nabla_weyl_; }
  const TensorField& nabla_conharmonic() const { return nabla_conharmonic_; }
  const TensorField& nabla_projective() const { return nabla_projective_; }

  TensorField metric_tensor() const { return metric_->as_tensor(); }

 private:
  CurvatureBundle(const Chart& chart, const MetricSpec& metric,
                  const ConnectionSpec& connection)
      : chart_(&chart),
        metric_(&metric),
        connection_(&connection),
        riemann_(chart, 4, false),
        ricci_(chart, 2, false),
        kappa_(Rational(0)),
        weyl_(chart, 4, false),
        conharmonic_(chart, 4, false),
        concircular_(chart, 4, false),
        projective_(chart, 4, false),
        nabla_riemann_(chart, 5, false),
        nabla_ricci_(chart, 3, false),
        nabla_weyl_(chart, 5, false),
        nabla_conharmonic_(chart, 5, false),
        nabla_projective_(chart, 5, false) {}

  const Chart* chart_;
  const MetricSpec* metric_;
  const ConnectionSpec* connection_;
  TensorField riemann_, ricci_;
  Expr kappa_;
  TensorField weyl_, conharmonic_, concircular_, projective_;
  TensorField nabla_riemann_, nabla_ricci_, nabla_weyl_, nabla_conharmonic_,
      nabla_projective_;
  std::vector<TensorField> ricci_powers_;  // [0]=Ric, [1]=Ric^2, ...
  bool ricci_symmetric_ = true;
};

/// Weyl conformal tensor, Eq-style:
/// C = R - (g ^ Ric)/(n-2) + kappa (g ^ g) / (2(n-1)(n-2)); requires n >= 3.
TensorField weyl(const CurvatureBundle& bundle);
TensorField conharmonic(const CurvatureBundle& bundle);
TensorField concircular(const CurvatureBundle& bundle);
TensorField projective(const CurvatureBundle& bundle);

TensorField ricci_power(const CurvatureBundle& bundle, int k);

/// (nabla_i T)_{j1..jk} = d_i T - sum_m Gamma^a_{i jm} T(..a..);
/// the derivative index is stored first. Covariant input only.
TensorField covariant_derivative(const TensorField& t, const ConnectionSpec& connection);

struct DimensionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace geocurv
