#pragma once

#include <memory>
#include <optional>

#include "geocurv/tensor.hpp"

namespace geocurv {

/// Symmetric metric with exact cached inverse and determinant.
class MetricSpec {
 public:
  /// `g` is a dim x dim matrix in row-major order; validates symmetry and
  /// non-degeneracy, then caches g^{-1} (adjugate / determinant, with a
  /// fast path for diagonal metrics) and det g.
  MetricSpec(const Chart& chart, std::vector<std::vector<Expr>> g);

  const Chart& chart() const { return *chart_; }
  int dim() const { return chart_->dim(); }

  const Expr& g(int i, int j) const { return g_[i][j]; }
  const Expr& ginv(int i, int j) const { return ginv_[i][j]; }
  const Expr& det() const { return det_; }
  bool diagonal() const { return diagonal_; }

  /// The metric as a (0,2) TensorField.
  TensorField as_tensor() const;

 private:
  const Chart* chart_;
  std::vector<std::vector<Expr>> g_, ginv_;
  Expr det_;
  bool diagonal_;
};

struct DegenerateMetricError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ConnectionKind { LeviCivita, SemiSymmetricNonMetric };

/// Connection with Christoffel array Gamma^alpha_{ij}; the FIRST lower
/// index is the differentiation direction: nabla_{d_i} d_j = Gamma^a_{ij} d_a.
class ConnectionSpec {
 public:
  ConnectionKind kind() const { return kind_; }
  const Chart& chart() const { return *chart_; }
  const MetricSpec& metric() const { return *metric_; }
  int dim() const { return chart_->dim(); }

  const Expr& gamma(int alpha, int i, int j) const { return gamma_[idx(alpha, i, j)]; }
  /// pi_j = g_{j beta} P^beta; identically zero for Levi-Civita.
  const Expr& pi(int j) const { return pi_[j]; }
  const std::vector<Expr>& p_field() const { return p_; }

  friend ConnectionSpec levi_civita_christoffels(const Chart&, const MetricSpec&);
  friend ConnectionSpec ssnm_christoffels(const Chart&, const MetricSpec&,
                                          const std::vector<Expr>&);

 private:
  std::size_t idx(int a, int i, int j) const {
    int n = dim();
    return (static_cast<std::size_t>(a) * n + i) * n + j;
  }

  ConnectionKind kind_ = ConnectionKind::LeviCivita;
  const Chart* chart_ = nullptr;
  const MetricSpec* metric_ = nullptr;
  std::vector<Expr> gamma_;
  std::vector<Expr> pi_;
  std::vector<Expr> p_;
};

/// Gamma^a_{ij} = (1/2) g^{ab} (d_i g_{jb} + d_j g_{ib} - d_b g_{ij}).
ConnectionSpec levi_civita_christoffels(const Chart& chart, const MetricSpec& metric);

/// Semi-symmetric non-metric connection from the vector field P:
/// Gamma^a_{ij} = LC Gamma^a_{ij} + pi_j delta^a_i with pi_j = g_{jb} P^b.
ConnectionSpec ssnm_christoffels(const Chart& chart, const MetricSpec& metric,
                                 const std::vector<Expr>& p_contravariant);

/// (0,3) tensor (nabla_i g)_{jk}, derivative index first.
TensorField non_metricity(const ConnectionSpec& connection, const MetricSpec& metric);

}  // namespace geocurv
