#pragma once

#include <string>
#include <vector>

#include "geocurv/chart.hpp"

namespace geocurv {

/// Dense multi-index array of expressions with valence metadata.
/// Valence is (0,k) or (1,k); for (1,k) the contravariant slot is index 0.
class TensorField {
 public:
  TensorField(const Chart& chart, int covariant_slots, bool contravariant,
              std::string slot_meaning = "");

  const Chart& chart() const { return *chart_; }
  int dim() const { return chart_->dim(); }
  int rank() const { return cov_ + (contra_ ? 1 : 0); }
  int covariant_slots() const { return cov_; }
  bool has_contravariant_slot() const { return contra_; }
  const std::string& slot_meaning() const { return slot_meaning_; }
  std::string& slot_meaning() { return slot_meaning_; }

  const Expr& at(const std::vector<int>& idx) const { return data_[offset(idx)]; }
  Expr& at(const std::vector<int>& idx) { return data_[offset(idx)]; }

  const std::vector<Expr>& data() const { return data_; }
  std::vector<Expr>& data() { return data_; }

  /// Iterate all index tuples in ascending lexicographic order.
  template <typename F>
  void for_each_index(F&& f) const {
    std::vector<int> idx(rank(), 0);
    const int n = dim();
    for (;;) {
      f(idx);
      int p = rank() - 1;
      while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
      if (p < 0) break;
    }
  }

  bool all_zero() const;
  /// Canonicalize every component (deterministic printed form).
  TensorField simplified() const;

 private:
  std::size_t offset(const std::vector<int>& idx) const;

  const Chart* chart_;
  int cov_;
  bool contra_;
  std::string slot_meaning_;
  std::vector<Expr> data_;
};

struct TensorError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace geocurv
