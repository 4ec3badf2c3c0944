#include "geocurv/tensor.hpp"

#include <cmath>

namespace geocurv {

TensorField::TensorField(const Chart& chart, int covariant_slots, bool contravariant,
                         std::string slot_meaning)
    : chart_(&chart),
      cov_(covariant_slots),
      contra_(contravariant),
      slot_meaning_(std::move(slot_meaning)) {
  if (covariant_slots < 0) throw TensorError("negative slot count");
  std::size_t size = 1;
  for (int i = 0; i < rank(); ++i) size *= static_cast<std::size_t>(chart.dim());
  data_.assign(size, Expr(Rational(0)));
}

std::size_t TensorField::offset(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != rank())
    throw TensorError("index tuple length does not match tensor rank");
  std::size_t off = 0;
  for (int i = 0; i < rank(); ++i) {
    if (idx[i] < 0 || idx[i] >= dim()) throw TensorError("index out of range");
    off = off * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(idx[i]);
  }
  return off;
}

bool TensorField::all_zero() const {
  for (const auto& e : data_)
    if (!is_zero(e, *chart_)) return false;
  return true;
}

TensorField TensorField::simplified() const {
  TensorField t = *this;
  for (auto& e : t.data_) e = geocurv::simplified(e, *chart_);
  return t;
}

}  // namespace geocurv
