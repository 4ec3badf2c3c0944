#pragma once

#include <map>

#include "geocurv/algebra.hpp"
#include "geocurv/curvature.hpp"

namespace geocurv {

struct UnknownTensorError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Named access to every tensor a bundle can produce, computing and caching
/// the derived products on demand. Names:
///   metric christoffel riemann ricci weyl conharmonic concircular projective
///   ricci2 ricci3 ricci4
///   nabla-riemann nabla-ricci nabla-weyl nabla-projective nabla-conharmonic
///   rr pr cc ck kc kk q-ric-r q-g-c q-g-k
/// The scalar curvature is not a TensorField; read it from the bundle.
class Catalog {
 public:
  explicit Catalog(const CurvatureBundle& bundle) : bundle_(&bundle) {}

  static const std::vector<std::string>& names();
  bool has(const std::string& name) const;

  const TensorField& get(const std::string& name);

 private:
  const CurvatureBundle* bundle_;
  std::map<std::string, TensorField> cache_;
};

}  // namespace geocurv
