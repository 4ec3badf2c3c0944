#include "geocurv/catalog.hpp"

#include <algorithm>

namespace geocurv {

const std::vector<std::string>& Catalog::names() {
  static const std::vector<std::string> all = {
      "metric",        "christoffel",       "riemann",
      "ricci",         "scalar",            "weyl",
      "conharmonic",   "concircular",       "projective",
      "ricci2",        "ricci3",            "ricci4",
      "nabla-riemann", "nabla-ricci",       "nabla-weyl",
      "nabla-projective", "nabla-conharmonic",
      "rr",            "pr",                "cc",
      "ck",            "kc",                "kk",
      "q-ric-r",       "q-g-c",             "q-g-k"};
  return all;
}

bool Catalog::has(const std::string& name) const {
  const auto& all = names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

const TensorField& Catalog::get(const std::string& name) {
  auto it = cache_.find(name);
  if (it != cache_.end()) return it->second;
  const CurvatureBundle& b = *bundle_;
  const MetricSpec& metric = b.metric();
  static const std::vector<std::string> needs_weyl = {"weyl", "nabla-weyl", "cc",
                                                      "ck", "kc", "q-g-c"};
  if (b.dim() < 4 &&
      std::find(needs_weyl.begin(), needs_weyl.end(), name) != needs_weyl.end())
    throw DimensionError("`" + name + "` requires dimension >= 4");
  TensorField t(b.chart(), 0, false);
  if (name == "metric") {
    t = b.metric_tensor();
  } else if (name == "christoffel") {
    TensorField gam(b.chart(), 2, true, "Gamma^a_{ij}, a i j");
    gam.for_each_index([&](const std::vector<int>& idx) {
      gam.at(idx) = b.connection().gamma(idx[0], idx[1], idx[2]);
    });
    t = std::move(gam);
  } else if (name == "riemann") {
    t = b.riemann();
  } else if (name == "ricci") {
    t = b.ric();
  } else if (name == "weyl") {
    t = b.weyl();
  } else if (name == "conharmonic") {
    t = b.conharmonic();
  } else if (name == "concircular") {
    t = b.concircular();
  } else if (name == "projective") {
    t = b.projective();
  } else if (name == "ricci2") {
    t = b.ricci_power(2);
  } else if (name == "ricci3") {
    t = b.ricci_power(3);
  } else if (name == "ricci4") {
    t = b.ricci_power(4);
  } else if (name == "nabla-riemann") {
    t = b.nabla_riemann();
  } else if (name == "nabla-ricci") {
    t = b.nabla_ricci();
  } else if (name == "nabla-weyl") {
    t = b.nabla_weyl();
  } else if (name == "nabla-projective") {
    t = b.nabla_projective();
  } else if (name == "nabla-conharmonic") {
    t = b.nabla_conharmonic();
  } else if (name == "rr") {
    t = dot_action(b.riemann(), b.riemann(), metric);
  } else if (name == "pr") {
    t = dot_action(b.projective(), b.riemann(), metric);
  } else if (name == "cc") {
    t = dot_action(b.weyl(), b.weyl(), metric);
  } else if (name == "ck") {
    t = dot_action(b.weyl(), b.conharmonic(), metric);
  } else if (name == "kc") {
    t = dot_action(b.conharmonic(), b.weyl(), metric);
  } else if (name == "kk") {
    t = dot_action(b.conharmonic(), b.conharmonic(), metric);
  } else if (name == "q-ric-r") {
    t = tachibana(b.ric(), b.riemann());
  } else if (name == "q-g-c") {
    t = tachibana(b.metric_tensor(), b.weyl());
  } else if (name == "q-g-k") {
    t = tachibana(b.metric_tensor(), b.conharmonic());
  } else {
    throw UnknownTensorError("unknown tensor `" + name + "`");
  }
  return cache_.emplace(name, std::move(t)).first->second;
}

}  // namespace geocurv
