#pragma once

#include <memory>

#include "geocurv/curvature.hpp"

namespace geocurv {

struct ManifestError : public std::runtime_error {
  ManifestError(const std::string& msg, int line);
  int line;  // 1-based; 0 when no specific line applies
};

/// Owns one chart/metric/connection triple built from a manifest or a named
/// preset. Heap-allocated members keep the addresses stable that
/// ConnectionSpec and CurvatureBundle hold onto, so a Model may be moved.
class Model {
 public:
  static Model from_manifest_text(const std::string& text);
  static Model from_manifest_file(const std::string& path);
  /// Known presets: "morris-thorne".
  static Model preset(const std::string& name);
  static const char* morris_thorne_manifest();

  const Chart& chart() const { return *chart_; }
  const MetricSpec& metric() const { return *metric_; }
  const ConnectionSpec& connection() const { return *connection_; }

  CurvatureBundle build() const {
    return CurvatureBundle::build(*chart_, *metric_, *connection_);
  }

 private:
  Model() = default;
  std::unique_ptr<Chart> chart_;
  std::unique_ptr<MetricSpec> metric_;
  std::unique_ptr<ConnectionSpec> connection_;
};

}  // namespace geocurv
