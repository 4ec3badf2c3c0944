#pragma once

#include "geocurv/catalog.hpp"

namespace geocurv {

/// One golden component: tensor name (Catalog vocabulary, plus "metric" /
/// "christoffel" / "scalar"), 1-based indices, expected expression text.
struct FixtureEntry {
  std::string tensor;
  std::vector<int> index;
  std::string expr;
};

/// How listed components of a tensor imply others, for the "everything not
/// listed is zero" completeness checks.
enum class Closure {
  None,             // listed indices only
  FirstPairAntisym, // plus the first two slots swapped
  CurvatureOrbit    // plus both slot-pair swaps and the pair exchange
};

struct CompletenessCheck {
  std::string tensor;
  Closure closure;
};

struct FixtureGroup {
  std::string id;
  std::vector<FixtureEntry> entries;
  std::vector<CompletenessCheck> completeness;
};

/// The embedded golden component tables for the wormhole model.
const std::vector<FixtureGroup>& wormhole_fixtures();

struct ValidationFailure {
  std::string tensor;
  std::vector<int> index;  // 1-based; empty for the scalar
  std::string computed, expected;
};

struct GroupResult {
  std::string id;
  bool pass;
  std::vector<ValidationFailure> failures;
};

struct ValidationReport {
  std::vector<GroupResult> groups;
  int passed() const;
  bool all_pass() const { return passed() == static_cast<int>(groups.size()); }
};

/// Compare a bundle (expected: the morris-thorne preset) against the golden
/// tables; every comparison is semantic (is_zero of the difference).
ValidationReport run_validation(const CurvatureBundle& bundle);

}  // namespace geocurv
