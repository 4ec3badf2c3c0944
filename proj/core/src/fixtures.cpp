#include "geocurv/fixtures.hpp"

#include <set>

namespace geocurv {

const std::vector<FixtureGroup>& wormhole_fixtures() {
  static const std::vector<FixtureGroup> groups = [] {
    std::vector<FixtureGroup> g;

    g.push_back({"metric",
                 {
                     {"metric", {1, 1}, "-c^2"},
                     {"metric", {2, 2}, "1"},
                     {"metric", {3, 3}, "b^2 + X2^2"},
                     {"metric", {4, 4}, "(b^2 + X2^2) * sin(X3)^2"},
                 },
                 {{"metric", Closure::None}}});

    g.push_back({"christoffel",
                 {
                     {"christoffel", {1, 1, 2}, "a"},
                     {"christoffel", {2, 2, 2}, "a"},
                     {"christoffel", {2, 3, 3}, "-X2"},
                     {"christoffel", {4, 3, 4}, "cot(X3)"},
                     {"christoffel", {4, 4, 3}, "cot(X3)"},
                     {"christoffel", {3, 2, 3}, "X2/(b^2 + X2^2)"},
                     {"christoffel", {4, 2, 4}, "X2/(b^2 + X2^2)"},
                     {"christoffel", {3, 3, 2}, "X2/(b^2 + X2^2) + a"},
                     {"christoffel", {4, 4, 2}, "X2/(b^2 + X2^2) + a"},
                     {"christoffel", {2, 4, 4}, "-X2*sin(X3)^2"},
                     {"christoffel", {3, 4, 4}, "-sin(X3)*cos(X3)"},
                 },
                 {{"christoffel", Closure::None}}});

    g.push_back({"curvature",
                 {
                     {"riemann", {2, 3, 2, 3}, "-b^2/(b^2 + X2^2)"},
                     {"riemann", {2, 4, 2, 4}, "-b^2*sin(X3)^2/(b^2 + X2^2)"},
                     {"riemann", {3, 4, 3, 4}, "b^2*sin(X3)^2"},
                     {"ricci", {2, 2}, "2*b^2/(b^2 + X2^2)^2"},
                     {"scalar", {}, "2*b^2/(b^2 + X2^2)^2"},
                 },
                 {{"riemann", Closure::CurvatureOrbit},
                  {"ricci", Closure::None}}});

    g.push_back(
        {"curvature-derivatives",
         {
             {"nabla-riemann",
              {2, 2, 3, 2, 3},
              "2*b^2*(a*b^2 + 2*X2 + a*X2^2)/(b^2 + X2^2)^2"},
             {"nabla-riemann",
              {2, 2, 4, 2, 4},
              "2*b^2*sin(X3)^2*(a*b^2 + 2*X2 + a*X2^2)/(b^2 + X2^2)^2"},
             {"nabla-riemann",
              {2, 3, 4, 3, 4},
              "-4*b^2*X2*sin(X3)^2/(b^2 + X2^2)"},
             {"nabla-riemann",
              {3, 2, 4, 3, 4},
              "-b^2*sin(X3)^2*(a*b^2 + 2*X2 + a*X2^2)/(b^2 + X2^2)"},
             {"nabla-riemann",
              {4, 2, 3, 3, 4},
              "b^2*sin(X3)^2*(a*b^2 + 2*X2 + a*X2^2)/(b^2 + X2^2)"},
             {"nabla-ricci",
              {2, 2, 2},
              "-4*b^2*(a*b^2 + 2*X2 + a*X2^2)/(b^2 + X2^2)^3"},
             {"nabla-ricci", {3, 2, 3}, "2*b^2*X2/(b^2 + X2^2)^2"},
             {"nabla-ricci", {4, 2, 4}, "2*b^2*X2*sin(X3)^2/(b^2 + X2^2)^2"},
         },
         {}});

    g.push_back(
        {"derived-tensors",
         {
             {"weyl", {1, 2, 1, 2}, "-2*b^2*c^2/(3*(b^2 + X2^2)^2)"},
             {"weyl", {1, 3, 1, 3}, "b^2*c^2/(3*(b^2 + X2^2))"},
             {"weyl", {1, 4, 1, 4}, "b^2*c^2*sin(X3)^2/(3*(b^2 + X2^2))"},
             {"weyl", {2, 3, 2, 3}, "-b^2/(3*(b^2 + X2^2))"},
             {"weyl", {2, 4, 2, 4}, "-b^2*sin(X3)^2/(3*(b^2 + X2^2))"},
             {"weyl", {3, 4, 3, 4}, "(2*b^2*sin(X3)^2)/3"},
             {"projective", {1, 2, 2, 1}, "2*b^2*c^2/(3*(b^2 + X2^2)^2)"},
             {"projective", {2, 3, 2, 3}, "-b^2/(3*(b^2 + X2^2))"},
             {"projective", {2, 3, 3, 2}, "b^2/(b^2 + X2^2)"},
             {"projective", {2, 4, 2, 4}, "-b^2*sin(X3)^2/(3*(b^2 + X2^2))"},
             {"projective", {2, 4, 4, 2}, "b^2*sin(X3)^2/(b^2 + X2^2)"},
             {"projective", {3, 4, 3, 4}, "b^2*sin(X3)^2"},
             {"projective", {3, 4, 4, 3}, "-b^2*sin(X3)^2"},
             {"conharmonic", {1, 2, 1, 2}, "-b^2*c^2/(b^2 + X2^2)^2"},
             {"conharmonic", {3, 4, 3, 4}, "b^2*sin(X3)^2"},
         },
         {{"weyl", Closure::CurvatureOrbit},
          {"projective", Closure::FirstPairAntisym},
          {"conharmonic", Closure::CurvatureOrbit}}});

    g.push_back(
        {"derived-derivatives",
         {
             {"nabla-weyl",
              {2, 1, 2, 1, 2},
              "4*b^2*c^2*(a*b^2 + 2*X2 + a*X2^2)/(3*(b^2 + X2^2)^3)"},
             {"nabla-weyl",
              {3, 1, 2, 1, 3},
              "-b^2*c^2*(a*b^2 + 3*X2 + a*X2^2)/(3*(b^2 + X2^2)^2)"},
             {"nabla-weyl",
              {4, 1, 2, 1, 4},
              "-b^2*c^2*sin(X3)^2*(a*b^2 + 3*X2 + a*X2^2)/(3*(b^2 + X2^2)^2)"},
             {"nabla-weyl", {2, 1, 3, 1, 3}, "-4*b^2*c^2*X2/(3*(b^2 + X2^2)^2)"},
             {"nabla-weyl", {1, 1, 3, 2, 3}, "-a*b^2*c^2/(3*(b^2 + X2^2))"},
             {"nabla-weyl",
              {2, 1, 4, 1, 4},
              "-4*b^2*c^2*X2*sin(X3)^2/(3*(b^2 + X2^2)^2)"},
             {"nabla-weyl",
              {1, 1, 4, 2, 4},
              "-a*b^2*c^2*sin(X3)^2/(3*(b^2 + X2^2))"},
             {"nabla-projective",
              {2, 1, 2, 2, 1},
              "-4*b^2*c^2*(a*b^2 + 2*X2 + a*X2^2)/(3*(b^2 + X2^2)^3)"},
             {"nabla-projective",
              {1, 1, 2, 2, 2},
              "-2*a*b^2*c^2/(3*(b^2 + X2^2)^2)"},
             {"nabla-projective",
              {3, 1, 2, 3, 1},
              "2*b^2*c^2*X2/(3*(b^2 + X2^2)^2)"},
             {"nabla-projective",
              {3, 1, 3, 2, 1},
              "2*b^2*c^2*X2/(3*(b^2 + X2^2)^2)"},
             {"nabla-projective",
              {4, 1, 2, 4, 1},
              "2*b^2*c^2*X2*sin(X3)^2/(3*(b^2 + X2^2)^2)"},
             {"nabla-projective",
              {4, 1, 4, 2, 1},
              "2*b^2*c^2*X2*sin(X3)^2/(3*(b^2 + X2^2)^2)"},
             {"nabla-conharmonic",
              {2, 1, 2, 1, 2},
              "2*b^2*c^2*(a*b^2 + 2*X2 + a*X2^2)/(b^2 + X2^2)^3"},
             {"nabla-conharmonic",
              {3, 1, 2, 1, 3},
              "-b^2*c^2*X2/(b^2 + X2^2)^2"},
             {"nabla-conharmonic",
              {4, 1, 2, 1, 4},
              "-b^2*c^2*X2*sin(X3)^2/(b^2 + X2^2)^2"},
         },
         {}});

    g.push_back({"riemann-products",
                 {
                     {"rr",
                      {2, 3, 3, 4, 2, 4},
                      "-2*b^4*sin(X3)^2/(b^2 + X2^2)^2"},
                     {"rr",
                      {2, 4, 3, 4, 2, 3},
                      "2*b^4*sin(X3)^2/(b^2 + X2^2)^2"},
                     {"pr",
                      {2, 3, 3, 4, 2, 4},
                      "-4*b^4*sin(X3)^2/(3*(b^2 + X2^2)^2)"},
                     {"pr",
                      {2, 4, 3, 4, 2, 3},
                      "4*b^4*sin(X3)^2/(3*(b^2 + X2^2)^2)"},
                 },
                 {}});

    const std::string cc1 = "b^4*c^2/(3*(b^2 + X2^2)^3)";
    const std::string cc2 = "b^4*c^2*sin(X3)^2/(3*(b^2 + X2^2)^3)";
    const std::string cc3 = "b^4*c^2*sin(X3)^2/(3*(b^2 + X2^2)^2)";
    const std::string cc4 = "b^4*sin(X3)^2/(3*(b^2 + X2^2)^2)";
    g.push_back({"conformal-products",
                 {
                     {"cc", {1, 2, 1, 3, 2, 3}, cc1},
                     {"cc", {1, 2, 2, 3, 1, 3}, "-" + cc1},
                     {"cc", {1, 2, 1, 4, 2, 4}, cc2},
                     {"cc", {1, 2, 2, 4, 1, 4}, "-" + cc2},
                     {"cc", {1, 3, 3, 4, 1, 4}, cc3},
                     {"cc", {1, 4, 3, 4, 1, 3}, "-" + cc3},
                     {"cc", {2, 3, 3, 4, 2, 4}, "-" + cc4},
                     {"cc", {2, 4, 3, 4, 2, 3}, cc4},
                     {"ck", {1, 2, 1, 3, 2, 3}, cc1},
                     {"ck", {1, 2, 2, 3, 1, 3}, "-" + cc1},
                     {"ck", {1, 3, 1, 2, 2, 3}, cc1},
                     {"ck", {2, 3, 1, 2, 1, 3}, "-" + cc1},
                     {"ck", {1, 2, 1, 4, 2, 4}, cc2},
                     {"ck", {1, 2, 2, 4, 1, 4}, "-" + cc2},
                     {"ck", {1, 4, 1, 2, 2, 4}, cc2},
                     {"ck", {2, 4, 1, 2, 1, 4}, "-" + cc2},
                     {"ck", {1, 3, 3, 4, 1, 4}, cc3},
                     {"ck", {1, 4, 3, 4, 1, 3}, "-" + cc3},
                     {"ck", {2, 3, 3, 4, 2, 4}, "-" + cc4},
                     {"ck", {2, 4, 3, 4, 2, 3}, cc4},
                 },
                 {}});

    const std::string q1 = "b^2*c^2/(b^2 + X2^2)";
    const std::string q2 = "b^2*c^2*sin(X3)^2/(b^2 + X2^2)";
    const std::string q3 = "b^2*c^2*sin(X3)^2";
    const std::string q4 = "b^2*sin(X3)^2";
    g.push_back({"tachibana",
                 {
                     {"q-ric-r",
                      {2, 3, 3, 4, 2, 4},
                      "-2*b^4*sin(X3)^2/(b^2 + X2^2)^2"},
                     {"q-ric-r",
                      {2, 4, 3, 4, 2, 3},
                      "2*b^4*sin(X3)^2/(b^2 + X2^2)^2"},
                     {"q-g-c", {1, 2, 1, 3, 2, 3}, q1},
                     {"q-g-c", {1, 2, 2, 3, 1, 3}, "-" + q1},
                     {"q-g-c", {1, 2, 1, 4, 2, 4}, q2},
                     {"q-g-c", {1, 2, 2, 4, 1, 4}, "-" + q2},
                     {"q-g-c", {1, 3, 3, 4, 1, 4}, q3},
                     {"q-g-c", {1, 4, 3, 4, 1, 3}, "-" + q3},
                     {"q-g-c", {2, 3, 3, 4, 2, 4}, "-" + q4},
                     {"q-g-c", {2, 4, 3, 4, 2, 3}, q4},
                     {"q-g-k", {1, 2, 1, 3, 2, 3}, q1},
                     {"q-g-k", {1, 2, 2, 3, 1, 3}, "-" + q1},
                     {"q-g-k", {1, 3, 1, 2, 2, 3}, q1},
                     {"q-g-k", {2, 3, 1, 2, 1, 3}, "-" + q1},
                     {"q-g-k", {1, 2, 1, 4, 2, 4}, q2},
                     {"q-g-k", {1, 2, 2, 4, 1, 4}, "-" + q2},
                     {"q-g-k", {1, 4, 1, 2, 2, 4}, q2},
                     {"q-g-k", {2, 4, 1, 2, 1, 4}, "-" + q2},
                     {"q-g-k", {1, 3, 3, 4, 1, 4}, q3},
                     {"q-g-k", {1, 4, 3, 4, 1, 3}, "-" + q3},
                     {"q-g-k", {2, 3, 3, 4, 2, 4}, "-" + q4},
                     {"q-g-k", {2, 4, 3, 4, 2, 3}, q4},
                 },
                 {}});

    return g;
  }();
  return groups;
}

namespace {

std::set<std::vector<int>> closure_orbit(const std::vector<int>& idx0,
                                         Closure closure) {
  std::set<std::vector<int>> orbit{idx0};
  if (closure == Closure::None) return orbit;
  auto swapped = [](std::vector<int> v, int a, int b) {
    std::swap(v[a], v[b]);
    return v;
  };
  orbit.insert(swapped(idx0, 0, 1));
  if (closure == Closure::FirstPairAntisym) return orbit;
  // full dihedral orbit of a curvature-type (0,4) tensor
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<int> v = idx0;
    if (mask & 1) std::swap(v[0], v[1]);
    if (mask & 2) std::swap(v[2], v[3]);
    if (mask & 4) {
      std::swap(v[0], v[2]);
      std::swap(v[1], v[3]);
    }
    orbit.insert(v);
  }
  return orbit;
}

}  // namespace

int ValidationReport::passed() const {
  int n = 0;
  for (const GroupResult& g : groups)
    if (g.pass) ++n;
  return n;
}

ValidationReport run_validation(const CurvatureBundle& bundle) {
  const Chart& chart = bundle.chart();
  Catalog catalog(bundle);
  ValidationReport report;
  for (const FixtureGroup& group : wormhole_fixtures()) {
    GroupResult result{group.id, true, {}};
    for (const FixtureEntry& entry : group.entries) {
      Expr expected = parse(entry.expr, chart);
      Expr computed = entry.tensor == "scalar"
                          ? bundle.kappa()
                          : [&] {
                              std::vector<int> idx;
                              for (int v : entry.index) idx.push_back(v - 1);
                              return catalog.get(entry.tensor).at(idx);
                            }();
      if (!is_zero(computed - expected, chart)) {
        result.pass = false;
        result.failures.push_back({entry.tensor, entry.index,
                                   simplified(computed, chart).str(),
                                   entry.expr});
      }
    }
    for (const CompletenessCheck& check : group.completeness) {
      std::set<std::vector<int>> explained;
      for (const FixtureEntry& entry : group.entries) {
        if (entry.tensor != check.tensor) continue;
        std::vector<int> idx;
        for (int v : entry.index) idx.push_back(v - 1);
        for (const auto& o : closure_orbit(idx, check.closure))
          explained.insert(o);
      }
      const TensorField& t = catalog.get(check.tensor);
      t.for_each_index([&](const std::vector<int>& idx) {
        if (explained.count(idx)) return;
        if (is_zero(t.at(idx), chart)) return;
        result.pass = false;
        std::vector<int> one_based;
        for (int v : idx) one_based.push_back(v + 1);
        result.failures.push_back({check.tensor, one_based,
                                   simplified(t.at(idx), chart).str(), "0"});
      });
    }
    report.groups.push_back(std::move(result));
  }
  return report;
}

}  // namespace geocurv
