#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geocurv/geometry.hpp"
#include "geocurv/manifest.hpp"

using namespace geocurv;

namespace {

// Deterministic random symmetric polynomial metric on a 3-chart, resampled
// until it is non-degenerate.
struct RandomMetric {
  const Chart& chart;
  std::vector<std::vector<Expr>> g;
  RandomMetric(const Chart& ch, std::mt19937& rng) : chart(ch) {
    std::uniform_int_distribution<int> small(-2, 2);
    const int n = ch.dim();
    for (;;) {
      g.assign(n, std::vector<Expr>(n, Expr(0L)));
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          Expr e(static_cast<long>(i == j ? 3 + small(rng) : small(rng)));
          e = e + Expr(static_cast<long>(small(rng))) *
                      Expr::symbol(ch.coords()[(i + j) % n]);
          g[i][j] = g[j][i] = e;
        }
      }
      try {
        MetricSpec probe(ch, g);
        break;
      } catch (const DegenerateMetricError&) {
      }
    }
  }
};

std::vector<Expr> random_field(const Chart& ch, std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-2, 2);
  std::vector<Expr> p;
  for (int i = 0; i < ch.dim(); ++i)
    p.push_back(Expr(static_cast<long>(small(rng))) *
                Expr::symbol(ch.coords()[i]) +
                Expr(static_cast<long>(small(rng))));
  return p;
}

}  // namespace

TEST_CASE("metric validation and inverse") {
  Chart ch(2, {"x", "y"}, {});
  Expr x = Expr::symbol("x"), y = Expr::symbol("y");
  CHECK_THROWS_AS(
      MetricSpec(ch, {{Expr(1L), x}, {y, Expr(1L)}}), ChartError);
  CHECK_THROWS_AS(
      MetricSpec(ch, {{Expr(1L), Expr(1L)}, {Expr(1L), Expr(1L)}}),
      DegenerateMetricError);
  MetricSpec m(ch, {{Expr(2L), x}, {x, Expr(1L) + x * x}});
  CHECK_FALSE(m.diagonal());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Expr s(0L);
      for (int k = 0; k < 2; ++k) s = s + m.ginv(i, k) * m.g(k, j);
      CHECK(is_zero(s - Expr(static_cast<long>(i == j)), ch));
    }
  CHECK(is_zero(m.det() - (Expr(2L) * (Expr(1L) + x * x) - x * x), ch));
  TensorField t = m.as_tensor();
  CHECK(equal(t.at({0, 1}), t.at({1, 0}), ch));
}

TEST_CASE("levi-civita on flat space vanishes") {
  Chart ch(3, {"x", "y", "z"}, {});
  MetricSpec m(ch, {{Expr(1L), Expr(0L), Expr(0L)},
                    {Expr(0L), Expr(1L), Expr(0L)},
                    {Expr(0L), Expr(0L), Expr(1L)}});
  ConnectionSpec lc = levi_civita_christoffels(ch, m);
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(is_zero(lc.gamma(a, i, j), ch));
  CHECK(non_metricity(lc, m).all_zero());
}

TEST_CASE("levi-civita on the round 2-sphere") {
  Chart ch(2, {"t", "p"}, {"r"});
  Expr r = Expr::symbol("r");
  Expr st = Expr::apply("sin", Expr::symbol("t"));
  Expr ct = Expr::apply("cos", Expr::symbol("t"));
  MetricSpec m(ch, {{r * r, Expr(0L)}, {Expr(0L), r * r * st * st}});
  ConnectionSpec lc = levi_civita_christoffels(ch, m);
  CHECK(equal(lc.gamma(0, 1, 1), -st * ct, ch));      // Gamma^t_{pp}
  CHECK(equal(lc.gamma(1, 0, 1), ct / st, ch));       // Gamma^p_{tp}
  CHECK(equal(lc.gamma(1, 1, 0), ct / st, ch));       // torsion-free
  CHECK(is_zero(lc.gamma(0, 0, 0), ch));
  // metric compatibility
  CHECK(non_metricity(lc, m).all_zero());
}

TEST_CASE("vanishing field reduces the connection to levi-civita") {
  Chart ch(3, {"x", "y", "z"}, {});
  std::mt19937 rng(101);
  for (int trial = 0; trial < 3; ++trial) {
    RandomMetric rm(ch, rng);
    MetricSpec m(ch, rm.g);
    ConnectionSpec lc = levi_civita_christoffels(ch, m);
    ConnectionSpec sc =
        ssnm_christoffels(ch, m, {Expr(0L), Expr(0L), Expr(0L)});
    for (int a = 0; a < 3; ++a)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(is_zero(sc.gamma(a, i, j) - lc.gamma(a, i, j), ch));
    CHECK(non_metricity(sc, m).all_zero());
  }
}

TEST_CASE("torsion identity of the semi-symmetric connection") {
  Chart ch(3, {"x", "y", "z"}, {});
  std::mt19937 rng(202);
  for (int trial = 0; trial < 3; ++trial) {
    RandomMetric rm(ch, rng);
    MetricSpec m(ch, rm.g);
    ConnectionSpec sc = ssnm_christoffels(ch, m, random_field(ch, rng));
    for (int a = 0; a < 3; ++a)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Expr torsion = sc.gamma(a, i, j) - sc.gamma(a, j, i);
          Expr want = (a == i ? sc.pi(j) : Expr(0L)) -
                      (a == j ? sc.pi(i) : Expr(0L));
          CHECK(is_zero(torsion - want, ch));
        }
  }
}

TEST_CASE("non-metricity formula") {
  Chart ch(3, {"x", "y", "z"}, {});
  std::mt19937 rng(303);
  RandomMetric rm(ch, rng);
  MetricSpec m(ch, rm.g);
  ConnectionSpec sc = ssnm_christoffels(ch, m, random_field(ch, rng));
  TensorField nm = non_metricity(sc, m);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Expr want = -sc.pi(j) * m.g(i, k) - sc.pi(k) * m.g(i, j);
        CHECK(is_zero(nm.at({i, j, k}) - want, ch));
      }
}

TEST_CASE("wormhole preset structure") {
  Model model = Model::preset("morris-thorne");
  const Chart& ch = model.chart();
  CHECK(ch.dim() == 4);
  CHECK(ch.coords() == std::vector<std::string>{"X1", "X2", "X3", "X4"});
  CHECK(model.connection().kind() == ConnectionKind::SemiSymmetricNonMetric);
  CHECK(model.metric().diagonal());
  // pi = g(P, .) with P the unit radial field scaled by a
  CHECK(is_zero(model.connection().pi(0), ch));
  CHECK(equal(model.connection().pi(1), Expr::symbol("a"), ch));
  CHECK(is_zero(model.connection().pi(2), ch));
  CHECK(is_zero(model.connection().pi(3), ch));
  TensorField nm = non_metricity(model.connection(), model.metric());
  CHECK(equal(nm.at({0, 0, 1}),
              Expr::symbol("a") * Expr::symbol("c").pow(2), ch));
  CHECK(equal(nm.at({1, 1, 1}), Expr(-2L) * Expr::symbol("a"), ch));
}

TEST_CASE("manifest parsing and diagnostics") {
  CHECK_THROWS_AS(Model::preset("no-such-preset"), ManifestError);
  try {
    Model::from_manifest_text("dim = 2\ncoords = x, y\nbogus_line\n");
    FAIL("expected ManifestError");
  } catch (const ManifestError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    Model::from_manifest_text(
        "dim = 2\ncoords = x, y\ng[1][1] = 1\ng[2][2] = 1 + +\n");
    FAIL("expected ManifestError");
  } catch (const ManifestError& e) {
    CHECK(e.line == 4);
  }
  CHECK_THROWS_AS(Model::from_manifest_text("coords = x, y\n"), ManifestError);
  CHECK_THROWS_AS(Model::from_manifest_text(
                      "dim = 2\ncoords = x, y\ng[1][1] = 1\ng[2][2] = 1\n"
                      "P = 0, 0\n"),
                  ManifestError);
  CHECK_THROWS_AS(Model::from_manifest_text(
                      "dim = 2\ncoords = x, y\ng[1][1] = 1\ng[2][2] = 1\n"
                      "connection = ssnm\n"),
                  ManifestError);
  // off-diagonal entries are mirrored
  Model m = Model::from_manifest_text(
      "dim = 2\ncoords = x, y\ng[1][1] = 2\ng[1][2] = x\ng[2][2] = 1 + x^2\n");
  CHECK(equal(m.metric().g(1, 0), Expr::symbol("x"), m.chart()));
}
