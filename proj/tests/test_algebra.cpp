#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geocurv/algebra.hpp"
#include "geocurv/manifest.hpp"

using namespace geocurv;

namespace {

const CurvatureBundle& wormhole_bundle() {
  static Model m = Model::preset("morris-thorne");
  static CurvatureBundle b = m.build();
  return b;
}

Expr rnd_int(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  return Expr(static_cast<long>(d(rng)));
}

TensorField random_tensor(const Chart& ch, int slots, std::mt19937& rng) {
  TensorField t(ch, slots, false);
  for (auto& e : t.data()) e = rnd_int(rng);
  return t;
}

TensorField random_symmetric2(const Chart& ch, std::mt19937& rng) {
  TensorField t(ch, 2, false);
  const int n = ch.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Expr v = rnd_int(rng);
      t.at({i, j}) = v;
      t.at({j, i}) = v;
    }
  return t;
}

// Independent nested-loop expansion of the wedge-endomorphism action,
// written directly from the defining formula.
TensorField brute_tachibana(const TensorField& z, const TensorField& f) {
  const Chart& ch = f.chart();
  const int k = f.covariant_slots();
  TensorField out(ch, k + 2, false);
  out.for_each_index([&](const std::vector<int>& idx) {
    const int u1 = idx[k], u2 = idx[k + 1];
    Expr acc(0L);
    for (int m = 0; m < k; ++m) {
      std::vector<int> fidx(idx.begin(), idx.begin() + k);
      const int ym = fidx[m];
      fidx[m] = u2;
      acc = acc + z.at({u1, ym}) * f.at(fidx);
      fidx[m] = u1;
      acc = acc - z.at({u2, ym}) * f.at(fidx);
    }
    out.at(idx) = acc;
  });
  return out;
}

// Independent nested-loop expansion of the derivation action E . F through
// the metric-raised endomorphism.
TensorField brute_dot(const TensorField& e, const TensorField& f,
                      const MetricSpec& g) {
  const Chart& ch = f.chart();
  const int n = ch.dim();
  const int k = f.covariant_slots();
  TensorField out(ch, k + 2, false);
  out.for_each_index([&](const std::vector<int>& idx) {
    const int u1 = idx[k], u2 = idx[k + 1];
    Expr acc(0L);
    for (int m = 0; m < k; ++m) {
      for (int a = 0; a < n; ++a) {
        Expr ecal(0L);
        for (int h = 0; h < n; ++h)
          ecal = ecal + g.ginv(a, h) * e.at({u1, u2, idx[m], h});
        std::vector<int> fidx(idx.begin(), idx.begin() + k);
        fidx[m] = a;
        acc = acc - f.at(fidx) * ecal;
      }
    }
    out.at(idx) = acc;
  });
  return out;
}

void check_same(const TensorField& x, const TensorField& y, const Chart& ch) {
  x.for_each_index([&](const std::vector<int>& idx) {
    CHECK(is_zero(x.at(idx) - y.at(idx), ch));
  });
}

}  // namespace

TEST_CASE("kulkarni-nomizu product identities") {
  Chart ch(3, {"x", "y", "z"}, {});
  std::mt19937 rng(5);
  TensorField a = random_symmetric2(ch, rng);
  TensorField e = random_symmetric2(ch, rng);
  TensorField ae = kulkarni_nomizu(a, e);
  TensorField ea = kulkarni_nomizu(e, a);
  ae.for_each_index([&](const std::vector<int>& idx) {
    // commutative on symmetric factors
    CHECK(is_zero(ae.at(idx) - ea.at(idx), ch));
    // antisymmetric in each slot pair, symmetric under pair exchange
    CHECK(is_zero(ae.at(idx) + ae.at({idx[1], idx[0], idx[2], idx[3]}), ch));
    CHECK(is_zero(ae.at(idx) + ae.at({idx[0], idx[1], idx[3], idx[2]}), ch));
    CHECK(is_zero(ae.at(idx) - ae.at({idx[2], idx[3], idx[0], idx[1]}), ch));
    // the defining four-term expansion
    Expr want = a.at({idx[0], idx[3]}) * e.at({idx[1], idx[2]}) -
                a.at({idx[0], idx[2]}) * e.at({idx[1], idx[3]}) +
                a.at({idx[1], idx[2]}) * e.at({idx[0], idx[3]}) -
                a.at({idx[1], idx[3]}) * e.at({idx[0], idx[2]});
    CHECK(is_zero(ae.at(idx) - want, ch));
  });
}

TEST_CASE("raised endomorphism reproduces the pairing") {
  const CurvatureBundle& b = wormhole_bundle();
  const int n = b.dim();
  std::vector<Expr> raised = raise_endomorphism(b.riemann(), b.metric());
  auto at = [&](int a, int y, int u1, int u2) -> const Expr& {
    return raised[((static_cast<std::size_t>(a) * n + y) * n + u1) * n + u2];
  };
  for (int u1 = 0; u1 < n; ++u1)
    for (int u2 = 0; u2 < n; ++u2)
      for (int u3 = 0; u3 < n; ++u3)
        for (int u4 = 0; u4 < n; ++u4) {
          Expr pair(0L);
          for (int a = 0; a < n; ++a)
            pair = pair + b.metric().g(a, u4) * at(a, u3, u1, u2);
          CHECK(is_zero(pair - b.riemann().at({u1, u2, u3, u4}), b.chart()));
        }
}

TEST_CASE("derivation action annihilates the metric") {
  const CurvatureBundle& b = wormhole_bundle();
  CHECK(dot_action(b.riemann(), b.metric_tensor(), b.metric()).all_zero());
  CHECK(dot_action(b.weyl(), b.metric_tensor(), b.metric()).all_zero());
}

TEST_CASE("tachibana tensor of the metric with itself vanishes") {
  const CurvatureBundle& b = wormhole_bundle();
  CHECK(tachibana(b.metric_tensor(), b.metric_tensor()).all_zero());
  // but not of g with a tensor that is not proportional to g
  CHECK_FALSE(tachibana(b.metric_tensor(), b.ric()).all_zero());
}

TEST_CASE("valence guards") {
  const CurvatureBundle& b = wormhole_bundle();
  CHECK_THROWS_AS(tachibana(b.riemann(), b.ric()), ValenceError);
  CHECK_THROWS_AS(dot_action(b.ric(), b.riemann(), b.metric()), ValenceError);
}

TEST_CASE("brute-force oracles agree on random instances") {
  Chart ch(3, {"x", "y", "z"}, {});
  std::mt19937 rng(77);
  int done = 0;
  while (done < 3) {
    std::vector<std::vector<Expr>> gm(3, std::vector<Expr>(3, Expr(0L)));
    std::uniform_int_distribution<int> d(-3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        gm[i][j] = gm[j][i] =
            Expr(static_cast<long>(i == j ? 5 + d(rng) : d(rng)));
    try {
      MetricSpec g(ch, gm);
      TensorField e = random_tensor(ch, 4, rng);
      TensorField f3 = random_tensor(ch, 3, rng);
      TensorField f4 = random_tensor(ch, 4, rng);
      TensorField z = random_symmetric2(ch, rng);
      check_same(dot_action(e, f3, g), brute_dot(e, f3, g), ch);
      check_same(dot_action(e, f4, g), brute_dot(e, f4, g), ch);
      check_same(tachibana(z, f3), brute_tachibana(z, f3), ch);
      check_same(tachibana(z, f4), brute_tachibana(z, f4), ch);
      ++done;
    } catch (const DegenerateMetricError&) {
    }
  }
}
